#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace leibconf {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den >= 1.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}          // NOLINT: implicit by design
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rat from_string(const std::string& s);
    static Rat factorial(unsigned n);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    std::string str() const;
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

  private:
    mpq_class v_;
};

inline std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline Rat Rat::from_string(const std::string& s) {
    try {
        mpq_class q(s);
        q.canonicalize();
        return Rat(std::move(q));
    } catch (const std::invalid_argument&) {
        throw error("bad rational literal: " + s);
    }
}

inline Rat Rat::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(mpq_class(f));
}

// parity helper for sign exponents that may be negative
inline int sign_pow(long long exponent) { return (exponent % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace leibconf
