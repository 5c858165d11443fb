#pragma once

#include <optional>

#include "leibconf/report.hpp"
#include "leibconf/sesq.hpp"

namespace leibconf {

struct LeibnizConfAlg {
    ConfModule mod;
    SesqMap bracket;  // binary, endomorphic

    friend bool operator==(const LeibnizConfAlg& a, const LeibnizConfAlg& b) {
        return a.mod == b.mod && a.bracket == b.bracket;
    }
};

// residuals of [x_l1 [y_l2 z]] - [[x_l1 y]_{l1+l2} z] - [y_l2 [x_l1 z]] on all
// basis triples
CheckReport verify_leibniz(const ConfModule& mod, const SesqMap& bracket, int jobs = 1);

LeibnizConfAlg make_leibniz_alg(ConfModule mod, SesqMap bracket);  // throws on failure
inline LeibnizConfAlg raw_leibniz_alg(ConfModule mod, SesqMap bracket) {
    return {std::move(mod), std::move(bracket)};
}

struct ConfRep {
    LeibnizConfAlg alg;
    ConfModule mod;    // the representation space M
    SesqMap left;      // g ⊗ M -> M
    SesqMap right;     // M ⊗ g -> M

    friend bool operator==(const ConfRep& a, const ConfRep& b) {
        return a.alg == b.alg && a.mod == b.mod && a.left == b.left && a.right == b.right;
    }
};

CheckReport verify_rep(const LeibnizConfAlg& alg, const ConfModule& m, const SesqMap& left,
                       const SesqMap& right, int jobs = 1);

ConfRep make_rep(LeibnizConfAlg alg, ConfModule m, SesqMap left, SesqMap right);
inline ConfRep raw_rep(LeibnizConfAlg alg, ConfModule m, SesqMap left, SesqMap right) {
    return {std::move(alg), std::move(m), std::move(left), std::move(right)};
}
ConfRep adjoint_rep(const LeibnizConfAlg& alg);

// bracket on g ⊕ M: {(x,u) (y,v)} = ([x y], x.v); requires a skew bracket
LeibnizConfAlg semidirect(const LeibnizConfAlg& lie_alg, const ConfModule& m,
                          const SesqMap& rep_left);

// lambda-independent bracket from finite-dimensional structure constants
// c[i][j][k]: [a_i a_j] = sum_k c[i][j][k] a_k (unvalidated)
LeibnizConfAlg current_algebra(const ConfModule& mod,
                               const std::vector<std::vector<std::vector<Rat>>>& c);

// A cochain on (g, M). Degree 0 is a representative of M/DM, stored as the
// constant-coefficient vector; degree n >= 1 is an n-ary sesquilinear map
// g^n -> M.
struct Cochain {
    int degree = 0;
    std::vector<Rat> c0;
    std::optional<SesqMap> map;

    bool is_zero() const;
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree == b.degree && a.c0 == b.c0 && a.map == b.map;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }
};

Cochain c0_cochain(const ConfRep& rep, std::vector<Rat> representative);
Cochain c0_cochain_from_value(const ConfRep& rep, const ModValue& v);  // reduces mod D·M
Cochain cochain_from_map(const ConfRep& rep, SesqMap map);
Cochain zero_cochain(const ConfRep& rep, int degree);

// The coboundary of the cochain complex of (g, M). Degree 0 sends v to
// x |-> (-v_l x)|_{l=0}. In degree n the three sums run as displayed in the
// cochain-complex definition; when the bracket [x_i x_j] lands in the last
// slot (j = n+1) it carries no lambda variable, since a map of arity n only
// has n-1 of them. Output variables are the canonical l1..ln.
Cochain coboundary(const ConfRep& rep, const Cochain& phi, int max_degree = 4);

bool is_cocycle(const ConfRep& rep, const Cochain& phi, int max_degree = 4);
bool is_coboundary_of(const ConfRep& rep, const Cochain& psi, const Cochain& tau);

// Bounded-degree search for tau with delta(tau) = psi: assembles the exact
// rational linear system over unknown table coefficients with D-degree <=
// max_ddeg and total lambda-degree <= max_ldeg. "nullopt" means no solution
// within the bounds, not a proof that none exists.
std::optional<Cochain> find_coboundary_preimage(const ConfRep& rep, const Cochain& psi,
                                                int max_ddeg, int max_ldeg);

}  // namespace leibconf
