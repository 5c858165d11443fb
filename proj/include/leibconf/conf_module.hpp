#pragma once

#include <string>
#include <vector>

#include "leibconf/poly.hpp"

namespace leibconf {

// A finite free module over the polynomial ring generated by D, presented by
// an ordered list of distinct basis names. An empty basis is the zero module.
struct ConfModule {
    std::string name;
    std::vector<std::string> basis;

    ConfModule() = default;
    ConfModule(std::string n, std::vector<std::string> b);

    int rank() const { return static_cast<int>(basis.size()); }
    int basis_index(const std::string& b) const;  // -1 if absent

    friend bool operator==(const ConfModule& a, const ConfModule& b) {
        return a.name == b.name && a.basis == b.basis;
    }
    friend bool operator!=(const ConfModule& a, const ConfModule& b) { return !(a == b); }
};

// direct sum with concatenated basis; basis names must stay distinct
ConfModule direct_sum(const std::string& name, const ConfModule& a, const ConfModule& b);

// An element of mod ⊗ (polynomials over ctx): one coefficient per basis name.
struct ModValue {
    ConfModule mod;
    VarCtx ctx;
    std::vector<Poly> coeffs;

    ModValue() = default;
    ModValue(ConfModule m, VarCtx c);
    ModValue(ConfModule m, VarCtx c, std::vector<Poly> cs);

    static ModValue zero(ConfModule m, VarCtx c) { return ModValue(std::move(m), std::move(c)); }
    static ModValue basis_unit(ConfModule m, int index, VarCtx c);

    bool is_zero() const;
    ModValue operator-() const;
    ModValue& operator+=(const ModValue& o);
    ModValue& operator-=(const ModValue& o);
    friend ModValue operator+(ModValue a, const ModValue& b) { return a += b; }
    friend ModValue operator-(ModValue a, const ModValue& b) { return a -= b; }
    ModValue scaled(const Rat& c) const;
    ModValue scaled(const Poly& p) const;
    // apply one substitution map to every coefficient
    ModValue substituted(const std::map<std::string, Poly>& assign, const VarCtx& out) const;
    ModValue in_ctx(const VarCtx& out) const { return substituted({}, out); }

    friend bool operator==(const ModValue& a, const ModValue& b) {
        return a.mod == b.mod && a.ctx == b.ctx && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const ModValue& a, const ModValue& b) { return !(a == b); }

    std::string str() const;
};

// block embeddings/projections for values of a direct sum module
ModValue embed_block(const ModValue& v, const ConfModule& sum, int offset);
ModValue project_block(const ModValue& v, const ConfModule& part, int offset);

}  // namespace leibconf
