#pragma once

#include <optional>

#include "leibconf/leibniz.hpp"
#include "leibconf/linfty.hpp"

namespace leibconf {

// Two-term homotopy data: a complex G1 -> G0 with a binary operation in three
// pieces (the G1 ⊗ G1 piece is identically zero) and a ternary operation
// taking values in G1.
struct TwoTermAlg {
    ConfModule g0, g1;
    SesqMap d;      // G1 -> G0
    SesqMap r2_00;  // G0 ⊗ G0 -> G0
    SesqMap r2_01;  // G0 ⊗ G1 -> G1
    SesqMap r2_10;  // G1 ⊗ G0 -> G1
    SesqMap r3;     // G0 ⊗ G0 ⊗ G0 -> G1

    friend bool operator==(const TwoTermAlg& a, const TwoTermAlg& b) {
        return a.g0 == b.g0 && a.g1 == b.g1 && a.d == b.d && a.r2_00 == b.r2_00 &&
               a.r2_01 == b.r2_01 && a.r2_10 == b.r2_10 && a.r3 == b.r3;
    }
    friend bool operator!=(const TwoTermAlg& a, const TwoTermAlg& b) { return !(a == b); }

    bool is_skeletal() const { return d.is_zero(); }
    bool is_strict() const { return r3.is_zero(); }
};

// shape-checked assembly (axioms are checked by verify_two_term)
TwoTermAlg two_term(ConfModule g0, ConfModule g1, SesqMap d, SesqMap r2_00, SesqMap r2_01,
                    SesqMap r2_10, SesqMap r3);
TwoTermAlg zero_two_term(ConfModule g0, ConfModule g1);

// the nine defining identities on basis tuples
CheckReport verify_two_term(const TwoTermAlg& a, int jobs = 1);

// the same data as a graded tower concentrated in degrees 0 and 1
HomotopyOps to_tower(const TwoTermAlg& a);

struct TwoTermHom {
    SesqMap f0;  // G0 -> G0'
    SesqMap f1;  // G1 -> G1'
    SesqMap f2;  // G0 ⊗ G0 -> G1'

    friend bool operator==(const TwoTermHom& a, const TwoTermHom& b) {
        return a.f0 == b.f0 && a.f1 == b.f1 && a.f2 == b.f2;
    }
    friend bool operator!=(const TwoTermHom& a, const TwoTermHom& b) { return !(a == b); }
};

TwoTermHom two_term_hom(const TwoTermAlg& from, const TwoTermAlg& to, SesqMap f0, SesqMap f1,
                        SesqMap f2);
CheckReport verify_two_term_hom(const TwoTermAlg& from, const TwoTermAlg& to,
                                const TwoTermHom& f);
TwoTermHom id_hom(const TwoTermAlg& a);
TwoTermHom compose_hom(const TwoTermHom& g, const TwoTermHom& f);  // g after f

SesqMap identity_linmap(const ConfModule& m);
SesqMap zero_linmap(const ConfModule& from, const ConfModule& to);

// ---- skeletal side -------------------------------------------------------

struct SkeletalTriple {
    LeibnizConfAlg alg;
    ConfRep rep;
    Cochain theta;  // a 3-cocycle
};

// requires d = 0; the extracted algebra and representation are re-verified
// and theta is checked to be a cocycle
SkeletalTriple skeletal_to_triple(const TwoTermAlg& a);
TwoTermAlg triple_to_skeletal(const ConfRep& rep, const Cochain& theta);

// both skeletal on the same complex with equal binary pieces, and
// r3' = r3 + delta(tau)
bool skeletal_equivalent(const TwoTermAlg& a, const TwoTermAlg& b, const SesqMap& tau);
// bounded search for such a tau
std::optional<SesqMap> skeletal_equivalence_witness(const TwoTermAlg& a, const TwoTermAlg& b,
                                                    int max_ddeg, int max_ldeg);

// Transport of structure along (id, id, tau): the result differs in the
// binary pieces by d-corrections and in r3 by the displayed combination; for
// skeletal inputs this is exactly r3 + delta(tau). twist_hom returns the
// connecting homomorphism A -> twist_by(A, tau).
TwoTermAlg twist_by(const TwoTermAlg& a, const SesqMap& tau);
TwoTermHom twist_hom(const TwoTermAlg& a, const SesqMap& tau);

// ---- strict side ---------------------------------------------------------

struct CrossedModule {
    LeibnizConfAlg g;  // placed in degree 1 by the correspondence
    LeibnizConfAlg h;  // degree 0
    SesqMap d;         // g -> h
    SesqMap phi_l;     // h ⊗ g -> g
    SesqMap phi_r;     // g ⊗ h -> g

    friend bool operator==(const CrossedModule& a, const CrossedModule& b) {
        return a.g.mod == b.g.mod && a.g.bracket == b.g.bracket && a.h.mod == b.h.mod &&
               a.h.bracket == b.h.bracket && a.d == b.d && a.phi_l == b.phi_l &&
               a.phi_r == b.phi_r;
    }
};

CrossedModule crossed_module(LeibnizConfAlg g, LeibnizConfAlg h, SesqMap d, SesqMap phi_l,
                             SesqMap phi_r);  // shape-checked
CheckReport verify_crossed(const CrossedModule& x, int jobs = 1);

// requires r3 = 0: the degree-1 side becomes an algebra under
// [u v] = rho2(du, v) and the binary pieces become the actions
CrossedModule strict_to_crossed(const TwoTermAlg& a);
TwoTermAlg crossed_to_strict(const CrossedModule& x);

}  // namespace leibconf
