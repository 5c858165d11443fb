#pragma once

#include "leibconf/twoterm.hpp"

namespace leibconf {

// A category internal to D-modules in split normal form: objects C0,
// morphisms C1 = C0 ⊕ K with source (x,h) -> x, target (x,h) -> x + dh,
// unit x -> (x,0) and composition adding the K-parts.
struct TwoVectorSpace {
    ConfModule c0;
    ConfModule k;
    SesqMap d;      // K -> C0
    ConfModule c1;  // direct sum, names qualified on collision

    int split() const { return c0.rank(); }

    friend bool operator==(const TwoVectorSpace& a, const TwoVectorSpace& b) {
        return a.c0 == b.c0 && a.k == b.k && a.d == b.d;
    }
    friend bool operator!=(const TwoVectorSpace& a, const TwoVectorSpace& b) { return !(a == b); }
};

TwoVectorSpace two_vs_from_complex(const SesqMap& d);  // d : G1 -> G0

// structure maps on morphism values (over any lambda context)
ModValue vs_source(const TwoVectorSpace& v, const ModValue& f);
ModValue vs_target(const TwoVectorSpace& v, const ModValue& f);
ModValue vs_kpart(const TwoVectorSpace& v, const ModValue& f);
ModValue vs_unit(const TwoVectorSpace& v, const ModValue& object);        // i(x)
ModValue vs_from_parts(const TwoVectorSpace& v, const ModValue& object,
                       const ModValue& kpart);                            // (x, h)
ModValue vs_compose(const TwoVectorSpace& v, const ModValue& f, const ModValue& g);

// sanity of the split structure maps on generated morphisms
CheckReport verify_two_vs(const TwoVectorSpace& v);

// A bracket functor together with the K-part of its Leibnizator. The full
// Leibnizator at (x,y,z) is the morphism with source [x_l1 [y_l2 z]] and
// K-part lk(x,y,z).
struct TwoAlg {
    TwoVectorSpace v;
    SesqMap br0;  // C0 ⊗ C0 -> C0
    SesqMap br1;  // C1 ⊗ C1 -> C1
    SesqMap lk;   // C0 ⊗ C0 ⊗ C0 -> K

    friend bool operator==(const TwoAlg& a, const TwoAlg& b) {
        return a.v == b.v && a.br0 == b.br0 && a.br1 == b.br1 && a.lk == b.lk;
    }
    friend bool operator!=(const TwoAlg& a, const TwoAlg& b) { return !(a == b); }
};

TwoAlg two_alg(TwoVectorSpace v, SesqMap br0, SesqMap br1, SesqMap lk);  // shapes only

// the full Leibnizator morphism at object values (variables l1, l2)
ModValue leibnizator_morphism(const TwoAlg& a, const ModValue& x, const ModValue& y,
                              const ModValue& z);

// functoriality of the bracket, source/target of the Leibnizator, its
// naturality against generator morphisms, and the coherence of the two
// composite rewritings on C0^4
CheckReport verify_two_alg(const TwoAlg& a, int jobs = 1);

// the split realization of two-term data; throws when the input fails its
// own verification
TwoAlg functor_t(const TwoTermAlg& a);
// extraction back; S(T(a)) == a exactly
TwoTermAlg functor_s(const TwoAlg& a);

struct TwoAlgHom {
    SesqMap f0;   // C0 -> C0'
    SesqMap f1;   // C1 -> C1'
    SesqMap f2k;  // C0 ⊗ C0 -> K'; the F2 morphism at (x,y) has source
                  // br0'(F0 x, F0 y) and this K-part

    friend bool operator==(const TwoAlgHom& a, const TwoAlgHom& b) {
        return a.f0 == b.f0 && a.f1 == b.f1 && a.f2k == b.f2k;
    }
    friend bool operator!=(const TwoAlgHom& a, const TwoAlgHom& b) { return !(a == b); }
};

TwoAlgHom two_alg_hom(const TwoAlg& from, const TwoAlg& to, SesqMap f0, SesqMap f1, SesqMap f2k);
CheckReport verify_two_alg_hom(const TwoAlg& from, const TwoAlg& to, const TwoAlgHom& f);
TwoAlgHom two_alg_id_hom(const TwoAlg& a);
TwoAlgHom compose_two_alg_hom(const TwoAlg& a, const TwoAlg& b, const TwoAlg& c,
                              const TwoAlgHom& g, const TwoAlgHom& f);  // g after f

// homomorphism transport along the equivalence
TwoAlgHom functor_t_hom(const TwoTermAlg& from, const TwoTermAlg& to, const TwoTermHom& f);
TwoTermHom functor_s_hom(const TwoAlg& from, const TwoAlg& to, const TwoAlgHom& f);

// the natural isomorphism T(S(A)) -> A; identity tables in split form
TwoAlgHom alpha_iso(const TwoAlg& a);

// inverse of a homomorphism with invertible linear parts
std::optional<SesqMap> inverse_linmap(const SesqMap& f);
std::optional<TwoAlgHom> inverse_two_alg_hom(const TwoAlg& from, const TwoAlg& to,
                                             const TwoAlgHom& f);

}  // namespace leibconf
