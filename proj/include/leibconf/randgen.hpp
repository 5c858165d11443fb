#pragma once

#include <random>

#include "leibconf/leibniz.hpp"
#include "leibconf/linfty.hpp"
#include "leibconf/twoterm.hpp"

namespace leibconf {

using Rng = std::mt19937_64;

Rat random_rat(Rng& rng, int num_range = 3, int den_choices = 2);
Poly random_poly(Rng& rng, const VarCtx& ctx, int max_ddeg, int max_ldeg, int nterms);
ModValue random_value(Rng& rng, const ConfModule& m, const VarCtx& ctx, int max_ddeg,
                      int max_ldeg, int nterms = 2);
SesqMap random_sesq(Rng& rng, std::vector<ConfModule> sources, ConfModule target, int max_ddeg,
                    int max_ldeg, int degree = 0);
Cochain random_cochain(Rng& rng, const ConfRep& rep, int degree, int max_ddeg, int max_ldeg);

// homogeneous table of the given arity and degree label on the flat module
SesqMap random_graded_map(Rng& rng, const GradedModule& mod, int arity, int degree, int max_ddeg,
                          int max_ldeg);
// unshifted tower with random tables in arities 1..max_arity
HomotopyOps random_tower(Rng& rng, const GradedModule& mod, int max_arity, int max_ddeg,
                         int max_ldeg);
ConvElem random_conv_elem(Rng& rng, const GradedModule& mod, int degree, int min_arity,
                          int max_arity, int max_ddeg, int max_ldeg);

// random G0 ⊗ G0 -> G1 table for twists and equivalences
SesqMap random_tau(Rng& rng, const TwoTermAlg& a, int max_ddeg, int max_ldeg);
// valid structure: a skeletal or strict base, then a random twist
TwoTermAlg random_two_term_valid(Rng& rng);
// arbitrary tables on small fixed modules; usually violates the axioms
TwoTermAlg random_two_term_any(Rng& rng);
// bump one ternary entry; usually breaks the coherence identity
TwoTermAlg perturb_ternary(Rng& rng, TwoTermAlg a);

}  // namespace leibconf
