#pragma once

#include "leibconf/leibniz.hpp"
#include "leibconf/linfty.hpp"
#include "leibconf/twoterm.hpp"

namespace leibconf::fixtures {

// rank 1, [L_l L] = (D + 2l) L
LeibnizConfAlg virasoro();

// current algebras of small finite-dimensional Leibniz algebras
LeibnizConfAlg current_nilpotent2();   // basis a, b: [a,a] = b
LeibnizConfAlg current_affine2();      // Lie: [a,b] = a, [b,a] = -a
LeibnizConfAlg current_heisenberg3();  // Lie: [a,b] = c, [b,a] = -c
LeibnizConfAlg current_central3();     // basis a, b, c: [a,a]=[a,b]=[b,a]=[b,b]=c

// broken structures for negative tests
LeibnizConfAlg mutant_rank1_idempotent();  // [e_l e] = e
LeibnizConfAlg mutant_current_bad2();      // [a,a] = a on rank 2
LeibnizConfAlg mutant_weight3();           // [L_l L] = (D + 3l) L

// rank-1 module over virasoro(), L_l v = (D + weight*l) v, right action zero
ConfRep virasoro_weight_module(int weight);

// adjoint representations of the zoo, semidirect products
ConfRep virasoro_adjoint();
LeibnizConfAlg semidirect_virasoro_weight1();
LeibnizConfAlg semidirect_affine2_module();

// structure constants for the current algebras above, for cross-checks
std::vector<std::vector<std::vector<Rat>>> constants_nilpotent2();
std::vector<std::vector<std::vector<Rat>>> constants_affine2();
std::vector<std::vector<std::vector<Rat>>> constants_heisenberg3();
std::vector<std::vector<std::vector<Rat>>> constants_central3();
std::vector<std::vector<std::vector<Rat>>> constants_bad2();

// a fixed 2-cochain tau on (virasoro, weight-1 module): tau(L,L) = (D + 3 l1) v
Cochain tau_fixture(const ConfRep& rep);

// every verified algebra of the zoo, name -> algebra
std::vector<std::pair<std::string, LeibnizConfAlg>> algebra_zoo();
// the three broken structures
std::vector<std::pair<std::string, LeibnizConfAlg>> mutant_zoo();

// the kernel of the morphism central3 -> nilpotent2 (a,b -> a', c -> b'),
// placed in degree 1 with the inclusion as differential
HomotopyOps morphism_kernel_tower();
// skeletal tower on (virasoro, weight-1 module) with the arity-3 table given
// by the coboundary of tau_fixture
HomotopyOps skeletal_tower();

// two-term data: the skeletal structure behind skeletal_tower()
TwoTermAlg skeletal_fixture();
// g = h = current_nilpotent2, d = id, both actions the bracket
CrossedModule nilpotent_crossed();
TwoTermAlg strict_fixture();  // crossed_to_strict(nilpotent_crossed())
// strict_fixture twisted by a fixed tau: nonzero d and nonzero ternary table
TwoTermAlg mixed_fixture();

}  // namespace leibconf::fixtures
