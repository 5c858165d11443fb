#pragma once

#include <optional>
#include <vector>

#include "leibconf/rational.hpp"

namespace leibconf {

// Exact solution of A x = b over the rationals by Gaussian elimination.
// Returns one solution (free variables set to zero) or nullopt when the
// system is inconsistent. A is row-major; every row must have length n.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b, int n);

}  // namespace leibconf
