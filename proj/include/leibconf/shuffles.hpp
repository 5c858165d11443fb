#pragma once

#include <vector>

namespace leibconf {

// A (p,q)-shuffle of {0..p+q-1} in one-line notation: images[pos] = value,
// with images increasing on the first p positions and on the last q.
struct Shuffle {
    std::vector<int> images;
    int sgn;  // ordinary permutation sign
};

std::vector<Shuffle> enumerate_shuffles(int p, int q);

int perm_sign(const std::vector<int>& images);

// Sign picked up when reordering homogeneous elements x_0..x_{N-1} of the
// given degrees into x_{images[0]}, ..., x_{images[N-1]}: every inversion of
// elements of degrees d, e contributes (-1)^{d e}. Degrees are indexed by
// element (value), not by position.
int koszul_sign(const std::vector<int>& images, const std::vector<int>& degrees);

}  // namespace leibconf
