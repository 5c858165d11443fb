#include "leibconf/linsolve.hpp"

namespace leibconf {

std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b, int n) {
    const int m = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw error("ragged matrix row");
    if (static_cast<int>(b.size()) != m) throw error("rhs length mismatch");

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int r = row; r < m; ++r)
            if (!a[r][col].is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        const Rat inv = Rat(1) / a[row][col];
        for (int c = col; c < n; ++c) a[row][c] *= inv;
        b[row] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const Rat f = a[r][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[row][c];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int r = row; r < m; ++r)
        if (!b[r].is_zero()) return std::nullopt;

    std::vector<Rat> x(n, Rat(0));
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace leibconf
