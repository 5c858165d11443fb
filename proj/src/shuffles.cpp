#include "leibconf/shuffles.hpp"

#include <stdexcept>

namespace leibconf {

int perm_sign(const std::vector<int>& images) {
    int inv = 0;
    for (size_t a = 0; a < images.size(); ++a)
        for (size_t b = a + 1; b < images.size(); ++b)
            if (images[a] > images[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

std::vector<Shuffle> enumerate_shuffles(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("negative shuffle block size");
    const int n = p + q;
    std::vector<Shuffle> out;
    // choose which values land in the first block; both blocks stay ordered
    std::vector<int> pick(p);
    for (int i = 0; i < p; ++i) pick[i] = i;
    while (true) {
        std::vector<int> images;
        images.reserve(n);
        std::vector<bool> used(n, false);
        for (int v : pick) {
            images.push_back(v);
            used[v] = true;
        }
        for (int v = 0; v < n; ++v)
            if (!used[v]) images.push_back(v);
        out.push_back({images, perm_sign(images)});
        // next combination
        int i = p - 1;
        while (i >= 0 && pick[i] == n - p + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

int koszul_sign(const std::vector<int>& images, const std::vector<int>& degrees) {
    if (images.size() != degrees.size())
        throw std::invalid_argument("koszul sign needs one degree per element");
    long long e = 0;
    for (size_t a = 0; a < images.size(); ++a)
        for (size_t b = a + 1; b < images.size(); ++b)
            if (images[a] > images[b])
                e += static_cast<long long>(degrees[images[a]]) * degrees[images[b]];
    return (e % 2 + 2) % 2 == 0 ? 1 : -1;
}

}  // namespace leibconf
