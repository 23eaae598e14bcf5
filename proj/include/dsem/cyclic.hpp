#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace dsem {

// Lexicographically least representative of a cyclic word under rotation and reflection.
template <typename T>
std::vector<T> canonical_cyclic(const std::vector<T>& word) {
    const std::size_t n = word.size();
    std::vector<T> best = word;
    std::vector<T> cand(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t t = 0; t < n; ++t)
                cand[t] = dir == 0 ? word[(s + t) % n] : word[(s + n - t) % n];
            if (cand < best) best = cand;
        }
    }
    return best;
}

template <typename T>
bool dihedral_equal(const std::vector<T>& a, const std::vector<T>& b) {
    return a.size() == b.size() && canonical_cyclic(a) == canonical_cyclic(b);
}

}  // namespace dsem
