#pragma once

#include <cstdint>
#include <stdexcept>

namespace vclab {

// Exact binomial coefficient in 64 bits; throws std::overflow_error if the
// value does not fit.  Desk-scale parameters (n <= 128, small k) stay well
// inside the range.
inline std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > UINT64_MAX)
            throw std::overflow_error("binom: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

// Sum_{i=0}^{d} binom(n, i), the Sauer-Shelah bound for VC-dimension d on
// ground-set size n.
inline std::uint64_t sauer_shelah_bound(int n, int d) {
    std::uint64_t total = 0;
    for (int i = 0; i <= d; ++i) {
        std::uint64_t term = binom(n, i);
        if (total > UINT64_MAX - term)
            throw std::overflow_error("sauer_shelah_bound: overflow");
        total += term;
    }
    return total;
}

}  // namespace vclab
