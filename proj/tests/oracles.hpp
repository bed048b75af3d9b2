// Test-only brute-force oracles, kept independent of the library paths they
// check.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "vclab/binom.hpp"
#include "vclab/family.hpp"

namespace oracle {

// VC-dimension straight from the definition: every S subseteq [n] is tested
// for shattering by trace collection, no monotonicity shortcuts.
inline int vc_dimension(const vclab::Family& f) {
    int best = -1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.n); ++bits) {
        vclab::SubsetMask S = vclab::SubsetMask::from_raw(f.n, bits);
        std::set<vclab::SubsetMask::u128> traces;
        for (const auto& F : f.members) traces.insert((F & S).raw());
        if (traces.size() == (std::uint64_t{1} << S.cardinality()))
            best = std::max(best, S.cardinality());
    }
    return best;
}

// All r-subsets of member indices, first sunflower under (core, indices).
inline std::optional<std::pair<vclab::SubsetMask, std::vector<int>>> find_sunflower(
    const vclab::Family& f, int r) {
    const int m = static_cast<int>(f.size());
    if (m < r) return std::nullopt;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::optional<std::pair<vclab::SubsetMask, std::vector<int>>> best;
    while (true) {
        vclab::SubsetMask core = f.members[idx[0]] & f.members[idx[1]];
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int j = i + 1; j < r && ok; ++j)
                if (!((f.members[idx[i]] & f.members[idx[j]]) == core)) ok = false;
        if (ok) {
            auto cand = std::make_pair(core, idx);
            if (!best || cand.first < best->first ||
                (cand.first == best->first && cand.second < best->second))
                best = cand;
        }
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

// Minimum s-shadow over k-uniform families of given size on ground set [n],
// by exhaustive enumeration of all member subsets (2^binom(n,k) families).
// Only sane for tiny universes.
inline std::uint64_t min_shadow_exhaustive(int n, int k, int s, std::uint64_t m) {
    std::vector<vclab::SubsetMask> universe = vclab::k_subsets(n, k);
    const std::size_t M = universe.size();
    std::vector<std::vector<vclab::SubsetMask::u128>> shades(M);
    for (std::size_t i = 0; i < M; ++i) {
        vclab::SubsetMask::u128 full = universe[i].raw(), sub = full;
        while (true) {
            sub = (sub - 1) & full;
            vclab::SubsetMask c = vclab::SubsetMask::from_raw(n, sub);
            if (c.cardinality() == s) shades[i].push_back(sub);
            if (sub == 0) break;
        }
    }
    std::uint64_t best = UINT64_MAX;
    std::vector<int> idx;
    // choose m members recursively, tracking the shadow set with pruning
    std::set<vclab::SubsetMask::u128> shadow;
    std::vector<std::vector<vclab::SubsetMask::u128>> added;
    auto rec = [&](auto&& self, std::size_t from, std::uint64_t left) -> void {
        if (shadow.size() >= best) return;
        if (left == 0) {
            best = std::min<std::uint64_t>(best, shadow.size());
            return;
        }
        for (std::size_t i = from; i < M && M - i >= left; ++i) {
            std::vector<vclab::SubsetMask::u128> fresh;
            for (auto x : shades[i])
                if (shadow.insert(x).second) fresh.push_back(x);
            self(self, i + 1, left - 1);
            for (auto x : fresh) shadow.erase(x);
        }
    };
    rec(rec, 0, m);
    return best;
}

// For k = 3, s = 2 on [n]: families of triangles in a graph.  max triangles
// over graphs with sigma edges, inverted into min edges supporting m
// triangles.  Exhaustive over all 2^binom(n,2) graphs.
inline std::vector<std::uint64_t> min_shadow_triangle_table(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    const int P = static_cast<int>(pairs.size());
    std::vector<std::array<int, 3>> triples;  // indices into pairs
    std::vector<int> pair_index(128 * 128, -1);
    for (int i = 0; i < P; ++i) pair_index[pairs[i].first * 128 + pairs[i].second] = i;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                triples.push_back({pair_index[a * 128 + b], pair_index[a * 128 + c],
                                   pair_index[b * 128 + c]});

    const std::uint64_t T = triples.size();
    std::vector<std::uint64_t> max_tri(P + 1, 0);
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << P); ++g) {
        int edges = __builtin_popcountll(g);
        std::uint64_t tri = 0;
        for (const auto& t : triples)
            if (((g >> t[0]) & 1) && ((g >> t[1]) & 1) && ((g >> t[2]) & 1)) ++tri;
        if (tri > max_tri[edges]) max_tri[edges] = tri;
    }
    // prefix max: more edges never hurts
    for (int e = 1; e <= P; ++e) max_tri[e] = std::max(max_tri[e], max_tri[e - 1]);
    std::vector<std::uint64_t> min_shadow(T + 1, 0);
    for (std::uint64_t m = 1; m <= T; ++m) {
        int e = 0;
        while (e <= P && max_tri[e] < m) ++e;
        min_shadow[m] = static_cast<std::uint64_t>(e);
    }
    return min_shadow;
}

// m distinct k-subsets of [n], uniform without replacement.
inline vclab::Family random_k_uniform(int n, int k, std::size_t m, std::mt19937_64& rng) {
    std::vector<vclab::SubsetMask> universe = vclab::k_subsets(n, k);
    std::shuffle(universe.begin(), universe.end(), rng);
    m = std::min(m, universe.size());
    vclab::Family f(n, k);
    f.members.assign(universe.begin(), universe.begin() + static_cast<long>(m));
    std::sort(f.members.begin(), f.members.end());
    return f;
}

}  // namespace oracle
