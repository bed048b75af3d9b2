#include "vclab/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "vclab/binom.hpp"

namespace vclab {

Family shadow_s(const Family& f, int s) {
    if (!f.uniform_rank) throw std::invalid_argument("shadow_s: family must be uniform");
    const int k = *f.uniform_rank;
    if (s < 0 || s > k) throw std::invalid_argument("shadow_s: need 0 <= s <= k");
    std::unordered_set<SubsetMask::u128> seen;
    std::vector<SubsetMask> out;
    for (const auto& F : f.members) {
        // enumerate s-subsets of F via submask walk
        SubsetMask::u128 full = F.raw();
        SubsetMask::u128 sub = full;
        while (true) {
            SubsetMask cand = SubsetMask::from_raw(f.n, sub);
            if (cand.cardinality() == s && seen.insert(sub).second) out.push_back(cand);
            if (sub == 0) break;
            sub = (sub - 1) & full;
        }
    }
    std::sort(out.begin(), out.end());
    Family g(f.n, s);
    g.members = std::move(out);
    return g;
}

double gen_binom(double alpha, int k) {
    if (k < 0) throw std::invalid_argument("gen_binom: k >= 0 required");
    double num = 1.0;
    for (int i = 0; i < k; ++i) num *= (alpha - i);
    double den = 1.0;
    for (int i = 2; i <= k; ++i) den *= i;
    return num / den;
}

double solve_alpha(double value, int k) {
    if (value < 0) throw std::invalid_argument("solve_alpha: value must be >= 0");
    if (k == 0) return 0.0;  // gen_binom(alpha, 0) = 1 identically; return floor of range
    double lo = k - 1.0;
    double hi = k + value;  // gen_binom(k + value, k) >= value for value >= 0
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (gen_binom(mid, k) < value)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {
// Slack for comparing an exact integer against a double bound: the theorems
// guarantee >=, so only representation error needs absorbing.
bool holds_geq(double lhs, double rhs) {
    return lhs >= rhs - 1e-6 * std::max(1.0, std::fabs(rhs));
}
}  // namespace

KkReport check_kk(const Family& f) {
    if (!f.uniform_rank || *f.uniform_rank < 1)
        throw std::invalid_argument("check_kk: family must be k-uniform with k >= 1");
    const int d = *f.uniform_rank - 1;
    KkReport r;
    r.family_size = f.size();
    r.alpha = solve_alpha(static_cast<double>(f.size()), d + 1);
    r.lovasz_bound = gen_binom(r.alpha, d);
    r.shadow_size = shadow_s(f, d).size();
    r.holds = holds_geq(static_cast<double>(r.shadow_size), r.lovasz_bound);
    return r;
}

std::uint64_t exact_kk_min(std::uint64_t m, int k, int s) {
    if (k < 1 || s < 0 || s > k) throw std::invalid_argument("exact_kk_min: need 0 <= s <= k, k >= 1");
    if (m == 0) return 0;
    if (s == k) return m;
    // cascade representation: m = binom(a_k, k) + binom(a_{k-1}, k-1) + ...
    // with a_k > a_{k-1} > ... >= lowest index; then the s-shadow of the
    // colex initial segment is sum binom(a_i, i - (k - s)).
    std::uint64_t total = 0;
    std::uint64_t rem = m;
    int level = k;
    while (rem > 0 && level >= 1) {
        // greedy maximal a with binom(a, level) <= rem; maximality makes the
        // upper indices strictly decreasing across levels
        int a = level;
        while (binom(a + 1, level) <= rem) ++a;
        rem -= binom(a, level);
        int lower = level - (k - s);
        if (lower > 0)
            total += binom(a, lower);
        else if (lower == 0)
            total += 1;
        --level;
    }
    if (rem != 0) throw std::logic_error("exact_kk_min: cascade decomposition failed");
    return total;
}

PartialShadowReport check_partial_shadow(const Family& f, const Family& g, int k) {
    if (!f.uniform_rank || !g.uniform_rank)
        throw std::invalid_argument("check_partial_shadow: both families must be uniform");
    const int d = *f.uniform_rank - 1;
    if (*g.uniform_rank != d)
        throw std::invalid_argument("check_partial_shadow: g must be d-uniform for (d+1)-uniform f");
    if (k < 1) throw std::invalid_argument("check_partial_shadow: k >= 1 required");

    PartialShadowReport r;
    r.g_size = g.size();
    std::unordered_set<SubsetMask::u128> gset;
    for (const auto& G : g.members) gset.insert(G.raw());
    for (const auto& F : f.members) {
        int inside = 0;
        SubsetMask::u128 full = F.raw(), sub = full;
        while (true) {
            sub = (sub - 1) & full;
            SubsetMask cand = SubsetMask::from_raw(f.n, sub);
            if (cand.cardinality() == d && gset.count(sub)) ++inside;
            if (sub == 0) break;
        }
        if (inside < k) {
            r.precondition_ok = false;
            r.offending = F;
            return r;
        }
    }
    if (f.empty()) {  // vacuous
        r.holds = true;
        return r;
    }
    r.x = solve_alpha(static_cast<double>(f.size()), k);
    r.bound = gen_binom(r.x, k - 1);
    r.holds = holds_geq(static_cast<double>(g.size()), r.bound);
    return r;
}

}  // namespace vclab
