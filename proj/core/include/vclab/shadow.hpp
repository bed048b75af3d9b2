#pragma once

#include <cstdint>
#include <optional>

#include "vclab/family.hpp"

namespace vclab {

// All s-subsets contained in some member; colex order.  f must be k-uniform
// with s <= k.
Family shadow_s(const Family& f, int s);

// Generalized binomial alpha(alpha-1)...(alpha-k+1)/k!, exact at integers,
// monotone increasing for alpha >= k-1.
double gen_binom(double alpha, int k);

// The unique alpha >= k-1 with gen_binom(alpha, k) = value, by bisection to
// absolute tolerance 1e-12 in alpha.
double solve_alpha(double value, int k);

struct KkReport {
    std::uint64_t family_size = 0;
    std::uint64_t shadow_size = 0;
    double alpha = 0.0;
    double lovasz_bound = 0.0;
    bool holds = false;
};

// Lovasz-form Kruskal-Katona: with |f| = gen_binom(alpha, d+1), checks
// |shadow_d f| >= gen_binom(alpha, d).
KkReport check_kk(const Family& f);

// Exact minimum of |shadow_s| over k-uniform families of size m, via the
// cascade (binomial) representation of m; equals the colex-initial-segment
// value.
std::uint64_t exact_kk_min(std::uint64_t m, int k, int s);

struct PartialShadowReport {
    double x = 0.0;
    double bound = 0.0;
    std::uint64_t g_size = 0;
    bool holds = false;
    std::optional<SubsetMask> offending;  // set on precondition failure
    bool precondition_ok = true;
};

// Partial-shadow theorem check: f (d+1)-uniform, g d-uniform, every F in f
// containing >= k members of g.  With |f| = gen_binom(x, k), checks
// |g| >= gen_binom(x, k-1).  Empty f passes vacuously.
PartialShadowReport check_partial_shadow(const Family& f, const Family& g, int k);

}  // namespace vclab
