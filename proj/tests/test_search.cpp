#include <doctest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "vclab/binom.hpp"
#include "vclab/extremal.hpp"
#include "vclab/search.hpp"
#include "vclab/vc.hpp"

using namespace vclab;

namespace {

// Plain 2^M loop over subsets of the colex universe, direct validity check.
std::uint64_t brute_max(int n, int k, const std::function<bool(const Family&)>& valid) {
    std::vector<SubsetMask> universe = k_subsets(n, k);
    const std::size_t M = universe.size();
    REQUIRE(M <= 20);
    std::uint64_t best = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << M); ++bits) {
        auto pc = static_cast<std::uint64_t>(__builtin_popcountll(bits));
        if (pc <= best) continue;
        Family f(n, k);
        for (std::size_t i = 0; i < M; ++i)
            if ((bits >> i) & 1) f.members.push_back(universe[i]);
        if (valid(f)) best = pc;
    }
    return best;
}

bool vc_at_most_2(const Family& f) {
    if (f.empty()) return true;
    return vc_dimension(f) <= 2;
}

}  // namespace

TEST_CASE("max_vc_family small instances") {
    SearchResult tiny = max_vc_family(3, 2);
    CHECK(tiny.best_size == 1);  // a single (d+1)-set on d+1 points

    SearchResult r52 = max_vc_family(5, 2);
    CHECK(r52.status == SearchStatus::complete);
    CHECK(r52.best_size == brute_max(5, 3, vc_at_most_2));
    CHECK(vc_dimension(r52.best_family) <= 2);
    CHECK(r52.best_family.size() == r52.best_size);
}

TEST_CASE("max_vc_family(6,2) equals the conjectured value") {
    SearchResult r = max_vc_family(6, 2);
    CHECK(r.status == SearchStatus::complete);
    CHECK(r.best_size == 11);  // binom(5,2) + binom(2,0)
    CHECK(vc_dimension(r.best_family) == 2);
    CHECK(r.best_size >= mz_family(6, 2, mz_assignment_constant(6, 2, 1)).size());
}

TEST_CASE("max_vc_family budget handling") {
    SearchBudget tiny_budget;
    tiny_budget.max_nodes = 3;
    SearchResult r = max_vc_family(6, 2, tiny_budget);
    CHECK(r.status == SearchStatus::budget_exceeded);
}

TEST_CASE("max_intersecting: EKR and small cases") {
    SearchResult ekr = max_intersecting(6, 3, false);
    CHECK(ekr.status == SearchStatus::complete);
    CHECK(ekr.best_size == binom(5, 2));
    CHECK(is_intersecting(ekr.best_family));

    // n < 2k: every pair of 3-sets meets
    SearchResult all = max_intersecting(5, 3, false);
    CHECK(all.best_size == binom(5, 3));

    SearchResult small = max_intersecting(5, 2, false);
    CHECK(small.best_size == binom(4, 1));

    // brute-force cross validation
    CHECK(max_intersecting(6, 2, false).best_size ==
          brute_max(6, 2, [](const Family& f) { return is_intersecting(f); }));
}

TEST_CASE("max_intersecting nontrivial (Hilton-Milner)") {
    SearchResult hm = max_intersecting(6, 2, true);
    // 2-uniform nontrivially intersecting: a triangle
    CHECK(hm.best_size == 3);
    SubsetMask kern = hm.best_family.members[0];
    for (const auto& m : hm.best_family.members) kern = kern & m;
    CHECK(kern.empty());
}

TEST_CASE("max_switness equals max_intersecting at s = 0") {
    for (int n : {5, 6, 7}) {
        SearchResult a = max_switness_family(n, 2, 0);
        SearchResult b = max_intersecting(n, 3, false);
        CHECK(a.best_size == b.best_size);
    }
}

TEST_CASE("max_switness maximizers pass the validity checker") {
    for (int s : {0, 1, 2}) {
        SearchResult r = max_switness_family(6, 2, s);
        CHECK(r.status == SearchStatus::complete);
        CHECK(has_switness_property(r.best_family, 2, s));
        CHECK(!r.tripwire);
        CHECK(r.best_size <= binom(5, 2));
    }
    // the at-most variant can only help
    SearchResult le = max_switness_family(6, 2, 1, {}, true);
    SearchResult eq = max_switness_family(6, 2, 1);
    CHECK(le.best_size >= eq.best_size);
}

TEST_CASE("switness search cross-validated against brute force") {
    auto valid_s1 = [](const Family& f) { return f.empty() || has_switness_property(f, 2, 1); };
    CHECK(max_switness_family(5, 2, 1).best_size == brute_max(5, 3, valid_s1));
}

TEST_CASE("hunt_counterexample finds nothing at verified scales") {
    CHECK(!hunt_counterexample(7, 2, 1, 200000, 42).has_value());
    CHECK(!hunt_counterexample(8, 2, 2, 100000, 7).has_value());
}

TEST_CASE("stability example is accepted by the s-witness checker") {
    Family f = stability_example(8, 2);
    CHECK(has_switness_property(f, 2, 2));
    CHECK(f.size() == 19);
    CHECK(f.size() <= binom(7, 2));
}

TEST_CASE("search determinism across thread counts") {
    SearchBudget one;
    one.threads = 1;
    SearchBudget two;
    two.threads = 2;
    SearchResult a = max_intersecting(7, 3, false, one);
    SearchResult b = max_intersecting(7, 3, false, two);
    CHECK(a.best_size == b.best_size);
    CHECK(a.best_family.members == b.best_family.members);
}
