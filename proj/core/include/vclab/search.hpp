#pragma once

#include <cstdint>
#include <optional>

#include "vclab/family.hpp"

namespace vclab {

struct SearchBudget {
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    int threads = 1;
};

enum class SearchStatus { complete, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::complete;
    std::uint64_t best_size = 0;
    Family best_family;
    std::uint64_t nodes = 0;
    bool tripwire = false;  // switness search exceeded the conjectured binom(n-1,d)
};

// Maximum (d+1)-uniform family on [n] with VC-dimension <= d, by DFS over
// the colex universe with incremental trace tracking, pruned by remaining
// count and the binom(n,d) upper bound.  Instances beyond binom(n,d+1) = 24
// members run under a node budget; exceeding it returns best-so-far flagged
// budget_exceeded.
SearchResult max_vc_family(int n, int d, const SearchBudget& budget = {});

// Maximum family in which every member F carries a witness B_F of size s
// (or <= s when at_most) with F n F' != B_F for all members F'.  Exact
// branch and bound over (member, witness) pairs; the conjectured bound
// binom(n-1,d) is a tripwire only, never a pruning bound.
SearchResult max_switness_family(int n, int d, int s, const SearchBudget& budget = {},
                                 bool at_most = false);

// Maximum intersecting k-uniform family on [n]; nontrivial restricts to
// families with empty common intersection (Hilton-Milner regime).
SearchResult max_intersecting(int n, int k, bool nontrivial, const SearchBudget& budget = {});

// Randomized greedy restarts plus a budgeted exact search for families
// satisfying the s-witness condition with size > binom(n-1,d).  Any hit is
// re-verified through the validity checker before being returned.
std::optional<Family> hunt_counterexample(int n, int d, int s, std::uint64_t budget_nodes,
                                          std::uint64_t seed);

// Validity checkers used by the searches and externally on returned
// maximizers.
bool has_switness_property(const Family& f, int d, int s, bool at_most = false);
bool is_intersecting(const Family& f);

}  // namespace vclab
