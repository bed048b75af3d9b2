#include "vclab/sunflower.hpp"

#include <algorithm>
#include <set>

namespace vclab {

namespace {

// Lexicographically smallest ascending index list of r members of `petals`
// (given as masks already stripped of the core) that are pairwise disjoint,
// trying candidates in ascending order with backtracking.
bool disjoint_packing(const std::vector<std::pair<int, SubsetMask::u128>>& petals, int r,
                      std::size_t from, SubsetMask::u128 used, std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == r) return true;
    for (std::size_t i = from; i < petals.size(); ++i) {
        if (petals.size() - i < static_cast<std::size_t>(r) - chosen.size()) return false;
        if (petals[i].second & used) continue;
        chosen.push_back(petals[i].first);
        if (disjoint_packing(petals, r, i + 1, used | petals[i].second, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const Family& f, int r) {
    if (r < 2) throw std::invalid_argument("find_sunflower: r >= 2 required");
    const int m = static_cast<int>(f.size());
    if (m < r) return std::nullopt;

    // The core of any sunflower is the intersection of two of its members,
    // so pairwise intersections exhaust the candidates.  Scan cores in
    // ascending (colex) order.
    std::set<SubsetMask> cores;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) cores.insert(f.members[i] & f.members[j]);

    for (const auto& core : cores) {
        std::vector<std::pair<int, SubsetMask::u128>> petals;
        for (int i = 0; i < m; ++i)
            if (core.subset_of(f.members[i]))
                petals.emplace_back(i, f.members[i].minus(core).raw());
        if (static_cast<int>(petals.size()) < r) continue;
        std::vector<int> chosen;
        if (disjoint_packing(petals, r, 0, 0, chosen))
            return Sunflower{core, chosen};
    }
    return std::nullopt;
}

SunflowerAuditReport audit_witness_sunflowers(const WitnessedFamily& w) {
    SunflowerAuditReport report;
    report.holds = true;
    for (const auto& [witness, indices] : witness_groups(w)) {
        WitnessClassAudit audit;
        audit.witness = witness;
        audit.class_size = static_cast<int>(indices.size());
        Family cls(w.family.n, w.d + 1);
        for (int i : indices) cls.members.push_back(w.family.members[i]);
        audit.largest_sunflower = 1;
        for (int r = audit.class_size; r >= 2; --r) {
            if (find_sunflower(cls, r)) {
                audit.largest_sunflower = r;
                break;
            }
        }
        audit.holds = audit.largest_sunflower < w.d + 3;
        if (!audit.holds) report.holds = false;
        report.classes.push_back(std::move(audit));
    }
    return report;
}

std::optional<CenteredDisjoint> find_centered_disjoint(const Family& f, int d) {
    if (!f.uniform_rank || *f.uniform_rank != d)
        throw std::invalid_argument("find_centered_disjoint: family must be d-uniform");
    const int m = static_cast<int>(f.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!f.members[i].intersects(f.members[j]))
                throw std::invalid_argument("find_centered_disjoint: family is not intersecting");
    if (f.empty()) return std::nullopt;

    SubsetMask common = f.members[0];
    for (const auto& F : f.members) common = common & F;

    for (int ell : common.elements()) {
        std::vector<std::pair<int, SubsetMask::u128>> petals;
        for (int i = 0; i < m; ++i)
            petals.emplace_back(i, f.members[i].raw() & ~(SubsetMask::u128{1} << (ell - 1)));
        std::vector<int> chosen;
        if (disjoint_packing(petals, d + 1, 0, 0, chosen))
            return CenteredDisjoint{ell, chosen};
    }
    return std::nullopt;
}

}  // namespace vclab
