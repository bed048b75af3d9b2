#pragma once

#include <optional>

#include "vclab/vc.hpp"

namespace vclab {

struct Sunflower {
    SubsetMask core;
    std::vector<int> petal_indices;  // ascending member indices
};

// First r-sunflower (pairwise intersections all equal to a common core)
// under (core, sorted indices) lexicographic order, or nullopt.  Search
// groups members by candidate core and matches disjoint petals with
// backtracking; exact, exponential worst case.
std::optional<Sunflower> find_sunflower(const Family& f, int r);

struct WitnessClassAudit {
    SubsetMask witness;
    int class_size = 0;
    int largest_sunflower = 0;  // max r admitting a sunflower inside the class (1 if < 2 members)
    bool holds = false;         // no (d+3)-sunflower
};

struct SunflowerAuditReport {
    std::vector<WitnessClassAudit> classes;
    bool holds = false;  // all classes pass
};

// Per witness-class sunflower audit: each class {F_i : B_i = A} must avoid
// (d+3)-sunflowers.  A violation falsifies the witness maximality rule.
SunflowerAuditReport audit_witness_sunflowers(const WitnessedFamily& w);

struct CenteredDisjoint {
    int ell = 0;
    std::vector<int> indices;  // d+1 members, petals pairwise disjoint off ell
};

// For a d-uniform intersecting family: an element ell lying in every member
// plus d+1 members whose petals (member minus ell) are pairwise disjoint.
// Throws if f is not intersecting.
std::optional<CenteredDisjoint> find_centered_disjoint(const Family& f, int d);

}  // namespace vclab
