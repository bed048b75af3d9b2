#pragma once

#include <cstdint>
#include <map>

#include "vclab/vc.hpp"

namespace vclab {

// All k-subsets of [n] containing `center`; size binom(n-1, k-1).
Family star(int n, int k, int center);

// Assignment of each d-subset of [n] \ {1,2,3,4} to side 1 or 2 of the
// Mubayi-Zhao split.  Must be total.
using MzAssignment = std::map<SubsetMask, int>;

MzAssignment mz_assignment_constant(int n, int d, int side);
MzAssignment mz_assignment_random(int n, int d, std::uint64_t seed);

// The Mubayi-Zhao (d+1)-uniform construction of size
// binom(n-1,d) + binom(n-4,d-2), with its intended witnesses:
//   type 1: F containing {1,2},            B = F \ {1,2}
//   type 2: {1} u G for G in G1 \ G2,      B = F \ {1}
//   type 3: {2} u G for G in G2 \ G1,      B = F \ {2}
//   type 4: {1} u G / {2} u G, G in G1 n G2, B = F \ {1,4} / F \ {2,3}
// The emitted witnesses are the construction's own, validated but not
// re-derived through select_witnesses (they need not be maximal).
WitnessedFamily mz_family(int n, int d, const MzAssignment& assignment);

// Per-member type tags (1..4) for the most recent layout of mz_family;
// returned alongside for audit purposes.
struct MzFamily {
    WitnessedFamily witnessed;
    std::vector<int> type;  // parallel to members
};
MzFamily mz_family_typed(int n, int d, const MzAssignment& assignment);

// The near-star family {A} u {G u {1} : G in binom([n]\{1}, d) \ binom(A, d)}
// with A = {2,...,d+2}; size binom(n-1,d) - d.  Satisfies the size-d witness
// condition without being a star.
Family stability_example(int n, int d);

// All subsets of [n] of size <= d; meets the Sauer-Shelah bound with
// equality.
Family hamming_ball(int n, int d);

}  // namespace vclab
