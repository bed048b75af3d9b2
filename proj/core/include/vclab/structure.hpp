#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vclab/vc.hpp"

namespace vclab {

// Link of a witnessed family at v, split by whether v sits inside the
// witness: X = {F \ v : v in B}, Y = {F \ v : v in F \ B}.  Both d-uniform
// on [n] \ {v}; disjoint by the witness property.
struct LinkPair {
    int v = 0;
    Family X;
    Family Y;
};

LinkPair links(const WitnessedFamily& w, int v);

// Named check outcome: lhs/rhs of the audited (in)equality plus any witness
// strings for failures.  The JSON schema for audit reports is
// claim name -> {holds, lhs, rhs, witnesses}.
struct ClaimResult {
    bool holds = true;
    long long lhs = 0;
    long long rhs = 0;
    std::vector<std::string> witnesses;
};

struct LinkAuditReport {
    std::vector<int> x_sizes;  // indexed by v-1
    std::vector<int> y_sizes;
    std::map<std::string, ClaimResult> claims;
    bool holds = false;
};

// Exact link identities: sum_v(|X_v|+|Y_v|) = (d+1)|F|,
// sum_v |X_v| = sum_k |B_k|, and VC(X_v) <= d-1 for every v.
LinkAuditReport link_audit(const WitnessedFamily& w);

// J = {v : binom(n-1,d-1) - |X_v| >= n^{d-1}/s}, threshold compared as an
// exact rational.
SubsetMask select_transversal(const WitnessedFamily& w, int s);

// d-uniform edge family {F \ J : |F n J| = 1} on [n] \ J, deduplicated.
Family build_GJ(const Family& f, const SubsetMask& J);

struct PartitionAudit {
    SubsetMask J;
    std::array<Family, 6> parts;
    std::array<std::vector<int>, 6> part_indices;  // member indices per part
    Family gj_edges;
    long long deficiency = 0;   // binom(n-|J|, d) - |E(G_J)|
    int sparse_threshold = 0;   // 100 d + |J|
    long long sparse_census = 0;  // (d-1)-subsets of [n]\J in <= threshold edges
    // auxiliary graph classification over (d-1)-sets C (claim about T4/T5)
    long long aux_empty = 0, aux_star = 0, aux_triangle = 0, aux_other = 0;
    std::map<std::string, ClaimResult> claims;
    bool holds = false;
};

// Partition of the members into the six J-classes (first match in order
// T1..T5, remainder T6), together with G_J, the exact deficiency, and the
// structural claim checks.
PartitionAudit partition_TJ(const WitnessedFamily& w, const SubsetMask& J);

enum class S1Case { cycle, b_large, b_single_with_outside_f, star_case, no_good };

const char* to_string(S1Case c);

struct S1Report {
    std::vector<int> good;                // ascending
    std::map<int, int> f_map;             // good a -> common element of X_a
    std::map<int, int> b_map;             // good a -> terminal bad element
    std::vector<int> cycle;               // set when case == cycle
    std::vector<int> B;                   // {b(a)}
    Family F_good;                        // members meeting a good element
    S1Case situation = S1Case::no_good;
    bool claim_every_Fgood_contains_b = false;  // F containing good a also contains b(a)
};

// The good/bad element analysis for families whose witnesses all have size
// exactly 1.  Throws if some witness has a different size or if the centered
// disjoint structure is missing for a good element (internal inconsistency).
S1Report analyze_s1(const WitnessedFamily& w);

std::string to_json_string(const LinkAuditReport& r);
std::string to_json_string(const PartitionAudit& r);
std::string to_json_string(const S1Report& r);

}  // namespace vclab
