#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vclab/family.hpp"

namespace vclab {

// A (d+1)-uniform family together with one witness B_i per member: a proper
// subset of F_i that no member intersects F_i in.  Existence of witnesses for
// every member certifies VC-dimension <= d.
struct WitnessedFamily {
    Family family;  // (d+1)-uniform
    int d = 0;
    std::vector<SubsetMask> witnesses;

    std::size_t size() const { return family.size(); }

    // Checks: rank d+1, witnesses proper subsets, the witness property
    // F cap F_i != B_i for every pair, and distinctness of size-d witnesses.
    // Witness *maximality* is deliberately not required here: constructions
    // may carry non-canonical witnesses (see extremal module).
    void validate() const;
};

// Raised by select_witnesses when some member admits no witness, which
// certifies VC-dimension exactly d+1.
struct shattered_member_error : std::runtime_error {
    int index;
    explicit shattered_member_error(int i)
        : std::runtime_error("member " + std::to_string(i) +
                             " is shattered: no witness exists (VC-dimension = d+1)"),
          index(i) {}
};

// True iff {F cap S : F in f} attains all 2^|S| subsets of S.
bool shatters(const Family& f, const SubsetMask& S);

// Largest |S| over shattered S, by ascending-size search (shattered sets are
// downward closed, so the first size with no shattered set terminates).
// Throws on an empty family.
int vc_dimension(const Family& f);

// For each member, the first proper subset in (descending cardinality,
// ascending mask value) order satisfying the witness property.  Succeeds iff
// vc_dimension(f) <= d; otherwise throws shattered_member_error.
WitnessedFamily select_witnesses(const Family& f, int d);

// Partition of member indices by witness value; keys in colex order.
std::map<SubsetMask, std::vector<int>> witness_groups(const WitnessedFamily& w);

// Witnessed-family file: family format with each set line extended by
// " | b1 b2 ...".
WitnessedFamily parse_witnessed_family(const std::string& text);
std::string serialize_witnessed_family(const WitnessedFamily& w);
WitnessedFamily read_witnessed_family_file(const std::string& path);
void write_witnessed_family_file(const std::string& path, const WitnessedFamily& w);

}  // namespace vclab
