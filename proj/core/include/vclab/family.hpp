#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vclab/subset_mask.hpp"

namespace vclab {

// An ordered, duplicate-free collection of subsets of [n], optionally tagged
// k-uniform.
struct Family {
    int n = 0;
    std::vector<SubsetMask> members;
    std::optional<int> uniform_rank;

    Family() = default;
    explicit Family(int n, std::optional<int> k = std::nullopt) : n(n), uniform_rank(k) {}

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }

    void add(const SubsetMask& m);               // validates ground set and rank
    bool contains(const SubsetMask& m) const;    // linear scan
    // Throws std::invalid_argument if any invariant fails (shared ground set,
    // uniform rank, duplicate-freeness).
    void check() const;
};

// Streaming colex enumeration of all k-subsets of [n]; constant memory per
// step (Gosper's hack on the 128-bit pattern).
class KSubsetStream {
  public:
    KSubsetStream(int n, int k);
    bool next(SubsetMask& out);  // false once exhausted

  private:
    int n_, k_;
    bool done_;
    SubsetMask::u128 cur_, limit_;
};

std::vector<SubsetMask> k_subsets(int n, int k);
Family complete_family(int n, int k);

// binom([n],k) minus f, in colex order.  f must be k-uniform.
Family complement_family(const Family& f, int k);

// Family file format: header "n" or "n k", one set per line as ascending
// 1-based integers, '#' starts a comment line.
Family parse_family(const std::string& text);
std::string serialize_family(const Family& f);

Family read_family_file(const std::string& path);
void write_family_file(const std::string& path, const Family& f);

}  // namespace vclab
