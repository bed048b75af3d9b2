#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace vclab {

inline constexpr int kMaxGroundSet = 128;

// A subset of the ground set [n] = {1,...,n} as a 128-bit vector.  Element e
// lives at bit e-1.  Numeric order of the bit pattern is exactly colex order
// on sets, so operator< doubles as the canonical enumeration order.
class SubsetMask {
  public:
    SubsetMask() : bits_(0), n_(0) {}

    explicit SubsetMask(int n) : bits_(0), n_(n) { check_n(n); }

    SubsetMask(int n, std::initializer_list<int> elems) : bits_(0), n_(n) {
        check_n(n);
        for (int e : elems) add(e);
    }

    static SubsetMask from_elements(int n, const std::vector<int>& elems) {
        SubsetMask m(n);
        for (int e : elems) m.add(e);
        return m;
    }

    // Lowest k bits set: the colex-first k-subset.
    static SubsetMask first_k_subset(int n, int k) {
        if (k < 0 || k > n) throw std::invalid_argument("first_k_subset: need 0 <= k <= n");
        SubsetMask m(n);
        if (k > 0) m.bits_ = (k == kMaxGroundSet) ? ~u128{0} : ((u128{1} << k) - 1);
        return m;
    }

    int ground_set() const { return n_; }
    bool empty() const { return bits_ == 0; }

    bool contains(int e) const {
        check_elem(e);
        return (bits_ >> (e - 1)) & 1;
    }

    SubsetMask& add(int e) {
        check_elem(e);
        bits_ |= u128{1} << (e - 1);
        return *this;
    }

    SubsetMask& remove(int e) {
        check_elem(e);
        bits_ &= ~(u128{1} << (e - 1));
        return *this;
    }

    int cardinality() const {
        return std::popcount(static_cast<std::uint64_t>(bits_)) +
               std::popcount(static_cast<std::uint64_t>(bits_ >> 64));
    }

    bool subset_of(const SubsetMask& o) const { return (bits_ & ~o.bits_) == 0; }
    bool proper_subset_of(const SubsetMask& o) const {
        return subset_of(o) && bits_ != o.bits_;
    }
    bool intersects(const SubsetMask& o) const { return (bits_ & o.bits_) != 0; }

    SubsetMask operator&(const SubsetMask& o) const { return with_bits(bits_ & o.bits_); }
    SubsetMask operator|(const SubsetMask& o) const { return with_bits(bits_ | o.bits_); }
    // Set difference.
    SubsetMask minus(const SubsetMask& o) const { return with_bits(bits_ & ~o.bits_); }

    // Complement within [n].
    SubsetMask complement() const {
        u128 full = (n_ == kMaxGroundSet) ? ~u128{0} : ((u128{1} << n_) - 1);
        return with_bits(full & ~bits_);
    }

    int min_element() const {  // 0 when empty
        if (bits_ == 0) return 0;
        auto lo = static_cast<std::uint64_t>(bits_);
        if (lo) return std::countr_zero(lo) + 1;
        return std::countr_zero(static_cast<std::uint64_t>(bits_ >> 64)) + 65;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(cardinality());
        u128 b = bits_;
        while (b) {
            auto lo = static_cast<std::uint64_t>(b);
            int e = lo ? std::countr_zero(lo) : std::countr_zero(static_cast<std::uint64_t>(b >> 64)) + 64;
            out.push_back(e + 1);
            b &= b - 1;
        }
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const SubsetMask& o) const { return bits_ == o.bits_ && n_ == o.n_; }
    // Colex order on the bit pattern; ground-set size breaks ties so that
    // masks over different universes never compare equal.
    std::strong_ordering operator<=>(const SubsetMask& o) const {
        if (bits_ != o.bits_) return bits_ < o.bits_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return n_ <=> o.n_;
    }

    using u128 = unsigned __int128;
    u128 raw() const { return bits_; }
    static SubsetMask from_raw(int n, u128 bits) {
        SubsetMask m(n);
        u128 full = (n == kMaxGroundSet) ? ~u128{0} : ((u128{1} << n) - 1);
        if (bits & ~full) throw std::invalid_argument("SubsetMask: bit set beyond ground set");
        m.bits_ = bits;
        return m;
    }

    std::size_t hash() const {
        auto lo = static_cast<std::uint64_t>(bits_);
        auto hi = static_cast<std::uint64_t>(bits_ >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }

  private:
    SubsetMask with_bits(u128 b) const {
        SubsetMask m(n_);
        m.bits_ = b;
        return m;
    }
    static void check_n(int n) {
        if (n < 0 || n > kMaxGroundSet)
            throw std::invalid_argument("ground set size must be in [0, 128], got " + std::to_string(n));
    }
    void check_elem(int e) const {
        if (e < 1 || e > n_)
            throw std::out_of_range("element " + std::to_string(e) + " outside [1, " + std::to_string(n_) + "]");
    }

    u128 bits_;
    int n_;
};

struct SubsetMaskHash {
    std::size_t operator()(const SubsetMask& m) const { return m.hash(); }
};

}  // namespace vclab
