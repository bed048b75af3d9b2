#include "vclab/family.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "vclab/binom.hpp"

namespace vclab {

void Family::add(const SubsetMask& m) {
    if (m.ground_set() != n)
        throw std::invalid_argument("Family::add: member ground set mismatch");
    if (uniform_rank && m.cardinality() != *uniform_rank)
        throw std::invalid_argument("Family::add: member cardinality " +
                                    std::to_string(m.cardinality()) +
                                    " violates uniform rank " + std::to_string(*uniform_rank));
    members.push_back(m);
}

bool Family::contains(const SubsetMask& m) const {
    for (const auto& x : members)
        if (x == m) return true;
    return false;
}

void Family::check() const {
    std::unordered_set<SubsetMask, SubsetMaskHash> seen;
    for (const auto& m : members) {
        if (m.ground_set() != n)
            throw std::invalid_argument("Family: member ground set mismatch");
        if (uniform_rank && m.cardinality() != *uniform_rank)
            throw std::invalid_argument("Family: non-uniform member " + m.to_string() +
                                        " under rank " + std::to_string(*uniform_rank));
        if (!seen.insert(m).second)
            throw std::invalid_argument("Family: duplicate member " + m.to_string());
    }
}

KSubsetStream::KSubsetStream(int n, int k) : n_(n), k_(k), done_(false) {
    if (n < 0 || n > kMaxGroundSet || k < 0 || k > n)
        throw std::invalid_argument("KSubsetStream: need 0 <= k <= n <= 128");
    cur_ = (k == 0) ? 0 : (k == kMaxGroundSet ? ~SubsetMask::u128{0} : ((SubsetMask::u128{1} << k) - 1));
    limit_ = (n == kMaxGroundSet) ? ~SubsetMask::u128{0} : ((SubsetMask::u128{1} << n) - 1);
}

bool KSubsetStream::next(SubsetMask& out) {
    if (done_) return false;
    out = SubsetMask::from_raw(n_, cur_);
    if (k_ == 0 || k_ == n_) {
        done_ = true;
        return true;
    }
    // Gosper: next-larger pattern with the same popcount.
    SubsetMask::u128 v = cur_;
    SubsetMask::u128 c = v & (~v + 1);
    SubsetMask::u128 r = v + c;
    if (r == 0 || (r & ~limit_)) {
        done_ = true;
        return true;
    }
    cur_ = r | (((v ^ r) >> 2) / c);
    if (cur_ & ~limit_) done_ = true;
    return true;
}

std::vector<SubsetMask> k_subsets(int n, int k) {
    std::vector<SubsetMask> out;
    out.reserve(static_cast<std::size_t>(binom(n, k)));
    KSubsetStream st(n, k);
    SubsetMask m;
    while (st.next(m)) out.push_back(m);
    return out;
}

Family complete_family(int n, int k) {
    Family f(n, k);
    f.members = k_subsets(n, k);
    return f;
}

Family complement_family(const Family& f, int k) {
    if (!f.uniform_rank || *f.uniform_rank != k)
        throw std::invalid_argument("complement_family: family is not tagged " +
                                    std::to_string(k) + "-uniform");
    std::unordered_set<SubsetMask, SubsetMaskHash> in(f.members.begin(), f.members.end());
    Family out(f.n, k);
    KSubsetStream st(f.n, k);
    SubsetMask m;
    while (st.next(m))
        if (!in.count(m)) out.members.push_back(m);
    return out;
}

namespace {

[[noreturn]] void parse_error(int line_no, const std::string& what) {
    throw std::invalid_argument("family parse error at line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Family parse_family(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    Family fam;
    bool have_header = false;
    std::unordered_set<SubsetMask, SubsetMaskHash> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            long long n, k;
            if (!(ls >> n)) parse_error(line_no, "malformed header");
            if (n < 1 || n > kMaxGroundSet) parse_error(line_no, "ground set size out of [1, 128]");
            fam.n = static_cast<int>(n);
            if (ls >> k) {
                if (k < 0 || k > n) parse_error(line_no, "uniform rank out of [0, n]");
                fam.uniform_rank = static_cast<int>(k);
            }
            std::string rest;
            if (ls >> rest) parse_error(line_no, "trailing tokens in header");
            have_header = true;
            continue;
        }
        SubsetMask m(fam.n);
        if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t\r")] == '-') {
            // "-" denotes the empty set (an empty line would be skipped)
            std::string tok;
            ls >> tok;
            std::string rest;
            if (tok != "-" || (ls >> rest)) parse_error(line_no, "malformed empty-set line");
            if (fam.uniform_rank && *fam.uniform_rank != 0)
                parse_error(line_no, "set has cardinality 0, declared rank is " +
                                         std::to_string(*fam.uniform_rank));
            if (!seen.insert(m).second) parse_error(line_no, "duplicate line " + m.to_string());
            fam.members.push_back(m);
            continue;
        }
        long long e;
        int count = 0, prev = 0;
        while (ls >> e) {
            if (e < 1 || e > fam.n)
                parse_error(line_no, "element " + std::to_string(e) + " out of [1, n]");
            if (m.contains(static_cast<int>(e)))
                parse_error(line_no, "duplicate element " + std::to_string(e));
            if (e < prev) parse_error(line_no, "elements not ascending");
            prev = static_cast<int>(e);
            m.add(static_cast<int>(e));
            ++count;
        }
        if (!ls.eof()) parse_error(line_no, "non-integer token");
        if (fam.uniform_rank && count != *fam.uniform_rank)
            parse_error(line_no, "set has cardinality " + std::to_string(count) +
                                     ", declared rank is " + std::to_string(*fam.uniform_rank));
        if (!seen.insert(m).second) parse_error(line_no, "duplicate line " + m.to_string());
        fam.members.push_back(m);
    }
    if (!have_header) throw std::invalid_argument("family parse error: missing header");
    return fam;
}

std::string serialize_family(const Family& f) {
    std::ostringstream out;
    out << f.n;
    if (f.uniform_rank) out << ' ' << *f.uniform_rank;
    out << '\n';
    for (const auto& m : f.members) {
        if (m.empty()) {
            out << "-\n";
            continue;
        }
        bool first = true;
        for (int e : m.elements()) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

Family read_family_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_family(ss.str());
}

void write_family_file(const std::string& path, const Family& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write family file: " + path);
    out << serialize_family(f);
}

}  // namespace vclab
