#include "vclab/vc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace vclab {

void WitnessedFamily::validate() const {
    family.check();
    if (!family.uniform_rank || *family.uniform_rank != d + 1)
        throw std::invalid_argument("WitnessedFamily: family must be (d+1)-uniform");
    if (witnesses.size() != family.size())
        throw std::invalid_argument("WitnessedFamily: one witness per member required");
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (!witnesses[i].proper_subset_of(family.members[i]))
            throw std::invalid_argument("WitnessedFamily: witness " + witnesses[i].to_string() +
                                        " is not a proper subset of member " +
                                        family.members[i].to_string());
        for (const auto& F : family.members)
            if ((F & family.members[i]) == witnesses[i])
                throw std::invalid_argument("WitnessedFamily: witness property violated at member " +
                                            family.members[i].to_string() + " by " + F.to_string());
    }
    // Distinct size-d witnesses (consequence of the witness property; cheap
    // internal consistency check).
    std::unordered_set<SubsetMask, SubsetMaskHash> size_d;
    for (const auto& b : witnesses)
        if (b.cardinality() == d && !size_d.insert(b).second)
            throw std::logic_error("WitnessedFamily: repeated size-d witness " + b.to_string());
}

bool shatters(const Family& f, const SubsetMask& S) {
    if (S.ground_set() != f.n)
        throw std::invalid_argument("shatters: ground set mismatch");
    const int k = S.cardinality();
    if (k > 60) throw std::invalid_argument("shatters: |S| too large");
    const std::uint64_t want = std::uint64_t{1} << k;
    std::unordered_set<SubsetMask::u128> traces;
    traces.reserve(f.size());
    for (const auto& F : f.members) {
        traces.insert((F & S).raw());
        if (traces.size() == want) return true;
    }
    return traces.size() == want;
}

int vc_dimension(const Family& f) {
    if (f.empty()) throw std::invalid_argument("vc_dimension: undefined for the empty family");
    // S must lie inside the union of members and inside some member entirely
    // (S itself is a trace), so sizes stop at the largest member.
    int max_member = 0;
    SubsetMask support(f.n);
    for (const auto& F : f.members) {
        support = support | F;
        max_member = std::max(max_member, F.cardinality());
    }
    int dim = 0;  // the empty set is shattered by any non-empty family
    for (int t = 1; t <= max_member; ++t) {
        bool found = false;
        KSubsetStream st(f.n, t);
        SubsetMask S;
        while (st.next(S)) {
            if (!S.subset_of(support)) continue;
            if (shatters(f, S)) {
                found = true;
                break;
            }
        }
        if (!found) break;
        dim = t;
    }
    return dim;
}

namespace {

// Proper subsets of F in descending cardinality, ascending mask value.
std::vector<SubsetMask> witness_candidates(const SubsetMask& F) {
    const int k = F.cardinality();
    std::vector<std::vector<SubsetMask>> by_size(k);
    // enumerate all proper submasks
    SubsetMask::u128 full = F.raw();
    SubsetMask::u128 sub = full;
    while (true) {
        sub = (sub - 1) & full;
        int c = SubsetMask::from_raw(F.ground_set(), sub).cardinality();
        if (c < k) by_size[c].push_back(SubsetMask::from_raw(F.ground_set(), sub));
        if (sub == 0) break;
    }
    std::vector<SubsetMask> out;
    out.reserve(std::size_t{1} << k);
    for (int c = k - 1; c >= 0; --c) {
        std::sort(by_size[c].begin(), by_size[c].end());
        out.insert(out.end(), by_size[c].begin(), by_size[c].end());
    }
    return out;
}

}  // namespace

WitnessedFamily select_witnesses(const Family& f, int d) {
    if (!f.uniform_rank || *f.uniform_rank != d + 1)
        throw std::invalid_argument("select_witnesses: family must be (d+1)-uniform");
    WitnessedFamily w;
    w.family = f;
    w.d = d;
    w.witnesses.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const SubsetMask& Fi = f.members[i];
        bool placed = false;
        for (const auto& B : witness_candidates(Fi)) {
            bool ok = true;
            for (const auto& F : f.members) {
                if ((F & Fi) == B) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                w.witnesses.push_back(B);
                placed = true;
                break;
            }
        }
        if (!placed) throw shattered_member_error(static_cast<int>(i));
    }
    return w;
}

std::map<SubsetMask, std::vector<int>> witness_groups(const WitnessedFamily& w) {
    std::map<SubsetMask, std::vector<int>> groups;
    for (std::size_t i = 0; i < w.witnesses.size(); ++i)
        groups[w.witnesses[i]].push_back(static_cast<int>(i));
    return groups;
}

WitnessedFamily parse_witnessed_family(const std::string& text) {
    // Split every member line at '|', parse the family part and the witness
    // part through the family grammar on a shared header.
    std::istringstream in(text);
    std::string line, fam_text, wit_text;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            fam_text += line + "\n";
            wit_text += line + "\n";
            have_header = true;
            continue;
        }
        auto bar = line.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("witnessed family: missing ' | witness' on line: " + line);
        fam_text += line.substr(0, bar) + "\n";
        std::string wpart = line.substr(bar + 1);
        if (wpart.find_first_not_of(" \t\r") == std::string::npos) wpart = " -";
        wit_text += wpart + "\n";
    }
    Family fam = parse_family(fam_text);
    if (!fam.uniform_rank)
        throw std::invalid_argument("witnessed family: header must declare uniform rank");
    Family wits_holder;
    {
        // witnesses may repeat across members and may be empty: parse
        // member-by-member to sidestep the duplicate-line rule
        std::istringstream ws(wit_text);
        std::string wline;
        std::getline(ws, wline);  // header
        wits_holder.n = fam.n;
        while (std::getline(ws, wline)) {
            Family one = parse_family(std::to_string(fam.n) + "\n" + wline + "\n");
            wits_holder.members.push_back(one.members.at(0));
        }
    }
    WitnessedFamily w;
    w.family = fam;
    w.d = *fam.uniform_rank - 1;
    w.witnesses = wits_holder.members;
    w.validate();
    return w;
}

std::string serialize_witnessed_family(const WitnessedFamily& w) {
    std::ostringstream out;
    out << w.family.n;
    if (w.family.uniform_rank) out << ' ' << *w.family.uniform_rank;
    out << '\n';
    for (std::size_t i = 0; i < w.family.size(); ++i) {
        bool first = true;
        for (int e : w.family.members[i].elements()) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        out << " |";
        for (int e : w.witnesses[i].elements()) out << ' ' << e;
        if (w.witnesses[i].empty()) out << " -";
        out << '\n';
    }
    return out.str();
}

WitnessedFamily read_witnessed_family_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open witnessed family file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_witnessed_family(ss.str());
}

void write_witnessed_family_file(const std::string& path, const WitnessedFamily& w) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write witnessed family file: " + path);
    out << serialize_witnessed_family(w);
}

}  // namespace vclab
