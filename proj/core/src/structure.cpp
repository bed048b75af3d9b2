#include "vclab/structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "vclab/binom.hpp"
#include "vclab/sunflower.hpp"

namespace vclab {

LinkPair links(const WitnessedFamily& w, int v) {
    if (v < 1 || v > w.family.n) throw std::out_of_range("links: vertex outside [1, n]");
    LinkPair lp;
    lp.v = v;
    lp.X = Family(w.family.n, w.d);
    lp.Y = Family(w.family.n, w.d);
    for (std::size_t k = 0; k < w.family.size(); ++k) {
        const SubsetMask& F = w.family.members[k];
        if (!F.contains(v)) continue;
        SubsetMask stripped = F;
        stripped.remove(v);
        if (w.witnesses[k].contains(v))
            lp.X.members.push_back(stripped);
        else
            lp.Y.members.push_back(stripped);
    }
    return lp;
}

LinkAuditReport link_audit(const WitnessedFamily& w) {
    LinkAuditReport r;
    const int n = w.family.n;
    const long long m = static_cast<long long>(w.family.size());
    r.x_sizes.resize(n);
    r.y_sizes.resize(n);

    long long sum_links = 0, sum_x = 0;
    ClaimResult vc_claim;
    vc_claim.rhs = w.d - 1;
    for (int v = 1; v <= n; ++v) {
        LinkPair lp = links(w, v);
        r.x_sizes[v - 1] = static_cast<int>(lp.X.size());
        r.y_sizes[v - 1] = static_cast<int>(lp.Y.size());
        sum_links += static_cast<long long>(lp.X.size() + lp.Y.size());
        sum_x += static_cast<long long>(lp.X.size());
        if (!lp.X.empty()) {
            int dim = vc_dimension(lp.X);
            vc_claim.lhs = std::max(vc_claim.lhs, static_cast<long long>(dim));
            if (dim > w.d - 1) {
                vc_claim.holds = false;
                vc_claim.witnesses.push_back("v=" + std::to_string(v));
            }
        }
    }
    long long sum_bk = 0;
    for (const auto& b : w.witnesses) sum_bk += b.cardinality();

    ClaimResult ident;
    ident.lhs = sum_links;
    ident.rhs = (w.d + 1) * m;
    ident.holds = ident.lhs == ident.rhs;

    ClaimResult xsum;
    xsum.lhs = sum_x;
    xsum.rhs = sum_bk;
    xsum.holds = xsum.lhs == xsum.rhs;

    r.claims["link_sum_identity"] = ident;
    r.claims["xv_sum_eq_witness_sum"] = xsum;
    r.claims["claim3_3_xv_vc_dim"] = vc_claim;
    r.holds = ident.holds && xsum.holds && vc_claim.holds;
    return r;
}

SubsetMask select_transversal(const WitnessedFamily& w, int s) {
    if (s < 1) throw std::invalid_argument("select_transversal: s >= 1 required");
    const int n = w.family.n;
    const int d = w.d;
    if (d - 1 > 17) throw std::invalid_argument("select_transversal: d too large for exact threshold");
    unsigned __int128 n_pow = 1;
    for (int i = 0; i < d - 1; ++i) n_pow *= static_cast<unsigned>(n);
    const std::uint64_t full_link = binom(n - 1, d - 1);

    SubsetMask J(n);
    for (int v = 1; v <= n; ++v) {
        LinkPair lp = links(w, v);
        // binom(n-1,d-1) - |X_v| >= n^{d-1} / s, compared exactly
        unsigned __int128 lhs =
            static_cast<unsigned __int128>(s) * (full_link - static_cast<std::uint64_t>(lp.X.size()));
        if (lhs >= n_pow) J.add(v);
    }
    return J;
}

Family build_GJ(const Family& f, const SubsetMask& J) {
    if (!f.uniform_rank) throw std::invalid_argument("build_GJ: family must be uniform");
    const int d = *f.uniform_rank - 1;
    std::set<SubsetMask> edges;
    for (const auto& F : f.members)
        if ((F & J).cardinality() == 1) edges.insert(F.minus(J));
    Family g(f.n, d);
    g.members.assign(edges.begin(), edges.end());
    return g;
}

PartitionAudit partition_TJ(const WitnessedFamily& w, const SubsetMask& J) {
    const int n = w.family.n;
    const int d = w.d;
    const long long m = static_cast<long long>(w.family.size());

    PartitionAudit audit;
    audit.J = J;
    for (auto& p : audit.parts) p = Family(n, d + 1);

    for (std::size_t k = 0; k < w.family.size(); ++k) {
        const SubsetMask& F = w.family.members[k];
        const SubsetMask& B = w.witnesses[k];
        const int fj = (F & J).cardinality();
        const int bj = (B & J).cardinality();
        const int bsize = B.cardinality();
        int cls;
        if (fj == 0 && bj == 0 && bsize == d - 1)
            cls = 0;
        else if (bj == 0 && bsize == d)
            cls = 1;
        else if (fj == 1 && bj == 0 && bsize == d - 1)
            cls = 2;
        else if (fj == 1 && bj == 1 && bsize == d)
            cls = 3;
        else if (fj == 2 && F.minus(J).subset_of(B))
            cls = 4;
        else
            cls = 5;
        audit.parts[cls].members.push_back(F);
        audit.part_indices[cls].push_back(static_cast<int>(k));
    }

    audit.gj_edges = build_GJ(w.family, J);
    const int jsize = J.cardinality();
    audit.deficiency = static_cast<long long>(binom(n - jsize, d)) -
                       static_cast<long long>(audit.gj_edges.size());

    // Fact 3.6 census: (d-1)-subsets of [n] \ J lying in few edges of G_J.
    audit.sparse_threshold = 100 * d + jsize;
    {
        KSubsetStream st(n, d - 1);
        SubsetMask S;
        while (st.next(S)) {
            if (S.intersects(J)) continue;
            long long deg = 0;
            for (const auto& e : audit.gj_edges.members)
                if (S.subset_of(e)) ++deg;
            if (deg <= audit.sparse_threshold) ++audit.sparse_census;
        }
    }

    // Auxiliary graphs over (d-1)-sets C: edges {F n J} for T5 members with
    // F \ J = C and B = C.  Pairwise-intersecting edge sets are empty, a
    // star, or a triangle; anything else contradicts the witness property.
    {
        std::map<SubsetMask, std::vector<SubsetMask>> edges_by_c;
        for (std::size_t idx = 0; idx < audit.part_indices[4].size(); ++idx) {
            int k = audit.part_indices[4][idx];
            const SubsetMask& F = w.family.members[k];
            const SubsetMask& B = w.witnesses[k];
            if (B == F.minus(J)) edges_by_c[B].push_back(F & J);
        }
        audit.aux_empty =
            static_cast<long long>(binom(n - jsize, d - 1)) - static_cast<long long>(edges_by_c.size());
        for (auto& [c, edges] : edges_by_c) {
            (void)c;
            SubsetMask common = edges[0];
            for (const auto& e : edges) common = common & e;
            if (!common.empty()) {
                ++audit.aux_star;
            } else if (edges.size() == 3) {
                bool pairwise = true;
                for (std::size_t i = 0; i < edges.size(); ++i)
                    for (std::size_t j = i + 1; j < edges.size(); ++j)
                        if (!edges[i].intersects(edges[j])) pairwise = false;
                SubsetMask verts = edges[0] | edges[1] | edges[2];
                if (pairwise && verts.cardinality() == 3)
                    ++audit.aux_triangle;
                else
                    ++audit.aux_other;
            } else {
                ++audit.aux_other;
            }
        }
    }

    ClaimResult complete;
    complete.lhs = 0;
    for (const auto& p : audit.parts) complete.lhs += static_cast<long long>(p.size());
    complete.rhs = m;
    complete.holds = complete.lhs == complete.rhs;
    audit.claims["partition_complete"] = complete;

    ClaimResult t1_claim;  // deficiency 0 forces T1 empty
    t1_claim.lhs = static_cast<long long>(audit.parts[0].size());
    t1_claim.rhs = 0;
    t1_claim.holds = audit.deficiency != 0 || audit.parts[0].empty();
    if (!t1_claim.holds)
        for (const auto& F : audit.parts[0].members) t1_claim.witnesses.push_back(F.to_string());
    audit.claims["claim3_7_t1_empty_at_deficiency0"] = t1_claim;

    // Claim 3.8: fibers of phi (T2 -> B_k, T3 -> F \ J) are bounded by
    // d * (largest witness class).
    {
        std::unordered_map<SubsetMask::u128, long long> fiber;
        for (int k : audit.part_indices[1]) fiber[w.witnesses[k].raw()]++;
        for (int k : audit.part_indices[2]) fiber[w.family.members[k].minus(J).raw()]++;
        long long max_fiber = 0;
        for (const auto& [key, cnt] : fiber) {
            (void)key;
            max_fiber = std::max(max_fiber, cnt);
        }
        long long max_class = 0;
        for (const auto& [b, idxs] : witness_groups(w)) {
            (void)b;
            max_class = std::max(max_class, static_cast<long long>(idxs.size()));
        }
        ClaimResult fib;
        fib.lhs = max_fiber;
        fib.rhs = d * std::max(1LL, max_class);
        fib.holds = fib.lhs <= fib.rhs;
        audit.claims["claim3_8_fiber_bound"] = fib;
    }

    // Claim 3.9: no auxiliary graph falls outside {empty, star, triangle}.
    {
        ClaimResult aux;
        aux.lhs = audit.aux_other;
        aux.rhs = 0;
        aux.holds = audit.aux_other == 0;
        audit.claims["claim3_9_aux_graphs"] = aux;
    }

    // Claim 3.10: members of T6 have |B n ([n] \ J)| <= d-2.
    {
        ClaimResult t6;
        t6.rhs = d - 2;
        for (int k : audit.part_indices[5]) {
            long long outside = (w.witnesses[k].minus(J)).cardinality();
            t6.lhs = std::max(t6.lhs, outside);
            if (outside > d - 2) {
                t6.holds = false;
                t6.witnesses.push_back(w.family.members[k].to_string());
            }
        }
        audit.claims["claim3_10_t6_witness_small"] = t6;
    }

    // Lemma 3.5 bookkeeping: sum_{v in J} |Y_v| vs |F| - sum_{v notin J} |Y_v|.
    {
        long long in_j = 0, out_j = 0;
        for (int v = 1; v <= n; ++v) {
            long long y = static_cast<long long>(links(w, v).Y.size());
            (J.contains(v) ? in_j : out_j) += y;
        }
        ClaimResult lem;
        lem.lhs = in_j;
        lem.rhs = m - out_j;
        lem.holds = lem.lhs >= lem.rhs;
        audit.claims["lemma3_5_sum_bound"] = lem;
    }

    ClaimResult census;
    census.lhs = audit.sparse_census;
    census.rhs = audit.sparse_threshold;
    census.holds = true;  // informational: Fact 3.6 bounds it only asymptotically
    audit.claims["fact3_6_sparse_census"] = census;

    audit.holds = true;
    for (const auto& [name, c] : audit.claims) {
        (void)name;
        if (!c.holds) audit.holds = false;
    }
    return audit;
}

const char* to_string(S1Case c) {
    switch (c) {
        case S1Case::cycle: return "cycle";
        case S1Case::b_large: return "B_large";
        case S1Case::b_single_with_outside_f: return "B_single_with_outside_F";
        case S1Case::star_case: return "star_case";
        case S1Case::no_good: return "no_good";
    }
    return "?";
}

S1Report analyze_s1(const WitnessedFamily& w) {
    const int n = w.family.n;
    const int d = w.d;
    if (d < 2) throw std::invalid_argument("analyze_s1: requires d >= 2");
    for (const auto& b : w.witnesses)
        if (b.cardinality() != 1)
            throw std::invalid_argument("analyze_s1: every witness must have size exactly 1");

    S1Report r;
    // |F_a| >= 6 n^{d-2}, exact integers
    std::uint64_t threshold = 6;
    for (int i = 0; i < d - 2; ++i) threshold *= static_cast<unsigned>(n);

    std::vector<std::uint64_t> class_size(n + 1, 0);
    for (const auto& b : w.witnesses) class_size[b.min_element()]++;
    for (int a = 1; a <= n; ++a)
        if (class_size[a] >= threshold) r.good.push_back(a);

    std::set<int> good_set(r.good.begin(), r.good.end());
    for (int a : r.good) {
        Family xa = links(w, a).X;
        auto cd = find_centered_disjoint(xa, d);
        if (!cd)
            throw std::logic_error("analyze_s1: X_a lacks the centered disjoint structure at a=" +
                                   std::to_string(a) + " (internal inconsistency)");
        r.f_map[a] = cd->ell;
    }

    // Follow a -> f(a) until a bad element; a revisit of a good element is
    // the cycle branch.
    for (int a : r.good) {
        std::vector<int> chain{a};
        std::set<int> seen{a};
        int cur = a;
        while (true) {
            int nxt = r.f_map.at(cur);
            if (!good_set.count(nxt)) {
                r.b_map[a] = nxt;
                break;
            }
            if (seen.count(nxt)) {
                r.situation = S1Case::cycle;
                auto it = std::find(chain.begin(), chain.end(), nxt);
                r.cycle.assign(it, chain.end());
                return r;
            }
            chain.push_back(nxt);
            seen.insert(nxt);
            cur = nxt;
        }
    }

    std::set<int> bset;
    for (const auto& [a, b] : r.b_map) {
        (void)a;
        bset.insert(b);
    }
    r.B.assign(bset.begin(), bset.end());

    SubsetMask good_mask(n);
    for (int a : r.good) good_mask.add(a);
    r.F_good = Family(n, d + 1);
    for (const auto& F : w.family.members)
        if (F.intersects(good_mask)) r.F_good.members.push_back(F);

    r.claim_every_Fgood_contains_b = true;
    for (const auto& F : w.family.members)
        for (int a : r.good)
            if (F.contains(a) && (!F.contains(r.f_map.at(a)) || !F.contains(r.b_map.at(a))))
                r.claim_every_Fgood_contains_b = false;

    if (r.good.empty()) {
        r.situation = S1Case::no_good;
    } else if (r.B.size() > 1) {
        r.situation = S1Case::b_large;
    } else {
        SubsetMask avoid = good_mask;
        for (int b : r.B) avoid.add(b);
        bool outside = false;
        for (const auto& F : w.family.members)
            if (!F.intersects(avoid)) outside = true;
        r.situation = outside ? S1Case::b_single_with_outside_f : S1Case::star_case;
    }
    return r;
}

namespace {

nlohmann::json claims_to_json(const std::map<std::string, ClaimResult>& claims) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, c] : claims)
        j[name] = {{"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"witnesses", c.witnesses}};
    return j;
}

nlohmann::json mask_to_json(const SubsetMask& m) { return m.elements(); }

}  // namespace

std::string to_json_string(const LinkAuditReport& r) {
    nlohmann::json j;
    j["x_sizes"] = r.x_sizes;
    j["y_sizes"] = r.y_sizes;
    j["claims"] = claims_to_json(r.claims);
    j["holds"] = r.holds;
    return j.dump(2);
}

std::string to_json_string(const PartitionAudit& r) {
    nlohmann::json j;
    j["J"] = mask_to_json(r.J);
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& p : r.parts) sizes.push_back(p.size());
    j["part_sizes"] = sizes;
    j["gj_edges"] = r.gj_edges.size();
    j["deficiency"] = r.deficiency;
    j["sparse_threshold"] = r.sparse_threshold;
    j["sparse_census"] = r.sparse_census;
    j["aux_graphs"] = {{"star", r.aux_star}, {"triangle", r.aux_triangle}, {"other", r.aux_other}};
    j["claims"] = claims_to_json(r.claims);
    j["holds"] = r.holds;
    return j.dump(2);
}

std::string to_json_string(const S1Report& r) {
    nlohmann::json j;
    j["good"] = r.good;
    nlohmann::json fm = nlohmann::json::object(), bm = nlohmann::json::object();
    for (const auto& [a, l] : r.f_map) fm[std::to_string(a)] = l;
    for (const auto& [a, b] : r.b_map) bm[std::to_string(a)] = b;
    j["f_map"] = fm;
    j["b_map"] = bm;
    j["B"] = r.B;
    j["cycle"] = r.cycle;
    j["F_good_size"] = r.F_good.size();
    j["case"] = to_string(r.situation);
    j["claim_every_Fgood_contains_b"] = r.claim_every_Fgood_contains_b;
    return j.dump(2);
}

}  // namespace vclab
