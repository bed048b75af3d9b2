#include "vclab/extremal.hpp"

#include <random>
#include <stdexcept>

#include "vclab/binom.hpp"

namespace vclab {

Family star(int n, int k, int center) {
    if (center < 1 || center > n || k < 1 || k > n)
        throw std::invalid_argument("star: need 1 <= center <= n and 1 <= k <= n");
    Family f(n, k);
    KSubsetStream st(n, k);
    SubsetMask m;
    while (st.next(m))
        if (m.contains(center)) f.members.push_back(m);
    return f;
}

namespace {

std::vector<SubsetMask> free_d_subsets(int n, int d) {
    // d-subsets of [n] \ {1,2,3,4}, colex
    std::vector<SubsetMask> out;
    KSubsetStream st(n, d);
    SubsetMask m;
    while (st.next(m)) {
        if (m.contains(1) || m.contains(2) || m.contains(3) || m.contains(4)) continue;
        out.push_back(m);
    }
    return out;
}

}  // namespace

MzAssignment mz_assignment_constant(int n, int d, int side) {
    if (side != 1 && side != 2) throw std::invalid_argument("mz assignment side must be 1 or 2");
    MzAssignment a;
    for (const auto& m : free_d_subsets(n, d)) a[m] = side;
    return a;
}

MzAssignment mz_assignment_random(int n, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MzAssignment a;
    for (const auto& m : free_d_subsets(n, d)) a[m] = 1 + static_cast<int>(rng() & 1);
    return a;
}

MzFamily mz_family_typed(int n, int d, const MzAssignment& assignment) {
    if (d < 2) throw std::invalid_argument("mz_family: requires d >= 2");
    if (n < 2 * (d + 1)) throw std::invalid_argument("mz_family: requires n >= 2(d+1)");
    // assignment must be total on binom([n] \ {1,2,3,4}, d)
    for (const auto& m : free_d_subsets(n, d)) {
        auto it = assignment.find(m);
        if (it == assignment.end())
            throw std::invalid_argument("mz_family: assignment not total, missing " + m.to_string());
        if (it->second != 1 && it->second != 2)
            throw std::invalid_argument("mz_family: assignment value must be 1 or 2");
    }

    // G1 = {G : 3 in G} u {G : {3,4} <= G} u {assigned 1},
    // G2 symmetric with 4.  G1 n G2 = {G : {3,4} <= G}.
    std::vector<SubsetMask> g1_only, g2_only, g_both;
    KSubsetStream st(n, d);
    SubsetMask g;
    while (st.next(g)) {
        if (g.contains(1) || g.contains(2)) continue;
        bool has3 = g.contains(3), has4 = g.contains(4);
        if (has3 && has4)
            g_both.push_back(g);
        else if (has3)
            g1_only.push_back(g);
        else if (has4)
            g2_only.push_back(g);
        else if (assignment.at(g) == 1)
            g1_only.push_back(g);
        else
            g2_only.push_back(g);
    }

    MzFamily out;
    WitnessedFamily& w = out.witnessed;
    w.family = Family(n, d + 1);
    w.d = d;
    auto emit = [&](SubsetMask F, SubsetMask B, int type) {
        w.family.members.push_back(F);
        w.witnesses.push_back(B);
        out.type.push_back(type);
    };

    SubsetMask one_two(n, {1, 2});
    KSubsetStream core(n, d - 1);
    SubsetMask c;
    while (core.next(c)) {
        if (c.contains(1) || c.contains(2)) continue;
        emit(c | one_two, c, 1);
    }
    for (const auto& G : g1_only) emit(SubsetMask(n, {1}) | G, G, 2);
    for (const auto& G : g2_only) emit(SubsetMask(n, {2}) | G, G, 3);
    for (const auto& G : g_both) {
        SubsetMask F1 = SubsetMask(n, {1}) | G;
        emit(F1, F1.minus(SubsetMask(n, {1, 4})), 4);
    }
    for (const auto& G : g_both) {
        SubsetMask F2 = SubsetMask(n, {2}) | G;
        emit(F2, F2.minus(SubsetMask(n, {2, 3})), 4);
    }

    w.validate();
    return out;
}

WitnessedFamily mz_family(int n, int d, const MzAssignment& assignment) {
    return mz_family_typed(n, d, assignment).witnessed;
}

Family stability_example(int n, int d) {
    if (n < d + 3 || d < 1) throw std::invalid_argument("stability_example: requires n >= d+3, d >= 1");
    SubsetMask A(n);
    for (int e = 2; e <= d + 2; ++e) A.add(e);
    Family f(n, d + 1);
    f.members.push_back(A);
    KSubsetStream st(n, d);
    SubsetMask g;
    while (st.next(g)) {
        if (g.contains(1)) continue;
        if (g.subset_of(A)) continue;
        f.members.push_back(g | SubsetMask(n, {1}));
    }
    return f;
}

Family hamming_ball(int n, int d) {
    if (d < 0 || d > n) throw std::invalid_argument("hamming_ball: need 0 <= d <= n");
    Family f(n);
    for (int i = 0; i <= d; ++i) {
        KSubsetStream st(n, i);
        SubsetMask m;
        while (st.next(m)) f.members.push_back(m);
    }
    return f;
}

}  // namespace vclab
