#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vclab/binom.hpp"
#include "vclab/extremal.hpp"
#include "vclab/polycert.hpp"

using namespace vclab;

TEST_CASE("polynomial evaluations") {
    SubsetMask F(6, {1, 2, 3}), B(6, {1, 2});
    CHECK(eval_poly_f(F, B, F) == mpq_class(-1));  // any F with B proper

    // f_{F}(v_A) = (-1)^{d+1-|B|} when A n F = B (and F not inside A)
    SubsetMask A(6, {1, 2, 4});
    CHECK(eval_poly_f(F, B, A) == mpq_class(-1));  // (-1)^{3-2}
    SubsetMask B1(6, {1});
    CHECK(eval_poly_f(F, B1, SubsetMask(6, {1, 4, 5})) == mpq_class(1));  // (-1)^{3-1}
    CHECK(eval_poly_f(F, B, SubsetMask(6, {4, 5, 6})) == mpq_class(0));

    CHECK(eval_poly_y(B, A) == mpq_class(-1));
    CHECK(eval_poly_y(B, SubsetMask(6, {1, 3})) == mpq_class(0));

    // h_H(v_H) = |H| - d - 1, nonzero for |H| <= d-1
    for (int d : {2, 3}) {
        SubsetMask H(6, {2});
        CHECK(eval_poly_h(H, H, d) == mpq_class(1 - d - 1));
        CHECK(eval_poly_h(H, SubsetMask(6, {2, 4, 5}), d) == mpq_class(3 - d - 1));
        CHECK(eval_poly_h(H, SubsetMask(6, {4, 5}), d) == mpq_class(0));
    }
}

TEST_CASE("exact_rank basics") {
    ExactMatrix id(22, 22);
    for (std::size_t i = 0; i < 22; ++i) id.at(i, i) = 1;
    CHECK(exact_rank(id) == 22);

    ExactMatrix rep(3, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        rep.at(0, c) = mpq_class(1, static_cast<int>(c) + 1);
        rep.at(1, c) = mpq_class(1, static_cast<int>(c) + 1);
        rep.at(2, c) = static_cast<int>(c);
    }
    CHECK(exact_rank(rep) == 2);

    auto kv = exact_kernel_vector(rep);
    REQUIRE(kv.has_value());  // 3 columns, rank 2
    for (std::size_t r = 0; r < 3; ++r) {
        mpq_class acc = 0;
        for (std::size_t c = 0; c < 3; ++c) acc += rep.at(r, c) * (*kv)[c];
        CHECK(acc == 0);
    }
}

TEST_CASE("kernel vector on a singular matrix") {
    ExactMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    auto kv = exact_kernel_vector(m);
    REQUIRE(kv.has_value());
    // check M v = 0
    for (std::size_t r = 0; r < 2; ++r) {
        mpq_class acc = 0;
        for (std::size_t c = 0; c < 3; ++c) acc += m.at(r, c) * (*kv)[c];
        CHECK(acc == 0);
    }
}

TEST_CASE("greedy selection on stars") {
    WitnessedFamily w = select_witnesses(star(6, 3, 6), 2);
    YZSelection yz = greedy_select_yz(w, default_gamma(2));
    CHECK(yz.pairs.empty());  // D = binom([5],2) covers the pool shadow
    CHECK(verify_yz_conditions(w, yz).ok);

    // removing one member opens room for at least one pair
    Family st = star(6, 3, 6);
    st.members.erase(st.members.begin());
    WitnessedFamily w2 = select_witnesses(st, 2);
    YZSelection yz2 = greedy_select_yz(w2, default_gamma(2));
    CHECK(yz2.pairs.size() >= 1);
    CHECK(verify_yz_conditions(w2, yz2).ok);

    // complete family: empty pool, immediate termination (pool mechanics
    // only; such a family admits no valid witnesses)
    WitnessedFamily full;
    full.family = complete_family(4, 3);
    full.d = 2;
    for (const auto& F : full.family.members) {
        SubsetMask b = F;
        b.remove(b.min_element());
        full.witnesses.push_back(b);
    }
    YZSelection yzf = greedy_select_yz(full, default_gamma(2));
    CHECK(yzf.pool_initial == 0);
    CHECK(yzf.pairs.empty());
}

TEST_CASE("yz condition violations are reported") {
    WitnessedFamily w = select_witnesses(star(6, 3, 6), 2);
    YZSelection yz;
    CHECK(verify_yz_conditions(w, yz).ok);  // vacuous

    SubsetMask Y(6, {1, 2, 3});
    yz.pairs.emplace_back(Y, SubsetMask(6, {1, 3}));
    yz.pairs.emplace_back(Y, SubsetMask(6, {2, 3}));
    YZConditionReport r = verify_yz_conditions(w, yz);
    CHECK(!r.ok);
    CHECK(r.violated_condition == 2);

    YZSelection bad1;
    bad1.pairs.emplace_back(SubsetMask(6, {1, 2, 4}), SubsetMask(6, {1, 2}));  // Z = B_j of {1,2,6}
    YZConditionReport r1 = verify_yz_conditions(w, bad1);
    CHECK(!r1.ok);
    CHECK(r1.violated_condition == 1);
}

TEST_CASE("assemble and certify the Frankl-Pach instance star(5,3,5)") {
    WitnessedFamily w = select_witnesses(star(5, 3, 5), 2);
    YZSelection yz = greedy_select_yz(w, default_gamma(2));
    CHECK(yz.pairs.empty());

    ExactMatrix mx = assemble_matrix(w, yz);
    CHECK(mx.rows() == 12);  // 0 + 6 + (1 + 5)
    CHECK(exact_rank(mx) == 12);

    // the H block diagonal entries |H| - d - 1 are nonzero
    for (std::size_t i = 6; i < 12; ++i) CHECK(mx.at(i, i) != 0);

    Certificate cert = certify(w, default_gamma(2));
    CHECK(cert.valid);
    CHECK(cert.bound == 10);  // binom(5,2) - 0, the Frankl-Pach bound, tight
    CHECK(cert.matrix_side == 12);
    CHECK(cert.size_d_witness_count == 6);
}

TEST_CASE("certify the mz family") {
    WitnessedFamily mz = mz_family(8, 2, mz_assignment_constant(8, 2, 1));
    Certificate cert = certify(mz, 12);
    CHECK(cert.valid);
    CHECK(cert.bound >= 22);
    CHECK(cert.size_d_witness_count <= binom(7, 2));
}

TEST_CASE("T-block is strictly upper triangular under the selection order") {
    Family st = star(6, 3, 6);
    st.members.erase(st.members.begin());
    st.members.erase(st.members.begin());
    WitnessedFamily w = select_witnesses(st, 2);
    YZSelection yz = greedy_select_yz(w, default_gamma(2));
    REQUIRE(yz.pairs.size() >= 2);

    const std::size_t s = yz.pairs.size(), m = w.size();
    // T_{k,i} = f_{F_k}(v_{Y_i}), R_{k,j} = y_{Y_j}(v_{F_k})
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            mpq_class acc = 0;
            for (std::size_t k = 0; k < m; ++k)
                acc += eval_poly_f(w.family.members[k], w.witnesses[k], yz.pairs[i].first) *
                       eval_poly_y(yz.pairs[j].second, w.family.members[k]);
            if (j <= i) CHECK(acc == 0);  // zero diagonal and lower part
        }
}

TEST_CASE("certificates on random valid subfamilies") {
    std::mt19937_64 rng(83);
    int done = 0;
    while (done < 12) {
        int n = 6 + static_cast<int>(rng() % 3);
        Family f = oracle::random_k_uniform(n, 3, 3 + rng() % 10, rng);
        WitnessedFamily w;
        try {
            w = select_witnesses(f, 2);
        } catch (const shattered_member_error&) {
            continue;
        }
        Certificate cert = certify(w, default_gamma(2));
        CHECK(cert.valid);
        CHECK(w.size() <= cert.bound);
        CHECK(cert.yz_pairs.size() <= binom(n, 2) - w.size());
        ++done;
    }
}

TEST_CASE("claim 4.1 equality iff maximum star (d = 2)") {
    for (int n = 6; n <= 9; ++n) {
        WitnessedFamily w = select_witnesses(star(n, 3, n), 2);
        std::uint64_t count = 0;
        for (const auto& b : w.witnesses)
            if (b.cardinality() == 2) ++count;
        CHECK(count == binom(n - 1, 2));

        // perturbation: drop the colex-first member, add {1,2,3}
        Family pert = star(n, 3, n);
        pert.members.erase(pert.members.begin());
        pert.members.push_back(SubsetMask(n, {1, 2, 3}));
        WitnessedFamily wp = select_witnesses(pert, 2);
        std::uint64_t count_p = 0;
        for (const auto& b : wp.witnesses)
            if (b.cardinality() == 2) ++count_p;
        CHECK(count_p < binom(n - 1, 2));
    }
}

TEST_CASE("certificate json round trip and verification") {
    WitnessedFamily w = select_witnesses(star(5, 3, 5), 2);
    Certificate cert = certify(w, 12);
    std::string js = certificate_to_json(cert);
    Certificate back = certificate_from_json(js);
    CHECK(certificate_to_json(back) == js);  // bit-identical re-serialization

    VerifyOutcome ok = verify_certificate(back);
    CHECK(ok.ok);

    Certificate tampered = back;
    tampered.rank -= 1;
    CHECK(!verify_certificate(tampered).ok);

    Certificate forged = back;
    forged.family_sha256[0] = forged.family_sha256[0] == 'a' ? 'b' : 'a';
    CHECK(!verify_certificate(forged).ok);
}

TEST_CASE("repeated certification is bit-identical") {
    WitnessedFamily mz = mz_family(8, 2, mz_assignment_constant(8, 2, 1));
    Certificate a = certify(mz, 12);
    Certificate b = certify(mz, 12);
    CHECK(certificate_to_json(a) == certificate_to_json(b));
}
