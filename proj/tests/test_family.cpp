#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vclab/binom.hpp"
#include "vclab/extremal.hpp"
#include "vclab/family.hpp"

using namespace vclab;

TEST_CASE("subset mask basics") {
    SubsetMask m(5, {1, 2, 5});
    CHECK(m.cardinality() == 3);
    CHECK(m.contains(5));
    CHECK(!m.contains(3));
    CHECK(m.elements() == std::vector<int>{1, 2, 5});
    CHECK_THROWS_AS(m.add(6), std::out_of_range);
    CHECK_THROWS_AS(SubsetMask(200), std::invalid_argument);

    SubsetMask a(5, {1, 2}), b(5, {1, 2, 3});
    CHECK(a.proper_subset_of(b));
    CHECK((a & b) == a);
    CHECK(b.minus(a) == SubsetMask(5, {3}));
    CHECK(a < b);  // colex: highest differing element decides
    CHECK(SubsetMask(5, {3}) < SubsetMask(5, {1, 4}));
}

TEST_CASE("parse family: documented cases") {
    Family f = parse_family("5 3\n1 2 5\n1 3 5\n");
    CHECK(f.n == 5);
    CHECK(f.uniform_rank == 3);
    CHECK(f.size() == 2);
    CHECK(f.members[0] == SubsetMask(5, {1, 2, 5}));

    CHECK_THROWS_WITH_AS(parse_family("5 3\n1 2\n"), doctest::Contains("cardinality"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("x y\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("5 3\n1 2 6\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("5 3\n1 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("5 3\n1 2 5\n1 2 5\n"), std::invalid_argument);
}

TEST_CASE("serialize family: canonical form and round trips") {
    Family f(5, 3);
    f.members.push_back(SubsetMask(5, {1, 2, 5}));
    CHECK(serialize_family(f) == "5 3\n1 2 5\n");

    Family empty(5, 3);
    CHECK(serialize_family(empty) == "5 3\n");

    std::string canonical = "5 3\n1 2 5\n1 3 5\n2 4 5\n";
    CHECK(serialize_family(parse_family(canonical)) == canonical);

    // parse(serialize(f)) = f on a generated family
    Family g = star(7, 3, 7);
    Family h = parse_family(serialize_family(g));
    CHECK(h.members == g.members);
    CHECK(h.uniform_rank == g.uniform_rank);

    // comments and blank lines are ignored
    Family c = parse_family("# header comment\n5 3\n\n# more\n1 2 5\n");
    CHECK(c.size() == 1);

    // the empty set round-trips through its '-' representation
    Family ball = hamming_ball(4, 1);
    CHECK(parse_family(serialize_family(ball)).members == ball.members);
}

TEST_CASE("enumerate k subsets: counts and colex order") {
    CHECK(k_subsets(4, 2).size() == 6);
    CHECK(k_subsets(6, 0).size() == 1);
    CHECK(k_subsets(6, 0)[0].cardinality() == 0);
    CHECK(k_subsets(5, 3).size() == 10);
    CHECK(k_subsets(5, 3).size() == k_subsets(5, 2).size());

    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            auto v = k_subsets(n, k);
            CHECK(v.size() == binom(n, k));
            CHECK(std::is_sorted(v.begin(), v.end()));
            for (const auto& m : v) CHECK(m.cardinality() == k);
        }
    // spot checks at the upper end of the documented range
    for (int k : {0, 1, 2, 3, 17, 19, 20}) CHECK(k_subsets(20, k).size() == binom(20, k));
}

TEST_CASE("complement family") {
    Family st = star(5, 3, 5);
    Family co = complement_family(st, 3);
    CHECK(co.size() == 4);  // binom(5,3) - binom(4,2) = 10 - 6
    for (const auto& m : co.members) CHECK(!m.contains(5));

    Family full = complete_family(5, 3);
    CHECK(complement_family(full, 3).empty());

    Family mz = mz_family(8, 2, mz_assignment_constant(8, 2, 1)).family;
    CHECK(complement_family(mz, 3).size() == 34);  // binom(8,3) - 22

    CHECK_THROWS_AS(complement_family(st, 2), std::invalid_argument);

    // involution
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        Family f = oracle::random_k_uniform(7, 3, 8, rng);
        Family cc = complement_family(complement_family(f, 3), 3);
        auto a = f.members, b = cc.members;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("family invariant checks") {
    Family f(5, 3);
    f.members.push_back(SubsetMask(5, {1, 2, 5}));
    f.members.push_back(SubsetMask(5, {1, 2, 5}));
    CHECK_THROWS_AS(f.check(), std::invalid_argument);

    Family g(5, 3);
    CHECK_THROWS_AS(g.add(SubsetMask(5, {1, 2})), std::invalid_argument);
}
