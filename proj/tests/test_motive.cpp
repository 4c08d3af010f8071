#include <doctest.h>

#include "mw/motive.hpp"

using namespace mw;

namespace {
std::map<Summand, long> summands(std::initializer_list<std::pair<Summand, long>> init) {
    std::map<Summand, long> m;
    for (const auto& [s, c] : init) m[s] = c;
    return m;
}
}  // namespace

TEST_CASE("grassmannian decompositions") {
    MotiveDecomposition d = decompose_grassmannian(2, 4, Twist::untwisted);
    CHECK(d.summands == summands({{{SummandKind::unit, 0}, 1},
                                  {{SummandKind::unit, 4}, 1},
                                  {{SummandKind::eta_cone, 1}, 1},
                                  {{SummandKind::eta_cone, 2}, 1}}));

    MotiveDecomposition tw = decompose_grassmannian(2, 4, Twist::twisted);
    CHECK(tw.summands == summands({{{SummandKind::unit, 3}, 2},
                                   {{SummandKind::eta_cone, 1}, 1},
                                   {{SummandKind::eta_cone, 4}, 1}}));
    CHECK(tw.thom_shifted);

    CHECK_THROWS_AS(decompose_grassmannian(3, 2, Twist::untwisted), std::invalid_argument);
}

TEST_CASE("projective space witt weights") {
    for (int n = 1; n <= 7; ++n) {
        std::set<int> ww = witt_weights(decompose_grassmannian(1, n + 1, Twist::untwisted));
        if (n % 2 == 1)
            CHECK(ww == std::set<int>{0, n});
        else
            CHECK(ww == std::set<int>{0});
    }
}

TEST_CASE("witt weights of the worked grassmannians") {
    CHECK(witt_weights(decompose_grassmannian(3, 6, Twist::untwisted)) ==
          std::set<int>{0, 4, 5, 9});
    CHECK(witt_weights(decompose_grassmannian(3, 6, Twist::twisted)).empty());
    CHECK(witt_weights(decompose_grassmannian(2, 4, Twist::untwisted)) == std::set<int>{0, 4});
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(witt_weight_constraints_ok(k, n, Twist::untwisted));
            CHECK(witt_weight_constraints_ok(k, n, Twist::twisted));
        }
}

TEST_CASE("eta multiplicities from counts") {
    CHECK(eta_from_counts({1, 1, 2, 1, 1}, {1, 0, 0, 0, 1}) == std::vector<long>{0, 1, 1});
    CHECK(eta_from_counts({1, 2, 2, 1}, {1, 0, 0, 1}) == std::vector<long>{0, 2});
    CHECK(eta_from_counts({1, 0, 2}, {1, 0, 2}).empty());  // w = s telescopes to zero
    CHECK_THROWS_AS(eta_from_counts({1}, {2}), std::domain_error);
    CHECK_THROWS_AS(eta_from_counts({1, 1}, {1, 0}), std::domain_error);  // tail never dies
}

TEST_CASE("realization report") {
    std::vector<RealizationRow> rows = realization_report(2, 4);
    REQUIRE(rows.size() == 5);
    CHECK(rows[2].chow_rank == 2);
    CHECK(rows[2].free_rank == 0);
    CHECK(rows[2].torsion_rank == 1);
    for (const RealizationRow& r : rows) CHECK(r.consistent);

    std::vector<RealizationRow> p1 = realization_report(1, 2);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].free_rank == 1);
    CHECK(p1[1].free_rank == 1);
    CHECK(p1[0].torsion_rank == 0);
    CHECK(p1[1].torsion_rank == 0);
}

TEST_CASE("direct-sum recursions") {
    CHECK(recursion_check(2, 4));
    CHECK(recursion_check(1, 2));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) CHECK(recursion_check(k, n));
}

TEST_CASE("flag motives") {
    MotiveDecomposition f3 = flag_motive(3);
    CHECK(witt_weights(f3) == std::set<int>{0, 3});
    CHECK(f3.cone_counts() == std::vector<long>{0, 2, 0, 0});

    CHECK(witt_weights(flag_motive(2)) == std::set<int>{0, 1});

    MotiveDecomposition f4 = flag_motive(4);
    CHECK(f4.count(SummandKind::unit, 0) == 1);
    CHECK(f4.count(SummandKind::unit, 3) == 2);
    CHECK(f4.count(SummandKind::unit, 6) == 1);
    CHECK(f4.unit_counts() == std::vector<long>{1, 0, 0, 2, 0, 0, 1});

    CHECK(flag_chow_ranks(3) == std::vector<long>{1, 2, 2, 1});
    CHECK(flag_chow_ranks(4) == std::vector<long>{1, 3, 5, 6, 5, 3, 1});
    CHECK(flag_generator_degrees(6) == std::vector<int>{3, 7, 5});
}

TEST_CASE("chow ranks of decompositions match tableau counts") {
    MotiveDecomposition d = decompose_grassmannian(2, 4, Twist::untwisted);
    CHECK(d.chow_ranks() == std::vector<long>{1, 1, 2, 1, 1});
    CHECK(d.total_rank() == 6);
}
