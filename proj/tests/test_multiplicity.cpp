#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "seshadri/multiplicity.hpp"

using namespace seshadri;

TEST_CASE("multiplicity vector validation", "[mult]") {
    CHECK_THROWS(MultiplicityVector(std::vector<std::int64_t>{}));
    CHECK_THROWS(MultiplicityVector{1, 2});
    CHECK_THROWS(MultiplicityVector{0, 0});
    CHECK_THROWS(MultiplicityVector{2, -1});
    auto m = MultiplicityVector::from_unsorted({0, 3, 1});
    CHECK(m.str() == "(3,1,0)");
    CHECK(m.support() == 2);
    CHECK(m.positive_part() == MultiplicityVector{3, 1});
    CHECK(m.sum() == 4);
    CHECK(m.sum_squares() == 10);
    CHECK(m.min_positive() == 1);
}

TEST_CASE("moving-curve floor", "[mult]") {
    CHECK(xu_floor(MultiplicityVector{1}) == 0);
    CHECK(xu_floor(MultiplicityVector{2}) == 3);
    CHECK(xu_floor(MultiplicityVector{3}) == 7);
    CHECK(xu_floor(MultiplicityVector{1, 1}) == 1);
    CHECK(xu_floor(MultiplicityVector{2, 1}) == 4);
    CHECK(xu_floor(MultiplicityVector{2, 0, 0}) == 3);
    CHECK(xu_floor(MultiplicityVector{3, 2, 2}) == 15);
    oracle::for_each_vector(4, 16, [](const oracle::Vec& v) {
        CHECK(xu_floor(MultiplicityVector(v)) == oracle::moving_floor(v));
    });
}

TEST_CASE("Kuechle inequality", "[mult]") {
    CHECK(kuechle_holds(MultiplicityVector{2, 1}));
    CHECK(kuechle_holds(MultiplicityVector{5, 5, 5, 4}));
    CHECK_THROWS_AS(kuechle_holds(MultiplicityVector{2}), KuechleHypothesisError);
    CHECK_THROWS_AS(kuechle_holds(MultiplicityVector{1, 1}), KuechleHypothesisError);
    CHECK_THROWS_AS(kuechle_holds(MultiplicityVector{2, 0}), KuechleHypothesisError);
    // The hypothesis m_1 >= 2 matters: all-ones vectors give equality.
    std::vector<std::int64_t> ones(5, 1);
    CHECK_FALSE(kuechle_inequality<long long>(ones));
}

TEST_CASE("Kuechle scan matches a direct count", "[mult]") {
    auto scan = kuechle_scan(4, 9);
    CHECK(scan.violations.empty());
    std::uint64_t expected = 0;
    for (int r = 2; r <= 4; ++r)
        oracle::for_each_vector(r, 9 * r, [&](const oracle::Vec& v) {
            if (v[0] <= 9 && v.back() >= 1 && v[0] >= 2) ++expected;
        });
    CHECK(scan.cases == expected);
    CHECK_THROWS(kuechle_scan(1, 5));
}
