#include <catch_amalgamated.hpp>

#include <random>

#include "seshadri/bounds.hpp"
#include "seshadri/classifier.hpp"

using namespace seshadri;

namespace {

RadicalRational q(std::int64_t n, std::int64_t d = 1) { return RadicalRational(Rational(n, d)); }

// eps with eps^2 = rho * L^2 / r, for a rational rho
RadicalRational eps_for(const Rational& rho, std::int64_t L2, std::size_t r) {
    return RadicalRational::sqrt_of(rho * Rational(L2) / Rational(BigInt(r)));
}

int rank(VerdictKind k) {
    // How strongly a fibration is asserted.
    switch (k) {
        case VerdictKind::fibration_forced: return 3;
        case VerdictKind::fibration_or_cubic: return 2;
        default: return 0;
    }
}

}  // namespace

TEST_CASE("single point verdicts", "[classifier]") {
    auto cubic = classify(q(3, 2), 3, 1);
    CHECK(cubic.kind == VerdictKind::fibration_or_cubic);
    CHECK(cubic.ratio_squared == Rational(3, 4));
    CHECK(replay(cubic) == cubic.kind);

    CHECK(classify(q(1), 2, 1).kind == VerdictKind::fibration_forced);
    CHECK(classify(q(1), 1, 1).kind == VerdictKind::maximal);
    CHECK(classify(eps_for(Rational(76, 100), 5, 1), 5, 1).kind == VerdictKind::fibration_forced);
    CHECK(classify(eps_for(Rational(7, 9), 5, 1), 5, 1).kind == VerdictKind::inconclusive);
    CHECK(classify(eps_for(Rational(8, 9), 5, 1), 5, 1).kind == VerdictKind::inconclusive);
    CHECK_THROWS_AS(classify(q(2), 3, 1), ClassifyInputError);
    CHECK_THROWS_AS(classify(q(0), 3, 1), ClassifyInputError);
}

TEST_CASE("multi-point verdicts", "[classifier]") {
    auto p2 = classify(q(1, 2), 1, 2);
    CHECK(p2.kind == VerdictKind::boundary_inconclusive);
    CHECK(p2.ratio_squared == Rational(1, 2));
    for (std::size_t r = 3; r <= 10; ++r) {
        auto v = classify(q(static_cast<std::int64_t>(r) - 1, static_cast<std::int64_t>(r)), static_cast<std::int64_t>(r) - 1, r);
        CHECK(v.kind == VerdictKind::boundary_inconclusive);
        CHECK(v.ratio_squared == Rational(static_cast<std::int64_t>(r) - 1, static_cast<std::int64_t>(r)));
    }
    CHECK(classify(q(1, 3), 1, 2).kind == VerdictKind::fibration_forced);
    CHECK(classify(eps_for(Rational(2, 3), 1, 2), 1, 2).kind == VerdictKind::inconclusive);
    CHECK(classify(epsilon_upper(7, 4), 7, 4).kind == VerdictKind::maximal);
}

TEST_CASE("bound kinds", "[classifier]") {
    CHECK(classify(q(3, 2), 3, 1, EpsKind::upper_bound).kind == VerdictKind::fibration_or_cubic);
    CHECK(classify(eps_for(Rational(76, 100), 3, 1), 3, 1, EpsKind::upper_bound).kind == VerdictKind::fibration_or_cubic);
    CHECK(classify(q(1), 1, 1, EpsKind::upper_bound).kind == VerdictKind::inconclusive);
    CHECK(classify(q(1), 2, 1, EpsKind::upper_bound).kind == VerdictKind::fibration_forced);
    CHECK(classify(q(1), 1, 1, EpsKind::lower_bound).kind == VerdictKind::maximal);
    CHECK(classify(q(1), 2, 1, EpsKind::lower_bound).kind == VerdictKind::inconclusive);
    CHECK(classify(q(1, 3), 1, 2, EpsKind::lower_bound).kind == VerdictKind::inconclusive);
    CHECK(classify(q(1, 3), 1, 2, EpsKind::upper_bound).kind == VerdictKind::fibration_forced);
}

TEST_CASE("traces replay and tampering is detected", "[classifier]") {
    auto v = classify(q(3, 2), 3, 1);
    CHECK(replay(v) == VerdictKind::fibration_or_cubic);
    auto bad = v;
    bad.trace.back().relation = Cmp::lt;
    CHECK_THROWS(replay(bad));
    auto wrong = v;
    wrong.trace.back().lhs = Rational(1, 2);
    CHECK_THROWS(replay(wrong));
}

TEST_CASE("verdicts are monotone in rho", "[classifier][property]") {
    // Lowering an upper bound, or lowering eps at several points, never weakens the verdict.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> num(1, 999);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), 1000), b(num(rng), 1000);
        if (b < a) std::swap(a, b);
        for (std::size_t r : {std::size_t(2), std::size_t(3), std::size_t(7)}) {
            const auto va = classify(eps_for(a, 5, r), 5, r), vb = classify(eps_for(b, 5, r), 5, r);
            CHECK(rank(va.kind) >= rank(vb.kind));
        }
        const auto ua = classify(eps_for(a, 5, 1), 5, 1, EpsKind::upper_bound);
        const auto ub = classify(eps_for(b, 5, 1), 5, 1, EpsKind::upper_bound);
        CHECK(rank(ua.kind) >= rank(ub.kind));
        CHECK(replay(ua) == ua.kind);
    }
}

TEST_CASE("Nagata-Biran table", "[classifier]") {
    auto rows = nagata_biran_table(1, 2, 10);
    REQUIRE(rows.size() == 9);
    for (const auto& row : rows) {
        const auto r = static_cast<std::int64_t>(row.r);
        CHECK(row.ratio_squared == Rational(r - 1, r));
        CHECK(rr_square(row.ratio) == Rational(r - 1, r));
        CHECK(rr_square(row.lower_bound) == Rational(r - 1, r * r));
    }
    CHECK(rows[1].ratio.str() == "(1/3)·√6");
    CHECK_THROWS(nagata_biran_table(1, 1, 3));
}

TEST_CASE("exact single-point verdicts are not monotone across 3/4", "[classifier]") {
    // rho = 3/4 allows the cubic; slightly above it the cubic is excluded and a fibration is forced.
    CHECK(classify(eps_for(Rational(3, 4), 5, 1), 5, 1).kind == VerdictKind::fibration_or_cubic);
    CHECK(classify(eps_for(Rational(76, 100), 5, 1), 5, 1).kind == VerdictKind::fibration_forced);
}
