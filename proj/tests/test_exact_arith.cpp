#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "seshadri/radical.hpp"

using namespace seshadri;

TEST_CASE("rational normalization and printing", "[exact]") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, -7).str() == "0");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational::parse("-12/18") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
}

TEST_CASE("integer square roots", "[exact]") {
    CHECK(isqrt(BigInt(0)) == 0);
    CHECK(isqrt(BigInt(15)) == 3);
    CHECK(isqrt(BigInt(16)) == 4);
    BigInt big = BigInt(1) << 200;
    CHECK(isqrt(big) == (BigInt(1) << 100));
    CHECK(isqrt(big - 1) == (BigInt(1) << 100) - 1);
    CHECK(floor_sqrt(Rational(9, 4)) == 1);
    CHECK(ceil_sqrt(Rational(9, 4)) == 2);
    CHECK(ceil_sqrt(Rational(4)) == 2);
}

TEST_CASE("radical normal form", "[exact]") {
    auto a = RadicalRational::normalize(Rational(1), 12);
    CHECK(a.coeff() == Rational(2));
    CHECK(a.radicand() == 3);
    CHECK(a.str() == "2·√3");
    CHECK(RadicalRational::sqrt_of(Rational(1, 2)).str() == "(1/2)·√2");
    CHECK(RadicalRational::sqrt_of(Rational(3)).str() == "√3");
    CHECK(RadicalRational::sqrt_of(Rational(9, 4)).str() == "3/2");
    CHECK(RadicalRational::sqrt_of(Rational(3)).decimal() == "1.732051");
    CHECK(RadicalRational::sqrt_of(Rational(1, 2)).decimal() == "0.707107");
    CHECK(RadicalRational::normalize(Rational(0), 5) == RadicalRational(0));
    CHECK_THROWS(RadicalRational::normalize(Rational(1), -2));
    CHECK(RadicalRational::parse("3/2*sqrt(8)") == RadicalRational::normalize(Rational(3), 2));
    CHECK(RadicalRational::parse("sqrt(3)") == RadicalRational::sqrt_of(Rational(3)));
    CHECK(RadicalRational::parse("-5/3") == RadicalRational(Rational(-5, 3)));
}

TEST_CASE("radical comparisons at tight gaps", "[exact]") {
    // 239/169 < sqrt(2) < 577/408, both within 1e-4.
    auto s2 = RadicalRational::sqrt_of(Rational(2));
    CHECK(rr_cmp(Rational(239, 169), s2) == Cmp::lt);
    CHECK(rr_cmp(Rational(577, 408), s2) == Cmp::gt);
    CHECK(rr_cmp(Rational(99, 70), s2) == Cmp::gt);
    CHECK(rr_cmp(RadicalRational::normalize(Rational(1, 2), 8), s2) == Cmp::eq);
    CHECK(rr_cmp(-s2, Rational(-1)) == Cmp::lt);
    CHECK(rr_square(s2 * RadicalRational::sqrt_of(Rational(3))) == Rational(6));
}

namespace {

BigInt squarefree_part(std::int64_t n) {
    std::int64_t out = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    return BigInt(out * n);
}

RadicalRational random_radical(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-60, 60), den(1, 40), rad(1, 200);
    return RadicalRational::normalize(Rational(num(rng), den(rng)), rad(rng));
}

long double approx(const RadicalRational& v) {
    return static_cast<long double>(v.coeff().num().convert_to<long double>() / v.coeff().den().convert_to<long double>()) *
           std::sqrt(static_cast<long double>(v.radicand().convert_to<long double>()));
}

}  // namespace

TEST_CASE("radical properties over random inputs", "[exact][property]") {
    std::mt19937_64 rng(20261018);
    for (int i = 0; i < 10000; ++i) {
        const auto a = random_radical(rng), b = random_radical(rng), c = random_radical(rng);
        // normalization is idempotent and square-free
        CHECK(RadicalRational::normalize(a.coeff(), a.radicand()) == a);
        if (!a.coeff().is_zero()) CHECK(squarefree_part(static_cast<std::int64_t>(a.radicand())) == a.radicand());
        // total order
        const auto ab = rr_cmp(a, b), ba = rr_cmp(b, a);
        CHECK((ab == Cmp::eq) == (ba == Cmp::eq));
        CHECK((ab == Cmp::lt) == (ba == Cmp::gt));
        CHECK((ab == Cmp::eq) == (a == b));
        if (ab != Cmp::gt && rr_cmp(b, c) != Cmp::gt) CHECK(rr_cmp(a, c) != Cmp::gt);
        // agreement with floating point away from ties
        const long double fa = approx(a), fb = approx(b);
        if (std::fabs(fa - fb) > 1e-9L) CHECK((ab == Cmp::lt) == (fa < fb));
        // parse / print roundtrip
        CHECK(RadicalRational::parse(a.expr()) == a);
        // square and sqrt_of are inverse on non-negative values
        if (a.sign() >= 0) CHECK(RadicalRational::sqrt_of(rr_square(a)) == a);
        // multiplication agrees with the rational field on the squares
        CHECK(rr_square(rr_mul(a, b)) == rr_square(a) * rr_square(b));
        // rational values order as rationals
        const Rational p = a.coeff(), q = b.coeff();
        CHECK(rr_cmp(RadicalRational(p), RadicalRational(q)) == compare(p, q));
    }
}
