#include <catch_amalgamated.hpp>

#include <random>

#include "seshadri/lattice.hpp"

using namespace seshadri;
using Matrix = IntersectionLattice::Matrix;

TEST_CASE("intersection products", "[lattice]") {
    auto P2 = IntersectionLattice(Matrix{{BigInt(1)}});
    CHECK(P2.intersect(DivisorClass{1}, DivisorClass{1}) == 1);
    CHECK(P2.square(DivisorClass{3}) == 9);

    auto X = IntersectionLattice::odd_unimodular(7);
    DivisorClass H{3, -1, -1, -1, -1, -1, -1};
    CHECK(X.square(H) == 3);
    CHECK(X.intersect(H, DivisorClass::basis(7, 1)) == 1);
    CHECK_THROWS_AS(X.intersect(H, DivisorClass{1, 0}), DimensionMismatch);
    CHECK_THROWS(IntersectionLattice(Matrix{{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(1)}}));
}

TEST_CASE("signature check", "[lattice]") {
    CHECK(check_signature(IntersectionLattice::odd_unimodular(7)).ok);
    CHECK(check_signature(IntersectionLattice(Matrix{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}})).ok);
    CHECK(check_signature(IntersectionLattice(Matrix{{BigInt(4), BigInt(1)}, {BigInt(1), BigInt(0)}})).ok);
    CHECK_FALSE(check_signature(IntersectionLattice(Matrix{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}})).ok);
    CHECK_FALSE(check_signature(IntersectionLattice(Matrix{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(0)}})).ok);
    CHECK_FALSE(check_signature(IntersectionLattice(Matrix{{BigInt(-1)}})).ok);
}

TEST_CASE("hodge filter", "[lattice]") {
    CHECK(hodge_filter(3, 3, 3));
    CHECK_FALSE(hodge_filter(3, 2, 2));
    CHECK(hodge_filter(1, 1, 1));
    CHECK(hodge_filter(1, 0, -5));
    CHECK_THROWS(hodge_filter(0, 1, 1));
}

TEST_CASE("blow-up of the plane in six points", "[lattice]") {
    auto P2 = IntersectionLattice(Matrix{{BigInt(1)}});
    auto Y = blowup_extend(P2, 6);
    CHECK(Y.extended() == IntersectionLattice::odd_unimodular(7));
    CHECK(Y.canonical(DivisorClass{-3}) == DivisorClass{-3, 1, 1, 1, 1, 1, 1});
    CHECK(Y.extended().square(Y.exceptional(2)) == -1);
    CHECK(Y.pullback_minus(DivisorClass{3}, 1, 1) == DivisorClass{3, -1, -1, -1, -1, -1, -1});
    CHECK(Y.pullback_minus(DivisorClass{1}, 1, 2) == DivisorClass{2, -1, -1, -1, -1, -1, -1});
    CHECK_THROWS(blowup_extend(IntersectionLattice(Matrix{{BigInt(-1)}}), 1));
}

TEST_CASE("blow-up preserves intersections of pulled-back classes", "[lattice][property]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-9, 9);
    auto base = IntersectionLattice(Matrix{{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(0)}});
    for (std::size_t pts = 1; pts <= 5; ++pts) {
        auto Y = blowup_extend(base, pts);
        for (int i = 0; i < 200; ++i) {
            DivisorClass a{c(rng), c(rng)}, b{c(rng), c(rng)};
            CHECK(Y.extended().intersect(Y.lift(a), Y.lift(b)) == base.intersect(a, b));
            for (std::size_t e = 0; e < pts; ++e) CHECK(Y.extended().intersect(Y.lift(a), Y.exceptional(e)) == 0);
        }
    }
}

TEST_CASE("partial nef check", "[lattice]") {
    auto X = IntersectionLattice::odd_unimodular(7);
    DivisorClass H{3, -1, -1, -1, -1, -1, -1};
    std::vector<DivisorClass> lines{DivisorClass::basis(7, 1), DivisorClass{1, -1, -1, 0, 0, 0, 0}};
    auto ok = is_nef_against(lines, H, X);
    CHECK(ok.kind == NefCheck::Kind::partial_nef);
    CHECK(std::string(NefCheck::label) == "PARTIAL");
    auto bad = is_nef_against(lines, DivisorClass{1, 1, 0, 0, 0, 0, 0}, X);
    REQUIRE(bad.kind == NefCheck::Kind::violator);
    CHECK(*bad.violator == DivisorClass::basis(7, 1));
    CHECK(bad.product == -1);
    auto neg = is_nef_against({}, DivisorClass{0, 1, 0, 0, 0, 0, 0}, X);
    CHECK(neg.kind == NefCheck::Kind::violator);
}

TEST_CASE("arithmetic genus", "[lattice]") {
    auto P2 = IntersectionLattice(Matrix{{BigInt(1)}});
    CHECK(arithmetic_genus(DivisorClass{1}, DivisorClass{-3}, P2) == Rational(0));
    CHECK(arithmetic_genus(DivisorClass{3}, DivisorClass{-3}, P2) == Rational(1));
    CHECK(arithmetic_genus(DivisorClass{4}, DivisorClass{-3}, P2) == Rational(3));
    auto X = IntersectionLattice::odd_unimodular(7);
    CHECK(arithmetic_genus(DivisorClass{3, -1, -1, -1, -1, -1, -1}, DivisorClass{-3, 1, 1, 1, 1, 1, 1}, X) == Rational(1));
}

TEST_CASE("hodge index holds for every class of a hyperbolic lattice", "[lattice][property]") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-6, 6);
    auto X = IntersectionLattice::odd_unimodular(5);
    DivisorClass L{3, -1, -1, -1, -1};
    const BigInt L2 = X.square(L);
    for (int i = 0; i < 2000; ++i) {
        DivisorClass C{c(rng), c(rng), c(rng), c(rng), c(rng)};
        CHECK(hodge_filter(L2, X.intersect(L, C), X.square(C)));
    }
}

TEST_CASE("classes of a given degree", "[lattice]") {
    auto X = IntersectionLattice::odd_unimodular(7);
    DivisorClass H{3, -1, -1, -1, -1, -1, -1};
    // Degree-1 classes with C^2 >= -1 on the cubic are exactly its 27 lines.
    auto lines = classes_of_degree(X, H, 1, -1);
    CHECK(lines.size() == 27);
    for (const auto& l : lines) CHECK(X.square(l) == -1);
    // No degree-1 class with C^2 >= 0, by Hodge.
    CHECK(classes_of_degree(X, H, 1, 0).empty());
    // Degree 3 with C^2 = 3: only H itself (Hodge equality).
    auto eq = classes_of_degree(X, H, 3, 3);
    REQUIRE(eq.size() == 1);
    CHECK(eq.front() == H);
    // Conics: degree 2, C^2 = 0; 27 classes (one pencil per line).
    auto conics = classes_of_degree(X, H, 2, 0);
    CHECK(conics.size() == 27);

    auto P2 = IntersectionLattice(Matrix{{BigInt(1)}});
    CHECK(classes_of_degree(P2, DivisorClass{1}, 4, 0) == std::vector<DivisorClass>{DivisorClass{4}});
}
