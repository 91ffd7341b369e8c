#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "seshadri/json_io.hpp"
#include "seshadri/surface.hpp"

using namespace seshadri;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_check(const std::vector<Diagnostic>& ds, const std::string& check, Severity sev) {
    std::size_t n = 0;
    for (const auto& d : ds) n += d.check == check && d.severity == sev;
    return n;
}

}  // namespace

TEST_CASE("builtin surfaces", "[surface]") {
    auto p2 = builtin("P2");
    CHECK(p2.L2() == 1);
    auto cubic = builtin("cubic");
    CHECK(cubic.L2() == 3);
    CHECK(cubic.lattice.rank() == 7);
    std::size_t lines = 0;
    for (const auto& e : cubic.catalog)
        if (cubic.lattice.square(e.cls) == -1 && cubic.lattice.intersect(cubic.L, e.cls) == 1) ++lines;
    CHECK(lines == 27);
    for (std::int64_t r = 3; r <= 10; ++r) {
        auto s = builtin("scroll(" + std::to_string(r) + ")");
        CHECK(s.L2() == r - 1);
        CHECK(builtin("scroll-" + std::to_string(r)) == s);
        // K^2 = 8 on every Hirzebruch surface.
        CHECK(s.lattice.square(*s.K) == 8);
    }
    CHECK_THROWS(builtin("scroll(2)"));
    CHECK_THROWS(builtin("scroll(x)"));
    CHECK_THROWS(builtin("quartic"));
}

TEST_CASE("cubic lines are distinct and pairwise sensible", "[surface]") {
    auto cubic = builtin("cubic");
    std::vector<DivisorClass> lines;
    for (const auto& e : cubic.catalog)
        if (e.profile.max_points == 0) lines.push_back(e.cls);
    REQUIRE(lines.size() == 27);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(cubic.lattice.intersect(lines[i], *cubic.K) == -1);
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            CHECK_FALSE(lines[i] == lines[j]);
            const auto p = cubic.lattice.intersect(lines[i], lines[j]);
            CHECK((p == 0 || p == 1));
        }
    }
}

TEST_CASE("builtin catalogs validate cleanly", "[surface]") {
    for (const std::string name : {"P2", "cubic", "scroll(3)", "scroll(7)"}) {
        auto ds = validate(builtin(name));
        INFO(name);
        CHECK(count(ds, Severity::error) == 0);
        CHECK(count(ds, Severity::warning) == 0);
    }
}

TEST_CASE("golden surface files load to the builtins", "[surface][json]") {
    CHECK(io::load_surface(slurp(SURFACES_DIR "/p2.json")) == builtin("P2"));
    CHECK(io::load_surface(slurp(SURFACES_DIR "/cubic.json")) == builtin("cubic"));
    CHECK(io::load_surface(slurp(SURFACES_DIR "/scroll-5.json")) == builtin("scroll(5)"));
}

TEST_CASE("surface json roundtrip", "[surface][json]") {
    for (const std::string name : {"P2", "cubic", "scroll(4)"}) {
        auto s = builtin(name);
        CHECK(io::surface_from(io::to_json(s)) == s);
    }
}

TEST_CASE("invalid surfaces are rejected with every issue", "[surface][json]") {
    const std::string definite = R"({"name":"bad","rank":2,"gram":[[1,0],[0,1]],"L":[1,0],"catalog":[]})";
    try {
        io::load_surface(definite);
        FAIL("expected SurfaceError");
    } catch (const SurfaceError& e) {
        REQUIRE_FALSE(e.issues().empty());
        CHECK(e.issues().front().find("BadSignature") == 0);
    }
    // The non-strict load keeps it so validate() can report.
    auto loose = io::load_surface(definite, false);
    CHECK(count(validate(loose), Severity::error) >= 1);

    const std::string hyperbolic = R"({"name":"U","rank":2,"gram":[[0,1],[1,0]],"L":[1,1],"catalog":[]})";
    CHECK(io::load_surface(hyperbolic).L2() == 2);

    CHECK_THROWS_AS(io::load_surface("{"), SurfaceError);
    CHECK_THROWS_AS(io::load_surface(R"({"name":"x","rank":1,"gram":[[1,2]],"L":[1],"catalog":[]})"), SurfaceError);
    CHECK_THROWS_AS(io::load_surface(R"({"name":"x","rank":1,"gram":[[1]],"L":[0],"catalog":[]})"), SurfaceError);
    try {
        io::load_surface(R"({"name":"x","rank":1,"gram":[[1]],"L":[1],"catalog":[
            {"name":5,"class":[1],"profile":{"max_points":1,"mult":1}},
            {"name":"b","class":[1],"profile":{"max_points":-1,"mult":1}}]})");
        FAIL("expected SurfaceError");
    } catch (const SurfaceError& e) {
        CHECK(e.issues().size() == 2);
    }
}

TEST_CASE("validation diagnostics", "[surface]") {
    auto s = builtin("P2");
    s.catalog.push_back({"nodal cubic", DivisorClass{3}, {1, 3}, "asserted"});
    auto ds = validate(s);
    CHECK(count_check(ds, "genus", Severity::warning) == 1);

    auto no_k = builtin("P2");
    no_k.K.reset();
    auto dk = validate(no_k);
    CHECK(count(dk, Severity::error) == 0);
    CHECK(count_check(dk, "adjunction", Severity::info) == 0);

    auto bad_xu = builtin("P2");
    bad_xu.catalog.push_back({"line through three", DivisorClass{1}, {3, 1}, "false"});
    CHECK(count_check(validate(bad_xu), "xu", Severity::warning) == 1);

    auto odd = builtin("P2");
    odd.K = DivisorClass{-2};
    // line: 1 - 2 is odd; conic: 4 - 4 is even
    CHECK(count_check(validate(odd), "adjunction", Severity::error) == 1);
}

TEST_CASE("multiplicity profile placement", "[surface]") {
    MultiplicityProfile p{2, 1};
    CHECK(p.at_points(1) == std::vector<std::int64_t>{1});
    CHECK(p.at_points(4) == std::vector<std::int64_t>{1, 1, 0, 0});
    CHECK(MultiplicityProfile{0, 1}.at_points(2) == std::vector<std::int64_t>{0, 0});
}
