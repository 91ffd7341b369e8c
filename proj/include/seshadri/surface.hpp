#pragma once

// Surface models: an intersection lattice, an ample class L, an optional
// canonical class K and a catalog of curve classes whose behaviour at
// general points is asserted (with provenance), never derived.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seshadri/lattice.hpp"
#include "seshadri/multiplicity.hpp"

namespace seshadri {

class SurfaceError : public std::runtime_error {
public:
    explicit SurfaceError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string s = "invalid surface";
        for (const auto& i : issues) s += "; " + i;
        return s;
    }
    std::vector<std::string> issues_;
};

/// Members of the class pass through up to `max_points` general points with
/// multiplicity `mult` at each. max_points == 0 marks a rigid curve.
struct MultiplicityProfile {
    std::int64_t max_points = 0;
    std::int64_t mult = 1;
    friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;

    /// Multiplicities at r general points: mult at min(max_points, r) of them, 0 elsewhere.
    std::vector<std::int64_t> at_points(std::size_t r) const {
        const auto used = static_cast<std::size_t>(std::min<std::int64_t>(max_points, static_cast<std::int64_t>(r)));
        std::vector<std::int64_t> m(r, 0);
        std::fill_n(m.begin(), used, mult);
        return m;
    }
};

struct CurveEntry {
    std::string name;
    DivisorClass cls;
    MultiplicityProfile profile;
    std::string provenance;
    friend bool operator==(const CurveEntry&, const CurveEntry&) = default;
};

struct SurfaceModel {
    std::string name;
    IntersectionLattice lattice;
    DivisorClass L;
    std::optional<DivisorClass> K;
    std::vector<CurveEntry> catalog;

    BigInt L2() const { return lattice.square(L); }
    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Structural problems that make a model unusable; empty means valid.
inline std::vector<std::string> structural_issues(const SurfaceModel& s) {
    std::vector<std::string> issues;
    const auto rank = s.lattice.rank();
    auto sig = check_signature(s.lattice);
    if (!sig.ok) issues.push_back("BadSignature: " + sig.details);
    if (s.L.size() != rank) {
        issues.push_back("L has wrong dimension");
        return issues;
    }
    if (s.K && s.K->size() != rank) issues.push_back("K has wrong dimension");
    if (s.L2() < 1) issues.push_back("L^2 = " + s.L2().str() + " is not positive");
    for (const auto& e : s.catalog) {
        if (e.cls.size() != rank) {
            issues.push_back("entry '" + e.name + "' has wrong dimension");
            continue;
        }
        const BigInt lc = s.lattice.intersect(s.L, e.cls);
        if (lc < 1) issues.push_back("entry '" + e.name + "' has L.C = " + lc.str() + " <= 0");
        if (e.profile.max_points < 0) issues.push_back("entry '" + e.name + "' has negative max_points");
        if (e.profile.mult < 1) issues.push_back("entry '" + e.name + "' has multiplicity < 1");
    }
    return issues;
}

/// Throws SurfaceError listing every structural issue.
inline SurfaceModel checked(SurfaceModel s) {
    auto issues = structural_issues(s);
    if (!issues.empty()) throw SurfaceError(std::move(issues));
    return s;
}

namespace detail {

inline SurfaceModel plane() {
    SurfaceModel s;
    s.name = "P2";
    s.lattice = IntersectionLattice(IntersectionLattice::Matrix{{BigInt(1)}});
    s.L = DivisorClass{1};
    s.K = DivisorClass{-3};
    s.catalog = {
        {"line", DivisorClass{1}, {2, 1}, "a line passes through any two points"},
        {"conic", DivisorClass{2}, {5, 1}, "a conic passes through any five general points"},
    };
    return s;
}

/// Cubic surface as P^2 blown up in six points: H = 3e0 - sum e_i, K = -H.
inline SurfaceModel cubic() {
    SurfaceModel s;
    s.name = "cubic";
    s.lattice = IntersectionLattice::odd_unimodular(7);
    s.L = DivisorClass{3, -1, -1, -1, -1, -1, -1};
    s.K = DivisorClass{-3, 1, 1, 1, 1, 1, 1};
    s.catalog.push_back({"nodal hyperplane section", s.L, {1, 2},
                         "tangent hyperplane section: T_xX meets X in a plane cubic singular at x"});
    const std::string rigid = "(-1)-curve; rigid, contains no general point";
    for (int i = 1; i <= 6; ++i) {
        auto c = DivisorClass::basis(7, i);
        s.catalog.push_back({"line e" + std::to_string(i), c, {0, 1}, rigid});
    }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            DivisorClass c = DivisorClass::basis(7, 0) - DivisorClass::basis(7, i) - DivisorClass::basis(7, j);
            s.catalog.push_back({"line e0-e" + std::to_string(i) + "-e" + std::to_string(j), c, {0, 1}, rigid});
        }
    for (int i = 1; i <= 6; ++i) {
        DivisorClass c = BigInt(2) * DivisorClass::basis(7, 0);
        for (int k = 1; k <= 6; ++k)
            if (k != i) c = c - DivisorClass::basis(7, k);
        s.catalog.push_back({"line 2e0-sum(e_k,k!=" + std::to_string(i) + ")", c, {0, 1}, rigid});
    }
    return s;
}

/// Rational normal scroll in P^r on the sublattice <H, F>: H^2 = r-1, H.F = 1, F^2 = 0,
/// K = -2H + (r-3)F.
inline SurfaceModel scroll(std::int64_t r) {
    if (r < 3) throw std::invalid_argument("scroll(r) needs r >= 3");
    SurfaceModel s;
    s.name = "scroll(" + std::to_string(r) + ")";
    s.lattice = IntersectionLattice(IntersectionLattice::Matrix{{BigInt(r - 1), 1}, {1, 0}});
    s.L = DivisorClass{1, 0};
    s.K = DivisorClass{-2, r - 3};
    s.catalog = {
        {"fiber", DivisorClass{0, 1}, {1, 1}, "the line of the ruling through a point"},
        {"hyperplane section", DivisorClass{1, 0}, {r, 1},
         "r general points span a hyperplane of P^r; the section is irreducible by Bertini, and "
         "L.D = L.C >= sum mult_{P_i} D for every other curve D, so it is the only Seshadri curve"},
    };
    return s;
}

}  // namespace detail

inline std::vector<std::string> builtin_names() { return {"P2", "cubic", "scroll(r)"}; }

/// "P2", "cubic", "scroll(r)" or "scroll-r" with r >= 3.
inline SurfaceModel builtin(const std::string& name) {
    if (name == "P2") return checked(detail::plane());
    if (name == "cubic") return checked(detail::cubic());
    std::string digits;
    if (name.rfind("scroll(", 0) == 0 && name.size() > 8 && name.back() == ')')
        digits = name.substr(7, name.size() - 8);
    else if (name.rfind("scroll-", 0) == 0 && name.size() > 7)
        digits = name.substr(7);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 10) {
        const auto r = std::stoll(digits);
        if (r < 3) throw std::invalid_argument("scroll(r) needs r >= 3");
        return checked(detail::scroll(r));
    }
    throw std::invalid_argument("unknown builtin surface '" + name + "' (expected P2, cubic or scroll(r))");
}

enum class Severity { info, warning, error };

inline const char* to_string(Severity s) {
    switch (s) {
        case Severity::info: return "info";
        case Severity::warning: return "warning";
        case Severity::error: return "error";
    }
    return "?";
}

struct Diagnostic {
    Severity severity = Severity::info;
    std::string check;
    std::string subject;
    std::string message;
};

/// Signature, L^2, per-entry degree/Hodge/adjunction/genus/Xu checks. Never throws on bad data.
inline std::vector<Diagnostic> validate(const SurfaceModel& s) {
    std::vector<Diagnostic> out;
    auto add = [&](Severity sev, std::string check, std::string subject, std::string msg) {
        out.push_back({sev, std::move(check), std::move(subject), std::move(msg)});
    };
    const auto sig = check_signature(s.lattice);
    add(sig.ok ? Severity::info : Severity::error, "signature", s.name, sig.details);
    if (s.L.size() != s.lattice.rank()) {
        add(Severity::error, "dimension", "L", "L has wrong dimension");
        return out;
    }
    const BigInt L2 = s.L2();
    add(L2 >= 1 ? Severity::info : Severity::error, "L^2", "L", "L^2 = " + L2.str());
    const bool has_K = s.K && s.K->size() == s.lattice.rank();
    if (s.K && !has_K) add(Severity::error, "dimension", "K", "K has wrong dimension");
    if (!has_K) add(Severity::info, "genus", s.name, "no canonical class; genus diagnostics disabled");

    std::size_t minus_one_curves = 0;
    for (const auto& e : s.catalog) {
        if (e.cls.size() != s.lattice.rank()) {
            add(Severity::error, "dimension", e.name, "class has wrong dimension");
            continue;
        }
        const BigInt lc = s.lattice.intersect(s.L, e.cls);
        const BigInt c2 = s.lattice.square(e.cls);
        add(lc >= 1 ? Severity::info : Severity::error, "degree", e.name, "L.C = " + lc.str() + ", C^2 = " + c2.str());
        if (L2 >= 1) {
            const bool hodge = hodge_filter(L2, lc, c2);
            add(hodge ? Severity::info : Severity::error, "hodge", e.name,
                hodge ? "L^2 C^2 <= (L.C)^2" : "violates the Hodge index inequality");
        }
        if (e.profile.mult < 1 || e.profile.max_points < 0) {
            add(Severity::error, "profile", e.name, "malformed multiplicity profile");
            continue;
        }
        if (e.profile.max_points >= 1) {
            const auto m = MultiplicityVector(e.profile.at_points(static_cast<std::size_t>(e.profile.max_points)));
            const BigInt floor = xu_floor(m);
            const bool ok = c2 >= floor;
            add(ok ? Severity::info : Severity::warning, "xu", e.name,
                "moving through " + std::to_string(e.profile.max_points) + " general point(s) with mult " +
                    std::to_string(e.profile.mult) + " needs C^2 >= " + floor.str() + (ok ? "" : " (fails)"));
        }
        if (has_K) {
            const BigInt ck = s.lattice.intersect(e.cls, *s.K);
            const bool even = (c2 + ck) % 2 == 0;
            add(even ? Severity::info : Severity::error, "adjunction", e.name,
                "C^2 + C.K = " + BigInt(c2 + ck).str() + (even ? " (even)" : " (odd)"));
            if (c2 == -1 && ck == -1) ++minus_one_curves;
            if (even) {
                const Rational genus = arithmetic_genus(e.cls, *s.K, s.lattice);
                const BigInt mu = e.profile.mult;
                const BigInt delta = BigInt(e.profile.max_points) * mu * (mu - 1) / 2;
                const bool ok = Rational(delta) <= genus;
                add(ok ? Severity::info : Severity::warning, "genus", e.name,
                    "p_a = " + genus.str() + ", asserted singularities use " + delta.str() + (ok ? "" : " > p_a"));
            }
        }
    }
    if (has_K) add(Severity::info, "(-1)-curves", s.name, std::to_string(minus_one_curves) + " catalogued");
    return out;
}

inline std::size_t count(const std::vector<Diagnostic>& ds, Severity sev) {
    return static_cast<std::size_t>(std::count_if(ds.begin(), ds.end(), [&](const auto& d) { return d.severity == sev; }));
}

}  // namespace seshadri
