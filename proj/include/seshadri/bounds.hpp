#pragma once

// Seshadri quotients, the exact upper bound sqrt(L^2/r), and the exhaustive
// lower-bound certifier.
//
// The certifier assumes, towards a contradiction, a moving family of curves
// C_t through r very general points with multiplicities m and degree
// d = L.C_t such that d / sum(m) < t. Hodge index gives L^2 C_t^2 <= d^2 and
// Xu's lemma gives C_t^2 >= xu_floor(m); together with sum m_i^2 >= (sum m)^2/s
// and min m <= sum m / s they bound sum(m) < L^2 / (L^2 - r t^2). Every vector
// below that cap, and every degree below t * sum(m), is then excluded one by
// one. A certificate is only meaningful at very general points.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "seshadri/lattice.hpp"
#include "seshadri/multiplicity.hpp"
#include "seshadri/radical.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

inline constexpr const char* kVeryGeneralPoints = "VERY_GENERAL_POINTS";

/// sqrt(L^2 / r) exactly.
inline RadicalRational epsilon_upper(const BigInt& L2, std::size_t r) {
    if (L2 < 1) throw std::invalid_argument("epsilon_upper needs L^2 >= 1");
    if (r < 1) throw std::invalid_argument("epsilon_upper needs r >= 1");
    return RadicalRational::sqrt_of(Rational(L2, BigInt(r)));
}

/// sqrt((r-1)/r), the multi-point threshold factor.
inline RadicalRational multipoint_factor(std::size_t r) {
    if (r < 1) throw std::invalid_argument("multipoint_factor needs r >= 1");
    return RadicalRational::sqrt_of(Rational(BigInt(r - 1), BigInt(r)));
}

inline Rational seshadri_quotient(const BigInt& LC, const MultiplicityVector& m) { return Rational(LC, m.sum()); }

class CertifyInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// ceil(L^2 / (L^2 - r t^2)): every violating vector has sum(m) strictly below it.
inline BigInt enumeration_bound(const BigInt& L2, std::size_t r, const RadicalRational& t) {
    if (L2 < 1) throw CertifyInputError("L^2 must be positive");
    if (r < 1) throw CertifyInputError("r must be positive");
    if (t.sign() < 0) throw CertifyInputError("target t must be non-negative");
    const Rational gap = Rational(L2) - Rational(BigInt(r)) * t.square();
    if (gap.sign() <= 0) throw CertifyInputError("target t is at or above eps_upper(L;r)");
    return (Rational(L2) / gap).ceil();
}

enum class Filter { positivity, hodge_xu, integrality, lattice };

inline const char* to_string(Filter f) {
    switch (f) {
        case Filter::positivity: return "positivity";
        case Filter::hodge_xu: return "hodge_xu";
        case Filter::integrality: return "integrality";
        case Filter::lattice: return "lattice";
    }
    return "?";
}

inline std::optional<Filter> filter_from_string(const std::string& s) {
    for (auto f : {Filter::positivity, Filter::hodge_xu, Filter::integrality, Filter::lattice})
        if (s == to_string(f)) return f;
    return std::nullopt;
}

/// One multiplicity vector with the degrees a violation would need.
///   candidates: 1 <= d <= d_max, where d_max is the largest d with d < t * sum(m)
///   Hodge + Xu: d >= d_hodge_min = ceil(sqrt(L^2 * xu_floor(m)))
struct CaseRecord {
    MultiplicityVector m;
    BigInt sum;
    BigInt xu;
    BigInt d_max;
    BigInt d_hodge_min;
    Filter filter = Filter::positivity;
    friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

/// A vector for which some degrees survive every filter. Not a disproof.
struct RefutationTrace {
    MultiplicityVector m;
    BigInt xu;
    std::vector<BigInt> degrees;  // surviving degrees, ascending
    std::vector<Filter> failed_filters;
    friend bool operator==(const RefutationTrace&, const RefutationTrace&) = default;
};

struct Certificate {
    BigInt L2;
    std::size_t r = 0;
    RadicalRational t;
    BigInt enumeration_bound;
    std::uint64_t cases_checked = 0;
    std::vector<CaseRecord> refuted;  // sorted by m
    std::string semantic_scope = kVeryGeneralPoints;
    std::optional<SurfaceModel> surface;  // present when the lattice filter was available
    std::vector<std::string> assumptions;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOutcome {
    BigInt enumeration_bound;
    std::uint64_t cases_checked = 0;
    std::variant<Certificate, std::vector<RefutationTrace>> result;

    bool certified() const { return std::holds_alternative<Certificate>(result); }
    const Certificate& certificate() const { return std::get<Certificate>(result); }
    const std::vector<RefutationTrace>& traces() const { return std::get<std::vector<RefutationTrace>>(result); }
};

struct CertifyOptions {
    unsigned jobs = 1;
    /// When set, surviving degrees are also checked for an integral class C in the
    /// surface lattice with L.C = d, C^2 >= xu_floor(m) and (with K) p_a(C) >= sum m_i(m_i-1)/2.
    const SurfaceModel* surface = nullptr;
};

inline std::vector<std::string> certificate_assumptions(bool with_lattice) {
    std::vector<std::string> a = {
        "points are very general: the violating curve moves in a non-trivial family (Xu's lemma applies)",
        "a moving curve through one point with multiplicity 1 has C^2 >= 0",
        "Hodge index: L^2 * C^2 <= (L.C)^2",
    };
    if (with_lattice)
        a.emplace_back("the surface lattice is the full Neron-Severi lattice modulo torsion");
    return a;
}

/// Largest integer d with d < t * s (t >= 0, s >= 1), or 0 if there is none >= 1.
inline BigInt largest_degree_below(const RadicalRational& t, const BigInt& s) {
    if (t.sign() <= 0) return 0;
    const Rational u2 = t.square() * Rational(s * s);
    const BigInt d = ceil_sqrt(u2) - 1;  // ceil(u) - 1
    return d < 0 ? BigInt(0) : d;
}

namespace detail {

/// Every non-increasing length-r vector with first entry `first` and sum < cap.
template <typename Visit>
void for_each_vector(std::size_t r, std::int64_t first, const BigInt& cap, Visit&& visit) {
    std::vector<std::int64_t> m(r, 0);
    m[0] = first;
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining_cap, std::int64_t prev) -> void {
        visit(m);  // entries beyond pos are zero
        if (pos == r) return;
        for (std::int64_t v = 1; v <= prev && v < remaining_cap; ++v) {
            m[pos] = v;
            self(self, pos + 1, remaining_cap - v, v);
            m[pos] = 0;
        }
    };
    rec(rec, 1, static_cast<std::int64_t>(cap) - first, first);
}

/// Is there an integral class C with L.C = d, C^2 >= xu, and genus room for the singularities?
inline bool lattice_realizable(const SurfaceModel& s, const MultiplicityVector& m, const BigInt& xu, const BigInt& d) {
    BigInt delta = 0;
    for (auto v : m.values()) delta += BigInt(v) * (v - 1) / 2;
    for (const auto& c : classes_of_degree(s.lattice, s.L, d, xu)) {
        if (!s.K) return true;
        if (arithmetic_genus(c, *s.K, s.lattice) >= Rational(delta)) return true;
    }
    return false;
}

struct VectorVerdict {
    CaseRecord record;
    std::vector<BigInt> survivors;
    bool lattice_tried = false;
};

inline VectorVerdict judge(const BigInt& L2, const RadicalRational& t, const MultiplicityVector& m,
                           const SurfaceModel* surface) {
    VectorVerdict v;
    auto& rec = v.record;
    rec.m = m;
    rec.sum = m.sum();
    rec.xu = xu_floor(m);
    rec.d_max = largest_degree_below(t, rec.sum);
    rec.d_hodge_min = ceil_sqrt(Rational(L2 * rec.xu));
    const BigInt lo = std::max<BigInt>(BigInt(1), rec.d_hodge_min);
    if (rec.d_max < 1) {
        rec.filter = Filter::positivity;
    } else if (rec.d_max < lo) {
        // Real-valued room sqrt(L^2 xu) < t * sum(m) that contains no integer degree.
        const bool real_room = Rational(L2 * rec.xu) < t.square() * Rational(rec.sum * rec.sum);
        rec.filter = real_room ? Filter::integrality : Filter::hodge_xu;
    } else {
        rec.filter = Filter::lattice;
        if (surface) {
            v.lattice_tried = true;
            for (BigInt d = lo; d <= rec.d_max; ++d)
                if (lattice_realizable(*surface, m, rec.xu, d)) v.survivors.push_back(d);
        } else {
            for (BigInt d = lo; d <= rec.d_max; ++d) v.survivors.push_back(d);
        }
    }
    return v;
}

}  // namespace detail

/// Exhaustive attempt to show eps(L; r) >= t at very general points.
/// Throws CertifyInputError if L^2 < 1, r < 1, t < 0 or t >= eps_upper.
/// Output is canonical (sorted by m) independent of `opts.jobs`.
inline CertifyOutcome certify_lower_bound(const BigInt& L2, std::size_t r, const RadicalRational& t,
                                          const CertifyOptions& opts = {}) {
    if (L2 < 1) throw CertifyInputError("L^2 must be positive");
    if (r < 1) throw CertifyInputError("r must be positive");
    if (cmp(t, epsilon_upper(L2, r)) == Cmp::gt) throw CertifyInputError("target t exceeds eps_upper(L;r)");
    if (opts.surface && opts.surface->L2() != L2) throw CertifyInputError("surface L^2 does not match");
    const BigInt cap = enumeration_bound(L2, r, t);

    const std::int64_t top = cap > 1 ? static_cast<std::int64_t>(cap - 1) : 0;  // largest m_1
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::vector<detail::VectorVerdict>> per_first(static_cast<std::size_t>(top) + 1);
    auto work = [&](unsigned worker) {
        for (std::int64_t first = 1 + worker; first <= top; first += jobs) {
            auto& bucket = per_first[static_cast<std::size_t>(first)];
            detail::for_each_vector(r, first, cap, [&](const std::vector<std::int64_t>& m) {
                bucket.push_back(detail::judge(L2, t, MultiplicityVector(m), opts.surface));
            });
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    CertifyOutcome out;
    out.enumeration_bound = cap;
    std::vector<CaseRecord> refuted;
    std::vector<RefutationTrace> traces;
    bool lattice_used = false;
    for (auto& bucket : per_first)
        for (auto& v : bucket) {
            ++out.cases_checked;
            lattice_used = lattice_used || v.lattice_tried;
            if (v.record.filter != Filter::lattice || (v.lattice_tried && v.survivors.empty())) {
                refuted.push_back(std::move(v.record));
                continue;
            }
            std::vector<Filter> failed = {Filter::positivity, Filter::hodge_xu};
            if (v.lattice_tried) failed.push_back(Filter::lattice);
            traces.push_back({v.record.m, v.record.xu, std::move(v.survivors), std::move(failed)});
        }
    auto by_m = [](const auto& a, const auto& b) { return a.m < b.m; };
    std::sort(refuted.begin(), refuted.end(), by_m);
    std::sort(traces.begin(), traces.end(), by_m);

    if (!traces.empty()) {
        out.result = std::move(traces);
        return out;
    }
    Certificate cert;
    cert.L2 = L2;
    cert.r = r;
    cert.t = t;
    cert.enumeration_bound = cap;
    cert.cases_checked = out.cases_checked;
    cert.refuted = std::move(refuted);
    if (opts.surface && lattice_used) cert.surface = *opts.surface;
    cert.assumptions = certificate_assumptions(cert.surface.has_value());
    out.result = std::move(cert);
    return out;
}

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Re-derives every case of a certificate from scratch: coverage of the
/// enumeration, each recorded number, and each claimed exclusion.
inline CertificateCheck verify_certificate(const Certificate& c) {
    CertificateCheck res;
    auto fail = [&](std::string why) {
        res.ok = false;
        res.problems.push_back(std::move(why));
    };
    if (c.semantic_scope != kVeryGeneralPoints) fail("scope must be VERY_GENERAL_POINTS");
    BigInt cap;
    try {
        if (c.t.sign() < 0 || c.r < 1 || c.L2 < 1) throw CertifyInputError("bad header");
        cap = enumeration_bound(c.L2, c.r, c.t);
    } catch (const std::exception& e) {
        fail(std::string("header: ") + e.what());
        return res;
    }
    if (cap != c.enumeration_bound) fail("enumeration bound is " + cap.str() + ", recorded " + c.enumeration_bound.str());
    if (c.surface && c.surface->L2() != c.L2) fail("embedded surface has a different L^2");

    std::vector<MultiplicityVector> expected;
    const std::int64_t top = cap > 1 ? static_cast<std::int64_t>(cap - 1) : 0;
    for (std::int64_t first = 1; first <= top; ++first)
        detail::for_each_vector(c.r, first, cap, [&](const auto& m) { expected.emplace_back(m); });
    std::sort(expected.begin(), expected.end());
    if (expected.size() != c.refuted.size() || c.cases_checked != expected.size())
        fail("expected " + std::to_string(expected.size()) + " cases, certificate has " +
             std::to_string(c.refuted.size()) + " (cases_checked " + std::to_string(c.cases_checked) + ")");

    const SurfaceModel* surface = c.surface ? &*c.surface : nullptr;
    const std::size_t n = std::min(expected.size(), c.refuted.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& rec = c.refuted[i];
        if (!(rec.m == expected[i])) {
            fail("case " + std::to_string(i) + " is " + rec.m.str() + ", expected " + expected[i].str());
            continue;
        }
        const auto v = detail::judge(c.L2, c.t, rec.m, surface);
        const auto& fresh = v.record;
        if (fresh.sum != rec.sum || fresh.xu != rec.xu || fresh.d_max != rec.d_max || fresh.d_hodge_min != rec.d_hodge_min)
            fail("case " + rec.m.str() + ": recorded numbers do not match");
        if (fresh.filter != rec.filter) fail("case " + rec.m.str() + ": filter mismatch");
        if (fresh.filter == Filter::lattice && (!v.lattice_tried || !v.survivors.empty()))
            fail("case " + rec.m.str() + ": lattice exclusion does not hold");
    }
    return res;
}

/// Witness for the smallest catalog quotient.
struct QuotientWitness {
    std::string curve_name;
    BigInt LC;
    MultiplicityVector mults;
    Rational quotient;
    std::string provenance;
};

struct CatalogMinimum {
    std::size_t r = 0;
    RadicalRational eps_upper;
    std::optional<QuotientWitness> witness;  // smallest quotient among entries through general points
    bool maximal = true;                     // no catalogued curve beats eps_upper
};

/// Minimum of L.C / sum(m) over catalog entries placed at r general points.
inline CatalogMinimum min_quotient_over_catalog(const SurfaceModel& s, std::size_t r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (s.catalog.empty()) throw std::invalid_argument("surface '" + s.name + "' has an empty catalog");
    CatalogMinimum res;
    res.r = r;
    res.eps_upper = epsilon_upper(s.L2(), r);
    for (const auto& e : s.catalog) {
        if (e.profile.max_points < 1) continue;
        MultiplicityVector m(e.profile.at_points(r));
        const BigInt lc = s.lattice.intersect(s.L, e.cls);
        Rational q = seshadri_quotient(lc, m);
        if (!res.witness || q < res.witness->quotient)
            res.witness = QuotientWitness{e.name, lc, std::move(m), std::move(q), e.provenance};
    }
    res.maximal = !res.witness || cmp(RadicalRational(res.witness->quotient), res.eps_upper) != Cmp::lt;
    return res;
}

// ---------------------------------------------------------------------------
// Reproduction of the multi-point case analysis.

enum class AnalysisCase { two_points, two_points_single, full_support_a, all_ones_b, trailing_zero_c };

inline const char* to_string(AnalysisCase c) {
    switch (c) {
        case AnalysisCase::two_points: return "r=2";
        case AnalysisCase::two_points_single: return "r=2,m2=0";
        case AnalysisCase::full_support_a: return "a";
        case AnalysisCase::all_ones_b: return "b";
        case AnalysisCase::trailing_zero_c: return "c";
    }
    return "?";
}

enum class AnalysisOutcome { contradiction, single_point_reduction };

inline const char* to_string(AnalysisOutcome o) {
    return o == AnalysisOutcome::contradiction ? "contradiction" : "single_point_reduction";
}

/// "lhs rel rhs" with rel the relation the argument needs; `holds` is its exact truth value.
struct InequalityStep {
    std::string statement;
    Rational lhs;
    Cmp needed = Cmp::lt;
    Rational rhs;
    bool holds = false;
};

inline InequalityStep make_step(std::string statement, Rational lhs, Cmp needed, Rational rhs) {
    const bool holds = compare(lhs, rhs) == needed;
    return {std::move(statement), std::move(lhs), needed, std::move(rhs), holds};
}

/// All quantities are in units of L^2, so the report is independent of the surface.
struct ContradictionReport {
    std::size_t r = 0;
    MultiplicityVector m;
    AnalysisCase which = AnalysisCase::two_points;
    std::vector<InequalityStep> steps;
    AnalysisOutcome outcome = AnalysisOutcome::contradiction;
    std::vector<ContradictionReport> reduction;  // case (c): the (r-1)-point report
};

class CaseAnalysisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Replays the induction for a multiplicity vector assumed to violate
/// eps < sqrt((r-1)/r) * eps_upper(L; r).
inline ContradictionReport reproduce_case_analysis(std::size_t r, const MultiplicityVector& m) {
    if (r < 2) throw CaseAnalysisError("the multi-point analysis starts at r = 2");
    if (m.points() != r) throw CaseAnalysisError("vector length " + std::to_string(m.points()) + " != r");
    ContradictionReport rep;
    rep.r = r;
    rep.m = m;
    const BigInt R(r);
    const Rational threshold_sq(R - 1, R * R);  // (quotient^2 / L^2) bound at r points

    if (r == 2) {
        const BigInt m1 = m[0], m2 = m[1];
        if (m2 == 0) {
            rep.which = AnalysisCase::two_points_single;
            rep.steps.push_back(make_step("(L.C/m1)^2 < (1/4) L^2 < (3/4) L^2 = (sqrt(3/4) eps_upper(L;1))^2",
                                          Rational(1, 4), Cmp::lt, Rational(3, 4)));
            rep.outcome = AnalysisOutcome::single_point_reduction;
            return rep;
        }
        rep.which = AnalysisCase::two_points;
        const BigInt xu = m1 * m1 + m2 * m2 - m2;
        const BigInt s = m1 + m2;
        rep.steps.push_back(make_step("violation needs m1^2+m2^2-m2 < (1/4)(m1+m2)^2", Rational(xu), Cmp::lt,
                                      Rational(s * s, BigInt(4))));
        const BigInt diff = m1 - m2;
        rep.steps.push_back(make_step("equivalently 2(m1^2+m2^2)+(m1-m2)^2 < 4 m2",
                                      Rational(BigInt(2) * (m1 * m1 + m2 * m2) + diff * diff), Cmp::lt,
                                      Rational(BigInt(4) * m2)));
        if (rep.steps[0].holds != rep.steps[1].holds)
            throw std::logic_error("r=2 identity disagrees with the Hodge+Xu inequality");
        rep.outcome = AnalysisOutcome::contradiction;
        if (rep.steps[0].holds) throw std::logic_error("r=2 violation is not contradicted for " + m.str());
        return rep;
    }

    const std::int64_t last = m[r - 1];
    if (last == 0) {
        rep.which = AnalysisCase::trailing_zero_c;
        rep.steps.push_back(make_step("(r-1)/r^2 < (r-2)/(r-1)^2: the (r-1)-point hypothesis follows", threshold_sq,
                                      Cmp::lt, Rational(R - 2, (R - 1) * (R - 1))));
        std::vector<std::int64_t> shorter(m.values().begin(), m.values().end() - 1);
        rep.reduction.push_back(reproduce_case_analysis(r - 1, MultiplicityVector(std::move(shorter))));
        rep.outcome = rep.reduction.front().outcome;
        return rep;
    }

    const BigInt s = m.sum();
    if (m[0] == 1) {
        rep.which = AnalysisCase::all_ones_b;
        // Xu: C^2 >= r-1, so (L.C / r)^2 >= (r-1)/r^2 L^2, which is the threshold itself.
        rep.steps.push_back(make_step("violation needs (r-1)/r^2 < (r-1)/r^2", Rational(R - 1, s * s), Cmp::lt,
                                      threshold_sq));
        rep.outcome = AnalysisOutcome::contradiction;
        if (rep.steps[0].holds) throw std::logic_error("case (b) violation is not contradicted");
        return rep;
    }

    rep.which = AnalysisCase::full_support_a;
    const Rational A(m.sum_squares() - last);     // Xu floor
    const Rational B = threshold_sq * Rational(s * s);  // (r-1)/r^2 (sum m)^2
    const Rational C = Rational(R * R - 1, R * R) * A;
    rep.steps.push_back(make_step("violation needs sum m_i^2 - m_r < (r-1)/r^2 (sum m_i)^2", A, Cmp::lt, B));
    rep.steps.push_back(make_step("Kuechle: (r-1)/r^2 (sum m_i)^2 < (r^2-1)/r^2 (sum m_i^2 - m_r)", B, Cmp::lt, C));
    rep.steps.push_back(make_step("(r^2-1)/r^2 (sum m_i^2 - m_r) < sum m_i^2 - m_r", C, Cmp::lt, A));
    if (rep.steps[1].holds != kuechle_holds(m)) throw std::logic_error("Kuechle step disagrees with the lemma");
    rep.outcome = AnalysisOutcome::contradiction;
    if (rep.steps[0].holds) throw std::logic_error("case (a) violation is not contradicted for " + m.str());
    return rep;
}

}  // namespace seshadri
