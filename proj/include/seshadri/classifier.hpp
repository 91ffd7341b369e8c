#pragma once

// Threshold verdicts. Everything is decided by exact comparisons of
// rho = eps^2 * r / L^2 against rational constants; the trace records each
// comparison so a verdict can be replayed independently.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seshadri/bounds.hpp"
#include "seshadri/radical.hpp"

namespace seshadri {

enum class VerdictKind { fibration_forced, fibration_or_cubic, boundary_inconclusive, inconclusive, maximal };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::fibration_forced: return "FIBRATION_FORCED";
        case VerdictKind::fibration_or_cubic: return "FIBRATION_OR_CUBIC";
        case VerdictKind::boundary_inconclusive: return "BOUNDARY_INCONCLUSIVE";
        case VerdictKind::inconclusive: return "INCONCLUSIVE";
        case VerdictKind::maximal: return "MAXIMAL";
    }
    return "?";
}

inline std::optional<VerdictKind> verdict_kind_from_string(const std::string& s) {
    for (auto k : {VerdictKind::fibration_forced, VerdictKind::fibration_or_cubic, VerdictKind::boundary_inconclusive,
                   VerdictKind::inconclusive, VerdictKind::maximal})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

/// What the supplied eps is known to be. Forcing a fibration needs eps to bound the
/// true constant from above, so lower bounds can only prove maximality.
enum class EpsKind { exact, upper_bound, lower_bound };

inline const char* to_string(EpsKind k) {
    switch (k) {
        case EpsKind::exact: return "exact";
        case EpsKind::upper_bound: return "upper_bound";
        case EpsKind::lower_bound: return "lower_bound";
    }
    return "?";
}

inline std::optional<EpsKind> eps_kind_from_string(const std::string& s) {
    if (s == "exact") return EpsKind::exact;
    if (s == "upper" || s == "upper_bound") return EpsKind::upper_bound;
    if (s == "lower" || s == "lower_bound") return EpsKind::lower_bound;
    return std::nullopt;
}

struct VerdictStep {
    std::string label;  // "rho vs 3/4"
    Rational lhs;
    Rational rhs;
    Cmp relation = Cmp::eq;
    std::optional<VerdictKind> concludes;  // set on the terminal step
    std::string source;                    // result the conclusion rests on
};

struct Verdict {
    VerdictKind kind = VerdictKind::inconclusive;
    EpsKind eps_kind = EpsKind::exact;
    std::size_t r = 1;
    BigInt L2;
    RadicalRational eps;
    Rational ratio_squared;
    Rational threshold;
    std::string source;
    std::vector<VerdictStep> trace;
};

class ClassifyInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline constexpr const char* kSinglePointTheorem = "single-point fibration theorem (threshold 3/4)";
inline constexpr const char* kCubicTheorem = "cubic equality theorem (rho = 3/4: fibered, or the cubic with O(1))";
inline constexpr const char* kCubicCorollary = "single-point corollary (threshold 7/9: fibered or the cubic)";
inline constexpr const char* kMultiPointTheorem = "multi-point fibration theorem (threshold (r-1)/r)";
inline constexpr const char* kOptimality = "optimality examples (P2, rational normal scrolls) sit on the boundary unfibered";
inline constexpr const char* kUpperBound = "eps <= eps_upper always; equality is maximality";

/// A rule: compare rho with `constant`; if the relation is in the table, stop with that kind.
struct Rule {
    std::string label;
    Rational constant;
    std::optional<VerdictKind> on_lt, on_eq, on_gt;
    std::string src_lt, src_eq, src_gt;
};

inline Verdict run_rules(Verdict v, const std::vector<Rule>& rules) {
    for (const auto& rule : rules) {
        VerdictStep step{rule.label, v.ratio_squared, rule.constant, compare(v.ratio_squared, rule.constant), {}, {}};
        const auto& outcome = step.relation == Cmp::lt ? rule.on_lt : (step.relation == Cmp::eq ? rule.on_eq : rule.on_gt);
        const auto& src = step.relation == Cmp::lt ? rule.src_lt : (step.relation == Cmp::eq ? rule.src_eq : rule.src_gt);
        if (outcome) {
            step.concludes = outcome;
            step.source = src;
            v.kind = *outcome;
            v.threshold = rule.constant;
            v.source = src;
            v.trace.push_back(std::move(step));
            return v;
        }
        v.trace.push_back(std::move(step));
    }
    throw std::logic_error("verdict rules are not exhaustive");
}

inline Verdict prepare(const RadicalRational& eps, const BigInt& L2, std::size_t r, EpsKind kind) {
    if (L2 < 1) throw ClassifyInputError("L^2 must be positive");
    if (eps.sign() <= 0) throw ClassifyInputError("eps must be positive");
    const auto upper = epsilon_upper(L2, r);
    if (cmp(eps, upper) == Cmp::gt) throw ClassifyInputError("eps = " + eps.str() + " exceeds eps_upper = " + upper.str());
    Verdict v;
    v.eps_kind = kind;
    v.r = r;
    v.L2 = L2;
    v.eps = eps;
    v.ratio_squared = eps.square() * Rational(BigInt(r)) / Rational(L2);
    return v;
}

}  // namespace detail

/// Single point: rho = eps^2 / L^2.
///   exact:  rho = 1 MAXIMAL; < 3/4 FORCED; = 3/4 FIBRATION_OR_CUBIC; (3/4, 7/9) FORCED; else INCONCLUSIVE
///   upper:  rho = 1 INCONCLUSIVE; < 3/4 FORCED; [3/4, 7/9) FIBRATION_OR_CUBIC; else INCONCLUSIVE
///   lower:  rho = 1 MAXIMAL; else INCONCLUSIVE
inline Verdict classify_single(const RadicalRational& eps, const BigInt& L2, EpsKind kind = EpsKind::exact) {
    using detail::Rule;
    auto v = detail::prepare(eps, L2, 1, kind);
    const Rational one(1), three_quarters(3, 4), seven_ninths(7, 9);
    const auto K = VerdictKind::fibration_forced, OC = VerdictKind::fibration_or_cubic, I = VerdictKind::inconclusive,
               M = VerdictKind::maximal;
    std::vector<Rule> rules;
    switch (kind) {
        case EpsKind::exact:
            rules = {
                {"rho vs 1", one, {}, M, {}, "", detail::kUpperBound, ""},
                {"rho vs 3/4", three_quarters, K, OC, {}, detail::kSinglePointTheorem, detail::kCubicTheorem, ""},
                {"rho vs 7/9", seven_ninths, K, I, I,
                 std::string(detail::kCubicCorollary) + "; rho != 3/4 excludes the cubic (" + detail::kCubicTheorem + ")",
                 "at or above 7/9 nothing is forced", "at or above 7/9 nothing is forced"},
            };
            break;
        case EpsKind::upper_bound:
            rules = {
                {"rho vs 1", one, {}, I, {}, "", "an upper bound equal to eps_upper carries no information", ""},
                {"rho vs 3/4", three_quarters, K, OC, {}, detail::kSinglePointTheorem,
                 std::string(detail::kCubicTheorem) + "; true rho <= 3/4", ""},
                {"rho vs 7/9", seven_ninths, OC, I, I,
                 std::string(detail::kCubicCorollary) + "; true rho may equal 3/4",
                 "at or above 7/9 nothing is forced", "at or above 7/9 nothing is forced"},
            };
            break;
        case EpsKind::lower_bound:
            rules = {
                {"rho vs 1", one, I, M, {}, "a lower bound cannot force a fibration", detail::kUpperBound, ""},
            };
            break;
    }
    return detail::run_rules(std::move(v), rules);
}

/// r >= 2 points: rho = eps^2 r / L^2 against (r-1)/r.
inline Verdict classify_multi(const RadicalRational& eps, const BigInt& L2, std::size_t r, EpsKind kind = EpsKind::exact) {
    using detail::Rule;
    if (r < 2) throw ClassifyInputError("classify_multi needs r >= 2");
    auto v = detail::prepare(eps, L2, r, kind);
    const Rational one(1), bound(BigInt(r - 1), BigInt(r));
    const auto K = VerdictKind::fibration_forced, B = VerdictKind::boundary_inconclusive,
               I = VerdictKind::inconclusive, M = VerdictKind::maximal;
    const std::string forced = std::string(detail::kMultiPointTheorem) +
                               "; the fiber through each very general P_i computes eps(L;P_1..P_r)";
    const std::string label = "rho vs " + bound.str();
    std::vector<Rule> rules;
    switch (kind) {
        case EpsKind::exact:
            rules = {
                {"rho vs 1", one, {}, M, {}, "", detail::kUpperBound, ""},
                {label, bound, K, B, I, forced, detail::kOptimality, "above the threshold nothing is forced"},
            };
            break;
        case EpsKind::upper_bound:
            rules = {
                {"rho vs 1", one, {}, I, {}, "", "an upper bound equal to eps_upper carries no information", ""},
                {label, bound, K, B, I, forced, detail::kOptimality, "above the threshold nothing is forced"},
            };
            break;
        case EpsKind::lower_bound:
            rules = {
                {"rho vs 1", one, I, M, {}, "a lower bound cannot force a fibration", detail::kUpperBound, ""},
            };
            break;
    }
    return detail::run_rules(std::move(v), rules);
}

inline Verdict classify(const RadicalRational& eps, const BigInt& L2, std::size_t r, EpsKind kind = EpsKind::exact) {
    return r == 1 ? classify_single(eps, L2, kind) : classify_multi(eps, L2, r, kind);
}

/// Re-evaluates every recorded comparison; returns the concluded kind or throws on mismatch.
inline VerdictKind replay(const Verdict& v) {
    if (v.trace.empty()) throw std::logic_error("empty verdict trace");
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
        const auto& s = v.trace[i];
        if (compare(s.lhs, s.rhs) != s.relation) throw std::logic_error("trace step '" + s.label + "' does not replay");
        if (!(s.lhs == v.ratio_squared)) throw std::logic_error("trace step '" + s.label + "' compares the wrong quantity");
        if (s.concludes.has_value() != (i + 1 == v.trace.size()))
            throw std::logic_error("only the last trace step may conclude");
    }
    return *v.trace.back().concludes;
}

struct NagataRow {
    std::size_t r = 0;
    Rational ratio_squared;       // (r-1)/r
    RadicalRational ratio;        // sqrt((r-1)/r)
    RadicalRational eps_upper;    // sqrt(L^2/r)
    RadicalRational lower_bound;  // ratio * eps_upper: eps(L;r) on surfaces without fibrations
};

inline std::vector<NagataRow> nagata_biran_table(const BigInt& L2, std::size_t r_from, std::size_t r_to) {
    if (r_from < 2 || r_to < r_from) throw std::invalid_argument("nagata table needs 2 <= r_from <= r_to");
    std::vector<NagataRow> rows;
    for (std::size_t r = r_from; r <= r_to; ++r) {
        NagataRow row;
        row.r = r;
        row.ratio_squared = Rational(BigInt(r - 1), BigInt(r));
        row.ratio = multipoint_factor(r);
        row.eps_upper = epsilon_upper(L2, r);
        row.lower_bound = row.ratio * row.eps_upper;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace seshadri
