#pragma once

// JSON schemas for surfaces, certificates, traces, verdicts and reports.
// Exact values are carried as strings ("p/q") or {coeff, radicand} objects;
// integers are JSON numbers when they fit in 64 bits and strings otherwise.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "seshadri/bounds.hpp"
#include "seshadri/classifier.hpp"
#include "seshadri/surface.hpp"

namespace seshadri::io {

using nlohmann::json;

class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline BigInt big_from(const json& j, const std::string& what) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            return parse_bigint(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw SchemaError(what + ": expected an integer");
}

inline std::int64_t small_from(const json& j, const std::string& what) {
    const BigInt v = big_from(j, what);
    if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
        throw SchemaError(what + ": integer out of range");
    return static_cast<std::int64_t>(v);
}

inline const json& field(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(key)) throw SchemaError(ctx + ": missing field '" + key + "'");
    return obj.at(key);
}

inline json to_json(const RadicalRational& v) { return {{"coeff", v.coeff().str()}, {"radicand", big(v.radicand())}}; }

/// The exact object plus its human and 6-place renderings.
inline json rendered(const RadicalRational& v) {
    json j = to_json(v);
    j["text"] = v.str();
    j["approx"] = v.decimal(6);
    return j;
}

inline RadicalRational radical_from(const json& j, const std::string& ctx) {
    if (j.is_string()) return RadicalRational::parse(j.get<std::string>());
    const auto& c = field(j, "coeff", ctx);
    if (!c.is_string() && !c.is_number_integer()) throw SchemaError(ctx + ": coeff must be \"p/q\"");
    const Rational coeff = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<std::int64_t>());
    const BigInt rad = big_from(field(j, "radicand", ctx), ctx + ".radicand");
    auto v = RadicalRational::normalize(coeff, rad);
    if (!(v.coeff() == coeff && v.radicand() == rad) && !(coeff.is_zero()))
        throw SchemaError(ctx + ": radical is not in normal form");
    return v;
}

inline Rational rational_from(const json& j, const std::string& ctx) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    return Rational(big_from(j, ctx));
}

inline json to_json(const DivisorClass& c) {
    json a = json::array();
    for (const auto& v : c.coords()) a.push_back(big(v));
    return a;
}

inline DivisorClass class_from(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw SchemaError(ctx + ": class must be an integer array");
    std::vector<BigInt> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(big_from(j[i], ctx + "[" + std::to_string(i) + "]"));
    return DivisorClass(std::move(c));
}

inline json to_json(const MultiplicityVector& m) {
    json a = json::array();
    for (auto v : m.values()) a.push_back(v);
    return a;
}

inline MultiplicityVector mults_from(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw SchemaError(ctx + ": multiplicities must be an array");
    std::vector<std::int64_t> m;
    for (const auto& v : j) m.push_back(small_from(v, ctx));
    try {
        return MultiplicityVector(std::move(m));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(ctx + ": " + e.what());
    }
}

// --- surfaces --------------------------------------------------------------

inline json to_json(const SurfaceModel& s) {
    json gram = json::array();
    for (const auto& row : s.lattice.gram()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(big(v));
        gram.push_back(r);
    }
    json j{{"name", s.name}, {"rank", s.lattice.rank()}, {"gram", gram}, {"L", to_json(s.L)}};
    if (s.K) j["K"] = to_json(*s.K);
    json cat = json::array();
    for (const auto& e : s.catalog)
        cat.push_back({{"name", e.name},
                       {"class", to_json(e.cls)},
                       {"profile", {{"max_points", e.profile.max_points}, {"mult", e.profile.mult}}},
                       {"provenance", e.provenance}});
    j["catalog"] = cat;
    return j;
}

/// Parses a surface document; with `strict` also enforces the model invariants.
/// Throws SurfaceError with every issue found.
inline SurfaceModel surface_from(const json& j, bool strict = true) {
    std::vector<std::string> issues;
    SurfaceModel s;
    try {
        if (!j.is_object()) throw SchemaError("surface document must be a JSON object");
        const auto& name = field(j, "name", "surface");
        if (!name.is_string()) throw SchemaError("surface: name must be a string");
        s.name = name.get<std::string>();
        const auto rank = small_from(field(j, "rank", "surface"), "rank");
        if (rank < 1) throw SchemaError("rank must be positive");
        const auto& gram = field(j, "gram", "surface");
        if (!gram.is_array() || gram.size() != static_cast<std::size_t>(rank))
            throw SchemaError("gram must be a rank x rank array");
        IntersectionLattice::Matrix g;
        for (std::size_t i = 0; i < gram.size(); ++i) {
            if (!gram[i].is_array() || gram[i].size() != static_cast<std::size_t>(rank))
                throw SchemaError("gram must be a rank x rank array");
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < gram[i].size(); ++k) row.push_back(big_from(gram[i][k], "gram entry"));
            g.push_back(std::move(row));
        }
        try {
            s.lattice = IntersectionLattice(std::move(g));
        } catch (const LatticeError& e) {
            throw SchemaError(e.what());
        }
        s.L = class_from(field(j, "L", "surface"), "L");
        if (j.contains("K") && !j.at("K").is_null()) s.K = class_from(j.at("K"), "K");
        const auto& cat = field(j, "catalog", "surface");
        if (!cat.is_array()) throw SchemaError("catalog must be an array");
        for (std::size_t i = 0; i < cat.size(); ++i) {
            const std::string ctx = "catalog[" + std::to_string(i) + "]";
            try {
                const auto& e = cat[i];
                CurveEntry entry;
                const auto& n = field(e, "name", ctx);
                if (!n.is_string()) throw SchemaError(ctx + ": name must be a string");
                entry.name = n.get<std::string>();
                entry.cls = class_from(field(e, "class", ctx), ctx + ".class");
                const auto& prof = field(e, "profile", ctx);
                entry.profile.max_points = small_from(field(prof, "max_points", ctx + ".profile"), ctx + ".max_points");
                entry.profile.mult = small_from(field(prof, "mult", ctx + ".profile"), ctx + ".mult");
                if (entry.profile.max_points < 0 || entry.profile.mult < 1)
                    throw SchemaError(ctx + ": malformed profile (need max_points >= 0, mult >= 1)");
                if (e.contains("provenance")) {
                    if (!e.at("provenance").is_string()) throw SchemaError(ctx + ": provenance must be a string");
                    entry.provenance = e.at("provenance").get<std::string>();
                }
                s.catalog.push_back(std::move(entry));
            } catch (const SchemaError& err) {
                issues.push_back(err.what());
            }
        }
    } catch (const SchemaError& e) {
        issues.push_back(e.what());
        throw SurfaceError(std::move(issues));
    }
    if (!issues.empty()) throw SurfaceError(std::move(issues));
    return strict ? checked(std::move(s)) : s;
}

inline SurfaceModel load_surface(const std::string& document, bool strict = true) {
    json j;
    try {
        j = json::parse(document);
    } catch (const json::parse_error& e) {
        throw SurfaceError({std::string("malformed JSON: ") + e.what()});
    }
    return surface_from(j, strict);
}

inline json to_json(const std::vector<Diagnostic>& ds) {
    json a = json::array();
    for (const auto& d : ds)
        a.push_back({{"severity", to_string(d.severity)}, {"check", d.check}, {"subject", d.subject}, {"message", d.message}});
    return a;
}

// --- certificates ----------------------------------------------------------

inline json to_json(const CaseRecord& c) {
    return {{"m", to_json(c.m)},       {"sum", big(c.sum)},
            {"xu_floor", big(c.xu)},   {"d_max", big(c.d_max)},
            {"d_hodge_min", big(c.d_hodge_min)}, {"refuted_by", to_string(c.filter)}};
}

inline json to_json(const RefutationTrace& t) {
    json degrees = json::array();
    for (const auto& d : t.degrees) degrees.push_back(big(d));
    json failed = json::array();
    for (auto f : t.failed_filters) failed.push_back(to_string(f));
    return {{"m", to_json(t.m)},
            {"xu_floor", big(t.xu)},
            {"degrees", degrees},
            {"interval", json::array({big(t.degrees.front()), big(t.degrees.back())})},
            {"failed_filters", failed}};
}

inline json to_json(const Certificate& c) {
    json cases = json::array();
    for (const auto& rec : c.refuted) cases.push_back(to_json(rec));
    json j{{"type", "certificate"},
           {"L2", big(c.L2)},
           {"r", c.r},
           {"t", to_json(c.t)},
           {"enumeration_bound", big(c.enumeration_bound)},
           {"cases_checked", c.cases_checked},
           {"semantic_scope", c.semantic_scope},
           {"assumptions", c.assumptions},
           {"refuted", cases}};
    if (c.surface) j["surface"] = to_json(*c.surface);
    return j;
}

inline json to_json(const CertifyOutcome& o, const BigInt& L2, std::size_t r, const RadicalRational& t) {
    if (o.certified()) return to_json(o.certificate());
    json traces = json::array();
    for (const auto& tr : o.traces()) traces.push_back(to_json(tr));
    return {{"type", "refutation_traces"},
            {"L2", big(L2)},
            {"r", r},
            {"t", to_json(t)},
            {"enumeration_bound", big(o.enumeration_bound)},
            {"cases_checked", o.cases_checked},
            {"semantic_scope", kVeryGeneralPoints},
            {"meaning", "not certified; this is not a disproof"},
            {"traces", traces}};
}

inline Certificate certificate_from(const json& j) {
    const std::string ctx = "certificate";
    if (field(j, "type", ctx) != "certificate") throw SchemaError("document is not a certificate");
    Certificate c;
    c.L2 = big_from(field(j, "L2", ctx), "L2");
    c.r = static_cast<std::size_t>(small_from(field(j, "r", ctx), "r"));
    c.t = radical_from(field(j, "t", ctx), "t");
    c.enumeration_bound = big_from(field(j, "enumeration_bound", ctx), "enumeration_bound");
    c.cases_checked = static_cast<std::uint64_t>(big_from(field(j, "cases_checked", ctx), "cases_checked"));
    const auto& scope = field(j, "semantic_scope", ctx);
    if (!scope.is_string()) throw SchemaError("semantic_scope must be a string");
    c.semantic_scope = scope.get<std::string>();
    if (j.contains("assumptions")) c.assumptions = j.at("assumptions").get<std::vector<std::string>>();
    if (j.contains("surface")) c.surface = surface_from(j.at("surface"));
    const auto& cases = field(j, "refuted", ctx);
    if (!cases.is_array()) throw SchemaError("refuted must be an array");
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const std::string cc = "refuted[" + std::to_string(i) + "]";
        const auto& e = cases[i];
        CaseRecord rec;
        rec.m = mults_from(field(e, "m", cc), cc + ".m");
        rec.sum = big_from(field(e, "sum", cc), cc + ".sum");
        rec.xu = big_from(field(e, "xu_floor", cc), cc + ".xu_floor");
        rec.d_max = big_from(field(e, "d_max", cc), cc + ".d_max");
        rec.d_hodge_min = big_from(field(e, "d_hodge_min", cc), cc + ".d_hodge_min");
        const auto& f = field(e, "refuted_by", cc);
        auto filter = f.is_string() ? filter_from_string(f.get<std::string>()) : std::nullopt;
        if (!filter) throw SchemaError(cc + ": unknown filter");
        rec.filter = *filter;
        c.refuted.push_back(std::move(rec));
    }
    return c;
}

// --- verdicts and reports --------------------------------------------------

inline json to_json(const Verdict& v) {
    json trace = json::array();
    for (const auto& s : v.trace) {
        json step{{"label", s.label}, {"lhs", s.lhs.str()}, {"rhs", s.rhs.str()}, {"relation", to_string(s.relation)}};
        if (s.concludes) {
            step["concludes"] = to_string(*s.concludes);
            step["source"] = s.source;
        }
        trace.push_back(step);
    }
    return {{"kind", to_string(v.kind)},
            {"eps_kind", to_string(v.eps_kind)},
            {"r", v.r},
            {"L2", big(v.L2)},
            {"eps", rendered(v.eps)},
            {"ratio_squared", v.ratio_squared.str()},
            {"threshold", v.threshold.str()},
            {"source", v.source},
            {"trace", trace}};
}

inline Verdict verdict_from(const json& j) {
    const std::string ctx = "verdict";
    Verdict v;
    auto kind = verdict_kind_from_string(field(j, "kind", ctx).get<std::string>());
    auto eps_kind = eps_kind_from_string(field(j, "eps_kind", ctx).get<std::string>());
    if (!kind || !eps_kind) throw SchemaError("verdict: unknown kind");
    v.kind = *kind;
    v.eps_kind = *eps_kind;
    v.r = static_cast<std::size_t>(small_from(field(j, "r", ctx), "r"));
    v.L2 = big_from(field(j, "L2", ctx), "L2");
    v.eps = radical_from(field(j, "eps", ctx), "eps");
    v.ratio_squared = rational_from(field(j, "ratio_squared", ctx), "ratio_squared");
    v.threshold = rational_from(field(j, "threshold", ctx), "threshold");
    v.source = field(j, "source", ctx).get<std::string>();
    for (const auto& s : field(j, "trace", ctx)) {
        VerdictStep step;
        step.label = field(s, "label", ctx).get<std::string>();
        step.lhs = rational_from(field(s, "lhs", ctx), "lhs");
        step.rhs = rational_from(field(s, "rhs", ctx), "rhs");
        const auto rel = field(s, "relation", ctx).get<std::string>();
        step.relation = rel == "<" ? Cmp::lt : rel == "=" ? Cmp::eq : rel == ">" ? Cmp::gt : throw SchemaError("bad relation");
        if (s.contains("concludes")) {
            auto k = verdict_kind_from_string(s.at("concludes").get<std::string>());
            if (!k) throw SchemaError("verdict: unknown concluded kind");
            step.concludes = *k;
            step.source = s.value("source", "");
        }
        v.trace.push_back(std::move(step));
    }
    return v;
}

inline json to_json(const ContradictionReport& rep) {
    json steps = json::array();
    for (const auto& s : rep.steps)
        steps.push_back({{"statement", s.statement},
                         {"lhs", s.lhs.str()},
                         {"needed", to_string(s.needed)},
                         {"rhs", s.rhs.str()},
                         {"holds", s.holds}});
    json j{{"r", rep.r}, {"m", to_json(rep.m)}, {"case", to_string(rep.which)}, {"units", "L^2"},
           {"steps", steps}, {"outcome", to_string(rep.outcome)}};
    if (!rep.reduction.empty()) j["reduction"] = to_json(rep.reduction.front());
    return j;
}

inline json to_json(const CatalogMinimum& cm) {
    json j{{"r", cm.r}, {"eps_upper", rendered(cm.eps_upper)}, {"maximal", cm.maximal}};
    if (cm.witness) {
        const auto& w = *cm.witness;
        j["witness"] = {{"curve", w.curve_name},
                        {"LC", big(w.LC)},
                        {"m", to_json(w.mults)},
                        {"quotient", rendered(RadicalRational(w.quotient))},
                        {"provenance", w.provenance}};
    }
    return j;
}

inline json to_json(const KuechleScan& s) {
    json v = json::array();
    for (const auto& m : s.violations) v.push_back(to_json(m));
    return {{"r_max", s.r_max}, {"m_max", s.m_max}, {"cases", s.cases}, {"violations", v}};
}

inline json to_json(const NagataRow& row) {
    return {{"r", row.r},
            {"ratio_squared", row.ratio_squared.str()},
            {"ratio", rendered(row.ratio)},
            {"eps_upper", rendered(row.eps_upper)},
            {"lower_bound", rendered(row.lower_bound)}};
}

}  // namespace seshadri::io
