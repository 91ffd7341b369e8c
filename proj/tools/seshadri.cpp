// seshadri: exact Seshadri-constant bounds, certificates and fibration verdicts.
//
// Exit status: 0 success / certified, 1 not certified (traces emitted) or a
// certificate that fails verification, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seshadri/seshadri.hpp"

namespace {

using namespace seshadri;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNotCertified = 1;
constexpr int kInputError = 2;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> citations;
    std::vector<std::string> text;
    int exit_status = kOk;

    json to_json() const {
        return {{"command", command}, {"inputs", inputs}, {"results", results}, {"citations", citations},
                {"exit_status", exit_status}};
    }
    void line(std::string s) { text.push_back(std::move(s)); }
};

std::string approx(const RadicalRational& v) { return v.str() + " ≈ " + v.decimal(6); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Builtin name or path to a surface JSON document.
SurfaceModel resolve_surface(const std::string& name_or_path) {
    if (std::filesystem::exists(name_or_path)) return io::load_surface(read_file(name_or_path));
    return builtin(name_or_path);
}

struct Target {
    std::optional<SurfaceModel> surface;
    BigInt L2;
};

Target resolve_target(const std::string& surface, const std::string& L2, Report& rep) {
    if (!surface.empty() && !L2.empty()) throw InputError("give either --surface or --L2, not both");
    Target t;
    if (!surface.empty()) {
        t.surface = resolve_surface(surface);
        t.L2 = t.surface->L2();
        rep.inputs["surface"] = t.surface->name;
    } else if (!L2.empty()) {
        t.L2 = parse_bigint(L2);
        if (t.L2 < 1) throw InputError("--L2 must be positive");
    } else {
        throw InputError("one of --surface or --L2 is required");
    }
    rep.inputs["L2"] = io::big(t.L2);
    return t;
}

std::size_t checked_r(long long r) {
    if (r < 1) throw InputError("--r must be positive");
    return static_cast<std::size_t>(r);
}

// --- subcommands -----------------------------------------------------------

void upper_bound(Report& rep, const std::string& surface, const std::string& L2, long long r_in) {
    const auto target = resolve_target(surface, L2, rep);
    const auto r = checked_r(r_in);
    rep.inputs["r"] = r;
    const auto eps = epsilon_upper(target.L2, r);
    rep.results["eps_upper"] = io::rendered(eps);
    rep.citations.emplace_back("nef on the blow-up: eps(L;r) <= sqrt(L^2/r)");
    rep.line(approx(eps));
}

std::vector<std::int64_t> parse_mults(const std::string& text) {
    std::vector<std::int64_t> m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const BigInt v = parse_bigint(item);
        if (v < 0 || v > 1000000) throw InputError("multiplicity out of range: " + item);
        m.push_back(static_cast<std::int64_t>(v));
    }
    if (m.empty()) throw InputError("empty multiplicity list");
    return m;
}

void quotient(Report& rep, const std::string& surface, const std::string& LC, const std::string& mults, long long r_in) {
    if (!surface.empty()) {
        if (!LC.empty() || !mults.empty()) throw InputError("--surface excludes --LC/--m");
        const auto s = resolve_surface(surface);
        const auto r = checked_r(r_in);
        rep.inputs["surface"] = s.name;
        rep.inputs["r"] = r;
        const auto cm = min_quotient_over_catalog(s, r);
        rep.results = io::to_json(cm);
        rep.citations.emplace_back("Seshadri quotient L.C / sum mult_{P_i} C over catalogued curves");
        if (cm.witness) {
            const auto& w = *cm.witness;
            rep.line("witness: " + w.curve_name + "  L.C = " + w.LC.str() + "  m = " + w.mults.str());
            rep.line("quotient: " + approx(RadicalRational(w.quotient)));
            rep.line("provenance: " + w.provenance);
        }
        rep.line("eps_upper: " + approx(cm.eps_upper));
        if (cm.maximal) rep.line("MAXIMAL: catalog gives no sub-maximal curve");
        return;
    }
    if (LC.empty() || mults.empty()) throw InputError("give --LC and --m, or --surface and --r");
    const BigInt lc = parse_bigint(LC);
    if (lc < 1) throw InputError("--LC must be positive");
    const auto m = MultiplicityVector::from_unsorted(parse_mults(mults));
    const auto q = seshadri_quotient(lc, m);
    rep.inputs["LC"] = io::big(lc);
    rep.inputs["m"] = io::to_json(m);
    rep.results["quotient"] = io::rendered(RadicalRational(q));
    rep.line("L.C / sum(m) = " + lc.str() + " / " + m.sum().str() + " = " + approx(RadicalRational(q)));
}

void certify(Report& rep, const std::string& surface, const std::string& L2, long long r_in, const std::string& t_text,
             bool no_lattice, unsigned jobs) {
    const auto target = resolve_target(surface, L2, rep);
    const auto r = checked_r(r_in);
    const auto t = RadicalRational::parse(t_text);
    rep.inputs["r"] = r;
    rep.inputs["t"] = io::to_json(t);
    const auto upper = epsilon_upper(target.L2, r);
    if (cmp(t, upper) != Cmp::lt)
        throw InputError("t = " + t.str() + " is not below eps_upper = " + upper.str());
    CertifyOptions opts;
    opts.jobs = jobs;
    if (target.surface && !no_lattice) opts.surface = &*target.surface;
    const auto outcome = certify_lower_bound(target.L2, r, t, opts);
    rep.results = io::to_json(outcome, target.L2, r, t);
    rep.citations.emplace_back("Hodge index: L^2 C^2 <= (L.C)^2");
    rep.citations.emplace_back("Xu: C_t^2 >= m(m-1)+1 (one point), sum m_i^2 - min m_i (r >= 2)");
    rep.line("eps(L;" + std::to_string(r) + ") >= " + t.str() + " ?   L^2 = " + target.L2.str() +
             ", eps_upper = " + approx(upper));
    rep.line("enumeration: sum(m) < " + outcome.enumeration_bound.str() + ", " + std::to_string(outcome.cases_checked) +
             " multiplicity vectors");
    if (outcome.certified()) {
        const auto& c = outcome.certificate();
        rep.line("CERTIFIED at " + c.semantic_scope);
        for (const auto& rec : c.refuted)
            rep.line("  m=" + rec.m.str() + "  xu=" + rec.xu.str() + "  d<=" + rec.d_max.str() +
                     "  hodge d>=" + rec.d_hodge_min.str() + "  refuted_by=" + to_string(rec.filter));
        for (const auto& a : c.assumptions) rep.line("assumes: " + a);
        rep.exit_status = kOk;
    } else {
        rep.line("NOT CERTIFIED (surviving cases below; this is not a disproof)");
        for (const auto& tr : outcome.traces()) {
            std::string ds;
            for (const auto& d : tr.degrees) ds += (ds.empty() ? "" : ",") + d.str();
            rep.line("  m=" + tr.m.str() + "  xu=" + tr.xu.str() + "  degrees {" + ds + "}");
        }
        rep.exit_status = kNotCertified;
    }
}

void classify_cmd(Report& rep, const std::string& surface, const std::string& L2, long long r_in,
                  const std::string& eps_text, const std::string& eps_kind_text, bool from_catalog) {
    const auto target = resolve_target(surface, L2, rep);
    const auto r = checked_r(r_in);
    rep.inputs["r"] = r;
    RadicalRational eps;
    EpsKind kind = EpsKind::exact;
    if (from_catalog) {
        if (!eps_text.empty()) throw InputError("--from-catalog excludes --eps");
        if (!target.surface) throw InputError("--from-catalog needs --surface");
        const auto cm = min_quotient_over_catalog(*target.surface, r);
        kind = EpsKind::upper_bound;
        eps = cm.maximal ? cm.eps_upper : RadicalRational(cm.witness->quotient);
        rep.inputs["eps_source"] = "catalog witness (upper bound on eps)";
        rep.results["catalog"] = io::to_json(cm);
        if (cm.witness)
            rep.line("catalog witness: " + cm.witness->curve_name + " with quotient " + cm.witness->quotient.str() +
                     " (upper bound on eps)");
    } else {
        if (eps_text.empty()) throw InputError("give --eps or --from-catalog");
        eps = RadicalRational::parse(eps_text);
        auto k = eps_kind_from_string(eps_kind_text);
        if (!k) throw InputError("--eps-kind must be exact, upper or lower");
        kind = *k;
    }
    rep.inputs["eps"] = io::to_json(eps);
    rep.inputs["eps_kind"] = to_string(kind);
    const auto v = classify(eps, target.L2, r, kind);
    rep.results["verdict"] = io::to_json(v);
    rep.citations.push_back(v.source);
    rep.line("eps = " + approx(eps) + " (" + to_string(kind) + "), L^2 = " + target.L2.str() +
             ", r = " + std::to_string(r));
    rep.line("rho = eps^2 r / L^2 = " + v.ratio_squared.str());
    for (const auto& s : v.trace)
        rep.line("  " + s.label + ": " + s.lhs.str() + " " + to_string(s.relation) + " " + s.rhs.str() +
                 (s.concludes ? std::string(" -> ") + to_string(*s.concludes) : ""));
    rep.line(std::string(to_string(v.kind)) + " [" + v.source + "]");
}

void kuechle(Report& rep, long long r_max, long long m_max) {
    if (r_max < 2 || m_max < 2) throw InputError("--r-max and --m-max must be >= 2");
    rep.inputs["r_max"] = r_max;
    rep.inputs["m_max"] = m_max;
    const auto scan = kuechle_scan(static_cast<std::size_t>(r_max), m_max);
    rep.results = io::to_json(scan);
    rep.citations.emplace_back("Kuechle: (r+1) sum m_i^2 > (sum m_i)^2 + m_r (r+1)");
    rep.line(std::to_string(scan.violations.size()) + " violations / " + std::to_string(scan.cases) + " cases");
    for (const auto& m : scan.violations) rep.line("  violation: " + m.str());
    rep.exit_status = scan.violations.empty() ? kOk : kNotCertified;
}

void catalog(Report& rep, const std::string& name) {
    const auto s = resolve_surface(name);
    rep.inputs["name"] = name;
    rep.results["surface"] = io::to_json(s);
    rep.line(s.name + ": rank " + std::to_string(s.lattice.rank()) + ", L^2 = " + s.L2().str() +
             (s.K ? ", K = " + s.K->str() : ", no K"));
    for (const auto& e : s.catalog)
        rep.line("  " + e.name + "  class " + e.cls.str() + "  L.C = " + s.lattice.intersect(s.L, e.cls).str() +
                 "  mult " + std::to_string(e.profile.mult) + " at <= " + std::to_string(e.profile.max_points) +
                 " general point(s)  [" + e.provenance + "]");
}

void validate_cmd(Report& rep, const std::string& path) {
    SurfaceModel s;
    if (std::filesystem::exists(path)) {
        s = io::load_surface(read_file(path), /*strict=*/false);
    } else {
        s = builtin(path);
    }
    rep.inputs["file"] = path;
    const auto ds = validate(s);
    rep.results["diagnostics"] = io::to_json(ds);
    const auto errors = count(ds, Severity::error);
    const auto warnings = count(ds, Severity::warning);
    rep.results["errors"] = errors;
    rep.results["warnings"] = warnings;
    for (const auto& d : ds)
        rep.line(std::string(to_string(d.severity)) + "  " + d.check + "  " + d.subject + ": " + d.message);
    rep.line(std::to_string(errors) + " error(s), " + std::to_string(warnings) + " warning(s)" +
             (errors == 0 ? "; all checks pass" : ""));
    rep.exit_status = errors == 0 ? kOk : kInputError;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoull(text);
            return {v, v};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("--r must look like 2..10");
    }
}

void nagata(Report& rep, const std::string& L2_text, const std::string& range, bool csv) {
    const BigInt L2 = parse_bigint(L2_text);
    if (L2 < 1) throw InputError("--L2 must be positive");
    const auto [from, to] = parse_range(range);
    if (from < 2 || to < from || to > 100000) throw InputError("need 2 <= r_from <= r_to");
    rep.inputs["L2"] = io::big(L2);
    rep.inputs["r_from"] = from;
    rep.inputs["r_to"] = to;
    const auto rows = nagata_biran_table(L2, from, to);
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(io::to_json(row));
    rep.results["rows"] = arr;
    rep.citations.emplace_back("surfaces without a fibration over a curve: eps(L;r) >= sqrt((r-1)/r) eps_upper(L;r)");
    if (csv) {
        rep.line("r,ratio_squared,ratio,ratio_approx,eps_upper,lower_bound,lower_bound_approx");
        for (const auto& row : rows)
            rep.line(std::to_string(row.r) + "," + row.ratio_squared.str() + "," + row.ratio.expr() + "," +
                     row.ratio.decimal(6) + "," + row.eps_upper.expr() + "," + row.lower_bound.expr() + "," +
                     row.lower_bound.decimal(6));
    } else {
        for (const auto& row : rows)
            rep.line("r=" + std::to_string(row.r) + "  ratio^2=" + row.ratio_squared.str() + "  ratio=" +
                     approx(row.ratio) + "  lower bound=" + approx(row.lower_bound));
    }
}

void verify(Report& rep, const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (doc.contains("results") && doc.at("results").is_object()) doc = doc.at("results");
    rep.inputs["file"] = path;
    const auto cert = io::certificate_from(doc);
    const auto check = verify_certificate(cert);
    rep.results["valid"] = check.ok;
    rep.results["cases"] = cert.refuted.size();
    rep.results["problems"] = check.problems;
    rep.line(std::string(check.ok ? "VALID" : "INVALID") + ": " + std::to_string(cert.refuted.size()) +
             " cases re-checked for eps(L;" + std::to_string(cert.r) + ") >= " + cert.t.str() + " at L^2 = " +
             cert.L2.str());
    for (const auto& p : check.problems) rep.line("  " + p);
    rep.exit_status = check.ok ? kOk : kNotCertified;
}

void case_analysis(Report& rep, long long r_in, const std::string& mults) {
    const auto r = checked_r(r_in);
    const auto m = MultiplicityVector::from_unsorted(parse_mults(mults));
    rep.inputs["r"] = r;
    rep.inputs["m"] = io::to_json(m);
    const auto report = reproduce_case_analysis(r, m);
    rep.results = io::to_json(report);
    rep.citations.emplace_back("multi-point theorem: induction on r, cases (a), (b), (c)");
    const ContradictionReport* cur = &report;
    std::string indent;
    while (cur) {
        rep.line(indent + "r=" + std::to_string(cur->r) + " m=" + cur->m.str() + " case " + to_string(cur->which));
        for (const auto& s : cur->steps)
            rep.line(indent + "  " + s.statement + ": " + s.lhs.str() + " " + to_string(s.needed) + " " + s.rhs.str() +
                     (s.holds ? "  [holds]" : "  [fails]"));
        cur = cur->reduction.empty() ? nullptr : &cur->reduction.front();
        indent += "  ";
    }
    rep.line(to_string(report.outcome));
}

unsigned jobs_from_env() {
    if (const char* env = std::getenv("SESHADRI_JOBS")) {
        try {
            const auto v = std::stoul(env);
            if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Seshadri-constant bounds on algebraic surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    unsigned jobs = jobs_from_env();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", jobs, "Worker threads for the certifier (fallback: SESHADRI_JOBS)")
        ->check(CLI::Range(1u, 256u));

    std::string surface, L2, t, eps, eps_kind = "exact", LC, mults, file, range = "2..10";
    long long r = 1, r_max = 6, m_max = 20;
    bool from_catalog = false, csv = false, no_lattice = false;

    auto* up = app.add_subcommand("upper-bound", "Exact eps_upper(L;r) = sqrt(L^2/r)");
    up->add_option("--surface", surface, "Builtin name or surface JSON file");
    up->add_option("--L2", L2, "Self-intersection L^2");
    up->add_option("--r", r, "Number of points")->required();

    auto* qu = app.add_subcommand("quotient", "Seshadri quotient L.C/sum(m), or the catalog minimum");
    qu->add_option("--surface", surface, "Builtin name or surface JSON file");
    qu->add_option("--r", r, "Number of points");
    qu->add_option("--LC", LC, "Degree L.C");
    qu->add_option("--m", mults, "Multiplicities, comma separated");

    auto* ce = app.add_subcommand("certify", "Certify eps(L;r) >= t at very general points");
    ce->add_option("--surface", surface, "Builtin name or surface JSON file");
    ce->add_option("--L2", L2, "Self-intersection L^2");
    ce->add_option("--r", r, "Number of points")->required();
    ce->add_option("--t", t, "Target: p/q or p/q*sqrt(s)")->required();
    ce->add_flag("--no-lattice", no_lattice, "Ignore the surface lattice (numerical filters only)");

    auto* cl = app.add_subcommand("classify", "Fibration verdict from an eps value");
    cl->add_option("--surface", surface, "Builtin name or surface JSON file");
    cl->add_option("--L2", L2, "Self-intersection L^2");
    cl->add_option("--r", r, "Number of points")->required();
    cl->add_option("--eps", eps, "eps: p/q or p/q*sqrt(s)");
    cl->add_option("--eps-kind", eps_kind, "exact, upper or lower");
    cl->add_flag("--from-catalog", from_catalog, "Use the catalog minimum quotient (an upper bound)");

    auto* ks = app.add_subcommand("kuechle-scan", "Exhaustive check of Kuechle's inequality");
    ks->add_option("--r-max", r_max, "Largest r")->required();
    ks->add_option("--m-max", m_max, "Largest m_1")->required();

    auto* ca = app.add_subcommand("catalog", "Show a builtin surface");
    ca->add_option("name", file, "P2, cubic, scroll(r)")->required();

    auto* va = app.add_subcommand("validate", "Diagnostics for a surface file or builtin");
    va->add_option("file", file, "Surface JSON file or builtin name")->required();

    auto* na = app.add_subcommand("nagata-table", "Asymptotic lower bounds sqrt((r-1)/r) eps_upper");
    na->add_option("--L2", L2, "Self-intersection L^2")->required();
    na->add_option("--r", range, "Range a..b");
    na->add_flag("--csv", csv, "Emit CSV");

    auto* ve = app.add_subcommand("verify", "Re-check a serialized certificate");
    ve->add_option("file", file, "Certificate or certify --format json report")->required();

    auto* an = app.add_subcommand("case-analysis", "Replay the multi-point case analysis for one vector");
    an->add_option("--r", r, "Number of points")->required();
    an->add_option("--m", mults, "Multiplicities, comma separated")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    Report rep;
    std::string echo;
    for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
    rep.command = "seshadri " + echo;
    try {
        if (*up) upper_bound(rep, surface, L2, r);
        else if (*qu) quotient(rep, surface, LC, mults, r);
        else if (*ce) certify(rep, surface, L2, r, t, no_lattice, jobs);
        else if (*cl) classify_cmd(rep, surface, L2, r, eps, eps_kind, from_catalog);
        else if (*ks) kuechle(rep, r_max, m_max);
        else if (*ca) catalog(rep, file);
        else if (*va) validate_cmd(rep, file);
        else if (*na) nagata(rep, L2, range, csv);
        else if (*ve) verify(rep, file);
        else if (*an) case_analysis(rep, r, mults);
    } catch (const SurfaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }

    if (format == "json") {
        std::cout << rep.to_json().dump(2) << "\n";
    } else {
        for (const auto& l : rep.text) std::cout << l << "\n";
    }
    return rep.exit_status;
}
