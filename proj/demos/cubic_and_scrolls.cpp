// Library walkthrough: upper bounds, catalog minima, a certificate and verdicts.

#include <iostream>

#include "seshadri/seshadri.hpp"

using namespace seshadri;

int main() {
    const auto cubic = builtin("cubic");
    const auto min = min_quotient_over_catalog(cubic, 1);
    std::cout << "cubic: eps_upper = " << epsilon_upper(cubic.L2(), 1).str() << ", catalog minimum "
              << min.witness->quotient.str() << " (" << min.witness->curve_name << ")\n";

    CertifyOptions opts;
    opts.surface = &cubic;
    const auto out = certify_lower_bound(cubic.L2(), 1, RadicalRational(Rational(3, 2)), opts);
    std::cout << "  eps >= 3/2 " << (out.certified() ? "certified" : "not certified") << " after "
              << out.cases_checked << " cases\n";

    const auto v = classify(RadicalRational(min.witness->quotient), cubic.L2(), 1);
    std::cout << "  rho = " << v.ratio_squared.str() << " -> " << to_string(v.kind) << "\n";

    for (int r = 3; r <= 6; ++r) {
        const auto s = builtin("scroll(" + std::to_string(r) + ")");
        const auto m = min_quotient_over_catalog(s, static_cast<std::size_t>(r));
        const auto verdict = classify(RadicalRational(m.witness->quotient), s.L2(), static_cast<std::size_t>(r));
        std::cout << s.name << ": minimum " << m.witness->quotient.str() << ", eps_upper "
                  << m.eps_upper.str() << " ~ " << m.eps_upper.decimal() << ", " << to_string(verdict.kind) << "\n";
    }
}
