#include "tmc/example.hpp"

#include <chrono>

namespace tmc {

CurveSpec eg1_curve() { return CurveSpec{3, {8, 14, 7, 1}}; }

RationalMeasure eg1_measure() {
    const CurveSpec c = eg1_curve();
    RationalMeasure mu;
    for (int l = 1; l <= 14; ++l) mu.push_back({Rational(l), c.y_at(Rational(l)), Rational(1, 14)});
    return mu;
}

Eg1Report run_eg1(const Real& tol, const Real& verify_tol) {
    const auto start = std::chrono::steady_clock::now();
    Eg1Report r;
    r.curve = eg1_curve();
    r.generating = eg1_measure();
    r.beta = moments_from_measure(r.generating, 8);
    const MomentMatrix mm = moment_matrix(r.beta);
    r.rank_m = rank(mm.data);
    r.p_pure = is_p_pure(mm, r.curve);
    r.rg = is_recursively_generated(mm).ok;
    r.gamma = reduce(r.beta, r.curve);
    r.endpoint = cubic_pure_solve(r.gamma, RootChoice::Low, tol);
    r.link = r.endpoint.cert.link;
    const Real shift = to_real(r.link.shift);
    r.beta_window_lo = r.endpoint.cert.window_lo + shift;
    r.beta_window_hi = r.endpoint.cert.window_hi + shift;
    r.measure = recover_from_sequence(*r.endpoint.completed, r.curve, 4, tol);
    r.report = verify_measure(r.measure, r.beta, r.curve, verify_tol, r.rank_m);
    r.kept = drop_near_zero_atoms(r.measure, Real(1e-8), Real(1e-8));
    r.kept_report = verify_measure(r.kept, r.beta, r.curve, verify_tol, r.rank_m);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

void print_report(std::ostream& os, const VerifyReport& v) {
    os << "  moments " << (v.moments_ok ? "ok" : "FAIL") << " (max relative error " << to_string(v.max_moment_error, 3)
       << "), curve " << (v.curve_ok ? "ok" : "FAIL") << ", densities " << (v.positive_ok ? "positive" : "NOT positive")
       << ", atoms " << v.atom_count << " vs rank M(n) " << v.rank_m << "\n";
    for (const auto& s : v.violations) os << "    " << s << "\n";
}

}  // namespace

void print_eg1(std::ostream& os, const Eg1Report& r) {
    os << "curve: x*y = x^3 + 7x^2 + 14x + 8\n";
    os << "generating measure: 14 atoms x = 1..14, rho = 1/14\n";
    os << "beta_01 = " << to_string(r.beta(0, 1)) << "\n";
    os << "beta_80 = " << to_string(r.beta(8, 0)) << "\n";
    os << "rank M(4) = " << r.rank_m << ", p-pure: " << (r.p_pure ? "yes" : "no") << ", recursively generated: "
       << (r.rg ? "yes" : "no") << "\n\n";
    for (int s : {-8, -7, -6, 1, 14, 15, 16}) os << "gamma_" << s << " = " << r.gamma[s].to_string() << "\n";
    const auto& c = r.endpoint.cert;
    os << "\nfree moment t = gamma_16 = beta_" << r.link.i << "," << r.link.j << " - " << to_string(r.link.shift) << "\n";
    os << "t_min = " << to_string(to_real(c.quantities->t_min), 25) << "\n";
    os << "t_max = " << to_string(to_real(c.quantities->t_max), 25) << "\n";
    os << "positive definite window for beta_" << r.link.i << "," << r.link.j << ":\n  " << to_string(r.beta_window_lo, 20)
       << " < beta_" << r.link.i << "," << r.link.j << " < " << to_string(r.beta_window_hi, 20) << "\n";
    os << "\nlower endpoint: branch " << cubic_branch_name(c.branch) << ", rank A = " << c.rank << "\n";
    os << "atoms (x, y, rho):\n";
    for (const auto& a : r.measure.atoms)
        os << "  " << to_string(a.x, 12) << "  " << to_string(a.y, 12) << "  " << to_string(a.rho, 12) << "\n";
    os << "verification of the extracted measure:\n";
    print_report(os, r.report);
    os << "after dropping near-zero atoms (" << r.kept.atoms.size() << " atoms):\n";
    print_report(os, r.kept_report);
    os << "\nelapsed " << r.seconds << " s\n";
}

}  // namespace tmc
