#include "tmc/cubic.hpp"

namespace tmc {

namespace {

const Rational& fixed(const StrongSequence& g, int s) {
    const AffineScalar& a = g[s];
    if (!a.is_constant()) throw Error(ErrorCode::InvalidInput, "gamma_" + std::to_string(s) + " unexpectedly depends on t");
    return a.constant();
}

std::optional<Vector<Rational>> solve_unique(const Matrix<Rational>& a, const Vector<Rational>& b) {
    return solve_any(a, b);
}

std::optional<Vector<Real>> solve_unique(const Matrix<Real>& a, const Vector<Real>& b) { return solve(a, b); }

}  // namespace

const char* cubic_branch_name(CubicBranch b) {
    switch (b) {
        case CubicBranch::PurePD: return "PurePD";
        case CubicBranch::PureFlat: return "PureFlat";
        case CubicBranch::Singular: return "Singular";
        case CubicBranch::NoMeasure: return "NoMeasure";
    }
    return "?";
}

CubicBlocks cubic_blocks(const StrongSequence& gamma) {
    if (gamma.m != 3) throw Error(ErrorCode::WrongDegree, "cubic solver needs m = 3");
    const int n = gamma.n;
    CubicBlocks blk;
    blk.n = n;
    const int k = 3 * n - 1;
    blk.a = Matrix<Rational>(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) blk.a(i, j) = fixed(gamma, -2 * n + 2 + i + j);
    for (int s = -2 * n + 1; s <= n - 1; ++s) blk.b.push_back(fixed(gamma, s));
    for (int s = n + 1; s <= 4 * n - 1; ++s) blk.c.push_back(fixed(gamma, s));
    blk.gamma_n = fixed(gamma, n);
    blk.d = gamma[-2 * n].constant();
    blk.q0_2n = pow(gamma.curve.q[0], 2 * n);
    return blk;
}

template <typename T>
CubicQuantities<T> cubic_quantities(const Matrix<T>& a, const Vector<T>& b, const Vector<T>& c, const T& gamma_n,
                                    const T& d, const T& q0_2n) {
    auto x = solve_unique(a, c);
    auto y = solve_unique(a, b);
    if (!x || !y) throw Error(ErrorCode::NotPure, "central Hankel block is singular");
    CubicQuantities<T> q;
    q.t_min = dot(c, *x);
    q.t_max = q0_2n * (d - dot(b, *y));
    const T bx = dot(b, *x);
    const T cy = dot(c, *y);
    q.e = bx * cy - 2 * bx * gamma_n + gamma_n * gamma_n;
    return q;
}

template CubicQuantities<Rational> cubic_quantities(const Matrix<Rational>&, const Vector<Rational>&, const Vector<Rational>&,
                                                    const Rational&, const Rational&, const Rational&);
template CubicQuantities<Real> cubic_quantities(const Matrix<Real>&, const Vector<Real>&, const Vector<Real>&, const Real&,
                                                const Real&, const Real&);

BetaLink cubic_beta_link(const StrongSequence& gamma) {
    const int m = gamma.m, s = gamma.free.at(0);
    BetaLink link;
    link.j = (s - 1) / (m - 1);
    link.i = s - (m - 1) * link.j;
    const LaurentPoly qj = laurent_power_coeffs(gamma.curve, link.j);
    AffineScalar shift;
    for (int t = -link.j; t <= (m - 1) * link.j - 1; ++t) shift += gamma[t + link.i] * qj.coefficient(t);
    if (!shift.is_constant()) throw Error(ErrorCode::InvalidInput, "beta link depends on the free moment");
    link.shift = shift.constant();
    return link;
}

CubicResult cubic_pure_solve(const StrongSequence& gamma, RootChoice choice, const Real& tol) {
    const CubicBlocks blk = cubic_blocks(gamma);
    CubicResult res;
    CubicCertificate& cert = res.cert;
    cert.d = blk.d;
    cert.link = cubic_beta_link(gamma);
    if (psd_status(blk.a).cls != PsdClass::PD) throw Error(ErrorCode::NotPure, "central Hankel block is not positive definite");

    const CubicQuantities<Rational> q = cubic_quantities(blk.a, blk.b, blk.c, blk.gamma_n, blk.d, blk.q0_2n);
    cert.quantities = q;
    const Rational delta = q.t_max - q.t_min;
    if (delta <= 0) {
        cert.branch = CubicBranch::NoMeasure;
        cert.reason = "t_min >= t_max";
        return res;
    }
    const Rational disc = delta * delta - 4 * blk.q0_2n * q.e;
    if (disc < 0) {
        cert.branch = CubicBranch::NoMeasure;
        cert.reason = "(t_max - t_min)^2 < 4 q0^(2n) E";
        return res;
    }

    Rational root_exact;
    const bool rational_root = exact_square_root(disc, root_exact);
    const Real root = rational_root ? to_real(root_exact) : Real(sqrt(to_real(disc)));
    const Real w_plus = (to_real(delta) + root) / 2;
    // the small root via the product of roots, avoiding cancellation
    const Real w_minus = 2 * to_real(blk.q0_2n * q.e) / (to_real(delta) + root);
    cert.w_roots = {w_minus, w_plus};
    const Real t_min = to_real(q.t_min);
    cert.window_lo = t_min + w_minus;
    cert.window_hi = t_min + w_plus;

    switch (choice) {
        case RootChoice::Low: cert.chosen_t = cert.window_lo; break;
        case RootChoice::High: cert.chosen_t = cert.window_hi; break;
        case RootChoice::Interior: cert.chosen_t = (cert.window_lo + cert.window_hi) / 2; break;
    }
    if (rational_root) {
        const Rational wp = (delta + root_exact) / 2;
        const Rational wm = delta - wp;
        Rational t;
        switch (choice) {
            case RootChoice::Low: t = q.t_min + wm; break;
            case RootChoice::High: t = q.t_min + wp; break;
            case RootChoice::Interior: t = q.t_min + delta / 2; break;
        }
        cert.chosen_t_exact = t;
        res.completed_exact = evaluate<Rational>(gamma, {{1, t}});
    }
    cert.branch = choice == RootChoice::Interior && w_minus != w_plus ? CubicBranch::PurePD : CubicBranch::PureFlat;
    res.completed = evaluate<Real>(gamma, {{1, cert.chosen_t}});
    cert.rank = res.completed_exact ? rank(assemble_full(*res.completed_exact).data)
                                    : numeric_rank(assemble_full(*res.completed).data, tol);
    return res;
}

CubicResult cubic_singular_solve(const StrongSequence& gamma) {
    const CubicBlocks blk = cubic_blocks(gamma);
    CubicResult res;
    CubicCertificate& cert = res.cert;
    cert.d = blk.d;
    cert.link = cubic_beta_link(gamma);
    cert.branch = CubicBranch::NoMeasure;
    auto w = solve_any(blk.a, blk.c);
    if (!w) {
        cert.reason = "c is not in the range of the central Hankel block";
        return res;
    }
    const Rational t0 = dot(blk.c, *w);
    cert.chosen_t_exact = t0;
    cert.chosen_t = to_real(t0);
    Sequence<Rational> seq = evaluate<Rational>(gamma, {{1, t0}});
    const Matrix<Rational> full = assemble_full(seq).data;
    if (psd_status(full).cls == PsdClass::Indefinite) {
        cert.reason = "completion at t0 is not positive semidefinite";
        return res;
    }
    const int r_full = rank(full), r_core = rank(blk.a);
    cert.rank = r_full;
    if (r_full != r_core) {
        cert.reason = "rank at t0 (" + std::to_string(r_full) + ") exceeds the central rank (" + std::to_string(r_core) + ")";
        return res;
    }
    cert.branch = CubicBranch::Singular;
    res.completed = to_real(seq);
    res.completed_exact = std::move(seq);
    return res;
}

}  // namespace tmc
