#include "tmc/recovery.hpp"

#include <algorithm>

namespace tmc {

using boost::multiprecision::abs;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

namespace {

Real horner(const Vector<Real>& c, const Real& x) {
    Real v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

Real horner_derivative(const Vector<Real>& c, const Real& x) {
    Real v = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) v = v * x + c[k] * k;
    return v;
}

}  // namespace

ExtractedAtoms atoms_from_polynomial(const Vector<Real>& coeffs, const Sequence<Real>& delta, const Real& tol) {
    if (delta.lo != 0) throw Error(ErrorCode::InvalidInput, "delta must start at index 0");
    const Vector<Complex> roots = polynomial_roots(coeffs);
    const int r = static_cast<int>(roots.size());
    if (r == 0) throw Error(ErrorCode::ExtractionFailed, "generating polynomial is constant");
    if (delta.hi() < r - 1) throw Error(ErrorCode::ExtractionFailed, "not enough moments for the Vandermonde system");
    Real scale = 0;
    for (const auto& z : roots) scale = (std::max)(scale, Real(sqrt(z.re * z.re + z.im * z.im)));
    if (scale == 0) throw Error(ErrorCode::ExtractionFailed, "all roots are zero");

    ExtractedAtoms out;
    for (const auto& z : roots) {
        if (abs(z.im) > tol * (std::max)(scale, Real(1)))
            throw Error(ErrorCode::ExtractionFailed, "complex root with imaginary part " + to_string(z.im, 6));
        Real x = z.re;
        const Real dg = horner_derivative(coeffs, x);
        if (dg != 0) x -= horner(coeffs, x) / dg;
        if (x == 0) throw Error(ErrorCode::ExtractionFailed, "zero root");
        out.x.push_back(x);
    }
    std::sort(out.x.begin(), out.x.end());
    for (int k = 1; k < r; ++k)
        if (abs(out.x[k] - out.x[k - 1]) <= tol * scale)
            throw Error(ErrorCode::ExtractionFailed, "repeated root near " + to_string(out.x[k], 12));

    Matrix<Real> v(r, r);
    Vector<Real> rhs(r);
    for (int i = 0; i < r; ++i) {
        Real p = 1;
        for (int j = 0; j < r; ++j) {
            v(j, i) = p;
            p *= out.x[i];
        }
        rhs[i] = delta[i];
    }
    auto nu = solve(v, rhs);
    if (!nu) throw Error(ErrorCode::ExtractionFailed, "singular Vandermonde system");
    out.nu = *nu;
    return out;
}

ExtractedAtoms extract_atoms(const Sequence<Real>& delta, int r, const Real& tol) {
    if (r < 1) throw Error(ErrorCode::ExtractionFailed, "rank must be positive");
    if (delta.lo != 0 || delta.hi() < 2 * r - 1) throw Error(ErrorCode::ExtractionFailed, "sequence too short for rank " + std::to_string(r));
    Matrix<Real> h(r, r);
    Vector<Real> rhs(r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) h(i, j) = delta[i + j];
        rhs[i] = delta[r + i];
    }
    auto w = solve(h, rhs);
    if (!w) throw Error(ErrorCode::ExtractionFailed, "leading Hankel block is singular");
    Vector<Real> g(r + 1);
    for (int i = 0; i < r; ++i) g[i] = -(*w)[i];
    g[r] = 1;
    return atoms_from_polynomial(g, delta, tol);
}

AtomicMeasure lift_to_curve(const ExtractedAtoms& atoms, const CurveSpec& curve, int n) {
    AtomicMeasure m;
    for (std::size_t k = 0; k < atoms.x.size(); ++k) {
        const Real& x = atoms.x[k];
        if (x == 0) throw Error(ErrorCode::ZeroAtom, "atom at x = 0 cannot be lifted");
        m.atoms.push_back({x, curve.y_at(x), Real(atoms.nu[k] * pow(x, 2 * n))});
    }
    return m;
}

Sequence<Real> flat_extension(const Sequence<Real>& gamma, const Real& x_star) {
    const Sequence<Real> delta = shift_to_ordinary(gamma);
    if ((delta.hi()) % 2) throw Error(ErrorCode::InvalidInput, "flat extension needs an odd-length sequence");
    const int k = delta.hi() / 2;
    Matrix<Real> h(k + 1, k + 1);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) h(i, j) = delta[i + j];
    // v(s) = (delta_{k+1}, ..., delta_{2k}, s); generating polynomial coefficients w(s) = H^{-1} v(s)
    Matrix<Real> rhs(k + 1, 2);
    for (int i = 0; i < k; ++i) rhs(i, 0) = delta[k + 1 + i];
    rhs(k, 1) = 1;
    auto sol = solve(h, rhs);
    if (!sol) throw Error(ErrorCode::ExtractionFailed, "Hankel block is singular; sequence is not positive definite");
    Real g0 = pow(x_star, k + 1), g1 = 0, p = 1;
    for (int i = 0; i <= k; ++i) {
        g0 -= (*sol)(i, 0) * p;
        g1 -= (*sol)(i, 1) * p;
        p *= x_star;
    }
    if (g1 == 0) throw Error(ErrorCode::ExtractionFailed, "pinned atom cannot be placed");
    const Real s = -g0 / g1;
    Sequence<Real> out = gamma;
    out.v.push_back(s);
    Real next = 0;
    for (int i = 0; i <= k; ++i) next += (i < k ? delta[k + 1 + i] : s) * ((*sol)(i, 0) + s * (*sol)(i, 1));
    out.v.push_back(next);
    return out;
}

AtomicMeasure recover_from_sequence(const Sequence<Real>& gamma, const CurveSpec& curve, int n, const Real& tol) {
    const Real extract_tol = sqrt(tol);
    const HankelView<Real> full = assemble_full(gamma);
    const int size = full.size();
    const int r = numeric_rank(full.data, tol);
    if (r < size) {
        if (r != numeric_rank(full.data.block(0, 0, size - 1, size - 1), tol) ||
            r != numeric_rank(full.data.block(1, 1, size - 1, size - 1), tol))
            throw Error(ErrorCode::ExtractionFailed, "completion is singular but not flat");
        return lift_to_curve(extract_atoms(shift_to_ordinary(gamma), r, extract_tol), curve, n);
    }
    // positive definite: add one atom beyond the support so the Hankel becomes flat
    const Sequence<Real> delta = shift_to_ordinary(gamma);
    const int k = delta.hi() / 2;
    Real radius = pow(abs(delta[2 * k] / delta[0]), Real(1) / (2 * k));
    Real x_star = 2 * radius + 1;
    std::string last_error;
    for (int attempt = 0; attempt < 2; ++attempt, x_star = -x_star) {
        try {
            ExtractedAtoms atoms = extract_atoms(shift_to_ordinary(flat_extension(gamma, x_star)), size, extract_tol);
            Real top = 0;
            for (const auto& x : atoms.x) top = (std::max)(top, Real(abs(x)));
            bool near_zero = false;
            for (const auto& x : atoms.x) near_zero = near_zero || abs(x) < Real(1e-8) * top;
            if (near_zero && attempt == 0) continue;
            return lift_to_curve(atoms, curve, n);
        } catch (const Error& e) {
            last_error = e.what();
        }
    }
    throw Error(ErrorCode::ExtractionFailed, "flat extension failed: " + last_error);
}

AtomicMeasure recover_from_relation(const Sequence<Real>& gamma, const KernelRelation<Real>& rel, const CurveSpec& curve,
                                    int n, const Real& tol) {
    return lift_to_curve(atoms_from_polynomial(rel.a, shift_to_ordinary(gamma), sqrt(tol)), curve, n);
}

VerifyReport verify_measure(const AtomicMeasure& measure, const MomentSequence2D& beta, const CurveSpec& curve,
                            const Real& tol, int rank_m) {
    VerifyReport rep;
    const int deg = beta.degree();
    rep.atom_count = static_cast<int>(measure.atoms.size());
    rep.rank_m = rank_m >= 0 ? rank_m : rank(moment_matrix(beta).data);

    for (std::size_t k = 0; k < measure.atoms.size(); ++k) {
        const Atom& a = measure.atoms[k];
        if (!(a.rho > 0)) {
            rep.positive_ok = false;
            rep.violations.push_back("atom " + std::to_string(k) + " has density " + to_string(a.rho, 8));
        }
        const Real scale = curve.residual_scale(a.x, a.y);
        const Real res = scale > 0 ? Real(abs(curve.residual(a.x, a.y)) / scale) : Real(0);
        rep.max_curve_residual = (std::max)(rep.max_curve_residual, res);
        if (res > tol) {
            rep.curve_ok = false;
            rep.violations.push_back("atom " + std::to_string(k) + " is off the curve by " + to_string(res, 4));
        }
    }

    // rho x^i y^j for all i + j <= deg
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) {
            Real sum = 0, mag = 0;
            for (const auto& a : measure.atoms) {
                Real t = a.rho * pow(a.x, i) * pow(a.y, j);
                sum += t;
                mag += abs(t);
            }
            const Real b = to_real(beta(i, j));
            const Real denom = (std::max)(mag, Real(abs(b)));
            const Real err = denom > 0 ? Real(abs(sum - b) / denom) : Real(0);
            rep.max_moment_error = (std::max)(rep.max_moment_error, err);
            if (err > tol && rep.moments_ok) {
                rep.moments_ok = false;
                rep.violations.push_back("moment (" + std::to_string(i) + "," + std::to_string(j) + ") off by " + to_string(err, 4));
            }
        }

    if (rep.atom_count < rep.rank_m) {
        rep.variety_ok = false;
        rep.violations.push_back(std::to_string(rep.atom_count) + " atoms < rank M(n) = " + std::to_string(rep.rank_m));
    }
    return rep;
}

AtomicMeasure drop_near_zero_atoms(const AtomicMeasure& measure, const Real& zero_tol, const Real& density_tol) {
    Real top = 0, mass = 0;
    for (const auto& a : measure.atoms) {
        top = (std::max)(top, Real(abs(a.x)));
        mass += abs(a.rho);
    }
    AtomicMeasure out;
    for (const auto& a : measure.atoms)
        if (!(abs(a.x) < zero_tol * top && abs(a.rho) < density_tol * mass)) out.atoms.push_back(a);
    return out;
}

}  // namespace tmc
