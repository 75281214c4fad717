#include "tmc/linalg.hpp"

#include <algorithm>
#include <utility>

namespace tmc {

using boost::multiprecision::abs;
using boost::multiprecision::sqrt;

Real default_tolerance() {
    Real t = 1;
    return ldexp(t, -static_cast<int>(real_precision_bits() / 2));
}

Vector<Real> equilibration(const Matrix<Real>& a) {
    Vector<Real> d(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Real v = abs(a(i, i));
        d[i] = v > 0 ? Real(1 / sqrt(v)) : Real(1);
    }
    return d;
}

Matrix<Real> equilibrate(const Matrix<Real>& a, const Vector<Real>& d) {
    Matrix<Real> s(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s(i, j) = d[i] * a(i, j) * d[j];
    return s;
}

PsdReport psd_status(const Matrix<Real>& a, const Real& tol) {
    PsdReport rep;
    if (a.rows() == 0) {
        rep.cls = PsdClass::PD;
        rep.min_eigenvalue = 0;
        return rep;
    }
    Vector<Real> ev = symmetric_eigenvalues(equilibrate(a, equilibration(a)));
    rep.min_eigenvalue = ev.front();
    Real top = 0;
    for (const auto& e : ev) top = (std::max)(top, Real(abs(e)));
    for (const auto& e : ev)
        if (abs(e) > tol * top) ++rep.rank;
    if (rep.min_eigenvalue > tol)
        rep.cls = PsdClass::PD;
    else if (rep.min_eigenvalue >= -tol)
        rep.cls = PsdClass::PSD;
    else
        rep.cls = PsdClass::Indefinite;
    return rep;
}

int numeric_rank(const Matrix<Real>& a, const Real& tol) {
    if (a.rows() == 0) return 0;
    Vector<Real> ev = symmetric_eigenvalues(equilibrate(a, equilibration(a)));
    Real top = 0;
    for (const auto& e : ev) top = (std::max)(top, Real(abs(e)));
    if (top == 0) return 0;
    int r = 0;
    for (const auto& e : ev)
        if (abs(e) > tol * top) ++r;
    return r;
}

Vector<Real> null_vector(const Matrix<Real>& a) {
    Vector<Real> d = equilibration(a);
    Vector<Real> values;
    Matrix<Real> vectors;
    symmetric_eigen(equilibrate(a, d), values, vectors);
    int best = 0;
    for (int i = 1; i < static_cast<int>(values.size()); ++i)
        if (abs(values[i]) < abs(values[best])) best = i;
    Vector<Real> v(a.rows());
    Real top = 0;
    for (int i = 0; i < a.rows(); ++i) {
        v[i] = d[i] * vectors(i, best);
        top = (std::max)(top, Real(abs(v[i])));
    }
    for (auto& x : v) x /= top;
    return v;
}

Matrix<Real> pseudo_inverse_symmetric(const Matrix<Real>& a, const Real& tol) {
    Vector<Real> values;
    Matrix<Real> vectors;
    symmetric_eigen(a, values, vectors);
    Real top = 0;
    for (const auto& e : values) top = (std::max)(top, Real(abs(e)));
    const int n = a.rows();
    Matrix<Real> p(n, n);
    for (int k = 0; k < n; ++k) {
        if (abs(values[k]) <= tol * top) continue;
        Real inv = 1 / values[k];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) p(i, j) += vectors(i, k) * inv * vectors(j, k);
    }
    return p;
}

std::optional<Matrix<Real>> solve(const Matrix<Real>& a, const Matrix<Real>& b) {
    if (!a.square() || b.rows() != a.rows()) throw Error(ErrorCode::RangeError, "solve: shape mismatch");
    const int n = a.rows(), m = b.cols();
    Matrix<Real> lu = a;
    Matrix<Real> x = b;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (abs(lu(i, k)) > abs(lu(p, k))) p = i;
        if (lu(p, k) == 0) return std::nullopt;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(p, j), lu(k, j));
            for (int j = 0; j < m; ++j) std::swap(x(p, j), x(k, j));
        }
        for (int i = k + 1; i < n; ++i) {
            if (lu(i, k) == 0) continue;
            Real f = lu(i, k) / lu(k, k);
            for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            for (int j = 0; j < m; ++j) x(i, j) -= f * x(k, j);
        }
    }
    for (int k = n - 1; k >= 0; --k)
        for (int j = 0; j < m; ++j) {
            Real s = x(k, j);
            for (int i = k + 1; i < n; ++i) s -= lu(k, i) * x(i, j);
            x(k, j) = s / lu(k, k);
        }
    return x;
}

std::optional<Vector<Real>> solve(const Matrix<Real>& a, const Vector<Real>& b) {
    Matrix<Real> rhs(static_cast<int>(b.size()), 1);
    for (int i = 0; i < rhs.rows(); ++i) rhs(i, 0) = b[i];
    auto x = solve(a, rhs);
    if (!x) return std::nullopt;
    return x->column(0);
}

}  // namespace tmc
