#pragma once

// Dense linear algebra over exact rationals and over Real.
//
// Rational routines are decision procedures: rank, kernels and PSD tests are
// exact. Real routines equilibrate first (D A D with D_ii = |A_ii|^{-1/2}) so
// that tolerances act on a scale-free matrix.

#include "tmc/matrix.hpp"

#include <optional>

namespace tmc {

enum class PsdClass { PD, PSD, Indefinite };

const char* psd_class_name(PsdClass c);

struct PsdReport {
    PsdClass cls = PsdClass::Indefinite;
    Real min_eigenvalue;
    int rank = 0;
};

// ---- exact ----

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
int rank(const Matrix<Rational>& a);
Rational determinant(const Matrix<Rational>& a);
/// Basis of the right kernel, one vector per free column of the reduced echelon form.
std::vector<Vector<Rational>> kernel_basis(const Matrix<Rational>& a);
/// Some solution of a x = b (free variables set to zero), or nothing if inconsistent.
std::optional<Vector<Rational>> solve_any(const Matrix<Rational>& a, const Vector<Rational>& b);
/// Symmetric PSD decision by diagonal-pivoted LDL^T. `min_eigenvalue` is filled numerically.
PsdReport psd_status(const Matrix<Rational>& a);

// ---- Real ----

struct Complex {
    Real re;
    Real im;
};

Vector<Real> equilibration(const Matrix<Real>& a);
Matrix<Real> equilibrate(const Matrix<Real>& a, const Vector<Real>& d);

/// Ascending eigenvalues of a symmetric matrix.
Vector<Real> symmetric_eigenvalues(const Matrix<Real>& a);
/// Eigen-decomposition of a symmetric matrix; eigenvectors are the columns of `vectors`.
void symmetric_eigen(const Matrix<Real>& a, Vector<Real>& values, Matrix<Real>& vectors);

/// Classification by the smallest eigenvalue of the equilibrated matrix.
PsdReport psd_status(const Matrix<Real>& a, const Real& tol);
int numeric_rank(const Matrix<Real>& a, const Real& tol);
/// Unit-scale vector spanning the (numerically) smallest eigen-direction of a symmetric matrix.
Vector<Real> null_vector(const Matrix<Real>& a);
Matrix<Real> pseudo_inverse_symmetric(const Matrix<Real>& a, const Real& tol);

/// Gaussian elimination with partial pivoting; nothing if a pivot is exactly zero.
std::optional<Vector<Real>> solve(const Matrix<Real>& a, const Vector<Real>& b);
std::optional<Matrix<Real>> solve(const Matrix<Real>& a, const Matrix<Real>& b);

/// Roots of c_0 + c_1 x + ... + c_d x^d via the companion matrix, c_d != 0.
Vector<Complex> polynomial_roots(const Vector<Real>& coeffs);

/// Default tolerance at the current precision: 2^(-bits/2).
Real default_tolerance();

}  // namespace tmc
