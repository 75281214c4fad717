// The only translation unit that instantiates Eigen on Real; it is slow to compile.

#include "tmc/eigen_real.hpp"
#include "tmc/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace tmc {

namespace {

using EMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

EMatrix to_eigen(const Matrix<Real>& a) {
    EMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return m;
}

}  // namespace

Vector<Real> symmetric_eigenvalues(const Matrix<Real>& a) {
    if (a.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<EMatrix> es(to_eigen(a), Eigen::EigenvaluesOnly);
    Vector<Real> v(a.rows());
    for (int i = 0; i < a.rows(); ++i) v[i] = es.eigenvalues()(i);
    return v;
}

void symmetric_eigen(const Matrix<Real>& a, Vector<Real>& values, Matrix<Real>& vectors) {
    const int n = a.rows();
    values.assign(n, Real(0));
    vectors = Matrix<Real>(n, n);
    if (n == 0) return;
    Eigen::SelfAdjointEigenSolver<EMatrix> es(to_eigen(a));
    for (int i = 0; i < n; ++i) {
        values[i] = es.eigenvalues()(i);
        for (int j = 0; j < n; ++j) vectors(j, i) = es.eigenvectors()(j, i);
    }
}

Vector<Complex> polynomial_roots(const Vector<Real>& coeffs) {
    int d = static_cast<int>(coeffs.size()) - 1;
    while (d > 0 && coeffs[d] == 0) --d;
    if (d <= 0) return {};
    if (d == 1) return {Complex{Real(-coeffs[0] / coeffs[1]), Real(0)}};
    EMatrix c = EMatrix::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -coeffs[i] / coeffs[d];
    Eigen::EigenSolver<EMatrix> es(c, false);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::ExtractionFailed, "companion eigenvalues did not converge");
    Vector<Complex> roots;
    roots.reserve(d);
    for (int i = 0; i < d; ++i) roots.push_back(Complex{es.eigenvalues()(i).real(), es.eigenvalues()(i).imag()});
    return roots;
}

}  // namespace tmc
