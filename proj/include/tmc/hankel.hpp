#pragma once

// Hankel matrices of strong sequences, flatness and Schur-complement checks,
// and propagation of column relations through the recurrence they imply.

#include "tmc/linalg.hpp"
#include "tmc/reduction.hpp"

#include <map>
#include <string>

namespace tmc {

/// Columns (and rows) T^lo ... T^hi; entry (i, j) = g_{lo+i + lo+j}.
template <typename T>
struct HankelView {
    int lo = 0;
    int hi = 0;
    Matrix<T> data;

    int size() const { return hi - lo + 1; }
};

/// Throws RangeError when 2*lo or 2*hi fall outside the sequence.
template <typename T>
HankelView<T> assemble(const Sequence<T>& g, int lo, int hi) {
    if (hi < lo) throw Error(ErrorCode::RangeError, "empty Hankel range");
    if (2 * lo < g.lo || 2 * hi > g.hi())
        throw Error(ErrorCode::RangeError, "Hankel exponents [" + std::to_string(lo) + "," + std::to_string(hi) +
                                               "] need entries outside [" + std::to_string(g.lo) + "," + std::to_string(g.hi()) + "]");
    HankelView<T> h{lo, hi, Matrix<T>(hi - lo + 1, hi - lo + 1)};
    for (int i = 0; i < h.size(); ++i)
        for (int j = 0; j < h.size(); ++j) h.data(i, j) = g[2 * lo + i + j];
    return h;
}

/// Exponent range of the full Hankel of a sequence: [lo/2, hi/2].
template <typename T>
HankelView<T> assemble_full(const Sequence<T>& g) {
    return assemble(g, g.lo / 2, g.hi() / 2);
}

/// rank A = rank of A without its last exponent = rank of A without its first exponent.
/// Throws NotPSD when A is not PSD.
bool flat_rank_test(const Sequence<Rational>& g);
bool flat_rank_test(const Sequence<Real>& g, const Real& tol);

enum class SchurClass { NotPSD, PSD, Flat };

const char* schur_class_name(SchurClass c);

/// Classifies [[A, B], [B^T, C]] through the generalized Schur complement C - B^T A^+ B.
SchurClass schur_extension_check(const Matrix<Real>& a, const Matrix<Real>& b, const Matrix<Real>& c, const Real& tol);

/// sum_{i=i1}^{i2} a_i T^i = 0
template <typename T>
struct KernelRelation {
    int i1 = 0;
    int i2 = 0;
    Vector<T> a;

    const T& coefficient(int i) const { return a.at(static_cast<std::size_t>(i - i1)); }
};

/// Drops leading and trailing coefficients with |a_i| <= tol * max|a|.
template <typename T>
KernelRelation<T> trim(const KernelRelation<T>& rel, const T& tol);

template <typename T>
struct PropagationResult {
    bool consistent = false;
    std::string reason;
    std::map<int, T> assignment;
    Sequence<T> sequence;
    Real max_residual = 0;
};

/// Enforces sum_i a_i gamma_{i+u} = 0 for every shift u keeping i1+u and i2+u inside the sequence,
/// solving the unknown parameters one equation at a time. `known` fixes some parameters up front.
/// Residuals are compared against tol * sum_i |a_i gamma_{i+u}| (exact zero for Rational).
template <typename T>
PropagationResult<T> propagate_relation(const StrongSequence& gamma, const KernelRelation<T>& rel,
                                        const std::map<int, T>& known, const T& tol);

}  // namespace tmc
