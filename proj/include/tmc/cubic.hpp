#pragma once

// Completion of the strong sequence for x*y = x^3 + q_2 x^2 + q_1 x + q_0.
// The single free moment is t = gamma_{4n}; gamma_{-2n} = D - q_0^{-2n} t.

#include "tmc/hankel.hpp"

#include <optional>
#include <string>

namespace tmc {

struct CubicBlocks {
    int n = 0;
    Matrix<Rational> a;  // Hankel over exponents -n+1 .. 2n-1
    Vector<Rational> b;  // gamma_{-2n+1} .. gamma_{n-1}
    Vector<Rational> c;  // gamma_{n+1} .. gamma_{4n-1}
    Rational gamma_n;
    Rational d;       // constant part of gamma_{-2n}
    Rational q0_2n;   // q_0^{2n}
};

/// Throws WrongDegree unless m = 3.
CubicBlocks cubic_blocks(const StrongSequence& gamma);

template <typename T>
struct CubicQuantities {
    T t_min;
    T t_max;
    T e;  // b'A^{-1}c c'A^{-1}b - 2 b'A^{-1}c gamma_n + gamma_n^2
};

/// Requires a invertible; throws NotPure otherwise.
template <typename T>
CubicQuantities<T> cubic_quantities(const Matrix<T>& a, const Vector<T>& b, const Vector<T>& c, const T& gamma_n,
                                    const T& d, const T& q0_2n);

enum class CubicBranch { PurePD, PureFlat, Singular, NoMeasure };
enum class RootChoice { Low, High, Interior };

const char* cubic_branch_name(CubicBranch b);

/// beta_{i,j} = t + shift, for the moment just outside the truncation that carries t.
struct BetaLink {
    int i = 0;
    int j = 0;
    Rational shift;
};

BetaLink cubic_beta_link(const StrongSequence& gamma);

struct CubicCertificate {
    CubicBranch branch = CubicBranch::NoMeasure;
    std::string reason;
    Rational d;
    std::optional<CubicQuantities<Rational>> quantities;
    Vector<Real> w_roots;
    Real window_lo, window_hi;  // PD window for t
    Real chosen_t;
    std::optional<Rational> chosen_t_exact;
    int rank = 0;
    BetaLink link;
};

struct CubicResult {
    CubicCertificate cert;
    std::optional<Sequence<Real>> completed;
    std::optional<Sequence<Rational>> completed_exact;
};

/// Pure case. Throws NotPure unless the central Hankel is positive definite.
CubicResult cubic_pure_solve(const StrongSequence& gamma, RootChoice choice, const Real& tol);
/// Singular case, rank M(n) < 3n: t0 = c' w for any solution of A w = c.
CubicResult cubic_singular_solve(const StrongSequence& gamma);

}  // namespace tmc
