#pragma once

// Completion of the strong sequence for x*y = x^4 + q_3 x^3 + q_2 x^2 + q_1 x + q_0.
// Free moments t1 = gamma_{6n-3}, t2 = gamma_{6n-1}, t3 = gamma_{6n}; the Hankel
// exponents run over -n .. 3n.

#include "tmc/hankel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tmc {

enum class QuarticBranch {
    PureInterior,
    SingularI,
    SingularII,
    SingularIII,
    SingularIV,
    SingularV,
    NoMeasure,
    NoMeasureFound
};

const char* quartic_branch_name(QuarticBranch b);

/// Hankel restricted to exponents -n+1 .. 3n-2; parameter free. Throws WrongDegree unless m = 4.
Matrix<Rational> quartic_core(const StrongSequence& gamma);

/// F1(t1): exponents -n+1 .. 3n-1.
template <typename T>
Matrix<T> quartic_f1(const StrongSequence& gamma, const T& t1);

/// det F1(t1) = c2 t1^2 + c1 t1 + c0, interpolated from exact determinants at t1 = 0, 1, -1.
struct F1Quadratic {
    Rational c2, c1, c0;
    bool has_roots = false;
    Real lo, hi;
    std::optional<Rational> lo_exact, hi_exact;
};

F1Quadratic f1_quadratic(const StrongSequence& gamma);

struct QuarticSlacks {
    Real slack3;  // t3 minus its lower bound: F2 > 0 iff slack3 > 0
    Real slack5;  // gamma_{-2n} minus its lower bound: A > 0 iff slack3 > 0 and slack5 > 0
};

/// Requires F1(t1) invertible.
QuarticSlacks quartic_slacks(const StrongSequence& gamma, const Real& t1, const Real& t2, const Real& t3);

/// Generalized Schur complements (any solution of the bordered systems). Nothing if a border leaves the range.
struct ExactSlacks {
    Rational slack3;
    Rational slack5;
};
std::optional<ExactSlacks> quartic_slacks_exact(const StrongSequence& gamma, const Rational& t1, const Rational& t2,
                                                const Rational& t3);

struct QuarticOptions {
    Real tol;
    int search_iters = 200;
    int grid = 32;
};

struct QuarticCertificate {
    QuarticBranch branch = QuarticBranch::NoMeasureFound;
    std::string reason;
    bool core_pd = false;
    std::optional<F1Quadratic> quadratic;
    Real t1, t2, t3;
    Real search_value;  // best max_{t2} of the (ineq-5) slack found by the search
    Real min_eig;
    std::optional<QuarticSlacks> slacks;
    std::vector<std::string> attempts;
};

struct QuarticResult {
    QuarticCertificate cert;
    std::optional<Sequence<Real>> completed;
    std::optional<Sequence<Rational>> completed_exact;
    std::optional<KernelRelation<Real>> relation;  // set by the singular branches
};

/// Positive definite completion by search over t1 in the root interval of det F1, with (t2, t3)
/// chosen in closed form. Requires a positive definite core and real roots; otherwise the
/// certificate says why. Branch PureInterior on success, NoMeasureFound otherwise.
QuarticResult quartic_pure_solve(const StrongSequence& gamma, const QuarticOptions& opts);

/// Singular branches (i) .. (v) in order; (iv) and (v) start from the maximizer found by `pure`.
QuarticResult quartic_singular_solve(const StrongSequence& gamma, const QuarticOptions& opts,
                                     const QuarticResult* pure = nullptr);

/// Pure search first, then the singular branches.
QuarticResult quartic_solve(const StrongSequence& gamma, const QuarticOptions& opts);

}  // namespace tmc
