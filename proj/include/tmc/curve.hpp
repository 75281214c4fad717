#pragma once

#include "tmc/polynomial.hpp"

#include <vector>

namespace tmc {

/// The curve x*y = x^m + q_{m-1} x^{m-1} + ... + q_0, stored as q = (q_0, ..., q_m) with q_m = 1.
struct CurveSpec {
    int m = 0;
    std::vector<Rational> q;

    /// Throws InvalidCurve unless m >= 2, q has m+1 entries, q_m = 1 and q_0 != 0.
    void validate() const;

    /// y = sum_s q_s x^(s-1), the curve point above x != 0.
    Rational y_at(const Rational& x) const;
    Real y_at(const Real& x) const;
    /// x*y - sum_s q_s x^s
    Real residual(const Real& x, const Real& y) const;
    /// |x*y| + sum_s |q_s x^s|, the scale for residual().
    Real residual_scale(const Real& x, const Real& y) const;
    /// p(x, y) = x*y - sum_s q_s x^s
    Polynomial2 relation() const;
};

}  // namespace tmc
