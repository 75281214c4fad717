#include "tmc/curve.hpp"

#include "tmc/errors.hpp"

namespace tmc {

using boost::multiprecision::abs;

void CurveSpec::validate() const {
    if (m < 2) throw Error(ErrorCode::InvalidCurve, "m must be at least 2");
    if (static_cast<int>(q.size()) != m + 1) throw Error(ErrorCode::InvalidCurve, "expected m+1 coefficients q_0..q_m");
    if (q[m] != 1) throw Error(ErrorCode::InvalidCurve, "q_m must be 1");
    if (q[0] == 0) throw Error(ErrorCode::InvalidCurve, "q_0 must be nonzero");
}

Rational CurveSpec::y_at(const Rational& x) const {
    if (x == 0) throw Error(ErrorCode::ZeroAtom, "curve point above x = 0 is undefined");
    // Horner on sum_{s>=1} q_s x^(s-1), then q_0 / x
    Rational acc = 0;
    for (int s = m; s >= 1; --s) acc = acc * x + q[s];
    return acc + q[0] / x;
}

Real CurveSpec::y_at(const Real& x) const {
    if (x == 0) throw Error(ErrorCode::ZeroAtom, "curve point above x = 0 is undefined");
    Real acc = 0;
    for (int s = m; s >= 1; --s) acc = acc * x + to_real(q[s]);
    return acc + to_real(q[0]) / x;
}

Real CurveSpec::residual(const Real& x, const Real& y) const {
    Real acc = 0;
    for (int s = m; s >= 0; --s) acc = acc * x + to_real(q[s]);
    return x * y - acc;
}

Real CurveSpec::residual_scale(const Real& x, const Real& y) const {
    Real s = abs(x * y);
    Real xp = 1;
    for (int k = 0; k <= m; ++k) {
        s += abs(to_real(q[k]) * xp);
        xp *= x;
    }
    return s;
}

Polynomial2 CurveSpec::relation() const {
    Polynomial2 p = Polynomial2::monomial(1, 1);
    for (int s = 0; s <= m; ++s) p.add_term({s, 0}, -q[s]);
    return p;
}

}  // namespace tmc
