#pragma once

// Bivariate truncated moment sequences, moment matrices and the structural
// tests used before solving.

#include "tmc/curve.hpp"
#include "tmc/matrix.hpp"
#include "tmc/polynomial.hpp"

#include <optional>
#include <vector>

namespace tmc {

/// beta_{i,j} for i, j >= 0, i + j <= degree.
class MomentSequence2D {
public:
    MomentSequence2D() = default;
    explicit MomentSequence2D(int degree);

    int degree() const { return degree_; }
    int n() const { return degree_ / 2; }

    const Rational& operator()(int i, int j) const;
    Rational& operator()(int i, int j);

    /// Throws InvalidInput unless the degree is even and >= 2 and beta_{0,0} > 0.
    void validate() const;

    friend bool operator==(const MomentSequence2D& a, const MomentSequence2D& b) {
        return a.degree_ == b.degree_ && a.values_ == b.values_;
    }

private:
    int index(int i, int j) const;

    int degree_ = 0;
    std::vector<Rational> values_;
};

struct RationalAtom {
    Rational x, y, rho;
};
using RationalMeasure = std::vector<RationalAtom>;

struct Atom {
    Real x, y, rho;
};

struct AtomicMeasure {
    std::vector<Atom> atoms;
};

AtomicMeasure to_real(const RationalMeasure& m);

/// Exact moments of a finitely atomic measure. Throws InvalidMeasure on rho <= 0.
MomentSequence2D moments_from_measure(const RationalMeasure& measure, int degree);
/// sum rho x^i y^j in working precision; no positivity requirement.
Real measure_moment(const AtomicMeasure& measure, int i, int j);

/// Lambda_beta(poly). Throws DegreeTooHigh when deg poly > degree.
Rational riesz(const MomentSequence2D& beta, const Polynomial2& poly);

struct MomentMatrix {
    int n = 0;
    std::vector<Monomial> columns;
    Matrix<Rational> data;
};

MomentMatrix moment_matrix(const MomentSequence2D& beta);

/// Coefficient vector of poly in the column basis of M(n).
Vector<Rational> column_vector(const MomentMatrix& m, const Polynomial2& poly);
Polynomial2 column_polynomial(const MomentMatrix& m, const Vector<Rational>& coeffs);
/// True when p(X, Y) = 0 in the column space of M.
bool is_column_relation(const MomentMatrix& m, const Polynomial2& p);

struct RgReport {
    bool ok = true;
    Polynomial2 relation;  // violating relation p
    Monomial multiplier;   // q with (p q)(X, Y) != 0
};

/// Checks that every kernel relation p survives multiplication by monomials q with deg(pq) <= n.
/// Decisions are exact since M is rational.
RgReport is_recursively_generated(const MomentMatrix& m);

/// True when the kernel of M is exactly spanned by x^i y^j p, i + j <= n - m.
bool is_p_pure(const MomentMatrix& m, const CurveSpec& curve);

/// (x, y) -> (a + b x + c y, d + e x + f y)
struct AltMap {
    Rational a, b, c, d, e, f;

    static AltMap identity() { return {0, 1, 0, 0, 0, 1}; }
    Rational determinant() const { return b * f - c * e; }
    AltMap inverse() const;
};

/// beta~_{i,j} = Lambda_beta(Psi_1^i Psi_2^j). Throws SingularAlt when bf - ce = 0.
MomentSequence2D apply_alt(const MomentSequence2D& beta, const AltMap& map);

/// For the curve x*y = qm x^m + r(x) + alpha*y, with coefficients (r_0, ..., r_{m-1}, qm):
/// the map (x - alpha, y / qm) and the monic, alpha-free curve it lands on.
AltMap normalizing_alt(const Rational& qm, const Rational& alpha);
CurveSpec normalized_curve(const std::vector<Rational>& coefficients, const Rational& alpha);

}  // namespace tmc
