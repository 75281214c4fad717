#include "tmc/moments.hpp"

#include "tmc/errors.hpp"
#include "tmc/linalg.hpp"

namespace tmc {

MomentSequence2D::MomentSequence2D(int degree) : degree_(degree) {
    if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
    values_.assign(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2), Rational(0));
}

int MomentSequence2D::index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_)
        throw Error(ErrorCode::RangeError, "moment index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return degree_lex_index({i, j});
}

const Rational& MomentSequence2D::operator()(int i, int j) const { return values_[index(i, j)]; }

Rational& MomentSequence2D::operator()(int i, int j) { return values_[index(i, j)]; }

void MomentSequence2D::validate() const {
    if (degree_ < 2 || degree_ % 2) throw Error(ErrorCode::InvalidInput, "degree must be even and at least 2");
    if ((*this)(0, 0) <= 0) throw Error(ErrorCode::InvalidInput, "beta_{0,0} must be positive");
}

AtomicMeasure to_real(const RationalMeasure& m) {
    AtomicMeasure out;
    for (const auto& a : m) out.atoms.push_back({tmc::to_real(a.x), tmc::to_real(a.y), tmc::to_real(a.rho)});
    return out;
}

MomentSequence2D moments_from_measure(const RationalMeasure& measure, int degree) {
    MomentSequence2D beta(degree);
    for (const auto& atom : measure) {
        if (atom.rho <= 0) throw Error(ErrorCode::InvalidMeasure, "density must be positive");
        Rational xi = atom.rho;
        for (int i = 0; i <= degree; ++i) {
            Rational v = xi;
            for (int j = 0; i + j <= degree; ++j) {
                beta(i, j) += v;
                v *= atom.y;
            }
            xi *= atom.x;
        }
    }
    return beta;
}

Real measure_moment(const AtomicMeasure& measure, int i, int j) {
    Real s = 0;
    for (const auto& a : measure.atoms) s += a.rho * pow(a.x, i) * pow(a.y, j);
    return s;
}

Rational riesz(const MomentSequence2D& beta, const Polynomial2& poly) {
    if (poly.degree() > beta.degree())
        throw Error(ErrorCode::DegreeTooHigh, "polynomial degree exceeds the moment degree");
    Rational s = 0;
    for (const auto& [m, c] : poly.terms()) s += c * beta(m.i, m.j);
    return s;
}

MomentMatrix moment_matrix(const MomentSequence2D& beta) {
    MomentMatrix mm;
    mm.n = beta.n();
    mm.columns = degree_lex_monomials(mm.n);
    const int k = static_cast<int>(mm.columns.size());
    mm.data = Matrix<Rational>(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            mm.data(r, c) = beta(mm.columns[r].i + mm.columns[c].i, mm.columns[r].j + mm.columns[c].j);
    return mm;
}

Vector<Rational> column_vector(const MomentMatrix& m, const Polynomial2& poly) {
    if (poly.degree() > m.n) throw Error(ErrorCode::DegreeTooHigh, "relation degree exceeds n");
    Vector<Rational> v(m.columns.size(), Rational(0));
    for (const auto& [mono, c] : poly.terms()) v[degree_lex_index(mono)] = c;
    return v;
}

Polynomial2 column_polynomial(const MomentMatrix& m, const Vector<Rational>& coeffs) {
    Polynomial2 p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(m.columns[k], coeffs[k]);
    return p;
}

bool is_column_relation(const MomentMatrix& m, const Polynomial2& p) {
    Vector<Rational> image = m.data * column_vector(m, p);
    for (const auto& v : image)
        if (v != 0) return false;
    return true;
}

RgReport is_recursively_generated(const MomentMatrix& m) {
    RgReport rep;
    for (const auto& kv : kernel_basis(m.data)) {
        Polynomial2 p = column_polynomial(m, kv);
        const int room = m.n - p.degree();
        for (const auto& q : degree_lex_monomials(room)) {
            if (q.degree() == 0) continue;
            if (!is_column_relation(m, p * Polynomial2::monomial(q.i, q.j))) {
                rep.ok = false;
                rep.relation = p;
                rep.multiplier = q;
                return rep;
            }
        }
    }
    return rep;
}

bool is_p_pure(const MomentMatrix& m, const CurveSpec& curve) {
    curve.validate();
    if (m.n < curve.m) throw Error(ErrorCode::CurveNotRepresentable, "n < m: the curve relation does not fit in M(n)");
    const Polynomial2 p = curve.relation();
    const int room = m.n - curve.m;
    const int expected = (room + 1) * (room + 2) / 2;
    const int kernel_dim = m.data.rows() - rank(m.data);
    if (kernel_dim != expected) return false;
    for (const auto& q : degree_lex_monomials(room))
        if (!is_column_relation(m, p * Polynomial2::monomial(q.i, q.j))) return false;
    return true;
}

AltMap AltMap::inverse() const {
    Rational det = determinant();
    if (det == 0) throw Error(ErrorCode::SingularAlt, "bf - ce = 0");
    AltMap inv;
    inv.a = (c * d - f * a) / det;
    inv.b = f / det;
    inv.c = -c / det;
    inv.d = (e * a - b * d) / det;
    inv.e = -e / det;
    inv.f = b / det;
    return inv;
}

MomentSequence2D apply_alt(const MomentSequence2D& beta, const AltMap& map) {
    if (map.determinant() == 0) throw Error(ErrorCode::SingularAlt, "bf - ce = 0");
    const int deg = beta.degree();
    Polynomial2 psi1 = Polynomial2(map.a) + Polynomial2::monomial(1, 0, map.b) + Polynomial2::monomial(0, 1, map.c);
    Polynomial2 psi2 = Polynomial2(map.d) + Polynomial2::monomial(1, 0, map.e) + Polynomial2::monomial(0, 1, map.f);
    std::vector<Polynomial2> p1(deg + 1), p2(deg + 1);
    p1[0] = p2[0] = Polynomial2(1);
    for (int k = 1; k <= deg; ++k) {
        p1[k] = p1[k - 1] * psi1;
        p2[k] = p2[k - 1] * psi2;
    }
    MomentSequence2D out(deg);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) out(i, j) = riesz(beta, p1[i] * p2[j]);
    return out;
}

AltMap normalizing_alt(const Rational& qm, const Rational& alpha) {
    if (qm == 0) throw Error(ErrorCode::SingularAlt, "leading coefficient must be nonzero");
    return {-alpha, 1, 0, 0, 0, 1 / qm};
}

CurveSpec normalized_curve(const std::vector<Rational>& coefficients, const Rational& alpha) {
    const int m = static_cast<int>(coefficients.size()) - 1;
    if (m < 2) throw Error(ErrorCode::InvalidCurve, "need at least degree 2");
    const Rational qm = coefficients[m];
    if (qm == 0) throw Error(ErrorCode::InvalidCurve, "leading coefficient must be nonzero");
    // u v = (u + alpha)^m + r(u + alpha) / qm, expanded in powers of u
    CurveSpec out;
    out.m = m;
    out.q.assign(m + 1, Rational(0));
    for (int s = 0; s <= m; ++s) {
        Rational c = s == m ? Rational(1) : Rational(coefficients[s] / qm);
        if (c == 0) continue;
        // (u + alpha)^s = sum_k binom(s,k) alpha^(s-k) u^k
        Integer binom = 1;
        for (int k = 0; k <= s; ++k) {
            out.q[k] += c * Rational(binom) * tmc::pow(alpha, s - k);
            binom = binom * (s - k) / (k + 1);
        }
    }
    out.validate();
    return out;
}

}  // namespace tmc
