#include "tmc/polynomial.hpp"

#include "tmc/errors.hpp"

#include <sstream>

namespace tmc {

std::vector<Monomial> degree_lex_monomials(int n) {
    std::vector<Monomial> out;
    for (int d = 0; d <= n; ++d)
        for (int j = 0; j <= d; ++j) out.push_back({d - j, j});
    return out;
}

int degree_lex_index(const Monomial& mono) {
    int d = mono.degree();
    return d * (d + 1) / 2 + mono.j;
}

Polynomial2::Polynomial2(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

Polynomial2 Polynomial2::monomial(int i, int j, const Rational& c) {
    Polynomial2 p;
    p.add_term({i, j}, c);
    return p;
}

Rational Polynomial2::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial2::add_term(const Monomial& mono, const Rational& c) {
    if (mono.i < 0 || mono.j < 0) throw Error(ErrorCode::InvalidInput, "negative exponent in polynomial");
    if (c == 0) return;
    Rational& slot = terms_[mono];
    slot += c;
    if (slot == 0) terms_.erase(mono);
}

int Polynomial2::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial2& Polynomial2::operator-=(const Polynomial2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial2& Polynomial2::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b) {
    Polynomial2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return r;
}

Polynomial2 pow(const Polynomial2& p, int e) {
    Polynomial2 r(1);
    for (int k = 0; k < e; ++k) r = r * p;
    return r;
}

Rational Polynomial2::evaluate(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (const auto& [m, c] : terms_) s += c * tmc::pow(x, m.i) * tmc::pow(y, m.j);
    return s;
}

Real Polynomial2::evaluate(const Real& x, const Real& y) const {
    Real s = 0;
    for (const auto& [m, c] : terms_) s += to_real(c) * boost::multiprecision::pow(x, m.i) * boost::multiprecision::pow(y, m.j);
    return s;
}

std::string Polynomial2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = tmc::abs(c);
        bool unit = a == 1 && m.degree() > 0;
        if (!unit) os << tmc::to_string(a);
        if (m.i) os << (unit ? "" : "*") << "x" << (m.i > 1 ? "^" + std::to_string(m.i) : "");
        if (m.j) os << ((unit && !m.i) ? "" : "*") << "y" << (m.j > 1 ? "^" + std::to_string(m.j) : "");
    }
    return os.str();
}

}  // namespace tmc
