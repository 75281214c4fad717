#pragma once

#include "tmc/numeric.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace tmc {

/// x^i y^j
struct Monomial {
    int i = 0;
    int j = 0;
    int degree() const { return i + j; }
    auto operator<=>(const Monomial&) const = default;
};

/// Degree-lexicographic order: 1, x, y, x^2, xy, y^2, ..., y^n.
std::vector<Monomial> degree_lex_monomials(int n);
/// Position of a monomial in degree_lex_monomials.
int degree_lex_index(const Monomial& mono);

/// Bivariate polynomial with rational coefficients; zero terms are not stored.
class Polynomial2 {
public:
    Polynomial2() = default;
    Polynomial2(const Rational& c);

    static Polynomial2 monomial(int i, int j, const Rational& c = 1);
    static Polynomial2 x() { return monomial(1, 0); }
    static Polynomial2 y() { return monomial(0, 1); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const Monomial& mono) const;
    void add_term(const Monomial& mono, const Rational& c);
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return terms_.empty(); }

    Polynomial2& operator+=(const Polynomial2& o);
    Polynomial2& operator-=(const Polynomial2& o);
    Polynomial2& operator*=(const Rational& c);

    friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) { return a += b; }
    friend Polynomial2 operator-(Polynomial2 a, const Polynomial2& b) { return a -= b; }
    friend Polynomial2 operator*(Polynomial2 a, const Rational& c) { return a *= c; }
    friend Polynomial2 operator*(const Rational& c, Polynomial2 a) { return a *= c; }
    friend Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b);
    friend bool operator==(const Polynomial2& a, const Polynomial2& b) { return a.terms_ == b.terms_; }

    Rational evaluate(const Rational& x, const Rational& y) const;
    Real evaluate(const Real& x, const Real& y) const;

    std::string to_string() const;

private:
    std::map<Monomial, Rational> terms_;
};

Polynomial2 pow(const Polynomial2& p, int e);

}  // namespace tmc
