#pragma once

// Scalar types shared by every module: exact rationals (GMP) and
// variable-precision binary floats (MPFR through Boost.Multiprecision).

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <limits>
#include <string>
#include <string_view>

namespace tmc {

using Rational = mpq_class;
using Integer = mpz_class;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Working precision of newly created Real values, in bits.
unsigned real_precision_bits();
void set_real_precision_bits(unsigned bits);

/// Sets the Real working precision for the lifetime of the scope.
///
/// MPFR's default precision is process-wide; batch callers set it once
/// before spawning workers.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_bits_;
};

Real to_real(const Rational& q);
Real to_real(const Real& x);
double to_double(const Rational& q);
double to_double(const Real& x);

/// Parses "p/q", an integer, or a decimal such as "-1.25e3" into an exact rational.
Rational parse_rational(std::string_view text);
/// Parses a decimal or rational literal at the current working precision.
Real parse_real(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& q);
/// Scientific notation with `digits` significant digits (0 = full precision).
std::string to_string(const Real& x, int digits = 0);

/// num / den in lowest terms. Throws InvalidInput for den = 0.
Rational fraction(const Integer& num, const Integer& den);

Rational abs(const Rational& q);
int sign(const Rational& q);
int sign(const Real& x);
Rational pow(const Rational& base, int exponent);

/// Relative difference |a - b| / max(|a|, |b|, floor).
Real relative_difference(const Real& a, const Real& b, const Real& floor = Real(0));

/// True when q is the square of a rational; the root is written to `root`.
bool exact_square_root(const Rational& q, Rational& root);

}  // namespace tmc
