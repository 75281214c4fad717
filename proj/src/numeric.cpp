#include "tmc/numeric.hpp"

#include "tmc/errors.hpp"

#include <cmath>
#include <cctype>

namespace tmc {

namespace {

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

unsigned g_precision_bits = 256;

}  // namespace

unsigned real_precision_bits() { return g_precision_bits; }

void set_real_precision_bits(unsigned bits) {
    if (bits < 53) bits = 53;
    g_precision_bits = bits;
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_bits_(g_precision_bits) {
    set_real_precision_bits(bits);
}

PrecisionScope::~PrecisionScope() { set_real_precision_bits(saved_bits_); }

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Real& x) { return x; }

double to_double(const Rational& q) { return to_double(to_real(q)); }

double to_double(const Real& x) { return x.convert_to<double>(); }

namespace {

bool is_plain_integer(std::string_view s) {
    std::size_t k = 0;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_plain_integer(s)) throw Error(ErrorCode::InvalidInput, "not an integer: " + std::string(s));
    std::string t(s);
    if (t[0] == '+') t.erase(0, 1);
    return Integer(t, 10);
}

// Decimal literal: [sign] digits [. digits] [e|E [sign] digits]
Rational parse_decimal(std::string_view s) {
    std::size_t epos = s.find_first_of("eE");
    std::string_view mant = s.substr(0, epos);
    long exponent = 0;
    if (epos != std::string_view::npos) {
        std::string_view ex = s.substr(epos + 1);
        if (!is_plain_integer(ex)) throw Error(ErrorCode::InvalidInput, "bad exponent in " + std::string(s));
        exponent = std::stol(std::string(ex));
    }
    bool negative = false;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        negative = mant[0] == '-';
        mant.remove_prefix(1);
    }
    std::size_t dot = mant.find('.');
    std::string digits;
    if (dot == std::string_view::npos) {
        digits = std::string(mant);
    } else {
        digits = std::string(mant.substr(0, dot)) + std::string(mant.substr(dot + 1));
        exponent -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || !is_plain_integer(digits))
        throw Error(ErrorCode::InvalidInput, "not a number: " + std::string(s));
    Integer num(digits, 10);
    if (negative) num = -num;
    Integer ten = 10, scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exponent)));
    Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    r.canonicalize();
    return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorCode::InvalidInput, "empty number");
    std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        Integer p = parse_integer(text.substr(0, slash));
        Integer q = parse_integer(text.substr(slash + 1));
        if (q == 0) throw Error(ErrorCode::InvalidInput, "zero denominator: " + std::string(text));
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    if (is_plain_integer(text)) return Rational(parse_integer(text));
    return parse_decimal(text);
}

Real parse_real(std::string_view text) {
    std::string s(text);
    if (s.find('/') != std::string::npos) return to_real(parse_rational(s));
    Real r;
    if (mpfr_set_str(r.backend().data(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw Error(ErrorCode::InvalidInput, "not a number: " + s);
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Real& x, int digits) {
    // enough digits to read the value back exactly at its own precision
    if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(mpfr_get_prec(x.backend().data())) * 0.30103)) + 1;
    return x.str(digits, std::ios_base::scientific);
}

Rational fraction(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

int sign(const Rational& q) { return sgn(q); }

int sign(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw Error(ErrorCode::InvalidInput, "zero to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    r.canonicalize();
    return r;
}

Real relative_difference(const Real& a, const Real& b, const Real& floor) {
    using boost::multiprecision::abs;
    Real scale = (std::max)((std::max)(abs(a), abs(b)), floor);
    Real d = abs(a - b);
    if (scale == 0) return d;
    return d / scale;
}

bool exact_square_root(const Rational& q, Rational& root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

}  // namespace tmc

namespace {
[[maybe_unused]] const bool g_precision_initialized = (tmc::set_real_precision_bits(256), true);
}
