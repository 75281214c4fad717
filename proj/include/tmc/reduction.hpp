#pragma once

// Reduction of a curve moment sequence to a univariate strong (Laurent)
// sequence gamma_s, s in [-2n, (m-1)2n].

#include "tmc/curve.hpp"
#include "tmc/moments.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tmc {

/// Laurent polynomial sum_{t=lo}^{lo+size-1} c[t-lo] x^t.
struct LaurentPoly {
    int lo = 0;
    std::vector<Rational> c;

    int hi() const { return lo + static_cast<int>(c.size()) - 1; }
    Rational coefficient(int t) const;
};

/// Coefficients q_{j,t} of (sum_s q_s x^(s-1))^j by repeated convolution.
LaurentPoly laurent_power_coeffs(const CurveSpec& curve, int j);

struct IndexLayout {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> rows;  // rows[k] lists the indices placed in row k
    std::vector<int> retained;           // I, ascending
    std::vector<int> free;               // complement of I in [-2n, (m-1)2n], ascending
    std::map<int, std::pair<int, int>> f;  // s -> (i, j) with beta_{i,j} defining gamma_s

    int lo() const { return -2 * n; }
    int hi() const { return (m - 1) * 2 * n; }
    bool is_retained(int s) const { return f.count(s) > 0; }
};

int layout_h(int n, int m, int k);
IndexLayout index_layout(int n, int m);

/// Parameters are numbered 1, 2, ... and printed as "t1", "t2", ...
std::string parameter_name(int id);

/// c_0 + sum_k c_k t_k
class AffineScalar {
public:
    AffineScalar() = default;
    AffineScalar(const Rational& c) : constant_(c) {}
    static AffineScalar parameter(int id);

    const Rational& constant() const { return constant_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    Rational coefficient(int id) const;
    bool is_constant() const { return coeffs_.empty(); }

    AffineScalar& operator+=(const AffineScalar& o);
    AffineScalar& operator-=(const AffineScalar& o);
    AffineScalar& operator*=(const Rational& s);
    friend AffineScalar operator+(AffineScalar a, const AffineScalar& b) { return a += b; }
    friend AffineScalar operator-(AffineScalar a, const AffineScalar& b) { return a -= b; }
    friend AffineScalar operator*(AffineScalar a, const Rational& s) { return a *= s; }
    friend AffineScalar operator*(const Rational& s, AffineScalar a) { return a *= s; }
    friend bool operator==(const AffineScalar& a, const AffineScalar& b) {
        return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
    }

    /// Throws UnboundParameter if a parameter with nonzero coefficient is missing.
    template <typename T>
    T evaluate(const std::map<int, T>& assignment) const;

    std::string to_string() const;

private:
    Rational constant_ = 0;
    std::map<int, Rational> coeffs_;
};

enum class EntryClass { Free, Aux, Full };

const char* entry_class_name(EntryClass c);

/// Plain two-sided sequence v_s, s in [lo, lo + size - 1].
template <typename T>
struct Sequence {
    int lo = 0;
    std::vector<T> v;

    int hi() const { return lo + static_cast<int>(v.size()) - 1; }
    const T& operator[](int s) const { return v.at(static_cast<std::size_t>(s - lo)); }
    T& operator[](int s) { return v.at(static_cast<std::size_t>(s - lo)); }
};

Sequence<Real> to_real(const Sequence<Rational>& s);
inline Sequence<Real> to_real(const Sequence<Real>& s) { return s; }

struct StrongSequence {
    int n = 0;
    int m = 0;
    CurveSpec curve;
    std::vector<int> free;  // free index of parameter k is free[k-1]
    Sequence<AffineScalar> gamma;
    std::vector<EntryClass> cls;

    int lo() const { return gamma.lo; }
    int hi() const { return gamma.hi(); }
    const AffineScalar& operator[](int s) const { return gamma[s]; }
    EntryClass entry_class(int s) const { return cls.at(static_cast<std::size_t>(s - gamma.lo)); }
    int parameter_count() const { return static_cast<int>(free.size()); }
    /// Parameter id of the free index s, or 0.
    int parameter_at(int s) const;
};

/// Builds gamma from beta. Throws InvalidCurve when the curve is malformed.
StrongSequence reduce(const MomentSequence2D& beta, const CurveSpec& curve);

template <typename T>
Sequence<T> evaluate(const StrongSequence& gamma, const std::map<int, T>& assignment);

/// Power sums sum_l rho_l x_l^s over the index range of the reduction.
Sequence<Rational> power_sums(const RationalMeasure& measure, int lo, int hi);

}  // namespace tmc
