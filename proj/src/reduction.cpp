#include "tmc/reduction.hpp"

#include "tmc/errors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace tmc {

Rational LaurentPoly::coefficient(int t) const {
    if (t < lo || t > hi()) return 0;
    return c[static_cast<std::size_t>(t - lo)];
}

LaurentPoly laurent_power_coeffs(const CurveSpec& curve, int j) {
    if (j < 0) throw Error(ErrorCode::InvalidInput, "negative Laurent power");
    LaurentPoly acc{0, {Rational(1)}};
    for (int step = 0; step < j; ++step) {
        LaurentPoly next{acc.lo - 1, std::vector<Rational>(acc.c.size() + curve.m, Rational(0))};
        for (std::size_t a = 0; a < acc.c.size(); ++a) {
            if (acc.c[a] == 0) continue;
            for (int s = 0; s <= curve.m; ++s) next.c[a + s] += acc.c[a] * curve.q[s];
        }
        acc = std::move(next);
    }
    return acc;
}

int layout_h(int n, int m, int k) {
    return std::max(2 * n - k + 1 + (m - 1) * (k - 1), (m - 1) * k) + 1;
}

IndexLayout index_layout(int n, int m) {
    if (n < 1 || m < 2) throw Error(ErrorCode::InvalidInput, "index_layout needs n >= 1 and m >= 2");
    IndexLayout L;
    L.n = n;
    L.m = m;
    L.rows.resize(2 * n + 1);
    for (int s = 0; s <= 2 * n; ++s) {
        L.rows[0].push_back(s);
        L.f[s] = {s, 0};
    }
    for (int k = 1; k <= 2 * n; ++k) {
        L.rows[k].push_back(-k);
        L.f[-k] = {0, k};
        for (int s = layout_h(n, m, k); s <= 2 * n - k + (m - 1) * k; ++s) {
            L.rows[k].push_back(s);
            L.f[s] = {s - (m - 1) * k, k};
        }
    }
    for (int s = L.lo(); s <= L.hi(); ++s) {
        if (L.f.count(s))
            L.retained.push_back(s);
        else
            L.free.push_back(s);
    }
    return L;
}

std::string parameter_name(int id) { return "t" + std::to_string(id); }

AffineScalar AffineScalar::parameter(int id) {
    AffineScalar a;
    a.coeffs_[id] = 1;
    return a;
}

Rational AffineScalar::coefficient(int id) const {
    auto it = coeffs_.find(id);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

AffineScalar& AffineScalar::operator+=(const AffineScalar& o) {
    constant_ += o.constant_;
    for (const auto& [k, c] : o.coeffs_) {
        Rational& slot = coeffs_[k];
        slot += c;
        if (slot == 0) coeffs_.erase(k);
    }
    return *this;
}

AffineScalar& AffineScalar::operator-=(const AffineScalar& o) {
    AffineScalar neg = o;
    neg *= -1;
    return *this += neg;
}

AffineScalar& AffineScalar::operator*=(const Rational& s) {
    constant_ *= s;
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, c] : coeffs_) c *= s;
    return *this;
}

namespace {

template <typename T>
T from_rational(const Rational& q);
template <>
Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
Real from_rational<Real>(const Rational& q) { return to_real(q); }

}  // namespace

template <typename T>
T AffineScalar::evaluate(const std::map<int, T>& assignment) const {
    T v = from_rational<T>(constant_);
    for (const auto& [k, c] : coeffs_) {
        auto it = assignment.find(k);
        if (it == assignment.end()) throw Error(ErrorCode::UnboundParameter, "no value for " + parameter_name(k));
        v += from_rational<T>(c) * it->second;
    }
    return v;
}

template Rational AffineScalar::evaluate<Rational>(const std::map<int, Rational>&) const;
template Real AffineScalar::evaluate<Real>(const std::map<int, Real>&) const;

std::string AffineScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (constant_ != 0 || coeffs_.empty()) {
        os << tmc::to_string(constant_);
        first = false;
    }
    for (const auto& [k, c] : coeffs_) {
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (abs(c) != 1) os << tmc::to_string(tmc::abs(c)) << "*";
        os << parameter_name(k);
        first = false;
    }
    return os.str();
}

const char* entry_class_name(EntryClass c) {
    switch (c) {
        case EntryClass::Free: return "free";
        case EntryClass::Aux: return "aux";
        case EntryClass::Full: return "full";
    }
    return "?";
}

Sequence<Real> to_real(const Sequence<Rational>& s) {
    Sequence<Real> r;
    r.lo = s.lo;
    r.v.reserve(s.v.size());
    for (const auto& x : s.v) r.v.push_back(to_real(x));
    return r;
}

int StrongSequence::parameter_at(int s) const {
    auto it = std::find(free.begin(), free.end(), s);
    return it == free.end() ? 0 : static_cast<int>(it - free.begin()) + 1;
}

StrongSequence reduce(const MomentSequence2D& beta, const CurveSpec& curve) {
    curve.validate();
    beta.validate();
    const int n = beta.n(), m = curve.m;
    const IndexLayout L = index_layout(n, m);
    std::vector<LaurentPoly> lq;
    for (int j = 0; j <= 2 * n; ++j) lq.push_back(laurent_power_coeffs(curve, j));

    std::vector<std::optional<AffineScalar>> g(static_cast<std::size_t>(L.hi() - L.lo() + 1));
    auto slot = [&](int s) -> std::optional<AffineScalar>& { return g[static_cast<std::size_t>(s - L.lo())]; };
    auto get = [&](int s) -> const AffineScalar& {
        const auto& v = slot(s);
        if (!v) throw Error(ErrorCode::InvalidInput, "reduction order reached gamma_" + std::to_string(s) + " before it was defined");
        return *v;
    };

    StrongSequence out;
    out.n = n;
    out.m = m;
    out.curve = curve;
    out.free = L.free;
    for (std::size_t k = 0; k < L.free.size(); ++k) slot(L.free[k]) = AffineScalar::parameter(static_cast<int>(k) + 1);

    const Rational q0_inv = 1 / curve.q[0];
    for (int k = 0; k <= 2 * n; ++k) {
        for (int s : L.rows[k]) {
            if (s < 0) {
                // gamma_{-k} = q0^{-k} (beta_{0,k} - sum_{t=-k+1}^{(m-1)k} q_{k,t} gamma_t)
                AffineScalar v = beta(0, k);
                for (int t = -k + 1; t <= (m - 1) * k; ++t) {
                    Rational c = lq[k].coefficient(t);
                    if (c != 0) v -= get(t) * c;
                }
                slot(s) = v * tmc::pow(q0_inv, k);
            } else {
                const int i = s - (m - 1) * k;
                AffineScalar v = beta(i, k);
                for (int t = -k; t <= (m - 1) * k - 1; ++t) {
                    Rational c = lq[k].coefficient(t);
                    if (c != 0) v -= get(t + i) * c;
                }
                slot(s) = v;
            }
        }
    }

    out.gamma.lo = L.lo();
    for (int s = L.lo(); s <= L.hi(); ++s) {
        out.gamma.v.push_back(get(s));
        if (!L.is_retained(s))
            out.cls.push_back(EntryClass::Free);
        else
            out.cls.push_back(get(s).is_constant() ? EntryClass::Full : EntryClass::Aux);
    }
    return out;
}

template <typename T>
Sequence<T> evaluate(const StrongSequence& gamma, const std::map<int, T>& assignment) {
    Sequence<T> out;
    out.lo = gamma.lo();
    out.v.reserve(gamma.gamma.v.size());
    for (const auto& a : gamma.gamma.v) out.v.push_back(a.evaluate(assignment));
    return out;
}

template Sequence<Rational> evaluate<Rational>(const StrongSequence&, const std::map<int, Rational>&);
template Sequence<Real> evaluate<Real>(const StrongSequence&, const std::map<int, Real>&);

Sequence<Rational> power_sums(const RationalMeasure& measure, int lo, int hi) {
    Sequence<Rational> out;
    out.lo = lo;
    out.v.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (const auto& a : measure) {
        if (a.x == 0) throw Error(ErrorCode::ZeroAtom, "power sums need nonzero atoms");
        Rational p = a.rho * tmc::pow(a.x, lo);
        for (int s = lo; s <= hi; ++s) {
            out[s] += p;
            p *= a.x;
        }
    }
    return out;
}

}  // namespace tmc
