#include "tmc/hankel.hpp"

#include <algorithm>
#include <type_traits>

namespace tmc {

using boost::multiprecision::abs;

namespace {

Real magnitude(const Rational& x) { return to_real(tmc::abs(x)); }
Real magnitude(const Real& x) { return abs(x); }

template <typename T>
T from_rational(const Rational& q);
template <>
Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
Real from_rational<Real>(const Rational& q) { return to_real(q); }

Real frobenius(const Matrix<Real>& a) {
    Real s = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return sqrt(s);
}

}  // namespace

bool flat_rank_test(const Sequence<Rational>& g) {
    const HankelView<Rational> full = assemble_full(g);
    if (psd_status(full.data).cls == PsdClass::Indefinite) throw Error(ErrorCode::NotPSD, "Hankel matrix is not PSD");
    const int r = rank(full.data);
    const int k = full.size();
    return r == rank(full.data.block(0, 0, k - 1, k - 1)) && r == rank(full.data.block(1, 1, k - 1, k - 1));
}

bool flat_rank_test(const Sequence<Real>& g, const Real& tol) {
    const HankelView<Real> full = assemble_full(g);
    if (psd_status(full.data, tol).cls == PsdClass::Indefinite) throw Error(ErrorCode::NotPSD, "Hankel matrix is not PSD");
    const int r = numeric_rank(full.data, tol);
    const int k = full.size();
    return r == numeric_rank(full.data.block(0, 0, k - 1, k - 1), tol) &&
           r == numeric_rank(full.data.block(1, 1, k - 1, k - 1), tol);
}

const char* schur_class_name(SchurClass c) {
    switch (c) {
        case SchurClass::NotPSD: return "NotPSD";
        case SchurClass::PSD: return "PSD";
        case SchurClass::Flat: return "Flat";
    }
    return "?";
}

SchurClass schur_extension_check(const Matrix<Real>& a, const Matrix<Real>& b, const Matrix<Real>& c, const Real& tol) {
    if (!a.square() || !c.square() || b.rows() != a.rows() || b.cols() != c.rows())
        throw Error(ErrorCode::RangeError, "schur_extension_check: blocks are not conformal");
    if (psd_status(a, tol).cls == PsdClass::Indefinite) return SchurClass::NotPSD;
    const Matrix<Real> w = pseudo_inverse_symmetric(a, tol) * b;
    const Matrix<Real> aw = a * w;
    const Real range_scale = frobenius(a) * frobenius(w) + frobenius(b);
    if (frobenius(aw - b) > tol * range_scale) return SchurClass::NotPSD;
    const Matrix<Real> btw = b.transpose() * w;
    const Matrix<Real> s = c - btw;
    const Real scale = frobenius(c) + frobenius(btw);
    const Real sn = frobenius(s);
    if (sn <= tol * scale) return SchurClass::Flat;
    Vector<Real> ev = symmetric_eigenvalues(s);
    return ev.front() >= -tol * scale ? SchurClass::PSD : SchurClass::NotPSD;
}

template <typename T>
KernelRelation<T> trim(const KernelRelation<T>& rel, const T& tol) {
    Real top = 0;
    for (const auto& x : rel.a) top = (std::max)(top, magnitude(x));
    const Real cut = magnitude(tol) * top;
    int first = 0, last = static_cast<int>(rel.a.size()) - 1;
    while (first <= last && magnitude(rel.a[first]) <= cut) ++first;
    while (last >= first && magnitude(rel.a[last]) <= cut) --last;
    if (first > last) throw Error(ErrorCode::InvalidInput, "relation has no significant coefficient");
    KernelRelation<T> out;
    out.i1 = rel.i1 + first;
    out.i2 = rel.i1 + last;
    out.a.assign(rel.a.begin() + first, rel.a.begin() + last + 1);
    return out;
}

template KernelRelation<Rational> trim(const KernelRelation<Rational>&, const Rational&);
template KernelRelation<Real> trim(const KernelRelation<Real>&, const Real&);

namespace {

template <typename T>
struct Equation {
    T constant;
    std::map<int, T> coeffs;
    std::map<int, Real> contributions;  // sum of |a_i c_{i,k}| before cancellation
    bool active = true;
};

}  // namespace

template <typename T>
PropagationResult<T> propagate_relation(const StrongSequence& gamma, const KernelRelation<T>& rel,
                                        const std::map<int, T>& known, const T& tol) {
    constexpr bool exact = std::is_same_v<T, Rational>;
    const Real rtol = magnitude(tol);
    PropagationResult<T> res;
    if (rel.a.empty() || rel.i2 - rel.i1 + 1 != static_cast<int>(rel.a.size()))
        throw Error(ErrorCode::InvalidInput, "malformed relation");
    const int u_lo = gamma.lo() - rel.i1, u_hi = gamma.hi() - rel.i2;
    if (u_lo > u_hi) {
        res.reason = "relation wider than the sequence";
        return res;
    }

    std::vector<Equation<T>> eqs;
    for (int u = u_lo; u <= u_hi; ++u) {
        Equation<T> e;
        e.constant = T(0);
        for (int i = rel.i1; i <= rel.i2; ++i) {
            const T& a = rel.coefficient(i);
            if (a == 0) continue;
            const AffineScalar& g = gamma[i + u];
            e.constant += a * from_rational<T>(g.constant());
            for (const auto& [k, c] : g.coeffs()) {
                T ac = a * from_rational<T>(c);
                auto kn = known.find(k);
                if (kn != known.end()) {
                    e.constant += ac * kn->second;
                } else {
                    e.coeffs[k] += ac;
                    e.contributions[k] += magnitude(ac);
                }
            }
        }
        eqs.push_back(std::move(e));
    }

    std::map<int, T> assignment = known;
    auto present = [&](const Equation<T>& e, int k, Real& ratio) {
        const T& c = e.coeffs.at(k);
        if (c == 0) return false;
        ratio = magnitude(c) / e.contributions.at(k);
        return exact || ratio > rtol;
    };

    for (;;) {
        int best_eq = -1, best_k = 0;
        Real best_ratio = -1;
        for (std::size_t q = 0; q < eqs.size(); ++q) {
            if (!eqs[q].active) continue;
            int count = 0, which = 0;
            Real which_ratio = 0;
            for (const auto& [k, c] : eqs[q].coeffs) {
                Real ratio;
                if (present(eqs[q], k, ratio)) {
                    ++count;
                    which = k;
                    which_ratio = ratio;
                }
            }
            if (count == 1 && which_ratio > best_ratio) {
                best_eq = static_cast<int>(q);
                best_k = which;
                best_ratio = which_ratio;
            }
        }
        if (best_eq < 0) break;
        Equation<T>& e = eqs[best_eq];
        const T value = -e.constant / e.coeffs.at(best_k);
        assignment[best_k] = value;
        e.active = false;
        for (auto& other : eqs) {
            auto it = other.coeffs.find(best_k);
            if (it == other.coeffs.end()) continue;
            other.constant += it->second * value;
            other.coeffs.erase(it);
            other.contributions.erase(best_k);
        }
    }

    for (int k = 1; k <= gamma.parameter_count(); ++k)
        if (!assignment.count(k)) {
            res.reason = "relation does not determine " + parameter_name(k);
            return res;
        }

    res.assignment = assignment;
    res.sequence = evaluate(gamma, assignment);
    res.consistent = true;
    for (int u = u_lo; u <= u_hi; ++u) {
        T r = T(0);
        Real scale = 0;
        for (int i = rel.i1; i <= rel.i2; ++i) {
            T term = rel.coefficient(i) * res.sequence[i + u];
            scale += magnitude(term);
            r += term;
        }
        Real rel_res = scale > 0 ? Real(magnitude(r) / scale) : magnitude(r);
        res.max_residual = (std::max)(res.max_residual, rel_res);
        const bool ok = exact ? (r == 0) : (rel_res <= rtol);
        if (!ok && res.consistent) {
            res.consistent = false;
            res.reason = "shift " + std::to_string(u) + " leaves residual " + to_string(rel_res, 6);
        }
    }
    return res;
}

template PropagationResult<Rational> propagate_relation(const StrongSequence&, const KernelRelation<Rational>&,
                                                        const std::map<int, Rational>&, const Rational&);
template PropagationResult<Real> propagate_relation(const StrongSequence&, const KernelRelation<Real>&,
                                                    const std::map<int, Real>&, const Real&);

}  // namespace tmc
