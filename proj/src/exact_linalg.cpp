#include "tmc/linalg.hpp"

#include <algorithm>
#include <utility>

namespace tmc {

const char* psd_class_name(PsdClass c) {
    switch (c) {
        case PsdClass::PD: return "PD";
        case PsdClass::PSD: return "PSD";
        case PsdClass::Indefinite: return "Indefinite";
    }
    return "?";
}

namespace {

// Integer matrix with each row multiplied by the lcm of its denominators.
Matrix<Integer> clear_denominators(const Matrix<Rational>& a, Rational* row_scale_product) {
    Matrix<Integer> m(a.rows(), a.cols());
    Rational product = 1;
    for (int i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
        product *= l;
    }
    if (row_scale_product) *row_scale_product = product;
    return m;
}

struct BareissResult {
    int rank = 0;
    int swaps = 0;
    Integer last_pivot = 1;
};

BareissResult bareiss(Matrix<Integer>& m) {
    BareissResult res;
    Integer prev = 1;
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = r;
        while (p < rows && m(p, col) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
            ++res.swaps;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Integer v = m(r, col) * m(i, j) - m(i, col) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(r, col);
        ++r;
    }
    res.rank = r;
    res.last_pivot = prev;
    return res;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix<Rational>& m, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < ncols && r < m.rows(); ++col) {
        int p = r;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, col);
        for (int j = col; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const Matrix<Rational>& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Matrix<Integer> m = clear_denominators(a, nullptr);
    return bareiss(m).rank;
}

Rational determinant(const Matrix<Rational>& a) {
    if (!a.square()) throw Error(ErrorCode::RangeError, "determinant of a non-square matrix");
    if (a.rows() == 0) return 1;
    Rational scale;
    Matrix<Integer> m = clear_denominators(a, &scale);
    BareissResult res = bareiss(m);
    if (res.rank < a.rows()) return 0;
    Rational det(res.last_pivot);
    if (res.swaps % 2) det = -det;
    return det / scale;
}

std::vector<Vector<Rational>> kernel_basis(const Matrix<Rational>& a) {
    Matrix<Rational> m = a;
    std::vector<int> pivots = rref(m, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vector<Rational>> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector<Rational> v(a.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector<Rational>> solve_any(const Matrix<Rational>& a, const Vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw Error(ErrorCode::RangeError, "solve: shape mismatch");
    Matrix<Rational> m(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        m(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref(m, a.cols());
    for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i)
        if (m(i, a.cols()) != 0) return std::nullopt;
    Vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(static_cast<int>(r), a.cols());
    return x;
}

PsdReport psd_status(const Matrix<Rational>& a) {
    if (!a.symmetric()) throw Error(ErrorCode::InvalidInput, "psd_status: matrix not symmetric");
    const int n = a.rows();
    Matrix<Rational> s = a;
    std::vector<bool> active(n, true);
    PsdReport rep;
    rep.min_eigenvalue = 0;
    for (;;) {
        int pivot = -1;
        bool any = false;
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            any = true;
            if (s(i, i) < 0) {
                rep.cls = PsdClass::Indefinite;
                return rep;
            }
            if (s(i, i) > 0 && pivot < 0) pivot = i;
        }
        if (!any) break;
        if (pivot < 0) {
            // zero diagonal: a nonzero off-diagonal entry makes a 2x2 minor negative
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (active[i] && active[j] && s(i, j) != 0) {
                        rep.cls = PsdClass::Indefinite;
                        return rep;
                    }
            break;
        }
        active[pivot] = false;
        ++rep.rank;
        const Rational d = s(pivot, pivot);
        for (int j = 0; j < n; ++j) {
            if (!active[j] || s(j, pivot) == 0) continue;
            Rational f = s(j, pivot) / d;
            for (int k = 0; k < n; ++k)
                if (active[k]) s(j, k) -= f * s(pivot, k);
        }
    }
    rep.cls = rep.rank == n ? PsdClass::PD : PsdClass::PSD;
    return rep;
}

}  // namespace tmc
