#include "doctest.h"
#include "oracles.hpp"
#include "tmc/linalg.hpp"
#include "tmc/polynomial.hpp"

#include <random>

using namespace tmc;

namespace {

Matrix<Rational> from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (int v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, int rows, int cols, int range) {
    Matrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = oracle::frac(static_cast<int>(rng() % (2 * range + 1)) - range, 1 + static_cast<int>(rng() % 3));
    return m;
}

}  // namespace

TEST_SUITE("numeric") {
    TEST_CASE("parse_rational reads fractions, integers and decimals exactly") {
        CHECK(parse_rational("3/6") == Rational(1, 2));
        CHECK(parse_rational("-17") == Rational(-17));
        CHECK(parse_rational("1.25") == Rational(5, 4));
        CHECK(parse_rational("-1.5e2") == Rational(-150));
        CHECK(parse_rational("2.5E-3") == Rational(1, 400));
        CHECK_THROWS_AS(parse_rational("abc"), Error);
        CHECK_THROWS_AS(parse_rational("1/0"), Error);
    }

    TEST_CASE("rational strings round-trip") {
        const Rational q(-795732381, 1104801062);
        CHECK(parse_rational(to_string(q)) == q);
        CHECK(to_string(fraction(4, 2)) == "2");
    }

    TEST_CASE("exact square roots") {
        Rational r;
        CHECK(exact_square_root(Rational(9, 4), r));
        CHECK(r == Rational(3, 2));
        CHECK_FALSE(exact_square_root(Rational(2), r));
        CHECK_FALSE(exact_square_root(Rational(-4), r));
    }

    TEST_CASE("precision scope restores the working precision") {
        const unsigned before = real_precision_bits();
        {
            PrecisionScope scope(512);
            CHECK(real_precision_bits() == 512);
            Real third = Real(1) / 3;
            CHECK(abs(third * 3 - 1) < Real(1e-150));
        }
        CHECK(real_precision_bits() == before);
    }
}

TEST_SUITE("linalg") {
    TEST_CASE("exact rank and determinant agree with plain elimination") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 6);
            const int r = 1 + static_cast<int>(rng() % n);
            // product of n x r and r x n has rank <= r
            const Matrix<Rational> a = random_matrix(rng, n, r, 4) * random_matrix(rng, r, n, 4);
            CHECK(rank(a) == oracle::rank(a));
            CHECK(determinant(a) == oracle::determinant(a));
        }
    }

    TEST_CASE("kernel basis and solve_any") {
        const Matrix<Rational> a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
        const auto ker = kernel_basis(a);
        REQUIRE(ker.size() == 1);
        for (const auto& v : a * ker.front()) CHECK(v == 0);
        auto x = solve_any(a, {6, 12, 2});
        REQUIRE(x);
        const Vector<Rational> ax = a * *x;
        CHECK(ax == Vector<Rational>{6, 12, 2});
        CHECK_FALSE(solve_any(a, {1, 0, 0}));
    }

    TEST_CASE("exact PSD decision matches Sylvester's criterion on all principal minors") {
        std::mt19937_64 rng(5);
        int psd = 0, indefinite = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 4);
            const int r = 1 + static_cast<int>(rng() % n);
            const Matrix<Rational> g = random_matrix(rng, r, n, 3);
            Matrix<Rational> a = g.transpose() * g;
            if (trial % 3 == 0) a(0, 0) -= 1;  // often indefinite
            const bool expected = oracle::is_psd_by_minors(a);
            const PsdClass got = psd_status(a).cls;
            CHECK((got != PsdClass::Indefinite) == expected);
            if (expected && oracle::determinant(a) != 0) CHECK(got == PsdClass::PD);
            (expected ? psd : indefinite)++;
        }
        CHECK(psd > 10);
        CHECK(indefinite > 5);
    }

    TEST_CASE("psd_status examples") {
        CHECK(psd_status(Matrix<Rational>::identity(3)).cls == PsdClass::PD);
        CHECK(psd_status(from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})).cls == PsdClass::PSD);
        CHECK(psd_status(from_rows({{1, 0}, {0, -1}})).cls == PsdClass::Indefinite);

        const Real tol(1e-9);
        PsdReport id = psd_status(Matrix<Real>::identity(3), tol);
        CHECK(id.cls == PsdClass::PD);
        CHECK(abs(id.min_eigenvalue - 1) < tol);
        PsdReport ones = psd_status(to_real(from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})), tol);
        CHECK(ones.cls == PsdClass::PSD);
        CHECK(abs(ones.min_eigenvalue) < tol);
        PsdReport ind = psd_status(to_real(from_rows({{1, 0}, {0, -1}})), tol);
        CHECK(ind.cls == PsdClass::Indefinite);
        CHECK(abs(ind.min_eigenvalue + 1) < tol);
    }

    TEST_CASE("symmetric eigenvalues of a known matrix") {
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        const Vector<Real> ev = symmetric_eigenvalues(to_real(from_rows({{2, 1}, {1, 2}})));
        REQUIRE(ev.size() == 2);
        CHECK(abs(ev[0] - 1) < Real(1e-60));
        CHECK(abs(ev[1] - 3) < Real(1e-60));
    }

    TEST_CASE("numeric rank survives badly scaled Hankels") {
        // power sums of atoms 1e-6, 1, 1e6 over x^-4 .. x^4: rank 3 with entries spanning 48 orders of magnitude
        const std::vector<Rational> xs{Rational(1, 1000000), 1, 1000000};
        Matrix<Real> h(5, 5);
        Matrix<Rational> hq(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                Rational s = 0;
                for (const auto& x : xs) s += oracle::rpow(x, i + j - 4);
                hq(i, j) = s;
                h(i, j) = to_real(s);
            }
        CHECK(rank(hq) == 3);
        CHECK(numeric_rank(h, default_tolerance()) == 3);
    }

    TEST_CASE("real solve matches the exact solution") {
        std::mt19937_64 rng(8);
        const Matrix<Rational> a = random_matrix(rng, 5, 5, 6);
        REQUIRE(determinant(a) != 0);
        const Vector<Rational> b{1, -2, 3, 0, 5};
        auto exact = solve_any(a, b);
        auto approx = solve(to_real(a), to_real(b));
        REQUIRE(exact);
        REQUIRE(approx);
        for (int i = 0; i < 5; ++i) CHECK(abs((*approx)[i] - to_real((*exact)[i])) < Real(1e-60));
        CHECK_FALSE(solve(Matrix<Real>(2, 2), Vector<Real>{Real(1), Real(1)}));
    }

    TEST_CASE("polynomial roots") {
        // (x - 1)(x + 2)(x - 3) = x^3 - 2x^2 - 5x + 6
        const Vector<Complex> roots = polynomial_roots({Real(6), Real(-5), Real(-2), Real(1)});
        REQUIRE(roots.size() == 3);
        std::vector<double> re;
        for (const auto& z : roots) {
            CHECK(abs(z.im) < Real(1e-40));
            re.push_back(to_double(z.re));
        }
        std::sort(re.begin(), re.end());
        CHECK(re[0] == doctest::Approx(-2).epsilon(1e-14));
        CHECK(re[1] == doctest::Approx(1).epsilon(1e-14));
        CHECK(re[2] == doctest::Approx(3).epsilon(1e-14));
        // x^2 + 1 has a complex pair
        const Vector<Complex> pair = polynomial_roots({Real(1), Real(0), Real(1)});
        REQUIRE(pair.size() == 2);
        CHECK(abs(abs(pair[0].im) - 1) < Real(1e-40));
    }
}

TEST_SUITE("polynomial") {
    TEST_CASE("degree-lex order") {
        const auto m = degree_lex_monomials(2);
        REQUIRE(m.size() == 6);
        CHECK(m[0] == Monomial{0, 0});
        CHECK(m[1] == Monomial{1, 0});
        CHECK(m[2] == Monomial{0, 1});
        CHECK(m[3] == Monomial{2, 0});
        CHECK(m[4] == Monomial{1, 1});
        CHECK(m[5] == Monomial{0, 2});
        for (std::size_t k = 0; k < degree_lex_monomials(5).size(); ++k)
            CHECK(degree_lex_index(degree_lex_monomials(5)[k]) == static_cast<int>(k));
    }

    TEST_CASE("arithmetic and evaluation") {
        const Polynomial2 p = Polynomial2::x() * Polynomial2::y() - pow(Polynomial2::x(), 3) - Polynomial2(8);
        CHECK(p.degree() == 3);
        CHECK(p.evaluate(Rational(2), Rational(8)) == Rational(0));
        const Polynomial2 sq = pow(Polynomial2::x() - Polynomial2(1), 2);
        CHECK(sq.coefficient({1, 0}) == -2);
        CHECK((sq - sq).is_zero());
    }
}
