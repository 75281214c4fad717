#include "doctest.h"
#include "oracles.hpp"
#include "tmc/linalg.hpp"
#include "tmc/moments.hpp"

#include <random>

using namespace tmc;

namespace {

const std::vector<Rational> kEgQ{8, 14, 7, 1};

RationalMeasure eg_measure() {
    RationalMeasure mu;
    for (int l = 1; l <= 14; ++l) mu.push_back({Rational(l), oracle::curve_y(kEgQ, Rational(l)), Rational(1, 14)});
    return mu;
}

}  // namespace

TEST_SUITE("moments") {
    TEST_CASE("single atom at (1,1)") {
        const MomentSequence2D b = moments_from_measure({{1, 1, 1}}, 2);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; i + j <= 2; ++j) CHECK(b(i, j) == 1);
        Matrix<Rational> ones(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) ones(i, j) = 1;
        CHECK(moment_matrix(b).data == ones);
    }

    TEST_CASE("the 14-atom cubic example") {
        const MomentSequence2D b = moments_from_measure(eg_measure(), 8);
        CHECK(b(0, 0) == 1);
        CHECK(b(1, 0) == Rational(15, 2));
        CHECK(b(0, 1) == Rational(88829303, 630630));
        CHECK(b(8, 0) == Rational(443370241, 2));
        CHECK(b(0, 8) == parse_rational("2248747733666520927131582212659085688086421341014376774177/"
                                        "237301654241203443784531432580505468750"));
        const MomentMatrix mm = moment_matrix(b);
        CHECK(mm.data.rows() == 15);
        CHECK(rank(mm.data) == 12);
        CHECK(riesz(b, Polynomial2::x() + Polynomial2::y()) == Rational(15, 2) + Rational(88829303, 630630));
    }

    TEST_CASE("two atoms (1,2), (-1,2)") {
        const MomentSequence2D b = moments_from_measure({{1, 2, Rational(1, 2)}, {-1, 2, Rational(1, 2)}}, 2);
        CHECK(b(1, 0) == 0);
        CHECK(b(0, 1) == 2);
        CHECK(b(2, 0) == 1);
        Matrix<Rational> expected(3, 3);
        expected(0, 0) = 1;
        expected(0, 2) = expected(2, 0) = 2;
        expected(1, 1) = 1;
        expected(2, 2) = 4;
        CHECK(moment_matrix(b).data == expected);
    }

    TEST_CASE("moments agree with the brute-force sum") {
        std::mt19937_64 rng(3);
        const RationalMeasure mu = oracle::random_measure(rng, {2, -1, 0, 1}, 7);
        const MomentSequence2D b = moments_from_measure(mu, 6);
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; i + j <= 6; ++j) CHECK(b(i, j) == oracle::moment(mu, i, j));
    }

    TEST_CASE("nonpositive density is rejected") {
        CHECK_THROWS_AS(moments_from_measure({{1, 1, 0}}, 2), Error);
        CHECK_THROWS_AS(moments_from_measure({{1, 1, -1}}, 2), Error);
    }

    TEST_CASE("riesz functional") {
        const MomentSequence2D b = moments_from_measure({{1, 1, 1}}, 2);
        CHECK(riesz(b, Polynomial2(1)) == b(0, 0));
        CHECK(riesz(b, pow(Polynomial2::x() - Polynomial2(1), 2)) == 0);
        CHECK_THROWS_AS(riesz(b, pow(Polynomial2::x(), 3)), Error);
    }

    TEST_CASE("moment matrices of measures are PSD, positive on squares, and carry the curve relation") {
        std::mt19937_64 rng(21);
        const CurveSpec curve{3, {3, -2, 1, 1}};
        for (int trial = 0; trial < 6; ++trial) {
            const int atoms = 2 + static_cast<int>(rng() % 10);
            const RationalMeasure mu = oracle::random_measure(rng, curve.q, atoms);
            const MomentSequence2D b = moments_from_measure(mu, 6);
            const MomentMatrix mm = moment_matrix(b);
            CHECK(psd_status(mm.data).cls != PsdClass::Indefinite);
            CHECK(rank(mm.data) <= atoms);
            CHECK(is_column_relation(mm, curve.relation()));
            Polynomial2 p = Polynomial2(Rational(static_cast<int>(rng() % 5)) - 2) + Polynomial2::x() * Rational(3) -
                            Polynomial2::monomial(1, 2, Rational(1, 3));
            CHECK(riesz(b, p * p) >= 0);
        }
    }

    TEST_CASE("recursively generated") {
        // positive definite: nothing to check
        std::mt19937_64 rng(4);
        RationalMeasure many;
        for (int k = 0; k < 10; ++k)
            many.push_back({oracle::frac(static_cast<int>(rng() % 19) - 9, 3), oracle::frac(static_cast<int>(rng() % 19) - 9, 2), 1});
        const MomentMatrix pd = moment_matrix(moments_from_measure(many, 4));
        REQUIRE(rank(pd.data) == 6);
        CHECK(is_recursively_generated(pd).ok);

        CHECK(is_recursively_generated(moment_matrix(moments_from_measure(eg_measure(), 8))).ok);

        // atoms on the line x = 0, then beta_40 corrupted: X = 0 holds but X^2 = 0 no longer does
        MomentSequence2D b = moments_from_measure({{0, 1, 1}, {0, 2, 1}, {0, -1, 1}}, 4);
        CHECK(is_recursively_generated(moment_matrix(b)).ok);
        b(4, 0) = 1;
        const RgReport rg = is_recursively_generated(moment_matrix(b));
        CHECK_FALSE(rg.ok);
        CHECK(rg.relation == Polynomial2::x());
        CHECK(rg.multiplier == Monomial{1, 0});
    }

    TEST_CASE("p-pure") {
        const CurveSpec eg{3, kEgQ};
        CHECK(is_p_pure(moment_matrix(moments_from_measure(eg_measure(), 8)), eg));

        // x*y = x^3 + 6 meets the line y = 7 at x = 1, 2, -3
        const CurveSpec c{3, {6, 0, 0, 1}};
        RationalMeasure three;
        for (int x : {1, 2, -3}) three.push_back({Rational(x), oracle::curve_y(c.q, Rational(x)), 1});
        for (const auto& a : three) REQUIRE(a.y == 7);
        CHECK_FALSE(is_p_pure(moment_matrix(moments_from_measure(three, 6)), c));

        // positive definite with n >= m: no relation at all
        std::mt19937_64 rng(9);
        RationalMeasure many;
        for (int k = 0; k < 12; ++k)
            many.push_back({oracle::frac(static_cast<int>(rng() % 41) - 20, 7), oracle::frac(static_cast<int>(rng() % 41) - 20, 5), 1});
        const MomentMatrix pd = moment_matrix(moments_from_measure(many, 6));
        REQUIRE(rank(pd.data) == 10);
        CHECK_FALSE(is_p_pure(pd, c));

        CHECK_THROWS_AS(is_p_pure(moment_matrix(moments_from_measure(three, 4)), c), Error);
    }

    TEST_CASE("affine change of variables") {
        const MomentSequence2D b = moments_from_measure({{1, 1, 1}, {2, -1, Rational(1, 2)}}, 4);
        CHECK(apply_alt(b, AltMap::identity()) == b);

        // (2x, y) pushes the atom (1,1) to (2,1)
        CHECK(apply_alt(moments_from_measure({{1, 1, 1}}, 4), {0, 2, 0, 0, 0, 1}) == moments_from_measure({{2, 1, 1}}, 4));

        const AltMap psi{1, 2, -1, 3, 0, 5};
        CHECK(apply_alt(apply_alt(b, psi), psi.inverse()) == b);
        CHECK_THROWS_AS(apply_alt(b, {0, 1, 2, 0, 2, 4}), Error);
    }

    TEST_CASE("normalizing a curve with a y term and leading coefficient") {
        // x*y = 2x^3 + x^2 - x + 3 + alpha*y with alpha = 1/2: atoms (x, (2x^3 + x^2 - x + 3) / (x - alpha))
        const Rational alpha(1, 2), qm(2);
        const std::vector<Rational> coeffs{3, -1, 1, 2};
        RationalMeasure mu;
        for (int x : {1, 2, -1, 3, -2}) {
            const Rational xr(x);
            mu.push_back({xr, (2 * xr * xr * xr + xr * xr - xr + 3) / (xr - alpha), 1});
        }
        const MomentSequence2D b = moments_from_measure(mu, 6);
        const MomentSequence2D nb = apply_alt(b, normalizing_alt(qm, alpha));
        const CurveSpec target = normalized_curve(coeffs, alpha);
        CHECK(target.q.back() == 1);
        CHECK(target.q.front() != 0);
        CHECK(is_column_relation(moment_matrix(nb), target.relation()));
        // and the image atoms are the pushforward (x - alpha, y / qm)
        RationalMeasure image;
        for (const auto& a : mu) image.push_back({a.x - alpha, a.y / qm, a.rho});
        CHECK(nb == moments_from_measure(image, 6));
    }
}
