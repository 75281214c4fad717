#include "doctest.h"
#include "oracles.hpp"
#include "tmc/cubic.hpp"
#include "tmc/recovery.hpp"

#include <random>

using namespace tmc;

namespace {

const CurveSpec kCurve{3, {2, -1, 1, 1}};

StrongSequence gamma_of(const RationalMeasure& mu, int n, const CurveSpec& c = kCurve) {
    return reduce(moments_from_measure(mu, 2 * n), c);
}

RationalMeasure atoms_at(const std::vector<Rational>& xs, const CurveSpec& c = kCurve) {
    RationalMeasure mu;
    int k = 0;
    for (const auto& x : xs) mu.push_back({x, c.y_at(x), oracle::frac(1 + k++, 4)});
    return mu;
}

}  // namespace

TEST_SUITE("cubic") {
    TEST_CASE("block bookkeeping for n = 1") {
        const StrongSequence g = gamma_of(atoms_at({1, -2, 3}), 1);
        const CubicBlocks blk = cubic_blocks(g);
        REQUIRE(blk.a.rows() == 2);
        CHECK(blk.a(0, 0) == g[0].constant());
        CHECK(blk.a(0, 1) == g[1].constant());
        CHECK(blk.a(1, 1) == g[2].constant());
        CHECK(blk.b == Vector<Rational>{g[-1].constant(), g[0].constant()});
        CHECK(blk.c == Vector<Rational>{g[2].constant(), g[3].constant()});
        CHECK(blk.d == g[-2].constant());
        CHECK(blk.q0_2n == 4);
    }

    TEST_CASE("one atom at 2 gives powers of 2") {
        const int n = 2;
        const StrongSequence g = gamma_of({{2, kCurve.y_at(Rational(2)), 1}}, n);
        const CubicBlocks blk = cubic_blocks(g);
        for (std::size_t k = 0; k < blk.b.size(); ++k) CHECK(blk.b[k] == oracle::rpow(Rational(2), -2 * n + 1 + static_cast<int>(k)));
        for (std::size_t k = 0; k < blk.c.size(); ++k) CHECK(blk.c[k] == oracle::rpow(Rational(2), n + 1 + static_cast<int>(k)));
    }

    TEST_CASE("wrong degree") {
        const CurveSpec c4{4, {1, 1, 1, 1, 1}};
        CHECK_THROWS_AS(cubic_blocks(gamma_of({{1, c4.y_at(Rational(1)), 1}}, 2, c4)), Error);
    }

    TEST_CASE("E is a perfect square") {
        std::mt19937_64 rng(51);
        for (int n = 1; n <= 4; ++n) {
            const StrongSequence g = gamma_of(oracle::random_measure(rng, kCurve.q, 3 * n + 2), n);
            const CubicBlocks blk = cubic_blocks(g);
            REQUIRE(psd_status(blk.a).cls == PsdClass::PD);
            const auto q = cubic_quantities(blk.a, blk.b, blk.c, blk.gamma_n, blk.d, blk.q0_2n);
            const auto y = solve_any(blk.a, blk.b);
            const Rational r = dot(blk.c, *y) - blk.gamma_n;
            CHECK(q.e == r * r);
            CHECK(q.t_min < q.t_max);
        }
    }

    TEST_CASE("3n atoms: pure window, flat endpoints, interior PD") {
        std::mt19937_64 rng(52);
        for (int n = 1; n <= 3; ++n) {
            const RationalMeasure mu = oracle::random_measure(rng, kCurve.q, 3 * n);
            const MomentSequence2D beta = moments_from_measure(mu, 2 * n);
            const StrongSequence g = reduce(beta, kCurve);
            const Real tol = default_tolerance();
            const CubicResult low = cubic_pure_solve(g, RootChoice::Low, tol);
            REQUIRE(low.cert.branch == CubicBranch::PureFlat);
            CHECK(low.cert.rank == 3 * n);
            CHECK(low.cert.window_lo <= low.cert.window_hi);
            CHECK(to_real(low.cert.quantities->t_min) <= low.cert.window_lo);
            CHECK(low.cert.window_hi <= to_real(low.cert.quantities->t_max));
            const CubicResult high = cubic_pure_solve(g, RootChoice::High, tol);
            CHECK(high.cert.rank == 3 * n);
            const CubicResult mid = cubic_pure_solve(g, RootChoice::Interior, tol);
            if (low.cert.window_lo < low.cert.window_hi) {
                CHECK(mid.cert.branch == CubicBranch::PurePD);
                CHECK(psd_status(assemble_full(*mid.completed).data, tol).cls == PsdClass::PD);
            }
            const AtomicMeasure rec = recover_from_sequence(*low.completed, kCurve, n, tol);
            CHECK(rec.atoms.size() == static_cast<std::size_t>(3 * n));
            CHECK(oracle::max_relative_moment_error(rec, beta) < Real(1e-40));
        }
    }

    TEST_CASE("pushing gamma_{4n-1} up closes the window") {
        std::mt19937_64 rng(53);
        const int n = 2;
        StrongSequence g = gamma_of(oracle::random_measure(rng, kCurve.q, 8), n);
        REQUIRE(cubic_pure_solve(g, RootChoice::Low, default_tolerance()).cert.branch != CubicBranch::NoMeasure);
        g.gamma[4 * n - 1] = g[4 * n - 1] * Rational(10);
        const CubicResult res = cubic_pure_solve(g, RootChoice::Low, default_tolerance());
        CHECK(res.cert.branch == CubicBranch::NoMeasure);
        CHECK_FALSE(res.completed);
    }

    TEST_CASE("pure solver refuses a singular core") {
        const StrongSequence g = gamma_of(atoms_at({1, 2}), 2);
        CHECK_THROWS_AS(cubic_pure_solve(g, RootChoice::Low, default_tolerance()), Error);
    }

    TEST_CASE("singular case recovers the true free moment") {
        const RationalMeasure two = atoms_at({Rational(1, 2), -3});
        const int n = 2;
        const StrongSequence g = gamma_of(two, n);
        const CubicResult res = cubic_singular_solve(g);
        REQUIRE(res.cert.branch == CubicBranch::Singular);
        CHECK(*res.cert.chosen_t_exact == oracle::power_sum(two, 4 * n));
        CHECK(res.cert.rank == 2);

        const RationalMeasure one = atoms_at({Rational(5, 3)});
        const CubicResult r1 = cubic_singular_solve(gamma_of(one, n));
        REQUIRE(r1.cert.branch == CubicBranch::Singular);
        CHECK(*r1.cert.chosen_t_exact == one[0].rho * oracle::rpow(one[0].x, 4 * n));
        CHECK(r1.cert.rank == 1);

        StrongSequence bad = g;
        bad.gamma[4 * n - 1] = bad[4 * n - 1] + AffineScalar(Rational(1));
        CHECK(cubic_singular_solve(bad).cert.branch == CubicBranch::NoMeasure);
    }

    TEST_CASE("beta link of the free moment") {
        const RationalMeasure mu = atoms_at({1, 2, 3, 4, 5, 6});
        const StrongSequence g = gamma_of(mu, 2);
        const BetaLink link = cubic_beta_link(g);
        // gamma_8 sits in row j = 3 at i = 2
        CHECK(link.j == 3);
        CHECK(link.i == 2);
        CHECK(oracle::moment(mu, 2, 3) == oracle::power_sum(mu, 8) + link.shift);
    }
}
