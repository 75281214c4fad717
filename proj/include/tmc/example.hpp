#pragma once

// The 14-atom cubic example: x = 1..14, rho = 1/14 on x*y = x^3 + 7x^2 + 14x + 8, moments of degree 8.

#include "tmc/cubic.hpp"
#include "tmc/recovery.hpp"

#include <map>
#include <ostream>

namespace tmc {

struct Eg1Report {
    CurveSpec curve;
    RationalMeasure generating;
    MomentSequence2D beta;
    int rank_m = 0;
    bool p_pure = false;
    bool rg = false;
    StrongSequence gamma;
    CubicResult endpoint;  // lower endpoint of the window, a flat rank-12 completion
    BetaLink link;
    Real beta_window_lo, beta_window_hi;
    AtomicMeasure measure;  // as extracted
    VerifyReport report;
    AtomicMeasure kept;  // after dropping near-zero atoms
    VerifyReport kept_report;
    double seconds = 0;
};

CurveSpec eg1_curve();
RationalMeasure eg1_measure();

/// Runs the whole pipeline. `verify_tol` applies to both verification passes.
Eg1Report run_eg1(const Real& tol, const Real& verify_tol = Real(1e-6));

void print_eg1(std::ostream& os, const Eg1Report& r);

}  // namespace tmc
