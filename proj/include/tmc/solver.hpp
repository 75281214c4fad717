#pragma once

// End to end: beta on the curve -> strong sequence -> completion -> verified atomic measure.

#include "tmc/cubic.hpp"
#include "tmc/quartic.hpp"
#include "tmc/recovery.hpp"

#include <optional>
#include <string>

namespace tmc {

enum class SolveStatus { Found, NoMeasure, NoMeasureFound };

const char* solve_status_name(SolveStatus s);

struct SolveOptions {
    Real tol_psd = default_tolerance();
    Real tol_rank = default_tolerance();
    Real verify_tol = Real(1e-8);
    RootChoice root_choice = RootChoice::Low;
    int search_iters = 200;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::NoMeasureFound;
    std::string reason;
    int m = 0;
    int n = 0;
    int rank_m = 0;
    std::optional<CubicCertificate> cubic;
    std::optional<QuarticCertificate> quartic;
    std::optional<AtomicMeasure> measure;
    std::optional<VerifyReport> report;
    bool dropped_atoms = false;
};

/// m must be 3 or 4 (WrongDegree otherwise). Necessary conditions on M(n) (positive semidefinite,
/// recursively generated, p(X, Y) = 0) are checked exactly first; their failure is NoMeasure.
/// A recovered measure that fails verification is retried once with near-zero atoms dropped.
SolveOutcome solve(const MomentSequence2D& beta, const CurveSpec& curve, const SolveOptions& opts = {});

}  // namespace tmc
