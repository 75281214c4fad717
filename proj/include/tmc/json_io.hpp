#pragma once

// JSON documents exchanged by the command line tool. Every document carries "schema": "tmp-curve/1".
// Rationals are written as "p/q" strings and Reals as decimal strings at full working precision,
// so files round-trip without loss.

#include "json.hpp"
#include "tmc/reduction.hpp"
#include "tmc/solver.hpp"

#include <string>

namespace tmc {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "tmp-curve/1";

Json curve_to_json(const CurveSpec& curve);
CurveSpec curve_from_json(const Json& j);

/// {"schema", "curve": {"m", "q": [...]}, "degree", "moments": [{"i", "j", "v"}]}
Json moments_to_json(const CurveSpec& curve, const MomentSequence2D& beta);
struct MomentsFile {
    CurveSpec curve;
    MomentSequence2D beta;
};
/// Values may be "p/q" strings, integers or decimals; every i + j <= degree must appear once.
MomentsFile moments_from_json(const Json& j);

/// {"schema", "atoms": [{"x", "y", "rho"}]}
Json measure_to_json(const AtomicMeasure& measure);
Json measure_to_json(const RationalMeasure& measure);
AtomicMeasure measure_from_json(const Json& j);

/// {"schema", "n", "m", "gamma": [{"s", "const", "coeffs": {"t1": ...}, "class"}]}
Json reduction_to_json(const StrongSequence& gamma);

Json cubic_certificate_to_json(const CubicCertificate& cert);
Json quartic_certificate_to_json(const QuarticCertificate& cert);
Json verify_report_to_json(const VerifyReport& report);
/// Status, certificate, verification and (when found) the measure.
Json outcome_to_json(const SolveOutcome& outcome);

/// Reads a whole file (or stdin for "-") and parses it; malformed input throws InvalidInput.
Json read_json(const std::string& path);
/// Writes to a file (or stdout for "-") with two-space indentation.
void write_json(const std::string& path, const Json& j);

}  // namespace tmc
