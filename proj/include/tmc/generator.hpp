#pragma once

// Random rational atomic measures on a curve, for round-trip testing.

#include "tmc/moments.hpp"

#include <cstdint>

namespace tmc {

struct GenerateSpec {
    CurveSpec curve;
    int n = 1;
    int atoms = 1;
    std::uint64_t seed = 0;
    int max_denominator = 4;  // x = k / d with 1 <= d <= max_denominator
    Rational radius = 5;      // |x| <= radius
};

/// Distinct nonzero x in [-radius, radius], rho in {1/10, ..., 1}, y on the curve.
/// Deterministic per seed. Throws InvalidInput when fewer than `atoms` grid points exist.
RationalMeasure generate_measure(const GenerateSpec& spec);

struct GeneratedInstance {
    RationalMeasure truth;
    MomentSequence2D beta;
};

GeneratedInstance generate_instance(const GenerateSpec& spec);

}  // namespace tmc
