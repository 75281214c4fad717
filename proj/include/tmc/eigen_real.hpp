#pragma once

// Eigen traits for Real. Include only from translation units that use Eigen.

#include "tmc/numeric.hpp"

#include <Eigen/Core>

namespace Eigen {

// Boost 1.74 ships an Eigen adaptor that predates Eigen 3.4's infinity()/quiet_NaN()
// requirements, so the traits are spelled out here for the one type we use.
template <>
struct NumTraits<tmc::Real> : GenericNumTraits<tmc::Real> {
    using Real = tmc::Real;
    using NonInteger = tmc::Real;
    using Nested = tmc::Real;
    using Literal = double;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
    static Real dummy_precision() { return 1000 * epsilon(); }
    static Real highest() { return (std::numeric_limits<Real>::max)(); }
    static Real lowest() { return -(std::numeric_limits<Real>::max)(); }
    static Real infinity() { return std::numeric_limits<Real>::infinity(); }
    static Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
    static int digits10() { return static_cast<int>(Real::default_precision()); }
    static int digits() { return std::numeric_limits<Real>::digits; }
};

}  // namespace Eigen
