#pragma once

// From a completed strong sequence to an atomic measure on the curve.

#include "tmc/hankel.hpp"
#include "tmc/moments.hpp"

#include <string>
#include <vector>

namespace tmc {

/// delta_j = gamma_{j + lo}; delta starts at index 0.
template <typename T>
Sequence<T> shift_to_ordinary(const Sequence<T>& gamma) {
    return Sequence<T>{0, gamma.v};
}

struct ExtractedAtoms {
    Vector<Real> x;   // ascending
    Vector<Real> nu;  // densities for delta
};

/// Atoms are the roots of sum_k coeffs[k] x^k; densities solve the Vandermonde system against delta_0..delta_{r-1}.
/// Throws ExtractionFailed on complex, repeated or zero roots.
ExtractedAtoms atoms_from_polynomial(const Vector<Real>& coeffs, const Sequence<Real>& delta, const Real& tol);

/// Generating polynomial from the leading r x r Hankel block, then atoms_from_polynomial.
ExtractedAtoms extract_atoms(const Sequence<Real>& delta, int r, const Real& tol);

/// y = sum q_s x^(s-1), rho = nu x^(2n). Throws ZeroAtom for x = 0.
AtomicMeasure lift_to_curve(const ExtractedAtoms& atoms, const CurveSpec& curve, int n);

/// Two more entries making the Hankel of a PD sequence flat, with one atom pinned at x_star.
Sequence<Real> flat_extension(const Sequence<Real>& gamma, const Real& x_star);

/// Atoms of a flat (or PD, via flat_extension) completion of gamma over [-2n, (m-1)2n].
AtomicMeasure recover_from_sequence(const Sequence<Real>& gamma, const CurveSpec& curve, int n, const Real& tol);
/// Atoms from the roots of a column relation of the completion.
AtomicMeasure recover_from_relation(const Sequence<Real>& gamma, const KernelRelation<Real>& rel, const CurveSpec& curve,
                                    int n, const Real& tol);

struct VerifyReport {
    bool moments_ok = true;
    bool curve_ok = true;
    bool positive_ok = true;
    bool variety_ok = true;
    Real max_moment_error = 0;
    Real max_curve_residual = 0;
    int atom_count = 0;
    int rank_m = 0;
    std::vector<std::string> violations;

    bool ok() const { return moments_ok && curve_ok && positive_ok && variety_ok; }
};

/// rank_m < 0 computes rank M(n) from beta.
VerifyReport verify_measure(const AtomicMeasure& measure, const MomentSequence2D& beta, const CurveSpec& curve,
                            const Real& tol, int rank_m = -1);

/// Removes atoms with |x| < zero_tol * max|x| and |rho| < density_tol * sum|rho|.
AtomicMeasure drop_near_zero_atoms(const AtomicMeasure& measure, const Real& zero_tol, const Real& density_tol);

}  // namespace tmc
