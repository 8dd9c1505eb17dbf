#pragma once

#include <vector>

#include "causalchain/lattice.hpp"

namespace causalchain {

struct SweepRecord;  // sweep.hpp

/// Thermodynamic longitudinal magnetization: (1 - tan^2 t)^{1/8} below the
/// critical angle, 0 at and above it. Valid for t in [0, pi/2].
double mz_thermo(double theta);

/// Thermodynamic string order: 0 below the critical angle,
/// (1 - cot^2 t)^{1/4} above it. Valid for t in [0, pi/2].
double ostr_thermo(double theta);

/// Finite-size string order: square of the free-fermion half-chain string
/// expectation on the TFIM factor.
double ostr_finite(const TfimSpec& spec);

struct QptEstimate {
    double theta_peak;      // grid argmax of p_total / k_avg
    double theta_refined;   // three-point parabolic refinement
    double theta_crossing;  // argmin |mz_thermo - ostr_thermo|
};

/// Locate the transition from a sweep covering (0, pi/2) with >= 33 points.
QptEstimate locate_qpt(const std::vector<SweepRecord>& sweep);

}  // namespace causalchain
