#pragma once

#include <cstdint>
#include <vector>

#include "stori/belief.hpp"
#include "stori/state_trajectory.hpp"

namespace stori {

/// Square factor L with L L^T = M for a symmetric PSD matrix: Cholesky when
/// possible, otherwise an eigenvalue factor (clamping eigenvalues in
/// [-kPsdTol, 0] to zero).  Throws Error when M has an eigenvalue < -kPsdTol.
Eigen::MatrixXd psd_sqrt_factor(const Eigen::MatrixXd& m);

/// Euler-Maruyama sample of the SDE under a piecewise-constant control
/// sequence:
///
///   x_{k+1} = x_k + (A x_k + B u_k) dt + G sqrt(dt) L z_k,   L L^T = Q.
///
/// The initial state is drawn from x0 (deterministically x0.mean when the
/// covariance is zero).  Identical seeds produce identical trajectories.
StateTrajectory sample_realization(const LinearSystemModel& model,
                                   const std::vector<ControlInput>& controls, const Belief& x0,
                                   double dt, std::uint64_t seed);

}  // namespace stori
