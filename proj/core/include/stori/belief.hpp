#pragma once

#include <Eigen/Core>
#include <vector>

#include "stori/linear_system.hpp"

namespace stori {

/// Numerical tolerance for positive-semidefiniteness checks.
inline constexpr double kPsdTol = 1e-9;

/// Gaussian state distribution N(mean, cov).
struct Belief {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;

    Belief() = default;
    Belief(Eigen::VectorXd m, Eigen::MatrixXd p) : mean(std::move(m)), cov(std::move(p)) {}

    /// Deterministic belief with zero covariance.
    static Belief point(Eigen::VectorXd m);

    int dim() const noexcept { return static_cast<int>(mean.size()); }

    /// Throws if cov is not square/symmetric or has an eigenvalue < -kPsdTol.
    void validate() const;
};

/// Piecewise-constant control held for a positive duration.
struct ControlInput {
    Eigen::VectorXd u;
    double duration = 0.0;
};

/// Gaussian belief trajectory on a uniform grid 0, dt, 2*dt, ..., T with one
/// control vector per step.  Trajectories loaded from files may omit
/// controls (empty vector).
struct BeliefTrajectory {
    double dt = 0.0;
    std::vector<Belief> nodes;
    std::vector<Eigen::VectorXd> controls;  // size nodes-1, or empty

    BeliefTrajectory() = default;
    BeliefTrajectory(double step, std::vector<Belief> beliefs,
                     std::vector<Eigen::VectorXd> ctrl = {});

    size_t size() const noexcept { return nodes.size(); }
    double duration() const noexcept {
        return nodes.empty() ? 0.0 : dt * static_cast<double>(nodes.size() - 1);
    }
    double time_of(size_t i) const noexcept { return dt * static_cast<double>(i); }

    /// Full validation including per-node covariance PSD checks.
    void validate() const;
};

/// One fixed-step RK4 integration step of the belief ODEs
///   d/dt mean = A mean + B u,   d/dt P = A P + P A^T + G Q G^T
/// over [0, dt].  The returned covariance is re-symmetrized as (P + P^T)/2.
/// Throws DimensionError on shape mismatch and Error when the integration
/// produces non-finite values.
Belief propagate_belief(const LinearSystemModel& model, const Belief& b,
                        const Eigen::VectorXd& u, double dt);

/// Applies a control held for a multiple of dt, returning the beliefs at
/// dt, 2*dt, ..., duration (excluding the start).
std::vector<Belief> propagate_path(const LinearSystemModel& model, const Belief& start,
                                   const ControlInput& control, double dt);

/// Time-shifted suffix b^t: suffix(traj, t)(t') = traj(t + t').
/// `t` must land on the trajectory grid (within kTimeEps-scaled tolerance)
/// and lie in [0, duration]; throws Error otherwise.
BeliefTrajectory suffix(const BeliefTrajectory& traj, double t);

}  // namespace stori
