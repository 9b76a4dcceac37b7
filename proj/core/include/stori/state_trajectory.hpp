#pragma once

#include <Eigen/Core>
#include <vector>

#include "stori/formula.hpp"

namespace stori {

/// A deterministic state trajectory: one sampled realization of the system.
/// Sample times are strictly increasing and start at 0; they need not be
/// uniformly spaced.
struct StateTrajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;

    StateTrajectory() = default;
    StateTrajectory(std::vector<double> t, std::vector<Eigen::VectorXd> x);

    size_t size() const noexcept { return times.size(); }
    double end_time() const noexcept { return times.empty() ? 0.0 : times.back(); }
};

/// Boolean STL satisfaction of a realization, evaluated over the discrete
/// sample times of x.  Quantifiers over continuous intervals range over the
/// sample grid; interval endpoint handling follows TimeInterval::contains.
///
/// `t` must coincide with a sample time (within 1e-9 s) and the trajectory
/// must extend to at least t + horizon(f); otherwise throws HorizonError.
bool eval_boolean(const Formula& f, const StateTrajectory& x, double t);

}  // namespace stori
