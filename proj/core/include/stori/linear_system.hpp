#pragma once

#include <Eigen/Core>
#include <vector>

#include "stori/errors.hpp"
#include "stori/variables.hpp"

namespace stori {

/// Axis-aligned interval [lo, hi].
struct Bounds {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const noexcept { return v >= lo && v <= hi; }
    double width() const noexcept { return hi - lo; }
};

/// Linear SDE  dx = (A x + B u) dt + G dw,  with an r-dimensional Wiener
/// process of diffusion Q.  Carries the workspace box X (state_bounds), the
/// admissible control box U (control_bounds), the default integration step
/// and the formula-variable binding.
struct LinearSystemModel {
    Eigen::MatrixXd A;  // n x n
    Eigen::MatrixXd B;  // n x m
    Eigen::MatrixXd G;  // n x r
    Eigen::MatrixXd Q;  // r x r, symmetric PSD
    std::vector<Bounds> state_bounds;    // size n
    std::vector<Bounds> control_bounds;  // size m
    VariableMap variables;
    double dt = 0.1;

    int state_dim() const noexcept { return static_cast<int>(A.rows()); }
    int control_dim() const noexcept { return static_cast<int>(B.cols()); }
    int noise_dim() const noexcept { return static_cast<int>(G.cols()); }

    /// Checks dimension consistency, Q symmetry/PSD-ness (tolerance 1e-9)
    /// and bound sanity.  Throws DimensionError or Error.
    void validate() const;
};

}  // namespace stori
