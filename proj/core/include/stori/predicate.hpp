#pragma once

#include <Eigen/Core>

#include "stori/errors.hpp"

namespace stori {

/// Linear predicate mu over the state space: mu(x) is true iff h(x) >= 0,
/// where h(x) = coefficients . x + offset.
struct LinearPredicate {
    Eigen::VectorXd coefficients;
    double offset = 0.0;

    LinearPredicate() = default;
    LinearPredicate(Eigen::VectorXd coeffs, double off)
        : coefficients(std::move(coeffs)), offset(off) {}

    Eigen::Index dimension() const noexcept { return coefficients.size(); }

    /// h(x).  Throws DimensionError on state-dimension mismatch.
    double evaluate(const Eigen::VectorXd& x) const {
        if (x.size() != coefficients.size())
            throw DimensionError("predicate expects state dimension " +
                                 std::to_string(coefficients.size()) + ", got " +
                                 std::to_string(x.size()));
        return coefficients.dot(x) + offset;
    }

    bool operator==(const LinearPredicate& o) const {
        return offset == o.offset && coefficients.size() == o.coefficients.size() &&
               coefficients == o.coefficients;
    }
};

}  // namespace stori
