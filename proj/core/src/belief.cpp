#include "stori/belief.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "stori/time_interval.hpp"

namespace stori {

void LinearSystemModel::validate() const {
    const auto n = A.rows();
    if (A.cols() != n) throw DimensionError("A must be square");
    if (B.rows() != n) throw DimensionError("B row count must match the state dimension");
    if (G.rows() != n) throw DimensionError("G row count must match the state dimension");
    if (Q.rows() != G.cols() || Q.cols() != G.cols())
        throw DimensionError("Q must be square with the noise dimension of G");
    if (!((A.array().isFinite()).all() && (B.array().isFinite()).all() &&
          (G.array().isFinite()).all() && (Q.array().isFinite()).all()))
        throw Error("model matrices must be finite");
    if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > kPsdTol)
        throw Error("Q must be symmetric");
    if (Q.size() > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q);
        if (es.eigenvalues().minCoeff() < -kPsdTol)
            throw Error("Q must be positive semidefinite");
    }
    if (static_cast<Eigen::Index>(state_bounds.size()) != n)
        throw DimensionError("state_bounds size must match the state dimension");
    if (static_cast<Eigen::Index>(control_bounds.size()) != B.cols())
        throw DimensionError("control_bounds size must match the control dimension");
    for (const auto& b : state_bounds)
        if (!(b.lo <= b.hi)) throw Error("state bound with lo > hi");
    for (const auto& b : control_bounds)
        if (!(b.lo <= b.hi)) throw Error("control bound with lo > hi");
    if (!(dt > 0.0)) throw Error("model dt must be positive");
    if (variables.state_dim() != 0 && variables.state_dim() != static_cast<int>(n))
        throw DimensionError("variable binding dimension must match the state dimension");
}

Belief Belief::point(Eigen::VectorXd m) {
    const auto n = m.size();
    return Belief(std::move(m), Eigen::MatrixXd::Zero(n, n));
}

void Belief::validate() const {
    if (cov.rows() != mean.size() || cov.cols() != mean.size())
        throw DimensionError("covariance shape must match the mean dimension");
    if (!(mean.array().isFinite().all() && cov.array().isFinite().all()))
        throw Error("belief must be finite");
    if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > kPsdTol)
        throw Error("covariance must be symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw Error("covariance must be positive semidefinite");
}

BeliefTrajectory::BeliefTrajectory(double step, std::vector<Belief> beliefs,
                                   std::vector<Eigen::VectorXd> ctrl)
    : dt(step), nodes(std::move(beliefs)), controls(std::move(ctrl)) {
    if (!(dt > 0.0)) throw Error("belief trajectory dt must be positive");
    if (nodes.empty()) throw Error("belief trajectory must have at least one node");
    if (!controls.empty() && controls.size() != nodes.size() - 1)
        throw Error("belief trajectory needs one control per step (or none)");
}

void BeliefTrajectory::validate() const {
    for (const auto& b : nodes) b.validate();
}

namespace {

struct BeliefDerivative {
    Eigen::VectorXd dmean;
    Eigen::MatrixXd dcov;
};

BeliefDerivative ode_rhs(const LinearSystemModel& m, const Eigen::VectorXd& mean,
                         const Eigen::MatrixXd& cov, const Eigen::VectorXd& u,
                         const Eigen::MatrixXd& gqgt) {
    return {m.A * mean + m.B * u, m.A * cov + cov * m.A.transpose() + gqgt};
}

}  // namespace

Belief propagate_belief(const LinearSystemModel& model, const Belief& b,
                        const Eigen::VectorXd& u, double dt) {
    if (!(dt > 0.0)) throw Error("propagation step must be positive");
    if (b.mean.size() != model.A.rows())
        throw DimensionError("belief dimension does not match the model");
    if (u.size() != model.B.cols())
        throw DimensionError("control dimension does not match the model");

    const Eigen::MatrixXd gqgt = model.G * model.Q * model.G.transpose();
    auto k1 = ode_rhs(model, b.mean, b.cov, u, gqgt);
    auto k2 = ode_rhs(model, b.mean + 0.5 * dt * k1.dmean, b.cov + 0.5 * dt * k1.dcov, u, gqgt);
    auto k3 = ode_rhs(model, b.mean + 0.5 * dt * k2.dmean, b.cov + 0.5 * dt * k2.dcov, u, gqgt);
    auto k4 = ode_rhs(model, b.mean + dt * k3.dmean, b.cov + dt * k3.dcov, u, gqgt);

    Belief out;
    out.mean = b.mean + (dt / 6.0) * (k1.dmean + 2.0 * k2.dmean + 2.0 * k3.dmean + k4.dmean);
    Eigen::MatrixXd cov =
        b.cov + (dt / 6.0) * (k1.dcov + 2.0 * k2.dcov + 2.0 * k3.dcov + k4.dcov);
    out.cov = 0.5 * (cov + cov.transpose());
    if (!(out.mean.array().isFinite().all() && out.cov.array().isFinite().all()))
        throw Error("belief propagation diverged to non-finite values");
    return out;
}

std::vector<Belief> propagate_path(const LinearSystemModel& model, const Belief& start,
                                   const ControlInput& control, double dt) {
    if (!(control.duration > 0.0)) throw Error("control duration must be positive");
    double steps_real = control.duration / dt;
    auto steps = static_cast<long>(std::llround(steps_real));
    if (steps < 1 || std::abs(steps_real - static_cast<double>(steps)) > 1e-6)
        throw Error("control duration must be a positive multiple of dt");
    std::vector<Belief> out;
    out.reserve(static_cast<size_t>(steps));
    Belief current = start;
    for (long s = 0; s < steps; ++s) {
        current = propagate_belief(model, current, control.u, dt);
        out.push_back(current);
    }
    return out;
}

BeliefTrajectory suffix(const BeliefTrajectory& traj, double t) {
    double idx_real = t / traj.dt;
    auto idx = static_cast<long>(std::llround(idx_real));
    if (std::abs(t - static_cast<double>(idx) * traj.dt) > 1e-9)
        throw Error("suffix start " + format_double(t) + " is not on the trajectory grid");
    if (idx < 0 || idx >= static_cast<long>(traj.nodes.size()))
        throw Error("suffix start " + format_double(t) + " outside [0, " +
                    format_double(traj.duration()) + "]");
    BeliefTrajectory out;
    out.dt = traj.dt;
    out.nodes.assign(traj.nodes.begin() + idx, traj.nodes.end());
    if (!traj.controls.empty())
        out.controls.assign(traj.controls.begin() + idx, traj.controls.end());
    return out;
}

}  // namespace stori
