#include "stori/realization.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "stori/rng.hpp"

namespace stori {

Eigen::MatrixXd psd_sqrt_factor(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw DimensionError("matrix factor needs a square matrix");
    if (m.size() == 0) return m;
    if (m.isZero(0.0)) return Eigen::MatrixXd::Zero(m.rows(), m.cols());
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() == Eigen::Success) return llt.matrixL();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd evals = es.eigenvalues();
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        if (evals[i] < -kPsdTol)
            throw Error("matrix is not positive semidefinite (eigenvalue " +
                        std::to_string(evals[i]) + ")");
        evals[i] = std::sqrt(std::max(evals[i], 0.0));
    }
    return es.eigenvectors() * evals.asDiagonal();
}

StateTrajectory sample_realization(const LinearSystemModel& model,
                                   const std::vector<ControlInput>& controls, const Belief& x0,
                                   double dt, std::uint64_t seed) {
    if (!(dt > 0.0)) throw Error("realization step must be positive");
    if (x0.mean.size() != model.A.rows())
        throw DimensionError("initial belief dimension does not match the model");

    const Eigen::MatrixXd noise_factor = psd_sqrt_factor(model.Q);
    const Eigen::MatrixXd g_sqrt_dt = std::sqrt(dt) * (model.G * noise_factor);
    const Eigen::MatrixXd init_factor = psd_sqrt_factor(x0.cov);
    const int n = model.state_dim();
    const int r = model.noise_dim();

    Rng rng(seed);
    auto draw_normal_vec = [&rng](int k) {
        Eigen::VectorXd z(k);
        for (int i = 0; i < k; ++i) z[i] = rng.normal();
        return z;
    };

    Eigen::VectorXd x = x0.mean;
    if (!x0.cov.isZero(0.0)) x += init_factor * draw_normal_vec(n);

    std::vector<double> times{0.0};
    std::vector<Eigen::VectorXd> states{x};
    double t = 0.0;
    for (const ControlInput& c : controls) {
        if (c.u.size() != model.B.cols())
            throw DimensionError("control dimension does not match the model");
        auto steps = static_cast<long>(std::llround(c.duration / dt));
        if (steps < 1 || std::abs(c.duration - static_cast<double>(steps) * dt) > 1e-6)
            throw Error("control duration must be a positive multiple of dt");
        for (long s = 0; s < steps; ++s) {
            x = x + (model.A * x + model.B * c.u) * dt + g_sqrt_dt * draw_normal_vec(r);
            t += dt;
            times.push_back(t);
            states.push_back(x);
        }
    }
    return StateTrajectory(std::move(times), std::move(states));
}

}  // namespace stori
