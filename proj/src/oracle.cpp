#include <chrono>
#include <cmath>

#include "msl1/errors.hpp"
#include "msl1/solver.hpp"

namespace msl1 {

namespace {

// Exact Euclidean projection onto {x : ||y - Phi x|| <= eps}. Uses a cached
// eigendecomposition of Phi Phi^T; the Lagrange multiplier mu solves
// ||mu (Phi Phi^T + mu I)^-1 r|| = eps by bisection.
class BallProjector {
  public:
    BallProjector(const MeasurementMatrix& phi, Eigen::VectorXd y, double eps)
        : phi_(phi.entries), y_(std::move(y)), eps_(eps) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(phi_ * phi_.transpose());
        values_ = eig.eigenvalues();
        vectors_ = eig.eigenvectors();
    }

    Eigen::VectorXd least_norm_solution() const {
        const Eigen::VectorXd rt = vectors_.transpose() * y_;
        Eigen::VectorXd scaled(rt.size());
        for (Eigen::Index i = 0; i < rt.size(); ++i) {
            const double w = values_[i];
            scaled[i] = (w > 1e-14 * values_.maxCoeff()) ? rt[i] / w : 0.0;
        }
        return phi_.transpose() * (vectors_ * scaled);
    }

    Eigen::VectorXd project(Eigen::VectorXd x) const {
        const Eigen::VectorXd r = y_ - phi_ * x;
        const double nr = r.norm();
        if (nr <= eps_) return x;
        const Eigen::VectorXd rt = vectors_.transpose() * r;
        if (eps_ <= 0.0) {
            // Affine case: minimum-norm correction onto {Phi x = y}.
            Eigen::VectorXd scaled(rt.size());
            for (Eigen::Index i = 0; i < rt.size(); ++i) {
                const double w = values_[i];
                scaled[i] = (w > 1e-14 * values_.maxCoeff()) ? rt[i] / w : 0.0;
            }
            return x + phi_.transpose() * (vectors_ * scaled);
        }
        auto excess = [&](double mu) {
            double s = 0.0;
            for (Eigen::Index i = 0; i < rt.size(); ++i) {
                const double q = mu * rt[i] / (values_[i] + mu);
                s += q * q;
            }
            return std::sqrt(s) - eps_;
        };
        double lo = 0.0, hi = 1.0;
        while (excess(hi) < 0.0) hi *= 2.0;
        for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (excess(mid) > 0.0 ? hi : lo) = mid;
        }
        const double mu = 0.5 * (lo + hi);
        Eigen::VectorXd scaled(rt.size());
        for (Eigen::Index i = 0; i < rt.size(); ++i) scaled[i] = rt[i] / (values_[i] + mu);
        return x + phi_.transpose() * (vectors_ * scaled);
    }

  private:
    const Eigen::MatrixXd& phi_;
    Eigen::VectorXd y_;
    double eps_;
    Eigen::VectorXd values_;
    Eigen::MatrixXd vectors_;
};

}  // namespace

SolveReport oracle_subgradient(const RecoveryProblem& problem, long iterations,
                               const StepSchedule& schedule) {
    const auto t0 = std::chrono::steady_clock::now();
    if (iterations < 1 || schedule.stages < 1 || schedule.c0 <= 0.0)
        throw UndefinedInputError("invalid oracle schedule");

    BallProjector projector(problem.phi, problem.y, problem.epsilon);
    Eigen::VectorXd best_x = projector.project(projector.least_norm_solution());
    double best_obj = multi_l1_objective(problem, best_x);

    const long per_stage = std::max<long>(1, iterations / schedule.stages);
    long steps_done = 0;
    for (int s = 0; s < schedule.stages; ++s) {
        const double c = schedule.c0 * std::pow(0.5, s);
        Eigen::VectorXd x = best_x;
        const double scale = 1.0 + best_x.norm();
        for (long k = 1; k <= per_stage; ++k, ++steps_done) {
            Eigen::VectorXd grad = Eigen::VectorXd::Zero(x.size());
            double obj = 0.0;
            for (const auto& [lambda, psi] : problem.terms) {
                if (lambda == 0.0) continue;
                Eigen::VectorXcd theta = psi.apply(x);
                obj += lambda * theta.cwiseAbs().sum();
                for (Eigen::Index i = 0; i < theta.size(); ++i) {
                    const double mag = std::abs(theta[i]);
                    theta[i] = (mag > 0.0) ? theta[i] / mag : std::complex<double>(0.0, 0.0);
                }
                grad += lambda * psi.adjoint_real(theta);
            }
            if (obj < best_obj) {
                best_obj = obj;
                best_x = x;
            }
            // normalized direction keeps the schedule meaningful across scales
            const double gn = grad.norm();
            if (gn == 0.0) break;
            x = projector.project(
                x - (c * scale / (gn * std::sqrt(static_cast<double>(k)))) * grad);
        }
    }

    SolveReport report;
    report.residual = (problem.y - problem.phi.entries * best_x).norm();
    report.x_hat = Signal(std::move(best_x));
    report.objective = best_obj;
    report.iterations = static_cast<int>(std::min<long>(steps_done, 1L << 30));
    report.converged = report.residual <= problem.epsilon * (1.0 + 1e-6) +
                                              1e-10 * (1.0 + problem.y.norm());
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace msl1
