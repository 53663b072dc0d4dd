#include "msl1/solver.hpp"

#include <chrono>
#include <cmath>

#include "msl1/errors.hpp"

namespace msl1 {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Distance from y to the range of Phi, via the normal equations.
double range_distance(const MeasurementMatrix& phi, const Eigen::VectorXd& y) {
    const Eigen::MatrixXd ppt = phi.entries * phi.entries.transpose();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(ppt);
    const Eigen::VectorXd u = ldlt.solve(y);
    return (y - ppt * u).norm();
}

// Modulus soft-thresholding, the prox of kappa * ||.||_1 over complex vectors.
void shrink(Eigen::VectorXcd& v, double kappa) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        v[i] = (mag > kappa) ? v[i] * ((mag - kappa) / mag) : std::complex<double>(0.0, 0.0);
    }
}

}  // namespace

RecoveryProblem RecoveryProblem::make(Eigen::VectorXd y, MeasurementMatrix phi,
                                      std::vector<std::pair<double, AnalysisOperator>> terms,
                                      double epsilon) {
    if (y.size() != phi.rows()) throw DimensionError("y length != measurement rows");
    if (terms.empty()) throw DimensionError("at least one analysis term required");
    bool any_positive = false;
    for (const auto& [lambda, psi] : terms) {
        if (lambda < 0.0) throw UndefinedInputError("term weights must be nonnegative");
        if (psi.cols() != phi.cols()) throw DimensionError("analysis operator columns != N");
        any_positive = any_positive || lambda > 0.0;
    }
    if (!any_positive) throw UndefinedInputError("at least one term weight must be positive");
    if (epsilon < 0.0) throw UndefinedInputError("epsilon must be nonnegative");
    RecoveryProblem p;
    p.y = std::move(y);
    p.phi = std::move(phi);
    p.terms = std::move(terms);
    p.epsilon = epsilon;
    if (range_distance(p.phi, p.y) > p.epsilon + 1e-9 * (1.0 + p.y.norm()))
        throw InfeasibleError("residual ball does not meet the range of Phi");
    return p;
}

double multi_l1_objective(const RecoveryProblem& problem, const Eigen::VectorXd& x) {
    double obj = 0.0;
    for (const auto& [lambda, psi] : problem.terms) {
        if (lambda == 0.0) continue;
        obj += lambda * psi.apply(x).cwiseAbs().sum();
    }
    return obj;
}

SolveReport solve_multi_l1(const RecoveryProblem& problem, const SolverConfig& config) {
    const auto t0 = Clock::now();
    if (config.rho <= 0.0 || config.max_iters < 1 || config.abs_tol <= 0.0 ||
        config.rel_tol <= 0.0 || config.over_relaxation < 1.0 || config.over_relaxation > 1.8)
        throw UndefinedInputError("invalid solver configuration");

    const Eigen::Index n = problem.phi.cols();
    const Eigen::Index m = problem.phi.rows();
    const std::size_t num_terms = problem.terms.size();
    const double alpha = config.over_relaxation;
    const double eps = problem.epsilon;
    const Eigen::VectorXd& y = problem.y;

    // Normal matrix of the stacked operator [Psi_1; ...; Psi_P; Phi].
    Eigen::MatrixXd gram = problem.phi.entries.transpose() * problem.phi.entries;
    Eigen::Index total_rows = m;
    for (const auto& [lambda, psi] : problem.terms) {
        gram += psi.gram_real();
        total_rows += psi.analysis_rows();
    }
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    Eigen::LDLT<Eigen::MatrixXd> ldlt;
    const bool use_llt = llt.info() == Eigen::Success;
    if (!use_llt) {
        ldlt.compute(gram);
        if (ldlt.info() != Eigen::Success)
            throw IllConditionedError("stacked operator has a singular normal matrix");
    }
    auto normal_solve = [&](const Eigen::VectorXd& rhs) {
        return use_llt ? Eigen::VectorXd(llt.solve(rhs)) : Eigen::VectorXd(ldlt.solve(rhs));
    };

    std::vector<Eigen::VectorXcd> z(num_terms), u(num_terms), ax(num_terms);
    for (std::size_t p = 0; p < num_terms; ++p) {
        const Eigen::Index rows = problem.terms[p].second.analysis_rows();
        z[p] = Eigen::VectorXcd::Zero(rows);
        u[p] = Eigen::VectorXcd::Zero(rows);
    }
    Eigen::VectorXd zw = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd uw = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);

    SolveReport report;
    const double sqrt_rows = std::sqrt(static_cast<double>(total_rows));
    const double sqrt_n = std::sqrt(static_cast<double>(n));

    int it = 0;
    for (; it < config.max_iters; ++it) {
        // x-update: regularized least squares against all splitting variables.
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
        for (std::size_t p = 0; p < num_terms; ++p)
            rhs += problem.terms[p].second.adjoint_real(z[p] - u[p]);
        rhs.noalias() += problem.phi.entries.transpose() * (zw - uw);
        x = normal_solve(rhs);

        double primal_sq = 0.0;
        Eigen::VectorXd dual_acc = Eigen::VectorXd::Zero(n);

        for (std::size_t p = 0; p < num_terms; ++p) {
            const auto& psi = problem.terms[p].second;
            ax[p] = psi.apply(x);
            Eigen::VectorXcd v = alpha * ax[p] + (1.0 - alpha) * z[p] + u[p];
            const Eigen::VectorXcd z_old = z[p];
            z[p] = v;
            shrink(z[p], problem.terms[p].first / config.rho);
            u[p] = v - z[p];
            primal_sq += (ax[p] - z[p]).squaredNorm();
            dual_acc += psi.adjoint_real(z[p] - z_old);
        }
        const Eigen::VectorXd axw = problem.phi.entries * x;
        {
            Eigen::VectorXd v = alpha * axw + (1.0 - alpha) * zw + uw;
            const Eigen::VectorXd zw_old = zw;
            const Eigen::VectorXd r = v - y;
            const double nr = r.norm();
            zw = (nr > eps) ? Eigen::VectorXd(y + r * (eps / nr)) : v;
            uw = v - zw;
            primal_sq += (axw - zw).squaredNorm();
            dual_acc.noalias() += problem.phi.entries.transpose() * (zw - zw_old);
        }

        const double primal_res = std::sqrt(primal_sq);
        const double dual_res = config.rho * dual_acc.norm();

        double ax_sq = axw.squaredNorm();
        double z_sq = zw.squaredNorm();
        for (std::size_t p = 0; p < num_terms; ++p) {
            ax_sq += ax[p].squaredNorm();
            z_sq += z[p].squaredNorm();
        }
        const double eps_pri =
            sqrt_rows * config.abs_tol +
            config.rel_tol * std::max(std::sqrt(ax_sq), std::sqrt(z_sq));
        Eigen::VectorXd atu = problem.phi.entries.transpose() * uw;
        for (std::size_t p = 0; p < num_terms; ++p)
            atu += problem.terms[p].second.adjoint_real(u[p]);
        const double eps_dual =
            sqrt_n * config.abs_tol + config.rel_tol * config.rho * atu.norm();

        if (primal_res <= eps_pri && dual_res <= eps_dual) {
            report.converged = true;
            ++it;
            break;
        }
    }

    // Feasibility polish: minimum-norm correction onto the epsilon-ball, so a
    // converged report always satisfies its residual contract.
    {
        const Eigen::VectorXd r = y - problem.phi.entries * x;
        const double nr = r.norm();
        if (nr > eps) {
            const Eigen::MatrixXd ppt = problem.phi.entries * problem.phi.entries.transpose();
            Eigen::LDLT<Eigen::MatrixXd> ppt_ldlt(ppt);
            const double shrink_to = (nr > 0.0) ? (1.0 - eps / nr) : 0.0;
            x += problem.phi.entries.transpose() * ppt_ldlt.solve(r * shrink_to);
        }
    }

    report.x_hat = Signal(x);
    report.objective = multi_l1_objective(problem, x);
    report.residual = (y - problem.phi.entries * x).norm();
    report.iterations = it;
    if (report.residual > eps * (1.0 + 1e-6) + 1e-10 * (1.0 + y.norm()))
        report.converged = false;
    report.wall_time = seconds_since(t0);
    return report;
}

SolveReport solve_t_l1(const Eigen::VectorXd& y, const MeasurementMatrix& phi, double epsilon,
                       const SolverConfig& config) {
    auto problem = RecoveryProblem::make(
        y, phi, {{1.0, AnalysisOperator::identity(phi.cols())}}, epsilon);
    return solve_multi_l1(problem, config);
}

SolveReport solve_f_l1(const Eigen::VectorXd& y, const MeasurementMatrix& phi, double epsilon,
                       const SolverConfig& config) {
    auto problem = RecoveryProblem::make(
        y, phi, {{1.0, AnalysisOperator::unitary_dft(phi.cols())}}, epsilon);
    return solve_multi_l1(problem, config);
}

SolveReport solve_l1_l1(const Eigen::VectorXd& y, const MeasurementMatrix& phi, double epsilon,
                        double lambda2, const SolverConfig& config) {
    if (lambda2 < 0.0) throw UndefinedInputError("lambda2 must be nonnegative");
    auto problem = RecoveryProblem::make(
        y, phi,
        {{1.0, AnalysisOperator::identity(phi.cols())},
         {lambda2, AnalysisOperator::unitary_dft(phi.cols())}},
        epsilon);
    return solve_multi_l1(problem, config);
}

SolveReport solve_ls_baseline(const Eigen::VectorXd& y, const MeasurementMatrix& phi) {
    const auto t0 = Clock::now();
    if (y.size() != phi.rows()) throw DimensionError("y length != measurement rows");
    const Eigen::MatrixXd ppt = phi.entries * phi.entries.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(ppt);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (lo <= 0.0 || hi / lo > 1e12)
        throw IllConditionedError("Phi Phi^T is rank-deficient or too ill-conditioned");
    const Eigen::VectorXd u =
        eig.eigenvectors() *
        (eig.eigenvectors().transpose() * y).cwiseQuotient(eig.eigenvalues());
    SolveReport report;
    Eigen::VectorXd x = phi.entries.transpose() * u;
    report.residual = (y - phi.entries * x).norm();
    report.x_hat = Signal(std::move(x));
    report.objective = 0.0;
    report.iterations = 0;
    report.converged = true;
    report.wall_time = seconds_since(t0);
    return report;
}

KktDiagnostic kkt_feasibility_check(const SolveReport& report, const RecoveryProblem& problem) {
    KktDiagnostic d;
    d.objective = report.objective;
    d.slack = problem.epsilon - (problem.y - problem.phi.entries * report.x_hat.samples).norm();
    d.violation = d.slack < -problem.epsilon * 1e-6;
    return d;
}

}  // namespace msl1
