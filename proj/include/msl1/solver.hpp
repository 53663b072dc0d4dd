#ifndef MSL1_SOLVER_HPP
#define MSL1_SOLVER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "msl1/operators.hpp"
#include "msl1/signal.hpp"

namespace msl1 {

// One instance of the generalized multi-L1 recovery program:
//   minimize sum_p lambda_p ||Psi_p x||_1   s.t.  ||y - Phi x||_2 <= epsilon
// where the L1 norm of a complex vector sums complex moduli.
struct RecoveryProblem {
    Eigen::VectorXd y;
    MeasurementMatrix phi;
    std::vector<std::pair<double, AnalysisOperator>> terms;
    double epsilon = 0.0;

    static RecoveryProblem make(Eigen::VectorXd y, MeasurementMatrix phi,
                                std::vector<std::pair<double, AnalysisOperator>> terms,
                                double epsilon);
};

struct SolverConfig {
    double rho = 1.0;
    int max_iters = 20000;
    double abs_tol = 1e-7;
    double rel_tol = 1e-5;
    double over_relaxation = 1.6;
};

struct SolveReport {
    Signal x_hat;
    double objective = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    double wall_time = 0.0;
};

// sum_p lambda_p ||Psi_p x||_1 with complex-modulus L1.
double multi_l1_objective(const RecoveryProblem& problem, const Eigen::VectorXd& x);

// Consensus-form ADMM with per-term splitting variables; the x-update is a
// cached Cholesky solve, analysis updates are (modulus) soft-thresholding,
// and the measurement block projects onto the epsilon-ball around y.
SolveReport solve_multi_l1(const RecoveryProblem& problem, const SolverConfig& config = {});

SolveReport solve_t_l1(const Eigen::VectorXd& y, const MeasurementMatrix& phi, double epsilon,
                       const SolverConfig& config = {});
SolveReport solve_f_l1(const Eigen::VectorXd& y, const MeasurementMatrix& phi, double epsilon,
                       const SolverConfig& config = {});
SolveReport solve_l1_l1(const Eigen::VectorXd& y, const MeasurementMatrix& phi, double epsilon,
                        double lambda2, const SolverConfig& config = {});

// Minimum-L2-norm solution of y = Phi x, computed as Phi^T (Phi Phi^T)^-1 y.
SolveReport solve_ls_baseline(const Eigen::VectorXd& y, const MeasurementMatrix& phi);

// Diminishing-step schedule for the subgradient oracle: stage s of `stages`
// takes normalized steps of length c0 * 2^-s * scale / sqrt(k), restarting
// from the best point found so far.
struct StepSchedule {
    double c0 = 0.5;
    int stages = 14;
};

// Independent verification oracle: projected subgradient descent on the same
// objective, with exact Euclidean projection onto {x : ||y - Phi x|| <= eps}.
SolveReport oracle_subgradient(const RecoveryProblem& problem, long iterations,
                               const StepSchedule& schedule = {});

struct KktDiagnostic {
    double slack = 0.0;  // epsilon - ||y - Phi x_hat||
    double objective = 0.0;
    bool violation = false;
};

KktDiagnostic kkt_feasibility_check(const SolveReport& report, const RecoveryProblem& problem);

}  // namespace msl1

#endif
