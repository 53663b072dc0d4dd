#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "msl1/operators.hpp"
#include "msl1/rng.hpp"
#include "msl1/solver.hpp"

using namespace msl1;

namespace {

Eigen::VectorXd random_vector(Eigen::Index n, Rng& rng) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.normal();
    return v;
}

// Brute-force oracle for  min ||x||_1  s.t.  Phi x = y  with a planted
// solution known to be k-sparse: search every support of size <= k and keep
// the exact-fit candidate of least L1 norm.
Eigen::VectorXd l0_search_1sparse(const Eigen::MatrixXd& phi, const Eigen::VectorXd& y) {
    const Eigen::Index n = phi.cols();
    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_x = Eigen::VectorXd::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::VectorXd col = phi.col(j);
        const double c = col.dot(y) / col.squaredNorm();
        if ((y - c * col).norm() > 1e-9 * (1.0 + y.norm())) continue;
        if (std::abs(c) < best) {
            best = std::abs(c);
            best_x = Eigen::VectorXd::Zero(n);
            best_x[j] = c;
        }
    }
    return best_x;
}

// LP vertex enumeration for  min ||Psi x||_1  s.t.  Phi x = y  with real
// square Psi. A vertex solution satisfies N constraints with equality: the M
// measurement rows plus N - M zero rows of Psi, so enumerating row subsets
// and solving the stacked linear system visits every candidate vertex.
double lp_vertex_min(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& psi,
                     const Eigen::VectorXd& y) {
    const Eigen::Index m = phi.rows(), n = phi.cols();
    const Eigen::Index zeros = n - m;
    std::vector<Eigen::Index> idx(zeros);
    for (Eigen::Index i = 0; i < zeros; ++i) idx[i] = i;
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        Eigen::MatrixXd a(n, n);
        Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
        a.topRows(m) = phi;
        b.head(m) = y;
        for (Eigen::Index i = 0; i < zeros; ++i) a.row(m + i) = psi.row(idx[i]);
        const Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
        if (lu.isInvertible()) {
            const Eigen::VectorXd x = lu.solve(b);
            best = std::min(best, (psi * x).cwiseAbs().sum());
        }
        // next combination of zero rows
        Eigen::Index i = zeros - 1;
        while (i >= 0 && idx[i] == psi.rows() - zeros + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (Eigen::Index j = i + 1; j < zeros; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

}  // namespace

TEST_CASE("solver config defaults") {
    const SolverConfig c;
    CHECK(c.rho == 1.0);
    CHECK(c.max_iters == 20000);
    CHECK(c.abs_tol == 1e-7);
    CHECK(c.rel_tol == 1e-5);
    CHECK(c.over_relaxation == 1.6);
}

TEST_CASE("slack ball admits the zero solution") {
    Rng rng(4);
    const auto phi = make_measurement_matrix(MatrixKind::Gaussian, 8, 16, 4);
    const Eigen::VectorXd y = random_vector(8, rng);
    const auto rep = solve_t_l1(y, phi, 1.5 * y.norm());
    CHECK(rep.x_hat.samples.norm() < 1e-6);
    CHECK(rep.objective < 1e-6);
    CHECK(rep.converged);
}

TEST_CASE("identity measurements with zero slack reproduce y") {
    Rng rng(5);
    const Eigen::Index n = 24;
    const auto phi = MeasurementMatrix::dense(Eigen::MatrixXd::Identity(n, n));
    const Eigen::VectorXd y = random_vector(n, rng);
    const auto rep = solve_t_l1(y, phi, 0.0);
    CHECK((rep.x_hat.samples - y).norm() < 1e-8 * (1.0 + y.norm()));
}

TEST_CASE("planted 3-sparse signals recover exactly at half sampling") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Rng rng(seed);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(32);
        for (int s = 0; s < 3; ++s) {
            Eigen::Index pos = static_cast<Eigen::Index>(rng.uniform_int(32));
            while (x[pos] != 0.0) pos = static_cast<Eigen::Index>(rng.uniform_int(32));
            x[pos] = rng.normal() + (rng.sign() > 0 ? 2.0 : -2.0);
        }
        const auto phi = make_measurement_matrix(MatrixKind::Gaussian, 16, 32, seed + 100);
        const Eigen::VectorXd y = sample(phi, x);
        SolverConfig tight;
        tight.abs_tol = 1e-9;
        tight.rel_tol = 1e-8;
        tight.max_iters = 100000;
        const auto rep = solve_t_l1(y, phi, 0.0, tight);
        CHECK((rep.x_hat.samples - x).norm() < 1e-5 * x.norm());
    }
}

TEST_CASE("least-squares baseline hand cases") {
    Eigen::MatrixXd row(1, 3);
    row << 1, 0, 0;
    Eigen::VectorXd y1(1);
    y1 << 2.0;
    const auto rep = solve_ls_baseline(y1, MeasurementMatrix::dense(row));
    CHECK(rep.x_hat.samples[0] == doctest::Approx(2.0));
    CHECK(rep.x_hat.samples[1] == doctest::Approx(0.0));
    CHECK(rep.x_hat.samples[2] == doctest::Approx(0.0));

    Rng rng(6);
    const Eigen::VectorXd y2 = random_vector(5, rng);
    const auto eye = MeasurementMatrix::dense(Eigen::MatrixXd::Identity(5, 5));
    CHECK((solve_ls_baseline(y2, eye).x_hat.samples - y2).norm() < 1e-12);
}

TEST_CASE("least-squares baseline is the minimum-norm interpolant") {
    Rng rng(7);
    const auto phi = make_measurement_matrix(MatrixKind::Gaussian, 6, 12, 7);
    const Eigen::VectorXd y = random_vector(6, rng);
    const auto rep = solve_ls_baseline(y, phi);
    CHECK((sample(phi, rep.x_hat.samples) - y).norm() < 1e-10 * (1.0 + y.norm()));

    // Any feasible perturbation along the null space must not shrink the norm.
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(phi.entries);
    const Eigen::MatrixXd null_basis = lu.kernel();
    for (int rep_i = 0; rep_i < 100; ++rep_i) {
        const Eigen::VectorXd coef = random_vector(null_basis.cols(), rng);
        const Eigen::VectorXd alt = rep.x_hat.samples + null_basis * coef;
        CHECK(alt.norm() >= rep.x_hat.samples.norm() - 1e-10);
    }
}

TEST_CASE("least-squares baseline rejects rank-deficient measurements") {
    Eigen::MatrixXd bad(2, 4);
    bad.row(0) << 1, 2, 3, 4;
    bad.row(1) << 2, 4, 6, 8;
    Eigen::VectorXd y(2);
    y << 1, 1;
    CHECK_THROWS_AS(solve_ls_baseline(y, MeasurementMatrix::dense(bad)), IllConditionedError);
}

TEST_CASE("infeasible problems are rejected up front") {
    Eigen::MatrixXd row(1, 3);
    row << 1, 0, 0;
    Eigen::VectorXd y(1);
    y << 0.0;
    // y outside the range of Phi cannot happen for surjective Phi, so use a
    // deficient-range dense matrix: range is span(e1) after zeroing a row.
    Eigen::MatrixXd phi2 = Eigen::MatrixXd::Zero(2, 3);
    phi2(0, 0) = 1.0;
    Eigen::VectorXd y2(2);
    y2 << 0.0, 1.0;
    CHECK_THROWS_AS(RecoveryProblem::make(y2, MeasurementMatrix::dense(phi2),
                                          {{1.0, AnalysisOperator::identity(3)}}, 1e-6),
                    InfeasibleError);
}

TEST_CASE("solver matches the exhaustive support search on 1-sparse cases") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed + 40);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(8);
        x[rng.uniform_int(8)] = rng.normal() + 3.0 * rng.sign();
        const auto phi = make_measurement_matrix(MatrixKind::Gaussian, 5, 8, seed + 900);
        const Eigen::VectorXd y = sample(phi, x);
        const Eigen::VectorXd ref = l0_search_1sparse(phi.entries, y);
        const auto rep = solve_t_l1(y, phi, 0.0);
        if ((rep.x_hat.samples - ref).norm() < 1e-5 * (1.0 + ref.norm())) ++hits;
    }
    CHECK(hits >= 9);
}

TEST_CASE("solver objective matches LP vertex enumeration") {
    Rng rng(8);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Eigen::Index n = 10, m = 6;
        const auto phi = make_measurement_matrix(MatrixKind::Gaussian, m, n, seed + 50);
        const Eigen::VectorXd y = random_vector(m, rng);

        // T-L1 (Psi = I)
        const auto rep_t = solve_t_l1(y, phi, 0.0);
        const double ref_t = lp_vertex_min(phi.entries, Eigen::MatrixXd::Identity(n, n), y);
        CHECK(rep_t.objective <= ref_t + 1e-4 * (1.0 + ref_t));
        CHECK(rep_t.objective >= ref_t - 1e-4 * (1.0 + ref_t));

        // dense real analysis operator
        Eigen::MatrixXd psi(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) psi(i, j) = rng.normal();
        const auto prob = RecoveryProblem::make(y, phi, {{1.0, AnalysisOperator::dense(psi)}}, 0.0);
        const auto rep_d = solve_multi_l1(prob);
        const double ref_d = lp_vertex_min(phi.entries, psi, y);
        CHECK(rep_d.objective <= ref_d + 1e-5 * (1.0 + ref_d));
        CHECK(rep_d.objective >= ref_d - 1e-5 * (1.0 + ref_d));
    }
}

TEST_CASE("solver agrees with the projected-subgradient oracle") {
    Rng rng(9);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const Eigen::Index n = 24, m = 12;
        const auto phi = make_measurement_matrix(MatrixKind::Gaussian, m, n, seed + 70);
        const Eigen::VectorXd y = random_vector(m, rng);
        const double eps = 0.05 * y.norm();
        const auto prob = RecoveryProblem::make(
            y, phi,
            {{1.0, AnalysisOperator::identity(n)}, {0.05, AnalysisOperator::unitary_dft(n)}},
            eps);
        const auto rep = solve_multi_l1(prob);
        const auto ref = oracle_subgradient(prob, 100000);
        CHECK(rep.objective <= ref.objective + 1e-3 * (1.0 + ref.objective));
        CHECK(rep.residual <= eps * (1.0 + 1e-6) + 1e-9);
    }
}

TEST_CASE("kkt feasibility diagnostics") {
    Rng rng(10);
    const auto phi = make_measurement_matrix(MatrixKind::Gaussian, 8, 16, 10);
    const Eigen::VectorXd y = random_vector(8, rng);
    const double eps = 0.1 * y.norm();
    const auto prob =
        RecoveryProblem::make(y, phi, {{1.0, AnalysisOperator::identity(16)}}, eps);

    const auto rep = solve_multi_l1(prob);
    const auto good = kkt_feasibility_check(rep, prob);
    CHECK_FALSE(good.violation);
    CHECK(good.slack >= -eps * 1e-6);

    SolveReport zero;
    zero.x_hat = Signal(Eigen::VectorXd::Zero(16));
    zero.residual = y.norm();
    const auto bad = kkt_feasibility_check(zero, prob);
    CHECK(bad.violation);
    CHECK(bad.slack < 0.0);
}

TEST_CASE("named solvers are thin wrappers over the general program") {
    Rng rng(11);
    const Eigen::Index n = 20, m = 10;
    const auto phi = make_measurement_matrix(MatrixKind::Gaussian, m, n, 11);
    const Eigen::VectorXd y = random_vector(m, rng);
    const double eps = 0.05 * y.norm();

    const auto direct = solve_t_l1(y, phi, eps);
    const auto general = solve_multi_l1(
        RecoveryProblem::make(y, phi, {{1.0, AnalysisOperator::identity(n)}}, eps));
    CHECK((direct.x_hat.samples - general.x_hat.samples).norm() < 1e-12);
    CHECK(direct.objective == doctest::Approx(general.objective));

    // lambda2 = 0 reduces the mixed program to the time-domain one.
    const auto mixed0 = solve_l1_l1(y, phi, eps, 0.0);
    CHECK(std::abs(mixed0.objective - direct.objective) < 1e-5 * (1.0 + direct.objective));
}

TEST_CASE("scaling every weight rescales the objective, not the solution") {
    Rng rng(12);
    const Eigen::Index n = 16, m = 8;
    const auto phi = make_measurement_matrix(MatrixKind::Gaussian, m, n, 12);
    const Eigen::VectorXd y = random_vector(m, rng);
    const double eps = 0.05 * y.norm();
    const auto p1 = RecoveryProblem::make(
        y, phi,
        {{1.0, AnalysisOperator::identity(n)}, {0.05, AnalysisOperator::unitary_dft(n)}}, eps);
    const auto p3 = RecoveryProblem::make(
        y, phi,
        {{3.0, AnalysisOperator::identity(n)}, {0.15, AnalysisOperator::unitary_dft(n)}}, eps);
    const auto r1 = solve_multi_l1(p1);
    const auto r3 = solve_multi_l1(p3);
    CHECK((r1.x_hat.samples - r3.x_hat.samples).norm() < 1e-4 * (1.0 + r1.x_hat.samples.norm()));
    CHECK(r3.objective == doctest::Approx(3.0 * r1.objective).epsilon(1e-4));
}
