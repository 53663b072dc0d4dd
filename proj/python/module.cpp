// Python bindings for the main operations: operator construction, the
// multi-L1 solver family, signal generation, and the Monte Carlo sweep.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msl1/io.hpp"

namespace py = pybind11;
using namespace msl1;

namespace {

MatrixKind matrix_kind(const std::string& name) {
    if (name == "gaussian") return MatrixKind::Gaussian;
    if (name == "bernoulli") return MatrixKind::Bernoulli;
    if (name == "partial-fourier") return MatrixKind::PartialFourier;
    throw py::value_error("unknown matrix kind '" + name + "'");
}

SolverConfig config_from_kwargs(double rho, int max_iters, double abs_tol, double rel_tol,
                                double over_relaxation) {
    SolverConfig c;
    c.rho = rho;
    c.max_iters = max_iters;
    c.abs_tol = abs_tol;
    c.rel_tol = rel_tol;
    c.over_relaxation = over_relaxation;
    return c;
}

}  // namespace

PYBIND11_MODULE(_msl1, m) {
    m.doc() = "multi-domain sparse recovery (T-L1 / F-L1 / L1-L1 / multi-L1)";

    py::class_<SolveReport>(m, "SolveReport")
        .def_property_readonly("x_hat",
                               [](const SolveReport& r) { return r.x_hat.samples; })
        .def_readonly("objective", &SolveReport::objective)
        .def_readonly("residual", &SolveReport::residual)
        .def_readonly("iterations", &SolveReport::iterations)
        .def_readonly("converged", &SolveReport::converged)
        .def_readonly("wall_time", &SolveReport::wall_time)
        .def("__repr__", [](const SolveReport& r) {
            return "SolveReport(objective=" + std::to_string(r.objective) +
                   ", residual=" + std::to_string(r.residual) +
                   ", iterations=" + std::to_string(r.iterations) +
                   ", converged=" + std::string(r.converged ? "True" : "False") + ")";
        });

    m.def(
        "make_measurement_matrix",
        [](const std::string& kind, Eigen::Index mm, Eigen::Index n, std::uint64_t seed) {
            return make_measurement_matrix(matrix_kind(kind), mm, n, seed).entries;
        },
        py::arg("kind"), py::arg("m"), py::arg("n"), py::arg("seed") = 0,
        "M x N sensing matrix; kind is gaussian, bernoulli, or partial-fourier");

    m.def(
        "generate_signal",
        [](const std::string& kind, Eigen::Index n, std::uint64_t seed, int k_time, int k_freq,
           double burst_width) {
            SignalSource s;
            s.kind = parse_source_kind(kind);
            s.seed = seed;
            s.k_time = k_time;
            s.k_freq = k_freq;
            s.burst_width = burst_width;
            return generate_signal(s, n).samples;
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 0, py::arg("k_time") = 0,
        py::arg("k_freq") = 3, py::arg("burst_width") = 0.0,
        "unit-norm synthetic signal; kind is spikes, tones, dual-sparse, or freq-dense");

    m.def(
        "unitary_dft",
        [](const Eigen::VectorXd& x) {
            return AnalysisOperator::unitary_dft(x.size()).apply(x);
        },
        py::arg("x"));

    m.def(
        "compressibility",
        [](const Eigen::VectorXcd& theta, Eigen::Index k) { return compressibility(theta, k); },
        py::arg("theta"), py::arg("k"));

    m.def(
        "solve_t_l1",
        [](const Eigen::VectorXd& y, const Eigen::MatrixXd& phi, double epsilon, double rho,
           int max_iters, double abs_tol, double rel_tol, double over_relaxation) {
            return solve_t_l1(y, MeasurementMatrix::dense(phi), epsilon,
                              config_from_kwargs(rho, max_iters, abs_tol, rel_tol,
                                                 over_relaxation));
        },
        py::arg("y"), py::arg("phi"), py::arg("epsilon"), py::arg("rho") = 1.0,
        py::arg("max_iters") = 20000, py::arg("abs_tol") = 1e-7, py::arg("rel_tol") = 1e-5,
        py::arg("over_relaxation") = 1.6);
    m.def(
        "solve_f_l1",
        [](const Eigen::VectorXd& y, const Eigen::MatrixXd& phi, double epsilon, double rho,
           int max_iters, double abs_tol, double rel_tol, double over_relaxation) {
            return solve_f_l1(y, MeasurementMatrix::dense(phi), epsilon,
                              config_from_kwargs(rho, max_iters, abs_tol, rel_tol,
                                                 over_relaxation));
        },
        py::arg("y"), py::arg("phi"), py::arg("epsilon"), py::arg("rho") = 1.0,
        py::arg("max_iters") = 20000, py::arg("abs_tol") = 1e-7, py::arg("rel_tol") = 1e-5,
        py::arg("over_relaxation") = 1.6);
    m.def(
        "solve_l1_l1",
        [](const Eigen::VectorXd& y, const Eigen::MatrixXd& phi, double epsilon, double lambda2,
           double rho, int max_iters, double abs_tol, double rel_tol, double over_relaxation) {
            return solve_l1_l1(y, MeasurementMatrix::dense(phi), epsilon, lambda2,
                               config_from_kwargs(rho, max_iters, abs_tol, rel_tol,
                                                  over_relaxation));
        },
        py::arg("y"), py::arg("phi"), py::arg("epsilon"), py::arg("lambda2") = 0.05,
        py::arg("rho") = 1.0, py::arg("max_iters") = 20000, py::arg("abs_tol") = 1e-7,
        py::arg("rel_tol") = 1e-5, py::arg("over_relaxation") = 1.6);
    m.def(
        "solve_ls_baseline",
        [](const Eigen::VectorXd& y, const Eigen::MatrixXd& phi) {
            return solve_ls_baseline(y, MeasurementMatrix::dense(phi));
        },
        py::arg("y"), py::arg("phi"));

    m.def(
        "rmse",
        [](const std::vector<Eigen::VectorXd>& originals,
           const std::vector<Eigen::VectorXd>& estimates) {
            std::vector<Signal> xs, xhs;
            for (const auto& v : originals) xs.emplace_back(v);
            for (const auto& v : estimates) xhs.emplace_back(v);
            return rmse(xs, xhs);
        },
        py::arg("originals"), py::arg("estimates"));

    m.def(
        "run_sweep_csv",
        [](const std::string& config_text) {
            const RunConfig cfg = parse_config(config_text);
            return sweep_csv(run_sweep(cfg.spec, cfg.source));
        },
        py::arg("config_text"),
        "run a Monte Carlo sweep described by key=value text; returns the CSV");
}
