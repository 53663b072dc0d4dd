// Command-line driver: `gen` emits synthetic signal files, `recover` runs a
// single reconstruction, `sweep` runs the Monte Carlo RMSE comparison, and
// `bench` prints a timing table at the desk-scale problem size.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 infeasible.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "msl1/errors.hpp"
#include "msl1/io.hpp"

using namespace msl1;

namespace {

int run_gen(const std::string& kind, long n, std::uint64_t seed, int k_time, int k_freq,
            const std::string& out_path) {
    SignalSource source;
    source.kind = parse_source_kind(kind);
    if (source.kind == SourceKind::FileTrace)
        throw FormatError("gen requires a synthetic kind");
    source.seed = seed;
    source.k_time = k_time;
    source.k_freq = k_freq;
    const Signal x = generate_signal(source, n);
    if (out_path.empty()) {
        for (Eigen::Index i = 0; i < x.size(); ++i) std::printf("%.17g\n", x.samples[i]);
    } else {
        write_signal_file(out_path, x.samples);
    }
    return 0;
}

int run_recover(const std::string& input, const std::string& method, double ratio,
                std::uint64_t seed, double epsilon_frac, double lambda2,
                const std::string& output, long offset) {
    const auto trace = read_signal_file(input);
    const auto n = static_cast<Eigen::Index>(trace.size()) - offset;
    if (n < 1) throw FormatError("offset beyond end of input");
    const Signal x = window_trace(trace, n, offset);
    const auto m = static_cast<Eigen::Index>(ratio * static_cast<double>(n));
    const auto phi = make_measurement_matrix(MatrixKind::Gaussian, m, n, seed);
    const Eigen::VectorXd y = sample(phi, x);
    const double eps = epsilon_frac * y.norm();

    SolveReport rep;
    switch (parse_method(method)) {
        case Method::LS: rep = solve_ls_baseline(y, phi); break;
        case Method::TL1: rep = solve_t_l1(y, phi, eps); break;
        case Method::FL1: rep = solve_f_l1(y, phi, eps); break;
        case Method::L1L1: rep = solve_l1_l1(y, phi, eps, lambda2); break;
    }
    const double rel_err = (x.samples - rep.x_hat.samples).norm() / x.samples.norm();
    std::fprintf(stderr,
                 "n=%ld m=%ld objective=%.9g residual=%.9g iterations=%d converged=%d "
                 "rel_error=%.9g time=%.3fs\n",
                 static_cast<long>(n), static_cast<long>(m), rep.objective, rep.residual,
                 rep.iterations, rep.converged ? 1 : 0, rel_err, rep.wall_time);
    if (output.empty()) {
        for (Eigen::Index i = 0; i < rep.x_hat.size(); ++i)
            std::printf("%.17g\n", rep.x_hat.samples[i]);
    } else {
        write_signal_file(output, rep.x_hat.samples);
    }
    return 0;
}

int run_sweep_cmd(RunConfig cfg, const std::string& out_csv) {
    const SweepResult result = run_sweep(cfg.spec, cfg.source);
    const std::string path = !out_csv.empty() ? out_csv : cfg.output_path;
    if (path.empty()) {
        std::fputs(sweep_csv(result).c_str(), stdout);
    } else {
        write_sweep_csv(result, path);
    }
    return 0;
}

int run_bench() {
    const Eigen::Index n = 512, m = 256;
    SignalSource source;
    source.kind = SourceKind::SyntheticDualSparse;
    source.seed = 1;
    const Signal x = generate_signal(source, n);
    const auto phi = make_measurement_matrix(MatrixKind::Gaussian, m, n, 2);
    const Eigen::VectorXd y = sample(phi, x);
    const double eps = 0.05 * y.norm();
    std::printf("method,seconds,iterations,rel_error\n");
    for (Method method : {Method::LS, Method::TL1, Method::FL1, Method::L1L1}) {
        SolveReport rep;
        switch (method) {
            case Method::LS: rep = solve_ls_baseline(y, phi); break;
            case Method::TL1: rep = solve_t_l1(y, phi, eps); break;
            case Method::FL1: rep = solve_f_l1(y, phi, eps); break;
            case Method::L1L1: rep = solve_l1_l1(y, phi, eps, 0.05); break;
        }
        const double rel_err = (x.samples - rep.x_hat.samples).norm();
        std::printf("%s,%.3f,%d,%.6f\n", method_name(method).c_str(), rep.wall_time,
                    rep.iterations, rel_err);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-domain sparse signal recovery toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "emit a synthetic signal file");
    std::string gen_kind = "spikes", gen_out;
    long gen_n = 512;
    std::uint64_t gen_seed = 0;
    int gen_kt = 0, gen_kf = 3;
    gen->add_option("--kind", gen_kind, "spikes|tones|dual-sparse|freq-dense");
    gen->add_option("--n", gen_n, "signal length")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--k-time", gen_kt, "time-domain sparsity (0 = default)");
    gen->add_option("--k-freq", gen_kf, "tone count for the tones kind");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* rec = app.add_subcommand("recover", "single seeded reconstruction");
    std::string rec_input, rec_method = "l1-l1", rec_output;
    double rec_ratio = 0.5, rec_eps_frac = 0.05, rec_lambda2 = 0.05;
    std::uint64_t rec_seed = 0;
    long rec_offset = 0;
    rec->add_option("--input", rec_input, "signal file")->required();
    rec->add_option("--method", rec_method, "ls|t-l1|f-l1|l1-l1");
    rec->add_option("--ratio", rec_ratio, "sub-sampling ratio M/N in (0,1]");
    rec->add_option("--seed", rec_seed, "measurement matrix seed");
    rec->add_option("--epsilon-frac", rec_eps_frac, "epsilon as a fraction of ||y||");
    rec->add_option("--lambda2", rec_lambda2, "frequency-term weight for l1-l1");
    rec->add_option("--offset", rec_offset, "window start within the file");
    rec->add_option("--output", rec_output, "recovered signal file (default stdout)");

    auto* swp = app.add_subcommand("sweep", "Monte Carlo RMSE sweep, CSV out");
    std::string swp_config, swp_csv, swp_source = "dual-sparse", swp_methods, swp_ratios,
                swp_input;
    long swp_n = 512, swp_trials = 40, swp_offset = 0;
    double swp_eps_frac = 0.05, swp_lambda2 = 0.05;
    std::uint64_t swp_seed = 0;
    int swp_kt = 0, swp_kf = 3;
    bool swp_time = false;
    swp->add_option("--config", swp_config, "key=value config file");
    swp->add_option("--out-csv", swp_csv, "CSV output path (default stdout)");
    swp->add_option("--n", swp_n, "signal length");
    swp->add_option("--trials", swp_trials, "Monte Carlo trials per cell");
    swp->add_option("--ratios", swp_ratios, "comma-separated M/N grid");
    swp->add_option("--methods", swp_methods, "comma-separated subset of ls,t-l1,f-l1,l1-l1");
    swp->add_option("--source", swp_source, "spikes|tones|dual-sparse|freq-dense|file");
    swp->add_option("--input", swp_input, "trace file for source=file");
    swp->add_option("--offset", swp_offset, "trace window start");
    swp->add_option("--epsilon-frac", swp_eps_frac, "epsilon as a fraction of ||y||");
    swp->add_option("--lambda2", swp_lambda2, "frequency-term weight");
    swp->add_option("--seed", swp_seed, "base seed");
    swp->add_option("--k-time", swp_kt, "time-domain sparsity (0 = default)");
    swp->add_option("--k-freq", swp_kf, "tone count");
    swp->add_flag("--time", swp_time, "measure wall time (CSV no longer byte-stable)");

    auto* bench = app.add_subcommand("bench", "timing table at N=512, M=256");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // all usage problems share one exit code
    }

    try {
        if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_seed, gen_kt, gen_kf, gen_out);
        if (rec->parsed()) {
            if (rec_ratio <= 0.0 || rec_ratio > 1.0) {
                std::fprintf(stderr, "error: --ratio must lie in (0, 1]\n");
                return 1;
            }
            return run_recover(rec_input, rec_method, rec_ratio, rec_seed, rec_eps_frac,
                               rec_lambda2, rec_output, rec_offset);
        }
        if (swp->parsed()) {
            RunConfig cfg;
            if (!swp_config.empty()) {
                cfg = read_config(swp_config);
            } else {
                cfg = parse_config("");
                cfg.spec.n = swp_n;
                cfg.spec.trial_count = static_cast<int>(swp_trials);
                cfg.spec.epsilon_frac = swp_eps_frac;
                cfg.spec.lambda2 = swp_lambda2;
                cfg.spec.base_seed = swp_seed;
                cfg.source.kind = parse_source_kind(swp_source);
                cfg.source.k_time = swp_kt;
                cfg.source.k_freq = swp_kf;
                cfg.source.path = swp_input;
                cfg.source.offset = swp_offset;
                cfg.spec.measure_time = swp_time;
                if (!swp_ratios.empty()) {
                    cfg.spec.ratios.clear();
                    std::istringstream ss(swp_ratios);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        cfg.spec.ratios.push_back(std::stod(tok));
                }
                if (!swp_methods.empty()) {
                    cfg.spec.methods.clear();
                    std::istringstream ss(swp_methods);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        cfg.spec.methods.push_back(parse_method(tok));
                }
            }
            return run_sweep_cmd(std::move(cfg), swp_csv);
        }
        if (bench->parsed()) return run_bench();
    } catch (const InfeasibleError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return 3;
    } catch (const FormatError& e) {
        if (e.line > 0)
            std::fprintf(stderr, "format error at line %ld: %s\n", e.line, e.what());
        else
            std::fprintf(stderr, "format error: %s\n", e.what());
        return 2;
    } catch (const GenerationError& e) {
        std::fprintf(stderr, "generation error: %s\n", e.what());
        return 2;
    } catch (const IllConditionedError& e) {
        std::fprintf(stderr, "ill-conditioned: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
