#include "msl1/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "msl1/errors.hpp"
#include "msl1/fft.hpp"
#include "msl1/io.hpp"
#include "msl1/rng.hpp"

namespace msl1 {

double rmse(const std::vector<Signal>& originals, const std::vector<Signal>& estimates) {
    if (originals.empty() || originals.size() != estimates.size())
        throw DimensionError("rmse: lists must be nonempty and of equal length");
    double acc = 0.0;
    for (std::size_t l = 0; l < originals.size(); ++l) {
        if (originals[l].size() != estimates[l].size())
            throw DimensionError("rmse: signal lengths differ within a pair");
        const double denom = originals[l].samples.norm();
        if (denom == 0.0) throw UndefinedInputError("rmse: zero-norm original");
        acc += (originals[l].samples - estimates[l].samples).norm() / denom;
    }
    return acc / static_cast<double>(originals.size());
}

namespace {

Eigen::VectorXd spikes(Eigen::Index n, int k, Rng& rng) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<Eigen::Index>(
                               rng.uniform_int(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
        double a = 0.0;
        while (a == 0.0) a = rng.normal();
        x[idx[static_cast<std::size_t>(i)]] = a;
    }
    return x;
}

Eigen::VectorXd tones(Eigen::Index n, int k, Rng& rng) {
    // k distinct bins in [1, N/2 - 1]: each activates exactly one conjugate pair.
    const Eigen::Index lo = 1, hi = n / 2 - 1;
    std::vector<Eigen::Index> bins(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < bins.size(); ++i) bins[i] = lo + static_cast<Eigen::Index>(i);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       static_cast<std::size_t>(rng.uniform_int(bins.size() - static_cast<std::size_t>(i)));
        std::swap(bins[static_cast<std::size_t>(i)], bins[j]);
        const double freq = static_cast<double>(bins[static_cast<std::size_t>(i)]);
        const double amp = rng.uniform(0.5, 1.5);
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (Eigen::Index t = 0; t < n; ++t)
            x[t] += amp * std::cos(2.0 * std::numbers::pi * freq * static_cast<double>(t) /
                                       static_cast<double>(n) +
                                   phase);
    }
    return x;
}

Eigen::Index comb_spacing(Eigen::Index n) {
    // Divisor of N balancing tooth count (N/d) against line count (d).
    Eigen::Index best = 0, best_cost = n + 1;
    for (Eigen::Index d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        const Eigen::Index cost = std::max(n / d, d);
        if (cost < best_cost) {
            best = d;
            best_cost = cost;
        }
    }
    if (best == 0) throw GenerationError("N has no usable comb spacing");
    return best;
}

// A pulse train under a smooth multi-bump envelope: sparse teeth in time,
// comb lines in frequency.
Eigen::VectorXd dual_sparse(Eigen::Index n, int k, double sigma, Rng& rng) {
    const Eigen::Index d = comb_spacing(n);
    if (sigma <= 0.0) sigma = static_cast<double>(n) / 2.0;
    Eigen::VectorXd env = Eigen::VectorXd::Zero(n);
    for (int b = 0; b < k; ++b) {
        const auto center = static_cast<double>(rng.uniform_int(static_cast<std::uint64_t>(n)));
        const double amp = rng.uniform(0.7, 1.3);
        for (Eigen::Index t = 0; t < n; ++t) {
            const double straight = std::abs(static_cast<double>(t) - center);
            const double dist = std::min(straight, static_cast<double>(n) - straight);
            env[t] += amp * std::exp(-0.5 * (dist / sigma) * (dist / sigma));
        }
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    const auto phase = static_cast<Eigen::Index>(rng.uniform_int(static_cast<std::uint64_t>(d)));
    for (Eigen::Index t = phase; t < n; t += d) x[t] = env[t];
    return x;
}

Eigen::VectorXd freq_dense(Eigen::Index n, int k, Rng& rng) {
    // Spike train with white amplitudes: compact in time, spread in frequency.
    return spikes(n, k, rng);
}

void add_noise(Eigen::VectorXd& x, double relative, Rng& rng) {
    if (relative <= 0.0) return;
    const double scale = relative * x.norm() / std::sqrt(static_cast<double>(x.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] += scale * rng.normal();
}

}  // namespace

Signal generate_signal(const SignalSource& source, Eigen::Index n) {
    if (n < 1) throw DimensionError("signal length must be positive");
    if (source.kind == SourceKind::FileTrace)
        return ingest_trace(source.path, n, source.offset);

    int k_time = source.k_time;
    if (k_time == 0)
        k_time = source.kind == SourceKind::SyntheticFreqDense
                     ? std::max<int>(4, static_cast<int>(n / 8))
                     : 3;
    if (source.kind == SourceKind::SyntheticSpikes || source.kind == SourceKind::SyntheticDualSparse ||
        source.kind == SourceKind::SyntheticFreqDense) {
        if (k_time < 1 || static_cast<Eigen::Index>(k_time) > n)
            throw DimensionError("k_time out of range");
    }
    if (source.kind == SourceKind::SyntheticTones &&
        (source.k_freq < 1 || static_cast<Eigen::Index>(source.k_freq) > n / 2 - 1))
        throw DimensionError("k_freq out of range");

    const Eigen::Index k10 = std::max<Eigen::Index>(1, n / 10);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Rng rng(Rng::derive(source.seed, 0x5347454eull, static_cast<std::uint64_t>(attempt)));
        Eigen::VectorXd x;
        switch (source.kind) {
            case SourceKind::SyntheticSpikes:
                x = spikes(n, k_time, rng);
                break;
            case SourceKind::SyntheticTones:
                x = tones(n, source.k_freq, rng);
                break;
            case SourceKind::SyntheticDualSparse:
                x = dual_sparse(n, k_time, source.burst_width, rng);
                break;
            case SourceKind::SyntheticFreqDense:
                x = freq_dense(n, k_time, rng);
                break;
            case SourceKind::FileTrace:
                break;  // handled above
        }
        add_noise(x, source.noise_floor, rng);
        if (x.norm() == 0.0) continue;

        if (source.kind == SourceKind::SyntheticDualSparse) {
            const Eigen::VectorXcd theta = detail::unitary_dft(x);
            if (compressibility(x, k10) < 0.95 || compressibility(theta, k10) < 0.95) continue;
        } else if (source.kind == SourceKind::SyntheticFreqDense) {
            const Eigen::VectorXcd theta = detail::unitary_dft(x);
            if (compressibility(x, k10) < 0.95 || compressibility(theta, k10) >= 0.7) continue;
        }
        return Signal::unit_norm(std::move(x));
    }
    throw GenerationError("could not satisfy compressibility contract in 100 attempts");
}

Signal window_trace(const std::vector<double>& samples, Eigen::Index n, long offset) {
    if (offset < 0) throw FormatError("negative trace offset");
    if (static_cast<long>(samples.size()) < offset + static_cast<long>(n))
        throw FormatError("trace too short for requested window");
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i)
        x[i] = samples[static_cast<std::size_t>(offset + static_cast<long>(i))];
    x.array() -= x.mean();
    if (x.norm() == 0.0) throw UndefinedInputError("trace window is constant");
    return Signal::unit_norm(std::move(x));
}

Signal ingest_trace(const std::string& path, Eigen::Index n, long offset) {
    return window_trace(read_signal_file(path), n, offset);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::LS: return "LS";
        case Method::TL1: return "T-L1";
        case Method::FL1: return "F-L1";
        case Method::L1L1: return "L1-L1";
    }
    return "?";
}

SweepResult run_sweep(const TrialSpec& spec, const SignalSource& source) {
    if (spec.n < 1) throw DimensionError("sweep: N must be positive");
    if (spec.trial_count < 1) throw DimensionError("sweep: trial_count must be positive");
    if (spec.ratios.empty()) throw DimensionError("sweep: ratio grid is empty");
    for (std::size_t i = 0; i < spec.ratios.size(); ++i) {
        const double r = spec.ratios[i];
        if (r <= 0.0 || r > 1.0) throw DimensionError("sweep: ratios must lie in (0, 1]");
        if (i > 0 && r <= spec.ratios[i - 1])
            throw DimensionError("sweep: ratios must be strictly increasing");
        if (static_cast<Eigen::Index>(r * static_cast<double>(spec.n)) < 1)
            throw DimensionError("sweep: ratio * N below one measurement");
    }
    if (spec.methods.empty()) throw DimensionError("sweep: no methods selected");

    std::vector<double> trace;
    if (source.kind == SourceKind::FileTrace) trace = read_signal_file(source.path);

    SweepResult result;
    const auto trials = static_cast<std::size_t>(spec.trial_count);
    for (std::size_t ri = 0; ri < spec.ratios.size(); ++ri) {
        const double ratio = spec.ratios[ri];
        const auto m = static_cast<Eigen::Index>(ratio * static_cast<double>(spec.n));
        std::vector<SweepResult::Cell> cells(spec.methods.size());
        for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
            cells[mi].method = spec.methods[mi];
            cells[mi].ratio = ratio;
            cells[mi].per_trial_rmse.assign(trials, std::nan(""));
        }
        std::vector<double> time_acc(spec.methods.size(), 0.0);

        for (std::size_t l = 0; l < trials; ++l) {
            const std::uint64_t trial_seed =
                Rng::derive(spec.base_seed, static_cast<std::uint64_t>(ri),
                            static_cast<std::uint64_t>(l));
            Signal x;
            try {
                if (source.kind == SourceKind::FileTrace) {
                    const long span = static_cast<long>(trace.size()) - static_cast<long>(spec.n);
                    if (span < 0) throw FormatError("trace shorter than N");
                    const long off =
                        (source.offset + static_cast<long>(l) * static_cast<long>(spec.n)) %
                        (span + 1);
                    x = window_trace(trace, spec.n, off);
                } else {
                    SignalSource per_trial = source;
                    per_trial.seed = trial_seed;
                    x = generate_signal(per_trial, spec.n);
                }
            } catch (const std::exception&) {
                continue;  // all method cells keep NaN for this trial
            }
            const auto phi = make_measurement_matrix(MatrixKind::Gaussian, m, spec.n,
                                                     Rng::derive(trial_seed, 0x504849ull, 0));
            const Eigen::VectorXd y = sample(phi, x);
            const double eps = spec.epsilon_frac * y.norm();

            for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
                const auto t0 = std::chrono::steady_clock::now();
                try {
                    SolveReport rep;
                    switch (spec.methods[mi]) {
                        case Method::LS: rep = solve_ls_baseline(y, phi); break;
                        case Method::TL1: rep = solve_t_l1(y, phi, eps, spec.solver); break;
                        case Method::FL1: rep = solve_f_l1(y, phi, eps, spec.solver); break;
                        case Method::L1L1:
                            rep = solve_l1_l1(y, phi, eps, spec.lambda2, spec.solver);
                            break;
                    }
                    cells[mi].per_trial_rmse[l] =
                        (x.samples - rep.x_hat.samples).norm() / x.samples.norm();
                } catch (const std::exception&) {
                    // failed trial stays NaN
                }
                if (spec.measure_time)
                    time_acc[mi] += std::chrono::duration<double>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count();
            }
        }

        for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
            auto& cell = cells[mi];
            double sum = 0.0;
            int ok = 0;
            for (double e : cell.per_trial_rmse)
                if (!std::isnan(e)) {
                    sum += e;
                    ++ok;
                }
            cell.trials_ok = ok;
            cell.valid = ok * 2 > spec.trial_count;
            cell.mean_rmse = ok > 0 ? sum / ok : std::nan("");
            double var = 0.0;
            for (double e : cell.per_trial_rmse)
                if (!std::isnan(e)) var += (e - cell.mean_rmse) * (e - cell.mean_rmse);
            cell.stddev_rmse = ok > 1 ? std::sqrt(var / (ok - 1)) : 0.0;
            cell.mean_seconds = (spec.measure_time && ok > 0) ? time_acc[mi] / ok : 0.0;
            result.cells.push_back(std::move(cell));
        }
    }
    return result;
}

}  // namespace msl1
