#ifndef MSL1_EXPERIMENTS_HPP
#define MSL1_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "msl1/signal.hpp"
#include "msl1/solver.hpp"

namespace msl1 {

// Mean over trials of the relative L2 reconstruction error.
double rmse(const std::vector<Signal>& originals, const std::vector<Signal>& estimates);

enum class SourceKind {
    FileTrace,
    SyntheticSpikes,
    SyntheticTones,
    SyntheticDualSparse,
    SyntheticFreqDense
};

struct SignalSource {
    SourceKind kind = SourceKind::SyntheticSpikes;
    int k_time = 0;  // 0 = per-kind default (3; N/8 for SyntheticFreqDense)
    int k_freq = 3;
    double burst_width = 0.0;  // envelope std dev for DualSparse; 0 = N/2
    double noise_floor = 0.0;  // relative amplitude of added white noise
    std::uint64_t seed = 0;
    std::string path;      // FileTrace only
    long offset = 0;       // FileTrace window start
};

// Unit-norm signal from the source. Synthetic dual-sparse and freq-dense
// kinds are checked against their compressibility contracts and regenerated
// with the next sub-seed on violation (at most 100 attempts).
Signal generate_signal(const SignalSource& source, Eigen::Index n);

// Window of n samples starting at `offset`, mean-subtracted, unit-normalized.
Signal ingest_trace(const std::string& path, Eigen::Index n, long offset);
Signal window_trace(const std::vector<double>& samples, Eigen::Index n, long offset);

enum class Method { LS, TL1, FL1, L1L1 };

std::string method_name(Method m);

struct TrialSpec {
    Eigen::Index n = 512;
    std::vector<double> ratios;
    int trial_count = 40;
    double epsilon_frac = 0.05;
    double lambda2 = 0.05;
    std::vector<Method> methods;
    std::uint64_t base_seed = 0;
    SolverConfig solver;
    bool measure_time = false;  // timing column stays 0 (and deterministic) unless set
};

struct SweepResult {
    struct Cell {
        Method method = Method::LS;
        double ratio = 0.0;
        std::vector<double> per_trial_rmse;  // NaN where the trial failed
        double mean_rmse = 0.0;
        double stddev_rmse = 0.0;
        double mean_seconds = 0.0;
        int trials_ok = 0;
        bool valid = false;  // false when more than half the trials failed
    };
    std::vector<Cell> cells;
};

// The Monte Carlo protocol: for each (ratio, trial), derive a per-trial seed,
// draw the signal, build a Gaussian measurement matrix, sample, and solve
// with every requested method. Deterministic given (spec, source).
SweepResult run_sweep(const TrialSpec& spec, const SignalSource& source);

}  // namespace msl1

#endif
