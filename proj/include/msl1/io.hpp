#ifndef MSL1_IO_HPP
#define MSL1_IO_HPP

#include <string>
#include <vector>

#include "msl1/experiments.hpp"

namespace msl1 {

// One decimal sample per line; blank lines and '#' comments ignored.
std::vector<double> read_signal_file(const std::string& path);
std::vector<double> parse_signal_text(const std::string& text);
void write_signal_file(const std::string& path, const Eigen::VectorXd& samples);

// CSV rows `method,ratio,mean_rmse,stddev_rmse,mean_seconds,trials_ok`,
// numbers at 9 significant digits. Byte-stable for identical results.
std::string sweep_csv(const SweepResult& result);
void write_sweep_csv(const SweepResult& result, const std::string& path);

// Flat key=value run configuration. Unknown keys are rejected.
struct RunConfig {
    TrialSpec spec;
    SignalSource source;
    std::string input_path;
    std::string output_path;
};

RunConfig parse_config(const std::string& text);
RunConfig read_config(const std::string& path);
std::string serialize_config(const RunConfig& config);

SourceKind parse_source_kind(const std::string& name);
std::string source_kind_name(SourceKind kind);
Method parse_method(const std::string& name);

}  // namespace msl1

#endif
