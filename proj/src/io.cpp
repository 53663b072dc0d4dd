#include "msl1/io.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "msl1/errors.hpp"

namespace msl1 {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& tok, long line) {
    double v = 0.0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw FormatError("invalid number '" + tok + "'", line);
    return v;
}

long long parse_int(const std::string& tok, long line) {
    long long v = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw FormatError("invalid integer '" + tok + "'", line);
    return v;
}

std::uint64_t parse_u64(const std::string& tok, long line) {
    std::uint64_t v = 0;
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end)
        throw FormatError("invalid unsigned integer '" + tok + "'", line);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::vector<double> parse_signal_text(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        out.push_back(parse_double(t, line_no));
    }
    if (out.empty()) throw FormatError("no samples in signal file");
    return out;
}

std::vector<double> read_signal_file(const std::string& path) {
    return parse_signal_text(read_text(path));
}

void write_signal_file(const std::string& path, const Eigen::VectorXd& samples) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    for (Eigen::Index i = 0; i < samples.size(); ++i)
        out << fmt("%.17g", samples[i]) << '\n';
    if (!out) throw FormatError("write failed for '" + path + "'");
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "method,ratio,mean_rmse,stddev_rmse,mean_seconds,trials_ok\n";
    for (const auto& cell : result.cells) {
        out += method_name(cell.method);
        out += ',' + fmt("%.9g", cell.ratio);
        out += ',' + fmt("%.9g", cell.mean_rmse);
        out += ',' + fmt("%.9g", cell.stddev_rmse);
        out += ',' + fmt("%.9g", cell.mean_seconds);
        out += ',' + std::to_string(cell.trials_ok);
        out += '\n';
    }
    return out;
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << sweep_csv(result);
    if (!out) throw FormatError("write failed for '" + path + "'");
}

SourceKind parse_source_kind(const std::string& name) {
    if (name == "file") return SourceKind::FileTrace;
    if (name == "spikes") return SourceKind::SyntheticSpikes;
    if (name == "tones") return SourceKind::SyntheticTones;
    if (name == "dual-sparse") return SourceKind::SyntheticDualSparse;
    if (name == "freq-dense") return SourceKind::SyntheticFreqDense;
    throw FormatError("unknown source kind '" + name + "'");
}

std::string source_kind_name(SourceKind kind) {
    switch (kind) {
        case SourceKind::FileTrace: return "file";
        case SourceKind::SyntheticSpikes: return "spikes";
        case SourceKind::SyntheticTones: return "tones";
        case SourceKind::SyntheticDualSparse: return "dual-sparse";
        case SourceKind::SyntheticFreqDense: return "freq-dense";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "LS" || name == "ls") return Method::LS;
    if (name == "T-L1" || name == "t-l1") return Method::TL1;
    if (name == "F-L1" || name == "f-l1") return Method::FL1;
    if (name == "L1-L1" || name == "l1-l1") return Method::L1L1;
    throw FormatError("unknown method '" + name + "'");
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    cfg.spec.ratios = {0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};
    cfg.spec.methods = {Method::LS, Method::TL1, Method::FL1, Method::L1L1};

    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw FormatError("expected key=value", line_no);
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key == "n") cfg.spec.n = parse_int(val, line_no);
        else if (key == "ratios") {
            cfg.spec.ratios.clear();
            for (const auto& tok : split(val, ','))
                cfg.spec.ratios.push_back(parse_double(tok, line_no));
        } else if (key == "trials") cfg.spec.trial_count = static_cast<int>(parse_int(val, line_no));
        else if (key == "epsilon_frac") cfg.spec.epsilon_frac = parse_double(val, line_no);
        else if (key == "lambda2") cfg.spec.lambda2 = parse_double(val, line_no);
        else if (key == "methods") {
            cfg.spec.methods.clear();
            for (const auto& tok : split(val, ',')) cfg.spec.methods.push_back(parse_method(tok));
        } else if (key == "base_seed") cfg.spec.base_seed = parse_u64(val, line_no);
        else if (key == "source") cfg.source.kind = parse_source_kind(val);
        else if (key == "k_time") cfg.source.k_time = static_cast<int>(parse_int(val, line_no));
        else if (key == "k_freq") cfg.source.k_freq = static_cast<int>(parse_int(val, line_no));
        else if (key == "burst_width") cfg.source.burst_width = parse_double(val, line_no);
        else if (key == "noise_floor") cfg.source.noise_floor = parse_double(val, line_no);
        else if (key == "input") { cfg.input_path = val; cfg.source.path = val; }
        else if (key == "offset") cfg.source.offset = parse_int(val, line_no);
        else if (key == "output") cfg.output_path = val;
        else if (key == "rho") cfg.spec.solver.rho = parse_double(val, line_no);
        else if (key == "max_iters") cfg.spec.solver.max_iters = static_cast<int>(parse_int(val, line_no));
        else if (key == "abs_tol") cfg.spec.solver.abs_tol = parse_double(val, line_no);
        else if (key == "rel_tol") cfg.spec.solver.rel_tol = parse_double(val, line_no);
        else if (key == "over_relaxation") cfg.spec.solver.over_relaxation = parse_double(val, line_no);
        else if (key == "measure_time") cfg.spec.measure_time = parse_int(val, line_no) != 0;
        else throw FormatError("unknown key '" + key + "'", line_no);
    }
    return cfg;
}

RunConfig read_config(const std::string& path) { return parse_config(read_text(path)); }

std::string serialize_config(const RunConfig& cfg) {
    std::string out;
    out += "n = " + std::to_string(cfg.spec.n) + '\n';
    out += "ratios = ";
    for (std::size_t i = 0; i < cfg.spec.ratios.size(); ++i)
        out += (i ? ", " : "") + fmt("%.17g", cfg.spec.ratios[i]);
    out += '\n';
    out += "trials = " + std::to_string(cfg.spec.trial_count) + '\n';
    out += "epsilon_frac = " + fmt("%.17g", cfg.spec.epsilon_frac) + '\n';
    out += "lambda2 = " + fmt("%.17g", cfg.spec.lambda2) + '\n';
    out += "methods = ";
    for (std::size_t i = 0; i < cfg.spec.methods.size(); ++i)
        out += (i ? std::string(", ") : std::string()) + method_name(cfg.spec.methods[i]);
    out += '\n';
    out += "base_seed = " + std::to_string(cfg.spec.base_seed) + '\n';
    out += "source = " + source_kind_name(cfg.source.kind) + '\n';
    out += "k_time = " + std::to_string(cfg.source.k_time) + '\n';
    out += "k_freq = " + std::to_string(cfg.source.k_freq) + '\n';
    out += "burst_width = " + fmt("%.17g", cfg.source.burst_width) + '\n';
    out += "noise_floor = " + fmt("%.17g", cfg.source.noise_floor) + '\n';
    if (!cfg.input_path.empty()) out += "input = " + cfg.input_path + '\n';
    out += "offset = " + std::to_string(cfg.source.offset) + '\n';
    if (!cfg.output_path.empty()) out += "output = " + cfg.output_path + '\n';
    out += "rho = " + fmt("%.17g", cfg.spec.solver.rho) + '\n';
    out += "max_iters = " + std::to_string(cfg.spec.solver.max_iters) + '\n';
    out += "abs_tol = " + fmt("%.17g", cfg.spec.solver.abs_tol) + '\n';
    out += "rel_tol = " + fmt("%.17g", cfg.spec.solver.rel_tol) + '\n';
    out += "over_relaxation = " + fmt("%.17g", cfg.spec.solver.over_relaxation) + '\n';
    out += "measure_time = " + std::string(cfg.spec.measure_time ? "1" : "0") + '\n';
    return out;
}

}  // namespace msl1
