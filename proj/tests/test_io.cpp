#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "msl1/io.hpp"

using namespace msl1;

TEST_CASE("signal text parsing") {
    const auto v = parse_signal_text("1.0\n2.5\n");
    REQUIRE(v.size() == 2);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == 2.5);

    const auto w = parse_signal_text("# header comment\n\n0.0\n  -3e-2 \n");
    REQUIRE(w.size() == 2);
    CHECK(w[0] == 0.0);
    CHECK(w[1] == -3e-2);
}

TEST_CASE("malformed signal text reports the offending line") {
    try {
        parse_signal_text("1.0\nabc\n");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_signal_text(""), FormatError);
    CHECK_THROWS_AS(parse_signal_text("# only comments\n"), FormatError);
    CHECK_THROWS_AS(parse_signal_text("1.0 2.0\n"), FormatError);
}

TEST_CASE("signal files round-trip at full precision") {
    const char* path = "io_roundtrip.txt";
    Eigen::VectorXd x(3);
    x << 0.1, -1.0 / 3.0, 1e-17;
    write_signal_file(path, x);
    const auto back = read_signal_file(path);
    REQUIRE(back.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(back[static_cast<std::size_t>(i)] == x[i]);
    std::remove(path);
}

TEST_CASE("config serialization round-trips") {
    RunConfig cfg;
    cfg.spec.n = 128;
    cfg.spec.ratios = {0.25, 0.625};
    cfg.spec.trial_count = 7;
    cfg.spec.epsilon_frac = 0.03;
    cfg.spec.lambda2 = 0.1;
    cfg.spec.methods = {Method::L1L1, Method::LS};
    cfg.spec.base_seed = 42;
    cfg.spec.solver.rho = 2.0;
    cfg.spec.solver.max_iters = 1234;
    cfg.spec.measure_time = true;
    cfg.source.kind = SourceKind::SyntheticDualSparse;
    cfg.source.k_time = 5;
    cfg.source.burst_width = 64.0;
    cfg.output_path = "out.csv";

    const RunConfig back = parse_config(serialize_config(cfg));
    CHECK(back.spec.n == 128);
    CHECK(back.spec.ratios == cfg.spec.ratios);
    CHECK(back.spec.trial_count == 7);
    CHECK(back.spec.epsilon_frac == 0.03);
    CHECK(back.spec.lambda2 == 0.1);
    CHECK(back.spec.methods == cfg.spec.methods);
    CHECK(back.spec.base_seed == 42);
    CHECK(back.spec.solver.rho == 2.0);
    CHECK(back.spec.solver.max_iters == 1234);
    CHECK(back.spec.measure_time);
    CHECK(back.source.kind == SourceKind::SyntheticDualSparse);
    CHECK(back.source.k_time == 5);
    CHECK(back.source.burst_width == 64.0);
    CHECK(back.output_path == "out.csv");
    // serializing twice is byte-stable
    CHECK(serialize_config(back) == serialize_config(cfg));
}

TEST_CASE("config parsing rejects unknown keys and bad values") {
    CHECK_THROWS_AS(parse_config("nn = 4\n"), FormatError);
    CHECK_THROWS_AS(parse_config("n 4\n"), FormatError);
    CHECK_THROWS_AS(parse_config("methods = X-L1\n"), FormatError);
    CHECK_THROWS_AS(parse_config("source = wavelet\n"), FormatError);
    // defaults survive an empty config
    const RunConfig cfg = parse_config("");
    CHECK(cfg.spec.n == 512);
    CHECK(cfg.spec.ratios.size() == 8);
    CHECK(cfg.spec.methods.size() == 4);
    CHECK(cfg.spec.epsilon_frac == 0.05);
    CHECK(cfg.spec.lambda2 == 0.05);
}

TEST_CASE("csv layout") {
    SweepResult empty;
    CHECK(sweep_csv(empty) == "method,ratio,mean_rmse,stddev_rmse,mean_seconds,trials_ok\n");

    SweepResult one;
    SweepResult::Cell cell;
    cell.method = Method::FL1;
    cell.ratio = 0.375;
    cell.mean_rmse = 0.5;
    cell.stddev_rmse = 0.25;
    cell.trials_ok = 12;
    one.cells.push_back(cell);
    CHECK(sweep_csv(one) ==
          "method,ratio,mean_rmse,stddev_rmse,mean_seconds,trials_ok\n"
          "F-L1,0.375,0.5,0.25,0,12\n");
    CHECK(sweep_csv(one) == sweep_csv(one));
}

TEST_CASE("golden mini-sweep CSV is byte-stable") {
    const RunConfig cfg = parse_config(
        "n = 64\n"
        "ratios = 0.25, 0.5\n"
        "trials = 4\n"
        "methods = T-L1, LS\n"
        "base_seed = 3\n"
        "source = spikes\n"
        "k_time = 2\n");
    const std::string csv = sweep_csv(run_sweep(cfg.spec, cfg.source));
    CHECK(csv ==
          "method,ratio,mean_rmse,stddev_rmse,mean_seconds,trials_ok\n"
          "T-L1,0.25,0.0551103559,0.00410206965,0,4\n"
          "LS,0.25,0.887515268,0.0353021678,0,4\n"
          "T-L1,0.5,0.0511510575,0.00324925449,0,4\n"
          "LS,0.5,0.719353851,0.0605635068,0,4\n");
}
