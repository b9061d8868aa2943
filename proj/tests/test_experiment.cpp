#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "secdof/experiment.hpp"
#include "secdof/validate.hpp"

using namespace secdof;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("minimal MAC config gets the documented defaults") {
  const auto cfg = parse_config(
      "kind = MAC\nK = 2\nM = 3\nN = 4\nNE = 2\n");
  CHECK(cfg.system.scheme == Scheme::Auto);
  CHECK(cfg.system.alpha == 0.5);
  CHECK(cfg.p_start == 30);
  CHECK(cfg.p_stop == 60);
  CHECK(cfg.p_step == 5);
  CHECK(cfg.trials == 50);
  CHECK(cfg.seed == 0);
  CHECK(cfg.system.eavesdroppers == 1);
  CHECK(cfg.out == "sweep.csv");
}

TEST_CASE("comments, spacing and IC defaults") {
  const auto cfg = parse_config(
      "# interference channel\nkind = IC\nM = 4  # antennas\nNE = 2\n");
  CHECK(cfg.system.num_tx == 2);
  CHECK(cfg.system.rx_antennas == 4);
}

TEST_CASE("validation failures surface from parsing") {
  try {
    parse_config("kind = MAC\nK = 2\nM = 3\nN = 4\nNE = 3\n");
    FAIL("expected IndivisibleStreams");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndivisibleStreams);
    CHECK(exit_code_for(e.code()) == 1);
  }
}

TEST_CASE("inverted grids and unknown keys are parse errors") {
  try {
    parse_config("kind = MAC\nK = 2\nM = 3\nN = 4\nNE = 2\np_db = 60:30:5\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 6") != std::string::npos);
  }
  CHECK_THROWS_AS(
      parse_config("kind = MAC\nK = 2\nM = 3\nN = 4\nNE = 2\nbogus = 1\n"),
      Error);
  CHECK_THROWS_AS(parse_config("kind = MAC\nK = 2\nM = 3\nN = 4\n"), Error);
}

TEST_CASE("config print/parse round trip") {
  ExperimentConfig cfg;
  cfg.system.kind = Kind::MAC;
  cfg.system.num_tx = 3;
  cfg.system.tx_antennas = 5;
  cfg.system.rx_antennas = 4;
  cfg.system.max_eve_antennas = 3;
  cfg.system.alpha = 0.375;
  cfg.system.scheme = Scheme::Hybrid;
  cfg.system.eavesdroppers = 2;
  cfg.p_start = 25.5;
  cfg.p_stop = 62;
  cfg.p_step = 2.5;
  cfg.trials = 17;
  cfg.seed = 123456789;
  cfg.out = "curve.csv";
  CHECK(parse_config(print_config(cfg)) == cfg);

  ExperimentConfig ic_cfg;
  ic_cfg.system.kind = Kind::IC;
  ic_cfg.system.tx_antennas = 4;
  ic_cfg.system.rx_antennas = 4;
  ic_cfg.system.max_eve_antennas = 2;
  CHECK(parse_config(print_config(ic_cfg)) == ic_cfg);
}

TEST_CASE("power grid expansion") {
  ExperimentConfig cfg;
  const auto grid = power_grid(cfg);
  REQUIRE(grid.size() == 7);
  CHECK(grid.front() == 30);
  CHECK(grid.back() == 60);
}

TEST_CASE("csv schema is pinned") {
  RateCurve curve;
  curve.points = {{30, 1.5, 0.25, 3}, {40, 2.0, 0.25, 3}};
  curve.slope = 1.25;
  curve.slope_stderr = 0.0625;
  SdofReport report;
  report.upper_bound = 3;
  const std::string csv = render_csv(curve, report);
  CHECK(csv ==
        "p_db,sum_rate_bits,eav_rate_bits,trials\n"
        "30,1.5,0.25,3\n"
        "40,2,0.25,3\n"
        "# slope=1.25 stderr=0.0625 upper_bound=3\n");
}

TEST_CASE("bound subcommand prints regime and values") {
  const auto cfg = parse_config("kind = MAC\nK = 2\nM = 5\nN = 3\nNE = 2\n");
  std::ostringstream out, err;
  CHECK(run("bound", cfg, out, err) == 0);
  CHECK(out.str().find("regime = AboveN") != std::string::npos);
  CHECK(out.str().find("upper_bound = 3") != std::string::npos);
  CHECK(out.str().find("achievable = 3") != std::string::npos);
}

TEST_CASE("round trip holds across randomized valid configs") {
  const int kinds[] = {0, 1};
  int checked = 0;
  for (int kind : kinds)
    for (int m = 3; m <= 6; ++m)
      for (int ne = 2; ne < m; ne += 2)
        for (double alpha : {0.25, 0.5}) {
          ExperimentConfig cfg;
          cfg.system.kind = kind == 0 ? Kind::MAC : Kind::IC;
          cfg.system.num_tx = 2;
          cfg.system.tx_antennas = m;
          cfg.system.rx_antennas = kind == 0 ? m + 1 : m;
          cfg.system.max_eve_antennas = ne;
          cfg.system.alpha = alpha;
          cfg.trials = 1 + m;
          cfg.seed = 1000 + m;
          cfg.out = "x.csv";
          CHECK(parse_config(print_config(cfg)) == cfg);
          ++checked;
        }
  CHECK(checked >= 16);
}

TEST_CASE("bound subcommand handles the interference channel") {
  const auto cfg = parse_config("kind = IC\nM = 4\nNE = 2\n");
  std::ostringstream out, err;
  CHECK(run("bound", cfg, out, err) == 0);
  CHECK(out.str().find("kind = IC") != std::string::npos);
  CHECK(out.str().find("upper_bound = 3") != std::string::npos);
}

TEST_CASE("sweep subcommand writes deterministic csv files") {
  auto cfg = parse_config(
      "kind = MAC\nK = 2\nM = 5\nN = 3\nNE = 2\n"
      "trials = 3\nseed = 7\np_db = 30:60:15\nout = test_sweep_a.csv\n");
  std::ostringstream out, err;
  REQUIRE(run("sweep", cfg, out, err) == 0);
  const std::string first = slurp("test_sweep_a.csv");
  cfg.out = "test_sweep_b.csv";
  REQUIRE(run("sweep", cfg, out, err, 4) == 0);
  const std::string second = slurp("test_sweep_b.csv");
  CHECK(first == second);
  CHECK(first.rfind("p_db,sum_rate_bits,eav_rate_bits,trials\n", 0) == 0);
  CHECK(first.find("# slope=") != std::string::npos);
  std::remove("test_sweep_a.csv");
  std::remove("test_sweep_b.csv");
}

TEST_CASE("infeasible sweeps exit with status 2 and name the constraint") {
  const auto cfg = parse_config(
      "kind = MAC\nK = 2\nM = 3\nN = 5\nNE = 2\ntrials = 2\n"
      "out = test_sweep_c.csv\n");
  std::ostringstream out, err;
  CHECK(run("sweep", cfg, out, err) == 2);
  CHECK(err.str().find("L=2") != std::string::npos);
  CHECK(err.str().find("upper_bound = 4") != std::string::npos);
}

TEST_CASE("binning subcommand reports the design rule and ratio") {
  const auto cfg = parse_config("kind = MAC\nK = 2\nM = 3\nN = 4\nNE = 2\n");
  std::ostringstream out, err;
  CHECK(run("binning", cfg, out, err) == 0);
  CHECK(out.str().find("I_main") != std::string::npos);
  CHECK(out.str().find("design R_t") != std::string::npos);
  CHECK(out.str().find("best equivocation ratio") != std::string::npos);
}

TEST_CASE("exit codes map the documented failure classes") {
  CHECK(exit_code_for(Errc::ParseError) == 1);
  CHECK(exit_code_for(Errc::InvalidAntennaCounts) == 1);
  CHECK(exit_code_for(Errc::IndivisibleStreams) == 1);
  CHECK(exit_code_for(Errc::Infeasible) == 2);
  CHECK(exit_code_for(Errc::SchemeRegimeMismatch) == 2);
  CHECK(exit_code_for(Errc::NotPsd) == 3);
  CHECK(exit_code_for(Errc::Singular) == 3);
  CHECK(exit_code_for(Errc::TooLargeToEnumerate) == 3);
}

TEST_CASE("unknown subcommands are config errors") {
  const auto cfg = parse_config("kind = MAC\nK = 2\nM = 3\nN = 4\nNE = 2\n");
  std::ostringstream out, err;
  CHECK(run("plot", cfg, out, err) == 1);
}

TEST_CASE("invariant suite passes for a healthy config") {
  auto cfg = parse_config(
      "kind = MAC\nK = 2\nM = 5\nN = 3\nNE = 2\ntrials = 2\n");
  const auto results = run_invariant_suite(cfg);
  for (const auto& r : results) {
    INFO(r.name, " ", r.detail);
    CHECK(r.passed);
  }
  std::ostringstream out, err;
  CHECK(run("validate", cfg, out, err) == 0);
  CHECK(out.str().find("0 failed") != std::string::npos);
}
