#pragma once

#include <iosfwd>
#include <string>

#include "secdof/secrecy.hpp"

namespace secdof {

// A full experiment description as read from a `key = value` config file.
// Keys: kind, K, M, N, NE, scheme, alpha, p_db, trials, seed, eavesdroppers,
// out. Defaults: scheme=Auto, alpha=0.5, p_db=30:60:5, trials=50, seed=0,
// eavesdroppers=1, out=sweep.csv.
struct ExperimentConfig {
  SystemConfig system;
  double p_start = 30;
  double p_stop = 60;
  double p_step = 5;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string out = "sweep.csv";

  bool operator==(const ExperimentConfig&) const = default;
};

// Parses the line-oriented config format: UTF-8, '#' starts a comment,
// one `key = value` per line, unknown keys rejected. Throws ParseError with
// the offending line number, or the validation error from validate_config.
ExperimentConfig parse_config(const std::string& text);

// Canonical config document; parse_config(print_config(c)) == c.
std::string print_config(const ExperimentConfig& cfg);

std::vector<double> power_grid(const ExperimentConfig& cfg);

// CSV with header `p_db,sum_rate_bits,eav_rate_bits,trials`, one row per
// grid point and a `# slope=... stderr=... upper_bound=...` footer. All
// numbers use shortest round-trip formatting, so equal results render to
// identical bytes.
std::string render_csv(const RateCurve& curve, const SdofReport& report);

// Subcommand dispatch: bound | sweep | binning | validate. Returns the
// process exit status (0 ok, 1 config error, 2 infeasible scheme,
// 3 numerical failure, 4 validation failure); diagnostics go to `err`.
int run(const std::string& subcommand, const ExperimentConfig& cfg,
        std::ostream& out, std::ostream& err, int workers = 1);

namespace detail {
std::string format_double(double v);
}

}  // namespace secdof
