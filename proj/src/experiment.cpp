#include "secdof/experiment.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "secdof/binning.hpp"
#include "secdof/validate.hpp"

namespace secdof {

namespace detail {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

namespace {

using detail::format_double;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw Error(Errc::ParseError, msg.str());
}

long long parse_int(const std::string& value, int line) {
  long long out = 0;
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size())
    parse_fail(line, "expected an integer, got '" + value + "'");
  return out;
}

double parse_double(const std::string& value, int line) {
  double out = 0;
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size())
    parse_fail(line, "expected a number, got '" + value + "'");
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  bool saw_kind = false, saw_k = false, saw_m = false, saw_n = false,
       saw_ne = false;
  std::istringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      parse_fail(line, "expected 'key = value'");
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (key.empty() || value.empty())
      parse_fail(line, "expected 'key = value'");

    if (key == "kind") {
      if (value == "MAC")
        cfg.system.kind = Kind::MAC;
      else if (value == "IC")
        cfg.system.kind = Kind::IC;
      else
        parse_fail(line, "kind must be MAC or IC");
      saw_kind = true;
    } else if (key == "K") {
      cfg.system.num_tx = static_cast<int>(parse_int(value, line));
      saw_k = true;
    } else if (key == "M") {
      cfg.system.tx_antennas = static_cast<int>(parse_int(value, line));
      saw_m = true;
    } else if (key == "N") {
      cfg.system.rx_antennas = static_cast<int>(parse_int(value, line));
      saw_n = true;
    } else if (key == "NE") {
      cfg.system.max_eve_antennas = static_cast<int>(parse_int(value, line));
      saw_ne = true;
    } else if (key == "scheme") {
      if (value == "Auto")
        cfg.system.scheme = Scheme::Auto;
      else if (value == "Nullspace")
        cfg.system.scheme = Scheme::Nullspace;
      else if (value == "Aligned")
        cfg.system.scheme = Scheme::Aligned;
      else if (value == "Hybrid")
        cfg.system.scheme = Scheme::Hybrid;
      else
        parse_fail(line, "scheme must be Auto|Nullspace|Aligned|Hybrid");
    } else if (key == "alpha") {
      cfg.system.alpha = parse_double(value, line);
    } else if (key == "p_db") {
      const auto c1 = value.find(':');
      const auto c2 = value.find(':', c1 + 1);
      if (c1 == std::string::npos || c2 == std::string::npos)
        parse_fail(line, "p_db must be start:stop:step");
      cfg.p_start = parse_double(trim(value.substr(0, c1)), line);
      cfg.p_stop = parse_double(trim(value.substr(c1 + 1, c2 - c1 - 1)), line);
      cfg.p_step = parse_double(trim(value.substr(c2 + 1)), line);
      if (!(cfg.p_start < cfg.p_stop) || !(cfg.p_step > 0))
        parse_fail(line, "p_db grid must have start < stop and step > 0");
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_int(value, line));
      if (cfg.trials < 1) parse_fail(line, "trials must be >= 1");
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(value, line));
    } else if (key == "eavesdroppers") {
      cfg.system.eavesdroppers = static_cast<int>(parse_int(value, line));
    } else if (key == "out") {
      cfg.out = value;
    } else {
      parse_fail(line, "unknown key '" + key + "'");
    }
  }
  if (!saw_kind) throw Error(Errc::ParseError, "missing required key 'kind'");
  if (!saw_m) throw Error(Errc::ParseError, "missing required key 'M'");
  if (!saw_ne) throw Error(Errc::ParseError, "missing required key 'NE'");
  if (cfg.system.kind == Kind::MAC) {
    if (!saw_k) throw Error(Errc::ParseError, "missing required key 'K'");
    if (!saw_n) throw Error(Errc::ParseError, "missing required key 'N'");
  } else {
    if (!saw_k) cfg.system.num_tx = 2;
    if (!saw_n) cfg.system.rx_antennas = cfg.system.tx_antennas;
  }
  validate_config(cfg.system);
  return cfg;
}

std::string print_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "kind = " << to_string(cfg.system.kind) << '\n'
      << "K = " << cfg.system.num_tx << '\n'
      << "M = " << cfg.system.tx_antennas << '\n'
      << "N = " << cfg.system.rx_antennas << '\n'
      << "NE = " << cfg.system.max_eve_antennas << '\n'
      << "scheme = " << to_string(cfg.system.scheme) << '\n'
      << "alpha = " << format_double(cfg.system.alpha) << '\n'
      << "p_db = " << format_double(cfg.p_start) << ':'
      << format_double(cfg.p_stop) << ':' << format_double(cfg.p_step) << '\n'
      << "trials = " << cfg.trials << '\n'
      << "seed = " << cfg.seed << '\n'
      << "eavesdroppers = " << cfg.system.eavesdroppers << '\n'
      << "out = " << cfg.out << '\n';
  return out.str();
}

std::vector<double> power_grid(const ExperimentConfig& cfg) {
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double p = cfg.p_start + i * cfg.p_step;
    if (p > cfg.p_stop + 1e-9) break;
    grid.push_back(p);
  }
  return grid;
}

std::string render_csv(const RateCurve& curve, const SdofReport& report) {
  std::ostringstream out;
  out << "p_db,sum_rate_bits,eav_rate_bits,trials\n";
  for (const auto& pt : curve.points)
    out << format_double(pt.p_db) << ',' << format_double(pt.secrecy_bits)
        << ',' << format_double(pt.leak_bits) << ',' << pt.trials << '\n';
  out << "# slope=" << format_double(curve.slope)
      << " stderr=" << format_double(curve.slope_stderr)
      << " upper_bound=" << format_double(report.upper_bound) << '\n';
  return out.str();
}

namespace {

int run_bound(const ExperimentConfig& cfg, std::ostream& out) {
  out << "kind = " << to_string(cfg.system.kind) << '\n';
  if (cfg.system.kind == Kind::MAC) {
    out << "regime = " << to_string(classify_regime(cfg.system)) << '\n';
    out << "upper_bound = " << format_double(mac_upper_bound(cfg.system))
        << '\n';
  } else {
    out << "upper_bound = "
        << format_double(ic_upper_bound(cfg.system.tx_antennas,
                                        cfg.system.max_eve_antennas))
        << '\n';
  }
  try {
    out << "achievable = " << format_double(achievable_sdof(cfg.system))
        << '\n';
  } catch (const Error& e) {
    if (e.code() != Errc::Infeasible) throw;
    out << "achievable = none (" << e.what() << ")\n";
  }
  return 0;
}

int run_sweep(const ExperimentConfig& cfg, std::ostream& out,
              std::ostream& err, int workers) {
  PowerPolicy policy;
  policy.p_db = power_grid(cfg);
  policy.alpha = cfg.system.alpha;
  const SweepResult result =
      sweep(cfg.system, policy, cfg.trials, cfg.seed, workers);
  if (!result.report.feasible) {
    err << result.report.infeasible_reason << '\n';
    err << "upper_bound = " << format_double(result.report.upper_bound)
        << '\n';
    return 2;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file)
    throw Error(Errc::ParseError, "cannot open output file " + cfg.out);
  file << render_csv(result.curve, result.report);
  out << "slope = " << format_double(result.curve.slope)
      << " (stderr " << format_double(result.curve.slope_stderr) << ")\n"
      << "upper_bound = " << format_double(result.report.upper_bound) << '\n'
      << "achievable = " << format_double(result.report.achievable) << '\n'
      << "csv = " << cfg.out << '\n';
  return 0;
}

// Desk-scale wiretap demo: binary uniform input, BSC main and eavesdropper
// links. Prints the design-rule rates from the channel mutual informations
// and the best equivocation ratio over 20 code draws.
int run_binning(const ExperimentConfig& cfg, std::ostream& out) {
  const auto main_ch = DiscreteChannel::binary_symmetric(0.1);
  const auto eve_ch = DiscreteChannel::binary_symmetric(0.3);
  const std::vector<double> uniform = {0.5, 0.5};
  const int n = 4;
  out << "I_main = " << format_double(mutual_information(main_ch, uniform))
      << '\n'
      << "I_eve = " << format_double(mutual_information(eve_ch, uniform))
      << '\n';
  const RateDesign design = design_rates(main_ch, eve_ch, uniform, n, 0.05);
  out << "design R_t = " << format_double(design.total_rate)
      << "  R_s = " << format_double(design.secret_rate) << '\n';

  const double total_rate = 1.0;
  const double secret_rate = 0.5;
  double best = 0;
  std::uint64_t best_seed = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const WiretapCode code =
        build_code(n, total_rate, secret_rate, uniform, cfg.seed + s);
    const double ratio = equivocation(code, eve_ch).ratio();
    if (ratio > best) {
      best = ratio;
      best_seed = cfg.seed + s;
    }
  }
  out << "code n=" << n << " R_t=" << format_double(total_rate)
      << " R_s=" << format_double(secret_rate) << '\n'
      << "best equivocation ratio = " << format_double(best) << " (seed "
      << best_seed << ")\n";
  return 0;
}

int run_validate(const ExperimentConfig& cfg, std::ostream& out) {
  const auto results = run_invariant_suite(cfg);
  int passed = 0, failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "[pass] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << '\n';
    (r.passed ? passed : failed)++;
  }
  out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 4;
}

}  // namespace

int run(const std::string& subcommand, const ExperimentConfig& cfg,
        std::ostream& out, std::ostream& err, int workers) {
  try {
    if (subcommand == "bound") return run_bound(cfg, out);
    if (subcommand == "sweep") return run_sweep(cfg, out, err, workers);
    if (subcommand == "binning") return run_binning(cfg, out);
    if (subcommand == "validate") return run_validate(cfg, out);
    throw Error(Errc::ParseError, "unknown subcommand '" + subcommand + "'");
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 3;
  }
}

}  // namespace secdof
