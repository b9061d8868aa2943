#include "secdof/validate.hpp"

#include <cmath>
#include <sstream>

#include "secdof/binning.hpp"
#include "secdof/rng.hpp"

namespace secdof {

namespace {

ComplexMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  auto rng = stream_rng(seed, 0);
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = complex_gaussian(rng);
  return m;
}

double projector_gap(const ComplexMatrix& p, const ComplexMatrix& q) {
  return (p * p.adjoint() - q * q.adjoint()).norm();
}

CheckResult check(const std::string& name, bool ok,
                  const std::string& detail = {}) {
  return {name, ok, detail};
}

CheckResult linalg_bases() {
  for (std::uint64_t s = 0; s < 25; ++s) {
    const int rows = 2 + static_cast<int>(s % 4);
    const int cols = 2 + static_cast<int>((s / 4) % 4);
    const ComplexMatrix a = random_matrix(rows, cols, 100 + s);
    const ComplexMatrix nb = nullspace(a);
    if (rank(a) + nb.cols() != cols)
      return check("linalg.rank-nullity", false);
    if ((a * nb).norm() > 1e-10 * std::max(1.0, a.norm()))
      return check("linalg.rank-nullity", false, "kernel residual");
    const ComplexMatrix q = orth(a);
    if (((ComplexMatrix::Identity(rows, rows) - q * q.adjoint()) * a).norm() >
        1e-9)
      return check("linalg.rank-nullity", false, "span residual");
  }
  return check("linalg.rank-nullity", true);
}

CheckResult linalg_intersection() {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ComplexMatrix b1 = orth(random_matrix(4, 3, 200 + s));
    const ComplexMatrix b2 = orth(random_matrix(4, 3, 300 + s));
    const ComplexMatrix ab = intersect({b1, b2});
    const ComplexMatrix ba = intersect({b2, b1});
    if (ab.cols() != 2 || projector_gap(ab, ba) > 1e-9)
      return check("linalg.intersection", false);
  }
  return check("linalg.intersection", true);
}

CheckResult linalg_solve() {
  for (std::uint64_t s = 0; s < 25; ++s) {
    const ComplexMatrix a = random_matrix(4, 4, 400 + s);
    const ComplexMatrix x0 = random_matrix(4, 2, 500 + s);
    const ComplexMatrix x = solve(a, a * x0);
    if ((x - x0).norm() > 1e-9 * std::max(1.0, x0.norm()))
      return check("linalg.solve-round-trip", false);
  }
  return check("linalg.solve-round-trip", true);
}

CheckResult regime_partition() {
  for (int k = 2; k <= 4; ++k)
    for (int m = 1; m <= 8; ++m)
      for (int n = 1; n <= 8; ++n)
        for (int ne = k; ne < m; ne += k) {
          SystemConfig cfg;
          cfg.num_tx = k;
          cfg.tx_antennas = m;
          cfg.rx_antennas = n;
          cfg.max_eve_antennas = ne;
          int hits = 0;
          if (m < n) ++hits;
          if (n <= m && k * (m - n) < ne) ++hits;
          if (k * (m - n) >= ne) ++hits;
          if (hits != 1) return check("scenario.regime-partition", false);
          classify_regime(cfg);
        }
  return check("scenario.regime-partition", true);
}

CheckResult bound_monotone() {
  for (int k = 2; k <= 3; ++k)
    for (int m = 2; m <= 8; ++m) {
      for (int n = 1; n <= 8; ++n) {
        double prev = -1;
        for (int ne = k; ne < m; ne += k) {
          SystemConfig cfg;
          cfg.num_tx = k;
          cfg.tx_antennas = m;
          cfg.rx_antennas = n;
          cfg.max_eve_antennas = ne;
          const double bound = mac_upper_bound(cfg);
          if (bound < 0) return check("scenario.bound-monotone", false,
                                      "negative bound");
          if (prev >= 0 && bound > prev + 1e-12)
            return check("scenario.bound-monotone", false,
                         "not nonincreasing in NE");
          prev = bound;
        }
      }
      for (int ne = k; ne < m; ne += k) {
        double prev = -1;
        for (int n = 1; n <= 8; ++n) {
          SystemConfig cfg;
          cfg.num_tx = k;
          cfg.tx_antennas = m;
          cfg.rx_antennas = n;
          cfg.max_eve_antennas = ne;
          const double bound = mac_upper_bound(cfg);
          if (prev >= 0 && bound < prev - 1e-12)
            return check("scenario.bound-monotone", false,
                         "not nondecreasing in N");
          prev = bound;
        }
      }
    }
  return check("scenario.bound-monotone", true);
}

CheckResult channel_determinism(const ExperimentConfig& cfg) {
  const ChannelSet a = sample_channels(cfg.system, cfg.seed, 0);
  const ChannelSet b = sample_channels(cfg.system, cfg.seed, 0);
  const ChannelSet c = sample_channels(cfg.system, cfg.seed, 1);
  const bool same = a.direct[0] == b.direct[0] && a.eve[0][0] == b.eve[0][0];
  const bool differs = a.direct[0] != c.direct[0];
  return check("scenario.channel-determinism", same && differs);
}

CheckResult channel_rank(const ExperimentConfig& cfg) {
  const auto expected = std::min(cfg.system.tx_antennas,
                                 cfg.system.rx_antennas);
  for (std::uint64_t t = 0; t < 200; ++t) {
    const ChannelSet ch = sample_channels(cfg.system, cfg.seed, t);
    if (rank(ch.direct[0]) != expected)
      return check("scenario.channel-rank", false);
  }
  return check("scenario.channel-rank", true);
}

CheckResult precoder_invariants(const ExperimentConfig& cfg) {
  const char* name = "precoders.invariants";
  try {
    for (std::uint64_t t = 0; t < 20; ++t) {
      const ChannelSet ch = sample_channels(cfg.system, cfg.seed, t);
      const auto build = build_precoder_set(cfg.system, ch);
      const auto& pre = build.precoders;
      for (std::size_t i = 0; i < pre.jam.size(); ++i) {
        ComplexMatrix v(pre.message[i].rows(),
                        pre.message[i].cols() + pre.jam[i].cols());
        v << pre.message[i], pre.jam[i];
        if ((v.adjoint() * v -
             ComplexMatrix::Identity(v.cols(), v.cols()))
                .norm() > 1e-9)
          return check(name, false, "precoder not unitary");
      }
      Eigen::Index jam_cols = 0;
      for (const auto& v : pre.jam) jam_cols += v.cols();
      ComplexMatrix at_eve(ch.eve[0][0].rows(), jam_cols);
      Eigen::Index at = 0;
      for (std::size_t i = 0; i < pre.jam.size(); ++i) {
        at_eve.middleCols(at, pre.jam[i].cols()) =
            ch.eve[0][i] * pre.jam[i];
        at += pre.jam[i].cols();
      }
      if (rank(at_eve) != cfg.system.max_eve_antennas)
        return check(name, false, "eavesdropper not saturated");
      for (std::size_t rx = 0; rx < pre.post.size(); ++rx) {
        const auto& rx_channels =
            cfg.system.kind == Kind::MAC ? ch.direct : ch.cross[rx];
        for (std::size_t i = 0; i < pre.jam.size(); ++i)
          if ((pre.post[rx] * rx_channels[i] * pre.jam[i]).norm() > 1e-8)
            return check(name, false, "jamming not zero-forced");
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::Infeasible)
      return check(name, true, "skipped: scheme infeasible for this config");
    throw;
  }
  return check(name, true);
}

CheckResult rate_monotone(const ExperimentConfig& cfg) {
  const char* name = "rates.monotone-in-power";
  try {
    const ChannelSet ch = sample_channels(cfg.system, cfg.seed, 0);
    const auto build = build_precoder_set(cfg.system, ch);
    double prev = -1;
    for (double p_db = 0; p_db <= 60; p_db += 10) {
      const auto pair =
          sum_secrecy_rate(ch, build.precoders, build.allocation,
                           std::pow(10.0, p_db / 10.0), cfg.system.alpha);
      if (pair.legit_bits < prev - 1e-9)
        return check(name, false);
      prev = pair.legit_bits;
    }
  } catch (const Error& e) {
    if (e.code() == Errc::Infeasible)
      return check(name, true, "skipped: scheme infeasible for this config");
    throw;
  }
  return check(name, true);
}

CheckResult binning_bounds(const ExperimentConfig& cfg) {
  const std::vector<double> uniform = {0.5, 0.5};
  for (std::uint64_t s = 0; s < 5; ++s) {
    const WiretapCode code = build_code(4, 1.0, 0.5, uniform, cfg.seed + s);
    for (double flip : {0.0, 0.2, 0.5}) {
      const auto eq =
          equivocation(code, DiscreteChannel::binary_symmetric(flip));
      if (eq.conditional_bits < -1e-9 ||
          eq.conditional_bits > eq.message_bits + 1e-9)
        return check("binning.entropy-bounds", false);
    }
  }
  return check("binning.entropy-bounds", true);
}

CheckResult sweep_determinism(const ExperimentConfig& cfg) {
  const char* name = "sweep.determinism";
  PowerPolicy policy;
  policy.p_db = {30, 45, 60};
  policy.alpha = cfg.system.alpha;
  try {
    const SweepResult a = sweep(cfg.system, policy, 2, cfg.seed, 1);
    const SweepResult b = sweep(cfg.system, policy, 2, cfg.seed, 2);
    if (render_csv(a.curve, a.report) != render_csv(b.curve, b.report))
      return check(name, false);
  } catch (const Error& e) {
    if (e.code() == Errc::Infeasible)
      return check(name, true, "skipped: scheme infeasible for this config");
    throw;
  }
  return check(name, true);
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const ExperimentConfig& cfg) {
  std::vector<CheckResult> results;
  results.push_back(linalg_bases());
  results.push_back(linalg_intersection());
  results.push_back(linalg_solve());
  results.push_back(regime_partition());
  results.push_back(bound_monotone());
  results.push_back(channel_determinism(cfg));
  results.push_back(channel_rank(cfg));
  results.push_back(precoder_invariants(cfg));
  results.push_back(rate_monotone(cfg));
  results.push_back(binning_bounds(cfg));
  results.push_back(sweep_determinism(cfg));
  return results;
}

}  // namespace secdof
