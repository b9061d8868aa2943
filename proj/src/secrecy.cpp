#include "secdof/secrecy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace secdof {

double mac_upper_bound(const SystemConfig& cfg) {
  validate_config(cfg);
  if (cfg.kind != Kind::MAC)
    throw Error(Errc::NotApplicable, "MAC bound queried for an IC config");
  const double k = cfg.num_tx;
  const double m = cfg.tx_antennas;
  const double n = cfg.rx_antennas;
  const double ne = cfg.max_eve_antennas;
  switch (classify_regime(cfg)) {
    case Regime::BelowN: return std::min(k * m - ne, n - ne / k);
    case Regime::Middle: return m - ne / k;
    case Regime::AboveN: return n;
  }
  return 0;
}

double ic_upper_bound(int tx_antennas, int eve_antennas) {
  if (eve_antennas < 1 || eve_antennas >= tx_antennas)
    throw Error(Errc::InvalidAntennaCounts, "need 1 <= N_E < M");
  return tx_antennas - 0.5 * eve_antennas;
}

double achievable_sdof(const SystemConfig& cfg) {
  validate_config(cfg);
  if (cfg.kind == Kind::IC)
    return ic_upper_bound(cfg.tx_antennas, cfg.max_eve_antennas);
  const double k = cfg.num_tx;
  const double m = cfg.tx_antennas;
  const double n = cfg.rx_antennas;
  const double ne = cfg.max_eve_antennas;
  switch (classify_regime(cfg)) {
    case Regime::AboveN:
      return n;
    case Regime::BelowN: {
      const double l = plan_groups(cfg).group_size;
      return std::min(k * m - ne, n - ne / l);
    }
    case Regime::Middle: {
      const double l = plan_groups(cfg).group_size;
      return n - (ne - k * (m - n)) / l;
    }
  }
  return 0;
}

namespace {

ComplexMatrix symmetrized(ComplexMatrix q) {
  return 0.5 * (q + q.adjoint()).eval();
}

double receiver_rate(const ComplexMatrix& post,
                     const std::vector<ComplexMatrix>& rx_channels,
                     const std::vector<ComplexMatrix>& message,
                     const std::vector<int>& streams, double message_power) {
  const Eigen::Index rows = post.rows();
  if (rows == 0) return 0.0;
  ComplexMatrix q = ComplexMatrix::Identity(rows, rows);
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (streams[i] == 0) continue;
    const ComplexMatrix b = post * rx_channels[i] * message[i];
    q += (message_power / streams[i]) * b * b.adjoint();
  }
  return logdet_psd(symmetrized(std::move(q)));
}

}  // namespace

RatePair sum_secrecy_rate(const ChannelSet& channels, const PrecoderSet& pre,
                          const StreamAllocation& alloc, double power,
                          double alpha) {
  const double message_power = (1.0 - alpha) * power;
  const double jam_power = alpha * power;
  RatePair out;
  if (channels.kind == Kind::MAC) {
    out.legit_bits = receiver_rate(pre.post[0], channels.direct, pre.message,
                                   alloc.message, message_power);
  } else {
    for (int rx = 0; rx < 2; ++rx) {
      if (alloc.message[rx] == 0) continue;
      const ComplexMatrix b =
          pre.post[rx] * channels.cross[rx][rx] * pre.message[rx];
      ComplexMatrix q =
          ComplexMatrix::Identity(pre.post[rx].rows(), pre.post[rx].rows());
      q += (message_power / alloc.message[rx]) * b * b.adjoint();
      out.legit_bits += logdet_psd(symmetrized(std::move(q)));
    }
  }
  // worst case over eavesdroppers, jamming treated as noise
  for (const auto& links : channels.eve) {
    const Eigen::Index n_e = links[0].rows();
    ComplexMatrix signal = ComplexMatrix::Zero(n_e, n_e);
    ComplexMatrix noise = ComplexMatrix::Identity(n_e, n_e);
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (alloc.message[i] > 0) {
        const ComplexMatrix a = links[i] * pre.message[i];
        signal += (message_power / alloc.message[i]) * a * a.adjoint();
      }
      if (pre.jam[i].cols() > 0) {
        const ComplexMatrix j = links[i] * pre.jam[i];
        noise +=
            (jam_power / static_cast<double>(pre.jam[i].cols())) * j *
            j.adjoint();
      }
    }
    const double leak = logdet_psd(symmetrized((noise + signal).eval())) -
                        logdet_psd(symmetrized(std::move(noise)));
    out.leak_bits = std::max(out.leak_bits, leak);
  }
  return out;
}

SlopeFit sdof_slope(const RateCurve& curve) {
  if (curve.points.size() < 3)
    throw Error(Errc::InsufficientPoints, "slope fit needs >= 3 points");
  const double span =
      curve.points.back().p_db - curve.points.front().p_db;
  if (span < 20.0)
    throw Error(Errc::InsufficientPoints,
                "slope fit needs a >= 20 dB power span");
  std::vector<double> xs, ys;
  for (const auto& pt : curve.points) {
    if (pt.p_db < 30.0) continue;  // high-SNR window
    xs.push_back(pt.p_db * std::log2(10.0) / 10.0);
    ys.push_back(pt.secrecy_bits);
  }
  const std::size_t n = xs.size();
  if (n < 2)
    throw Error(Errc::InsufficientPoints,
                "fewer than two points at or above 30 dB");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  if (n > 2) {
    double ssr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ys[i] - my - fit.slope * (xs[i] - mx);
      ssr += r * r;
    }
    fit.stderr_ = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  }
  return fit;
}

SweepResult sweep(const SystemConfig& cfg, const PowerPolicy& policy,
                  int trials, std::uint64_t seed, int workers) {
  validate_config(cfg);
  if (trials < 1)
    throw Error(Errc::ParseError, "need at least one trial");
  if (policy.p_db.size() < 3 ||
      !std::is_sorted(policy.p_db.begin(), policy.p_db.end(),
                      std::less_equal<>()))
    throw Error(Errc::InsufficientPoints,
                "power grid must be strictly increasing with >= 3 points");

  SweepResult result;
  auto& report = result.report;
  if (cfg.kind == Kind::MAC) {
    report.regime = classify_regime(cfg);
    report.upper_bound = mac_upper_bound(cfg);
  } else {
    report.upper_bound = ic_upper_bound(cfg.tx_antennas, cfg.max_eve_antennas);
  }
  try {
    report.achievable = achievable_sdof(cfg);
  } catch (const Error& e) {
    if (e.code() != Errc::Infeasible) throw;
    report.feasible = false;
    report.infeasible_reason = e.what();
    return result;
  }

  const std::size_t grid = policy.p_db.size();
  std::vector<double> powers(grid);
  for (std::size_t p = 0; p < grid; ++p)
    powers[p] = std::pow(10.0, policy.p_db[p] / 10.0);

  // one slot per (trial, power): reduction order is fixed afterwards, so
  // the worker count never changes the output
  std::vector<RatePair> slots(static_cast<std::size_t>(trials) * grid);
  std::atomic<int> next{0};
  auto body = [&] {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= trials) return;
      const ChannelSet ch = sample_channels(cfg, seed, t);
      const auto build = build_precoder_set(cfg, ch);
      for (std::size_t p = 0; p < grid; ++p)
        slots[static_cast<std::size_t>(t) * grid + p] =
            sum_secrecy_rate(ch, build.precoders, build.allocation, powers[p],
                             policy.alpha);
    }
  };
  const int pool = std::clamp(workers, 1, trials);
  if (pool == 1) {
    body();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (int w = 0; w < pool; ++w) threads.emplace_back(body);
    for (auto& th : threads) th.join();
  }

  result.curve.points.resize(grid);
  for (std::size_t p = 0; p < grid; ++p) {
    auto& pt = result.curve.points[p];
    pt.p_db = policy.p_db[p];
    pt.trials = trials;
    for (int t = 0; t < trials; ++t) {
      const auto& pair = slots[static_cast<std::size_t>(t) * grid + p];
      pt.secrecy_bits += std::max(0.0, pair.legit_bits - pair.leak_bits);
      pt.leak_bits += pair.leak_bits;
    }
    pt.secrecy_bits /= trials;
    pt.leak_bits /= trials;
  }
  result.per_trial.resize(trials);
  for (int t = 0; t < trials; ++t)
    result.per_trial[t].assign(
        slots.begin() + static_cast<std::ptrdiff_t>(t) * grid,
        slots.begin() + static_cast<std::ptrdiff_t>(t + 1) * grid);
  const SlopeFit fit = sdof_slope(result.curve);
  result.curve.slope = fit.slope;
  result.curve.slope_stderr = fit.stderr_;
  report.simulated_slope = fit.slope;
  return result;
}

}  // namespace secdof
