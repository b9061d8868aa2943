#include "secdof/scenario.hpp"

#include <sstream>

#include "secdof/rng.hpp"

namespace secdof {

const char* to_string(Kind k) noexcept {
  return k == Kind::MAC ? "MAC" : "IC";
}

const char* to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::Auto: return "Auto";
    case Scheme::Nullspace: return "Nullspace";
    case Scheme::Aligned: return "Aligned";
    case Scheme::Hybrid: return "Hybrid";
  }
  return "?";
}

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::BelowN: return "BelowN";
    case Regime::Middle: return "Middle";
    case Regime::AboveN: return "AboveN";
  }
  return "?";
}

SystemConfig validate_config(const SystemConfig& cfg) {
  std::ostringstream msg;
  if (cfg.kind == Kind::IC && cfg.num_tx != 2)
    throw Error(Errc::InvalidAntennaCounts,
                "the interference channel has exactly two transmitters");
  if (cfg.kind == Kind::IC && cfg.rx_antennas != cfg.tx_antennas)
    throw Error(Errc::InvalidAntennaCounts,
                "the interference channel is square: N must equal M");
  if (cfg.num_tx < 2 || cfg.tx_antennas < 1 || cfg.rx_antennas < 1) {
    msg << "need K >= 2, M >= 1, N >= 1; got K=" << cfg.num_tx
        << " M=" << cfg.tx_antennas << " N=" << cfg.rx_antennas;
    throw Error(Errc::InvalidAntennaCounts, msg.str());
  }
  const int divisor = cfg.kind == Kind::MAC ? cfg.num_tx : 2;
  if (cfg.max_eve_antennas % divisor != 0) {
    msg << "N_E=" << cfg.max_eve_antennas << " is not divisible by "
        << divisor
        << "; fractional jamming streams would need real interference "
           "alignment, which is out of scope";
    throw Error(Errc::IndivisibleStreams, msg.str());
  }
  if (cfg.max_eve_antennas < 1 || cfg.max_eve_antennas >= cfg.tx_antennas) {
    msg << "need 1 <= N_E < M; got N_E=" << cfg.max_eve_antennas
        << " M=" << cfg.tx_antennas;
    throw Error(Errc::InvalidAntennaCounts, msg.str());
  }
  if (!(cfg.alpha > 0.0) || !(cfg.alpha < 1.0))
    throw Error(Errc::InvalidAntennaCounts, "alpha must lie in (0, 1)");
  if (cfg.eavesdroppers < 1)
    throw Error(Errc::InvalidAntennaCounts, "need at least one eavesdropper");
  return cfg;
}

Regime classify_regime(const SystemConfig& cfg) {
  if (cfg.kind != Kind::MAC)
    throw Error(Errc::NotApplicable,
                "regime classification applies to the MAC only");
  if (cfg.tx_antennas < cfg.rx_antennas) return Regime::BelowN;
  // M >= N + N_E/K, in integer arithmetic.
  if (cfg.num_tx * (cfg.tx_antennas - cfg.rx_antennas) >= cfg.max_eve_antennas)
    return Regime::AboveN;
  return Regime::Middle;
}

namespace {

ComplexMatrix draw_matrix(std::mt19937_64& rng, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = complex_gaussian(rng);
  return m;
}

}  // namespace

ChannelSet sample_channels(const SystemConfig& cfg, std::uint64_t master_seed,
                           std::uint64_t trial) {
  auto rng = stream_rng(master_seed, trial);
  ChannelSet ch;
  ch.kind = cfg.kind;
  ch.noise_var = 1.0;
  if (cfg.kind == Kind::MAC) {
    ch.direct.reserve(cfg.num_tx);
    for (int i = 0; i < cfg.num_tx; ++i)
      ch.direct.push_back(draw_matrix(rng, cfg.rx_antennas, cfg.tx_antennas));
  } else {
    ch.cross.assign(2, std::vector<ComplexMatrix>(2));
    for (int rx = 0; rx < 2; ++rx)
      for (int tx = 0; tx < 2; ++tx)
        ch.cross[rx][tx] =
            draw_matrix(rng, cfg.tx_antennas, cfg.tx_antennas);
    ch.direct = {ch.cross[0][0], ch.cross[1][1]};
  }
  ch.eve.resize(cfg.eavesdroppers);
  for (int e = 0; e < cfg.eavesdroppers; ++e) {
    const int antennas = cfg.max_eve_antennas - e % cfg.max_eve_antennas;
    ch.eve[e].reserve(cfg.num_tx);
    for (int i = 0; i < cfg.num_tx; ++i)
      ch.eve[e].push_back(draw_matrix(rng, antennas, cfg.tx_antennas));
  }
  return ch;
}

}  // namespace secdof
