#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secdof/linalg.hpp"

namespace secdof {

enum class Kind { MAC, IC };
enum class Scheme { Auto, Nullspace, Aligned, Hybrid };

// Branches of the MAC sum-SDoF bound; they partition the antenna-count
// space for valid configs.
enum class Regime { BelowN, Middle, AboveN };

const char* to_string(Kind k) noexcept;
const char* to_string(Scheme s) noexcept;
const char* to_string(Regime r) noexcept;

struct SystemConfig {
  Kind kind = Kind::MAC;
  int num_tx = 2;           // K; fixed to 2 for the interference channel
  int tx_antennas = 3;      // M, per transmitter
  int rx_antennas = 4;      // N, per legitimate receiver; equals M for IC
  int max_eve_antennas = 2; // N_E, cap over all eavesdroppers
  double alpha = 0.5;       // fraction of transmit power spent on jamming
  Scheme scheme = Scheme::Auto;
  int eavesdroppers = 1;

  bool operator==(const SystemConfig&) const = default;
};

// Enforces the antenna-count assumptions (N_E < M among them) and the
// integer-stream divisibility constraints: K | N_E for the MAC, 2 | N_E for
// the IC. Fractional stream counts would need real interference alignment,
// which this library does not implement; such configs are rejected.
SystemConfig validate_config(const SystemConfig& cfg);

Regime classify_regime(const SystemConfig& cfg);

// One realization of every channel in the system. All entries are i.i.d.
// unit-variance circularly-symmetric complex Gaussian; noise variance is
// fixed to 1 and power is swept instead.
struct ChannelSet {
  Kind kind = Kind::MAC;
  // MAC: direct[i] is the N x M link from transmitter i to the receiver.
  // IC: direct[i] aliases cross[i][i].
  std::vector<ComplexMatrix> direct;
  // IC only: cross[rx][tx], each M x M.
  std::vector<std::vector<ComplexMatrix>> cross;
  // eve[e][tx]: link from transmitter tx to eavesdropper e. Eavesdropper 0
  // has the worst-case N_E antennas; extras get N_E - (e mod N_E).
  std::vector<std::vector<ComplexMatrix>> eve;
  double noise_var = 1.0;
};

// Deterministic pure function of (cfg, master_seed, trial); distinct trials
// give independent realizations. Draw order: direct links by transmitter
// (IC: the rx-major cross grid), then eavesdropper links, each matrix filled
// row-major.
ChannelSet sample_channels(const SystemConfig& cfg, std::uint64_t master_seed,
                           std::uint64_t trial);

}  // namespace secdof
