#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secdof/jamming.hpp"
#include "secdof/scenario.hpp"

namespace secdof {

// Transmit power sweep, in dB relative to the unit noise variance. At least
// three strictly increasing points so a slope can be fitted.
struct PowerPolicy {
  std::vector<double> p_db;
  double alpha = 0.5;
};

struct RatePoint {
  double p_db = 0;
  double secrecy_bits = 0;  // mean over trials of max(0, legit - leak)
  double leak_bits = 0;     // mean worst-case eavesdropper rate
  int trials = 0;
};

struct RateCurve {
  std::vector<RatePoint> points;
  double slope = 0;
  double slope_stderr = 0;
};

struct SdofReport {
  double upper_bound = 0;
  double achievable = 0;        // closed-form scheme value, when feasible
  double simulated_slope = 0;
  std::optional<Regime> regime; // MAC only
  bool feasible = true;
  std::string infeasible_reason;
};

struct RatePair {
  double legit_bits = 0;
  double leak_bits = 0;
};

struct SlopeFit {
  double slope = 0;
  double stderr_ = 0;
};

struct SweepResult {
  RateCurve curve;
  SdofReport report;
  // raw per-trial rate pairs, trial-major, one entry per grid point; kept
  // for variance reporting next to the averaged curve
  std::vector<std::vector<RatePair>> per_trial;
};

// Sum-SDoF upper bound of the K-user MAC:
//   min(KM - N_E, N - N_E/K)   if M < N
//   M - N_E/K                  if N <= M < N + N_E/K
//   N                          if M >= N + N_E/K
double mac_upper_bound(const SystemConfig& cfg);

// Sum-SDoF of the two-user M x M interference channel: M - N_E/2.
double ic_upper_bound(int tx_antennas, int eve_antennas);

// Closed-form achievable sum SDoF of the regime's scheme, with the group
// size from plan_groups. Matches mac_upper_bound exactly in the nullspace
// regime and in the documented tightness cases elsewhere.
double achievable_sdof(const SystemConfig& cfg);

// Receiver rate after zero forcing and worst-case eavesdropper rate with
// jamming treated as colored noise, both in bits per channel use. Power
// splits (1-alpha) to message streams and alpha to jamming streams per
// transmitter, uniformly across streams.
RatePair sum_secrecy_rate(const ChannelSet& channels, const PrecoderSet& pre,
                          const StreamAllocation& alloc, double power,
                          double alpha);

// Least-squares slope of the secrecy rate against log2 P over the high-SNR
// window (points with p_db >= 30). Rates are in bits and the abscissa is
// log2 P, so one clean complex stream fits to slope 1.0 and fitted slopes
// compare directly with the bounds above.
SlopeFit sdof_slope(const RateCurve& curve);

// Monte Carlo experiment: per trial, sample channels, build precoders once,
// and evaluate the rate pair across the power grid. Averages per power
// level, fits the SDoF slope, and assembles the bound comparison.
// Deterministic for a fixed seed at any worker count. Infeasible configs
// yield feasible=false with the bound still populated.
SweepResult sweep(const SystemConfig& cfg, const PowerPolicy& policy,
                  int trials, std::uint64_t seed, int workers = 1);

}  // namespace secdof
