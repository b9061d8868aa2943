#pragma once

#include <string>
#include <vector>

#include "secdof/experiment.hpp"

namespace secdof {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Self-check suite behind the `validate` subcommand: library invariants on
// seeded instances plus precoder/rate invariants for the given config.
std::vector<CheckResult> run_invariant_suite(const ExperimentConfig& cfg);

}  // namespace secdof
