#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "secdof/experiment.hpp"

namespace {

int run_from_file(const std::string& subcommand, const std::string& path,
                  int jobs) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot read config file " << path << '\n';
    return 1;
  }
  std::ostringstream text;
  text << file.rdbuf();
  try {
    const secdof::ExperimentConfig cfg = secdof::parse_config(text.str());
    return secdof::run(subcommand, cfg, std::cout, std::cerr, jobs);
  } catch (const secdof::Error& e) {
    std::cerr << e.what() << '\n';
    return secdof::exit_code_for(e.code());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jamming precoder synthesis and secure-degrees-of-freedom "
               "simulation for the K-user MIMO MAC and the 2-user MIMO "
               "interference channel"};
  app.require_subcommand(1);
  std::string config_path;
  int jobs = 1;

  auto* bound = app.add_subcommand(
      "bound", "print the SDoF upper bound, regime and scheme value");
  auto* sweep = app.add_subcommand(
      "sweep", "Monte Carlo power sweep; writes the rate curve CSV");
  auto* binning = app.add_subcommand(
      "binning", "toy wiretap-code demo with exact equivocation");
  auto* validate = app.add_subcommand(
      "validate", "run the library invariant suite for this config");
  for (auto* sub : {bound, sweep, binning, validate})
    sub->add_option("config", config_path, "experiment config file")
        ->required();
  sweep->add_option("--jobs", jobs, "worker threads (output is identical "
                                    "for any value)")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  return run_from_file(app.get_subcommands().front()->get_name(), config_path,
                       jobs);
}
