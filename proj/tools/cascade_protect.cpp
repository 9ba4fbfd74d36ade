// cascade-protect <run|ensemble|sweep|oracle> --config <file> --seed <u64> --out <dir>
//                 [--centrality max|euclid] [--imitation sequential|synchronous]

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cascade/commands.hpp"
#include "cascade/config.hpp"
#include "cascade/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cascading failure and evolving protection on Erdos-Renyi networks"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::optional<std::string> centrality;
  std::optional<std::string> imitation;

  auto add_common = [&](CLI::App* cmd, bool stochastic) {
    cmd->add_option("--config", config_path, "Configuration file (key = value)")
        ->check(CLI::ExistingFile);
    auto* seed_opt = cmd->add_option("--seed", seed, "Master seed");
    auto* out_opt = cmd->add_option("--out", out_dir, "Output directory");
    if (stochastic) {
      seed_opt->required();
      out_opt->required();
    }
    cmd->add_option("--centrality", centrality, "Centrality normalization")
        ->check(CLI::IsMember({"max", "euclid"}));
    cmd->add_option("--imitation", imitation, "Imitation update order")
        ->check(CLI::IsMember({"sequential", "synchronous"}));
  };

  auto* run = app.add_subcommand("run", "Single realization time series");
  auto* ensemble = app.add_subcommand("ensemble", "Ensemble of realizations");
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep over p_l or p_c");
  auto* oracle = app.add_subcommand("oracle", "Evaluate the analytic formulas");
  add_common(run, true);
  add_common(ensemble, true);
  add_common(sweep, true);
  add_common(oracle, false);

  CLI11_PARSE(app, argc, argv);

  cascade::ExperimentConfig config;
  try {
    if (!config_path.empty()) config = cascade::load_config(config_path);
  } catch (const cascade::Error& e) {
    std::cerr << "error: " << config_path << ": " << e.what() << '\n';
    return 2;
  }
  if (centrality)
    config.params.centrality = *centrality == "euclid" ? cascade::CentralityMode::kEuclidNorm
                                                       : cascade::CentralityMode::kMaxNorm;
  if (imitation)
    config.params.imitation = *imitation == "synchronous" ? cascade::ImitationMode::kSynchronous
                                                          : cascade::ImitationMode::kSequential;

  const std::filesystem::path out(out_dir);
  if (run->parsed()) return cascade::cmd_run(config, *seed, out, std::cout, std::cerr);
  if (ensemble->parsed()) return cascade::cmd_ensemble(config, *seed, out, std::cout, std::cerr);
  if (sweep->parsed()) return cascade::cmd_sweep(config, *seed, out, std::cout, std::cerr);
  std::optional<std::filesystem::path> oracle_out;
  if (!out_dir.empty()) oracle_out = out;
  return cascade::cmd_oracle(config, oracle_out, std::cout, std::cerr);
}
