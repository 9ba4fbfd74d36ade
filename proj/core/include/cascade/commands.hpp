#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "cascade/analytics.hpp"
#include "cascade/config.hpp"

namespace cascade {

// Files written by each command into the output directory:
//   run       series.csv trajectory.csv snapshot.csv stationary.csv [network.edges]
//   ensemble  run's files for realization 0, plus ensemble_mean.csv realizations.csv
//             (stationary.csv then lists every realization and the ensemble mean)
//   sweep     sweep.csv sweep_realizations.csv
//   oracle    oracle.txt (same block as printed)
// Each returns 0 on success. Errors are reported on `err` with a nonzero status.
int cmd_run(const ExperimentConfig& config, std::uint64_t seed, const std::filesystem::path& out,
            std::ostream& log, std::ostream& err);
int cmd_ensemble(const ExperimentConfig& config, std::uint64_t seed,
                 const std::filesystem::path& out, std::ostream& log, std::ostream& err);
int cmd_sweep(const ExperimentConfig& config, std::uint64_t seed, const std::filesystem::path& out,
              std::ostream& log, std::ostream& err);
int cmd_oracle(const ExperimentConfig& config, const std::optional<std::filesystem::path>& out,
               std::ostream& log, std::ostream& err);

// `key = value` lines with six decimals; keys follow a fixed order.
std::string oracle_report(const ExperimentConfig& config);

}  // namespace cascade
