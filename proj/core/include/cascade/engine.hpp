#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cascade/analytics.hpp"
#include "cascade/dynamics.hpp"
#include "cascade/network.hpp"
#include "cascade/params.hpp"

namespace cascade {

struct TimeSeriesRecord {
  std::size_t t = 0;
  double failure_fraction = 0.0;
  double mean_capital = 0.0;
  double mean_fp0 = 0.0;
  double mean_fp1 = 0.0;
  std::optional<double> cv_fp0;  // across agents; missing when |mean| < 1e-9
  std::optional<double> cv_fp1;
  double mean_fp = 0.0;
  double mean_pp = 0.0;          // over nodes at risk this step, 0 if none

  bool operator==(const TimeSeriesRecord&) const = default;
};

struct StationarityOptions {
  double window_fraction = 0.25;
  double threshold = 0.10;
};

struct RunResult {
  ModelParams params;
  std::uint64_t seed = 0;
  std::vector<TimeSeriesRecord> series;  // t = 0 .. T
  Population final_snapshot;
  std::optional<StationaryStats> stationary;
};

TimeSeriesRecord summarize(std::size_t t, std::span<const AgentState> agents,
                           const ResolutionSummary& resolution = {});

// Per-step sub-streams for a realization seeded with `seed`.
struct StepStreams {
  std::uint64_t seed;
  std::size_t t;
  RandomStream stream(Stage stage) const noexcept { return {seed, stage, t}; }
};

// One time step: recovery of expired failures, imitation, exploration,
// protection level and payoff, origination, propagation from the previous
// step's failures, resolution, potential reset.
ResolutionSummary step(const NetworkModel& net, Population& agents, const ModelParams& params,
                       const StepStreams& streams);

// A single realization: network, initial population and the time loop.
class Simulation {
 public:
  Simulation(const ModelParams& params, std::uint64_t seed);

  // Advances one step and returns the record for it.
  TimeSeriesRecord advance();

  const NetworkModel& network() const noexcept { return net_; }
  const Population& agents() const noexcept { return agents_; }
  std::size_t time() const noexcept { return t_; }

 private:
  ModelParams params_;
  std::uint64_t seed_;
  NetworkModel net_;
  Population agents_;
  std::size_t t_ = 0;
};

// Validates, then runs T steps. Stationarity is evaluated when the series has
// at least 8 records.
RunResult run(const ModelParams& params, std::uint64_t seed, const StationarityOptions& stat = {});

// Window statistics of failure, capital, mean fp0 and mean fp1 over the
// trailing window; converged when both strategy CVs are defined and <= threshold.
StationaryStats stationary_stats(std::span<const TimeSeriesRecord> series,
                                 const StationarityOptions& stat);

std::uint64_t realization_seed(std::uint64_t master_seed, std::size_t k) noexcept;

struct EnsembleResult {
  std::vector<RunResult> runs;        // ordered by realization index
  std::vector<TimeSeriesRecord> mean; // per-step means over realizations
  std::optional<StationaryStats> stationary;  // of the mean series
};

struct ExecutionOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  bool keep_snapshots = true;
};

// Realization k runs with realization_seed(master_seed, k).
EnsembleResult run_ensemble(const ModelParams& params, std::uint64_t master_seed,
                            std::size_t realizations, const StationarityOptions& stat = {},
                            const ExecutionOptions& exec = {});

// Per-step means. CV fields average the realizations where they are defined.
std::vector<TimeSeriesRecord> ensemble_mean(std::span<const RunResult> runs);

enum class SweepAxis { kLinkPropagation, kConnection };

std::string to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(const std::string& name);

struct SweepRow {
  double axis_value = 0.0;
  double fixed_mean_failure = 0.0;
  double fixed_mean_capital = 0.0;
  double fixed_mean_fp0 = 0.0;
  double fixed_mean_fp1 = 0.0;
  bool converged = false;  // stationarity of the ensemble-mean strategy series
  std::vector<StationaryStats> realizations;
};

struct SweepTable {
  SweepAxis axis;
  std::vector<SweepRow> rows;
};

// Every point reuses master_seed, so points share realization seeds and a
// one-value sweep reproduces run_ensemble exactly.
SweepTable sweep(const ModelParams& base, SweepAxis axis, std::span<const double> values,
                 std::uint64_t master_seed, std::size_t realizations,
                 const StationarityOptions& stat = {}, const ExecutionOptions& exec = {});

}  // namespace cascade
