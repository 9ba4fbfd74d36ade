#include "cascade/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "cascade/error.hpp"

namespace cascade {
namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

std::optional<double> cross_section_cv(double sum, double sum_sq, double count) {
  const double mean = sum / count;
  if (std::abs(mean) < kNearZeroMean) return std::nullopt;
  const double var = std::max(0.0, sum_sq / count - mean * mean);
  return std::sqrt(var) / std::abs(mean);
}

}  // namespace

TimeSeriesRecord summarize(std::size_t t, std::span<const AgentState> agents,
                           const ResolutionSummary& resolution) {
  TimeSeriesRecord r;
  r.t = t;
  const double count = static_cast<double>(agents.size());
  double failed = 0, capital = 0, fp0 = 0, fp1 = 0, fp0_sq = 0, fp1_sq = 0, fp = 0;
  for (const auto& a : agents) {
    failed += a.failed ? 1.0 : 0.0;
    capital += a.capital;
    fp0 += a.fp0;
    fp1 += a.fp1;
    fp0_sq += a.fp0 * a.fp0;
    fp1_sq += a.fp1 * a.fp1;
    fp += a.fp;
  }
  r.failure_fraction = failed / count;
  r.mean_capital = capital / count;
  r.mean_fp0 = fp0 / count;
  r.mean_fp1 = fp1 / count;
  r.cv_fp0 = cross_section_cv(fp0, fp0_sq, count);
  r.cv_fp1 = cross_section_cv(fp1, fp1_sq, count);
  r.mean_fp = fp / count;
  r.mean_pp = resolution.at_risk > 0
                  ? resolution.sum_protection / static_cast<double>(resolution.at_risk)
                  : 0.0;
  return r;
}

ResolutionSummary step(const NetworkModel& net, Population& agents, const ModelParams& params,
                       const StepStreams& streams) {
  std::vector<std::uint8_t> sources;
  advance_failures(agents, sources);

  auto imitation = streams.stream(Stage::kImitation);
  imitation_sweep(agents, params.p_r, params.s, imitation, params.imitation);

  auto exploration = streams.stream(Stage::kExploration);
  exploration_sweep(agents, params.p_e, params.mu, params.sigma_e, exploration,
                    params.exploration);

  apply_payoff(agents, net.centrality(), params.f_m);

  auto origination = streams.stream(Stage::kOrigination);
  originate_potentials(agents, params.p_n, origination);

  auto propagation = streams.stream(Stage::kPropagation);
  propagate_potentials(net, agents, sources, params.p_l, propagation);

  auto resolution = streams.stream(Stage::kResolution);
  const auto summary = resolve_failures(agents, params.pp_max, params.cp_half,
                                        static_cast<std::uint32_t>(params.failtime), resolution);

  auto reset = streams.stream(Stage::kReset);
  reset_potentials(agents, params.rec1, reset);
  return summary;
}

Simulation::Simulation(const ModelParams& params, std::uint64_t seed)
    : params_((validate(params), params)),
      seed_(seed),
      net_(generate_er(params.n, params.p_c, seed,
                       CentralityOptions{.mode = params.centrality})) {
  RandomStream init(derive_seed(seed, {static_cast<std::uint64_t>(Stage::kInitialStrategies)}));
  agents_ = initialize_population(params_, net_.centrality(), init);
}

TimeSeriesRecord Simulation::advance() {
  ++t_;
  const auto summary = step(net_, agents_, params_, StepStreams{seed_, t_});
  return summarize(t_, agents_, summary);
}

StationaryStats stationary_stats(std::span<const TimeSeriesRecord> series,
                                 const StationarityOptions& stat) {
  auto column = [&](auto member) {
    std::vector<double> values;
    values.reserve(series.size());
    for (const auto& r : series) values.push_back(r.*member);
    return values;
  };
  const auto failure = detect_stationarity(column(&TimeSeriesRecord::failure_fraction),
                                           stat.window_fraction, stat.threshold);
  const auto capital = detect_stationarity(column(&TimeSeriesRecord::mean_capital),
                                           stat.window_fraction, stat.threshold);
  const auto fp0 = detect_stationarity(column(&TimeSeriesRecord::mean_fp0),
                                       stat.window_fraction, stat.threshold);
  const auto fp1 = detect_stationarity(column(&TimeSeriesRecord::mean_fp1),
                                       stat.window_fraction, stat.threshold);
  StationaryStats s;
  s.window_start = series[failure.window_start].t;
  s.window_end = series[failure.window_end].t;
  s.fixed_mean_failure = failure.fixed_mean;
  s.fixed_mean_capital = capital.fixed_mean;
  s.fixed_mean_fp0 = fp0.fixed_mean;
  s.fixed_mean_fp1 = fp1.fixed_mean;
  s.cv_fp0 = fp0.cv;
  s.cv_fp1 = fp1.cv;
  s.converged = fp0.converged && fp1.converged;
  return s;
}

RunResult run(const ModelParams& params, std::uint64_t seed, const StationarityOptions& stat) {
  validate(params);
  Simulation sim(params, seed);
  RunResult result;
  result.params = params;
  result.seed = seed;
  result.series.reserve(params.T + 1);
  result.series.push_back(summarize(0, sim.agents()));
  for (std::size_t t = 1; t <= params.T; ++t) result.series.push_back(sim.advance());
  result.final_snapshot = sim.agents();
  if (result.series.size() >= 8) result.stationary = stationary_stats(result.series, stat);
  return result;
}

std::uint64_t realization_seed(std::uint64_t master_seed, std::size_t k) noexcept {
  return derive_seed(master_seed, {static_cast<std::uint64_t>(Stage::kRealization), k});
}

std::vector<TimeSeriesRecord> ensemble_mean(std::span<const RunResult> runs) {
  if (runs.empty()) return {};
  const std::size_t len = runs.front().series.size();
  std::vector<TimeSeriesRecord> mean(len);
  const double count = static_cast<double>(runs.size());
  for (std::size_t t = 0; t < len; ++t) {
    auto& m = mean[t];
    m.t = runs.front().series[t].t;
    double cv0 = 0, cv1 = 0;
    std::size_t n_cv0 = 0, n_cv1 = 0;
    for (const auto& run : runs) {
      const auto& r = run.series.at(t);
      m.failure_fraction += r.failure_fraction;
      m.mean_capital += r.mean_capital;
      m.mean_fp0 += r.mean_fp0;
      m.mean_fp1 += r.mean_fp1;
      m.mean_fp += r.mean_fp;
      m.mean_pp += r.mean_pp;
      if (r.cv_fp0) cv0 += *r.cv_fp0, ++n_cv0;
      if (r.cv_fp1) cv1 += *r.cv_fp1, ++n_cv1;
    }
    m.failure_fraction /= count;
    m.mean_capital /= count;
    m.mean_fp0 /= count;
    m.mean_fp1 /= count;
    m.mean_fp /= count;
    m.mean_pp /= count;
    if (n_cv0) m.cv_fp0 = cv0 / static_cast<double>(n_cv0);
    if (n_cv1) m.cv_fp1 = cv1 / static_cast<double>(n_cv1);
  }
  return mean;
}

EnsembleResult run_ensemble(const ModelParams& params, std::uint64_t master_seed,
                            std::size_t realizations, const StationarityOptions& stat,
                            const ExecutionOptions& exec) {
  if (realizations == 0) throw InvalidParameter("realizations must be >= 1");
  validate(params);
  EnsembleResult result;
  result.runs.resize(realizations);
  parallel_for(realizations, exec.threads, [&](std::size_t k) {
    result.runs[k] = run(params, realization_seed(master_seed, k), stat);
    if (!exec.keep_snapshots) result.runs[k].final_snapshot.clear();
  });
  result.mean = ensemble_mean(result.runs);
  if (result.mean.size() >= 8) result.stationary = stationary_stats(result.mean, stat);
  return result;
}

std::string to_string(SweepAxis axis) {
  return axis == SweepAxis::kLinkPropagation ? "p_l" : "p_c";
}

SweepAxis parse_sweep_axis(const std::string& name) {
  if (name == "p_l") return SweepAxis::kLinkPropagation;
  if (name == "p_c") return SweepAxis::kConnection;
  throw InvalidParameter("unknown sweep axis '" + name + "' (expected p_l or p_c)");
}

SweepTable sweep(const ModelParams& base, SweepAxis axis, std::span<const double> values,
                 std::uint64_t master_seed, std::size_t realizations,
                 const StationarityOptions& stat, const ExecutionOptions& exec) {
  if (values.empty()) throw InvalidParameter("sweep needs at least one axis value");
  if (base.T + 1 < 8) throw InvalidParameter("sweep needs T >= 7 for stationarity windows");
  SweepTable table{axis, {}};
  ExecutionOptions inner = exec;
  inner.keep_snapshots = false;
  for (double value : values) {
    ModelParams p = base;
    (axis == SweepAxis::kLinkPropagation ? p.p_l : p.p_c) = value;
    const auto ensemble = run_ensemble(p, master_seed, realizations, stat, inner);
    SweepRow row;
    row.axis_value = value;
    for (const auto& r : ensemble.runs) {
      const auto& s = *r.stationary;
      row.fixed_mean_failure += s.fixed_mean_failure;
      row.fixed_mean_capital += s.fixed_mean_capital;
      row.fixed_mean_fp0 += s.fixed_mean_fp0;
      row.fixed_mean_fp1 += s.fixed_mean_fp1;
      row.realizations.push_back(s);
    }
    const double count = static_cast<double>(realizations);
    row.fixed_mean_failure /= count;
    row.fixed_mean_capital /= count;
    row.fixed_mean_fp0 /= count;
    row.fixed_mean_fp1 /= count;
    row.converged = ensemble.stationary->converged;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace cascade
