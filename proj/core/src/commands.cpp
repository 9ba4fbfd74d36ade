#include "cascade/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "cascade/csv.hpp"
#include "cascade/dynamics.hpp"
#include "cascade/engine.hpp"
#include "cascade/error.hpp"
#include "cascade/format.hpp"

namespace cascade {
namespace {

namespace fs = std::filesystem;

void prepare_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw Error("cannot create output directory '" + dir.string() + "'");
}

// Writes through a string buffer so a failed write never leaves a truncated file
// that looks complete.
void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ostringstream buf;
  body(buf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  const std::string text = buf.str();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

ExecutionOptions execution(const ExperimentConfig& config) {
  return {.threads = config.threads, .keep_snapshots = true};
}

void write_run_files(const ExperimentConfig& config, const RunResult& result, const fs::path& out) {
  write_file(out / "series.csv", [&](auto& o) { csv::write_series(o, result.series); });
  write_file(out / "trajectory.csv", [&](auto& o) { csv::write_trajectory(o, result.series); });
  // The network is a pure function of (n, p_c, seed), so it is rebuilt for export.
  const auto net = generate_er(config.params.n, config.params.p_c, result.seed,
                               CentralityOptions{.mode = config.params.centrality});
  write_file(out / "snapshot.csv",
             [&](auto& o) { csv::write_snapshot(o, net, result.final_snapshot); });
  if (config.export_graph)
    write_file(out / "network.edges", [&](auto& o) { write_edge_list(o, net); });
}

}  // namespace

int cmd_run(const ExperimentConfig& config, std::uint64_t seed, const fs::path& out,
            std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    validate(config.params);
    prepare_directory(out);
    const auto result = run(config.params, seed, config.stationarity);
    write_run_files(config, result, out);
    write_file(out / "stationary.csv", [&](auto& o) {
      csv::write_stationary(o, std::span(&result, 1), std::nullopt);
    });
    log << "run: " << result.series.size() << " records written to " << out.string() << '\n';
  });
}

int cmd_ensemble(const ExperimentConfig& config, std::uint64_t seed, const fs::path& out,
                 std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    validate(config.params);
    prepare_directory(out);
    const auto ensemble = run_ensemble(config.params, seed, config.params.realizations,
                                       config.stationarity, execution(config));
    write_run_files(config, ensemble.runs.front(), out);
    write_file(out / "ensemble_mean.csv", [&](auto& o) { csv::write_series(o, ensemble.mean); });
    write_file(out / "realizations.csv",
               [&](auto& o) { csv::write_realizations(o, ensemble.runs); });
    write_file(out / "stationary.csv", [&](auto& o) {
      csv::write_stationary(o, ensemble.runs, ensemble.stationary);
    });
    log << "ensemble: " << ensemble.runs.size() << " realizations written to " << out.string()
        << '\n';
  });
}

int cmd_sweep(const ExperimentConfig& config, std::uint64_t seed, const fs::path& out,
              std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    validate(config.params);
    prepare_directory(out);
    const auto table = sweep(config.params, config.axis, config.values, seed,
                             config.params.realizations, config.stationarity, execution(config));
    write_file(out / "sweep.csv", [&](auto& o) { csv::write_sweep(o, table); });
    write_file(out / "sweep_realizations.csv",
               [&](auto& o) { csv::write_sweep_realizations(o, table); });
    log << "sweep over " << to_string(table.axis) << ": " << table.rows.size()
        << " rows written to " << out.string() << '\n';
  });
}

std::string oracle_report(const ExperimentConfig& config) {
  const auto& o = config.oracle;
  const auto& p = config.params;
  std::string text;
  auto line = [&](const std::string& key, double value) {
    text += key + " = " + format_fixed(value) + "\n";
  };
  const auto mf = mean_field(o.gamma, o.beta, o.p_p, o.x, o.n_failed, o.f_p, p.f_m);
  line("p_A", mf.p_A);
  line("p_B", mf.p_B);
  line("not_failed_next", not_failed_fraction_next(mf.p_A, o.p_p));
  line("p_p_eff", mf.p_p_eff);
  line("c_one_step", mf.c_one_step);
  line("c_fixed_point", mf.c_fixed_point);
  line("protection_probability", protection_probability(p.pp_max, p.cp_half, o.investment, 1.0));
  line("binomial_failure_pmf", binomial_failure_pmf(o.trials, o.failures, o.p_fail));
  line("degree_mean", p.p_c * static_cast<double>(p.n - 1));
  for (double x : o.curve_x)
    line("network_effect(" + format_shortest(x) + ")", network_effect_curve(o.k, o.unit_payoff, x));
  return text;
}

int cmd_oracle(const ExperimentConfig& config, const std::optional<fs::path>& out,
               std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    const std::string report = oracle_report(config);
    if (out) {
      prepare_directory(*out);
      write_file(*out / "oracle.txt", [&](auto& o) { o << report; });
    }
    log << report;
  });
}

}  // namespace cascade
