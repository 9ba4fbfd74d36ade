#include "cascade/csv.hpp"

#include <ostream>

#include "cascade/format.hpp"

namespace cascade::csv {
namespace {

std::string fields(std::initializer_list<std::string> values) {
  std::string row;
  bool first = true;
  for (const auto& v : values) {
    if (!first) row += ',';
    row += v;
    first = false;
  }
  return row;
}

std::string flag(bool b) { return b ? "1" : "0"; }

std::string stationary_fields(const StationaryStats& s) {
  return fields({std::to_string(s.window_start), std::to_string(s.window_end),
                 format_fixed(s.fixed_mean_failure), format_fixed(s.fixed_mean_capital),
                 format_fixed(s.fixed_mean_fp0), format_fixed(s.fixed_mean_fp1),
                 format_fixed(s.cv_fp0), format_fixed(s.cv_fp1), flag(s.converged)});
}

}  // namespace

std::string series_row(const TimeSeriesRecord& r) {
  return fields({std::to_string(r.t), format_fixed(r.failure_fraction),
                 format_fixed(r.mean_capital), format_fixed(r.mean_fp0), format_fixed(r.mean_fp1),
                 format_fixed(r.cv_fp0), format_fixed(r.cv_fp1), format_fixed(r.mean_fp),
                 format_fixed(r.mean_pp)});
}

std::string stationary_row(const std::string& label, const StationaryStats& s) {
  return label + ',' + stationary_fields(s);
}

void write_series(std::ostream& out, std::span<const TimeSeriesRecord> series) {
  out << kSeriesHeader << '\n';
  for (const auto& r : series) out << series_row(r) << '\n';
}

void write_trajectory(std::ostream& out, std::span<const TimeSeriesRecord> series) {
  out << kTrajectoryHeader << '\n';
  for (const auto& r : series)
    out << fields({std::to_string(r.t), format_fixed(r.mean_fp0), format_fixed(r.mean_fp1),
                   format_fixed(r.cv_fp0), format_fixed(r.cv_fp1)})
        << '\n';
}

void write_snapshot(std::ostream& out, const NetworkModel& net, std::span<const AgentState> agents) {
  out << kSnapshotHeader << '\n';
  for (NodeId i = 0; i < agents.size(); ++i) {
    const auto& a = agents[i];
    out << fields({std::to_string(i), format_fixed(net.centrality()[i]),
                   std::to_string(net.degree(i)), format_fixed(a.capital), format_fixed(a.fp0),
                   format_fixed(a.fp1), format_fixed(a.fp), flag(a.failed),
                   flag(a.failure_potential), std::to_string(a.fail_countdown)})
        << '\n';
  }
}

void write_realizations(std::ostream& out, std::span<const RunResult> runs) {
  out << "realization," << kSeriesHeader << '\n';
  for (std::size_t k = 0; k < runs.size(); ++k)
    for (const auto& r : runs[k].series) out << k << ',' << series_row(r) << '\n';
}

void write_stationary(std::ostream& out, std::span<const RunResult> runs,
                      const std::optional<StationaryStats>& ensemble) {
  out << kStationaryHeader << '\n';
  for (std::size_t k = 0; k < runs.size(); ++k)
    if (runs[k].stationary) out << stationary_row(std::to_string(k), *runs[k].stationary) << '\n';
  if (ensemble && runs.size() > 1) out << stationary_row("mean", *ensemble) << '\n';
}

void write_sweep(std::ostream& out, const SweepTable& table) {
  out << kSweepHeader << '\n';
  for (const auto& row : table.rows)
    out << fields({format_fixed(row.axis_value), format_fixed(row.fixed_mean_failure),
                   format_fixed(row.fixed_mean_capital), format_fixed(row.fixed_mean_fp0),
                   format_fixed(row.fixed_mean_fp1), flag(row.converged)})
        << '\n';
}

void write_sweep_realizations(std::ostream& out, const SweepTable& table) {
  out << kSweepRealizationHeader << '\n';
  for (const auto& row : table.rows)
    for (std::size_t k = 0; k < row.realizations.size(); ++k)
      out << format_fixed(row.axis_value) << ',' << k << ','
          << stationary_fields(row.realizations[k]) << '\n';
}

}  // namespace cascade::csv
