#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "cascade/dynamics.hpp"
#include "cascade/engine.hpp"

namespace cascade::csv {

// Exact header strings. All reals are written with six decimals, missing
// values as empty fields, rows terminated by '\n'.
inline constexpr const char* kSeriesHeader =
    "t,failure_fraction,mean_capital,mean_fp0,mean_fp1,cv_fp0,cv_fp1,mean_fp,mean_pp";
inline constexpr const char* kTrajectoryHeader = "t,mean_fp0,mean_fp1,cv_fp0,cv_fp1";
inline constexpr const char* kSnapshotHeader =
    "node,centrality,degree,capital,fp0,fp1,fp,failed,failure_potential,fail_countdown";
inline constexpr const char* kStationaryHeader =
    "realization,window_start,window_end,fixed_mean_failure,fixed_mean_capital,"
    "fixed_mean_fp0,fixed_mean_fp1,cv_fp0,cv_fp1,converged";
inline constexpr const char* kSweepHeader =
    "axis_value,fixed_mean_failure,fixed_mean_capital,fixed_mean_fp0,fixed_mean_fp1,converged";
inline constexpr const char* kSweepRealizationHeader =
    "axis_value,realization,window_start,window_end,fixed_mean_failure,fixed_mean_capital,"
    "fixed_mean_fp0,fixed_mean_fp1,cv_fp0,cv_fp1,converged";

std::string series_row(const TimeSeriesRecord& r);
std::string stationary_row(const std::string& label, const StationaryStats& s);

void write_series(std::ostream& out, std::span<const TimeSeriesRecord> series);
void write_trajectory(std::ostream& out, std::span<const TimeSeriesRecord> series);
void write_snapshot(std::ostream& out, const NetworkModel& net, std::span<const AgentState> agents);

// Long format: realization index prepended to every series row.
void write_realizations(std::ostream& out, std::span<const RunResult> runs);
void write_stationary(std::ostream& out, std::span<const RunResult> runs,
                      const std::optional<StationaryStats>& ensemble);
void write_sweep(std::ostream& out, const SweepTable& table);
void write_sweep_realizations(std::ostream& out, const SweepTable& table);

}  // namespace cascade::csv
