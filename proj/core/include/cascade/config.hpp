#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/engine.hpp"
#include "cascade/params.hpp"

namespace cascade {

// Inputs for the analytic `oracle` command.
struct OracleInputs {
  double gamma = 0.368;
  double beta = 1.0;
  double p_p = 0.5;
  double x = 0.1;           // p_l * p_ER
  double n_failed = 1.0;
  double f_p = 0.5;
  double investment = 0.9;  // f_p * c fed to protection_probability with pp_max, cp_half
  double k = 1.0;
  double unit_payoff = 1.0;
  std::vector<double> curve_x = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::size_t trials = 20;
  std::size_t failures = 8;
  double p_fail = 0.4;

  bool operator==(const OracleInputs&) const = default;
};

struct ExperimentConfig {
  ModelParams params;
  SweepAxis axis = SweepAxis::kLinkPropagation;
  std::vector<double> values = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1};
  StationarityOptions stationarity;
  bool export_graph = true;
  unsigned threads = 0;
  OracleInputs oracle;

  bool operator==(const ExperimentConfig& o) const {
    return params == o.params && axis == o.axis && values == o.values &&
           stationarity.window_fraction == o.stationarity.window_fraction &&
           stationarity.threshold == o.stationarity.threshold &&
           export_graph == o.export_graph && threads == o.threads && oracle == o.oracle;
  }
};

// Line-oriented `key = value` with `#` comments. Lists are comma separated.
// Unknown or repeated keys, malformed lines and out-of-range values raise
// ParseError carrying the 1-based line number and the key.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::string& path);

// Every key, one per line, in a fixed order; doubles in shortest round-trip form.
std::string serialize_config(const ExperimentConfig& config);

// Documented key names, in serialization order.
std::vector<std::string> config_keys();

}  // namespace cascade
