#pragma once

#include <cstddef>
#include <cstdint>

#include "cascade/network.hpp"

namespace cascade {

enum class ImitationMode {
  kSequential,   // copies are visible to later focal agents in the same sweep
  kSynchronous,  // all focal agents read the strategies from the sweep start
};

enum class ExplorationMode {
  kIndependent,  // each strategy value perturbed with probability p_e / 2
  kSingleValue,  // with probability p_e, one of the two values chosen uniformly
};

// Full parameter record. Defaults are the baseline configuration
// (n = 100, p_c = 0.9, c_{p,1/2} = 0.1, sigma_e = 0.0125, T = 4000).
struct ModelParams {
  // evolutionary
  double p_r = 0.9;
  double s = 100.0;
  double p_e = 0.05;
  double mu = 0.0;
  double sigma_e = 0.0125;

  // non-evolutionary
  std::size_t n = 100;
  double p_c = 0.9;
  double f_m = 0.1;
  double p_n = 0.1;
  double p_l = 0.1;
  double pp_max = 1.0;
  double cp_half = 0.1;

  // time-dependent
  std::size_t T = 4000;
  double rec1 = 1.0;
  std::size_t failtime = 1;
  std::size_t realizations = 1;
  double init_fp0 = 0.7;
  double init_fp1 = 0.7;
  double init_sd = 0.01;

  // variants
  CentralityMode centrality = CentralityMode::kMaxNorm;
  ImitationMode imitation = ImitationMode::kSequential;
  ExplorationMode exploration = ExplorationMode::kIndependent;

  bool operator==(const ModelParams&) const = default;
};

// Throws InvalidParameter naming the first offending field.
void validate(const ModelParams& params);

}  // namespace cascade
