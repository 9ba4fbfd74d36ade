#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cascade/network.hpp"
#include "cascade/params.hpp"
#include "cascade/random.hpp"

namespace cascade {

struct AgentState {
  double capital = 1.0;
  double fp0 = 0.0;
  double fp1 = 0.0;
  double fp = 0.0;  // derived, always in [0, 1 - f_m]
  bool failed = false;
  bool failure_potential = false;
  std::uint32_t fail_countdown = 0;  // > 0 exactly when failed

  bool operator==(const AgentState&) const = default;
};

using Population = std::vector<AgentState>;

// clamp(fp0 + fp1 * centrality, 0, 1 - f_m).
double protection_level(double fp0, double fp1, double centrality, double f_m) noexcept;

// One unit of payoff plus the capital left after maintenance and protection.
double capital_update(double capital, double f_m, double fp) noexcept;

// pp_max / (1 + cp_half / (fp * c)). At fp * c == 0 the value is 0, except
// for cp_half == 0 where the 0/0 case resolves to pp_max.
double protection_probability(double pp_max, double cp_half, double fp, double capital) noexcept;

// Fermi rule 1 / (1 + exp(-s * delta_c)), evaluated without overflow.
double imitation_probability(double s, double delta_c) noexcept;

// Per focal agent i in index order, skipping agents in an ongoing failure:
//   uniform < p_r, role = uniform index != i, uniform < p_i -> copy.
void imitation_sweep(std::span<AgentState> agents, double p_r, double s, RandomStream& rng,
                     ImitationMode mode = ImitationMode::kSequential);

// Per agent in index order; a Normal(mu, sigma_e) increment is drawn only for
// values that get perturbed. Strategy values are not clamped.
void exploration_sweep(std::span<AgentState> agents, double p_e, double mu, double sigma_e,
                       RandomStream& rng,
                       ExplorationMode mode = ExplorationMode::kIndependent);

// Recomputes fp for every agent; non-failed agents receive capital_update.
void apply_payoff(std::span<AgentState> agents, std::span<const double> centrality, double f_m);

void originate_potentials(std::span<AgentState> agents, double p_n, RandomStream& rng);

// Each node flagged in `sources` (the previous step's failures) passes a
// potential to each neighbor with probability p_l. Draws run over sources in
// index order, then over their sorted neighbor lists. Nodes flagged here do
// not propagate until the next step.
void propagate_potentials(const NetworkModel& net, std::span<AgentState> agents,
                          std::span<const std::uint8_t> sources, double p_l, RandomStream& rng);

struct ResolutionSummary {
  std::size_t at_risk = 0;        // flagged nodes that were not already failed
  std::size_t new_failures = 0;
  double sum_protection = 0.0;    // sum of p_p over at-risk nodes
};

// Flagged, non-failed nodes fail with probability 1 - p_p: capital drops to 0
// and the countdown starts at failtime. Already-failed nodes stay failed.
ResolutionSummary resolve_failures(std::span<AgentState> agents, double pp_max, double cp_half,
                                   std::uint32_t failtime, RandomStream& rng);

// Clears each failure potential with probability rec1 (one draw per flagged node).
void reset_potentials(std::span<AgentState> agents, double rec1, RandomStream& rng);

// Start-of-step recovery. Writes the current failed flags into `sources`,
// then decrements every countdown and clears `failed` where it reaches 0.
// A node failing at step t is therefore failed during t .. t + failtime - 1
// and earns its first payoff again at t + failtime.
void advance_failures(std::span<AgentState> agents, std::vector<std::uint8_t>& sources);

// Normal(init_fp0, init_sd) and Normal(init_fp1, init_sd) per agent, capital 1,
// no failures; fp computed from the centrality.
Population initialize_population(const ModelParams& params, std::span<const double> centrality,
                                 RandomStream& rng);

}  // namespace cascade
