#include "cascade/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace cascade {

double protection_level(double fp0, double fp1, double centrality, double f_m) noexcept {
  return std::clamp(fp0 + fp1 * centrality, 0.0, 1.0 - f_m);
}

double capital_update(double capital, double f_m, double fp) noexcept {
  return 1.0 + (1.0 - f_m - fp) * capital;
}

double protection_probability(double pp_max, double cp_half, double fp, double capital) noexcept {
  const double investment = fp * capital;
  if (investment <= 0.0) return cp_half > 0.0 ? 0.0 : pp_max;
  return pp_max / (1.0 + cp_half / investment);
}

double imitation_probability(double s, double delta_c) noexcept {
  if (delta_c == 0.0) return 0.5;
  const double x = s * delta_c;
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

void imitation_sweep(std::span<AgentState> agents, double p_r, double s, RandomStream& rng,
                     ImitationMode mode) {
  const std::size_t n = agents.size();
  if (n < 2) return;

  struct Strategy {
    double fp0, fp1;
  };
  std::vector<Strategy> frozen;
  if (mode == ImitationMode::kSynchronous) {
    frozen.reserve(n);
    for (const auto& a : agents) frozen.push_back({a.fp0, a.fp1});
  }

  for (std::size_t focal = 0; focal < n; ++focal) {
    if (agents[focal].failed) continue;
    if (!rng.bernoulli(p_r)) continue;
    std::size_t role = rng.below(static_cast<std::uint32_t>(n - 1));
    if (role >= focal) ++role;
    const double p_i = imitation_probability(s, agents[role].capital - agents[focal].capital);
    if (!rng.bernoulli(p_i)) continue;
    if (mode == ImitationMode::kSynchronous) {
      agents[focal].fp0 = frozen[role].fp0;
      agents[focal].fp1 = frozen[role].fp1;
    } else {
      agents[focal].fp0 = agents[role].fp0;
      agents[focal].fp1 = agents[role].fp1;
    }
  }
}

void exploration_sweep(std::span<AgentState> agents, double p_e, double mu, double sigma_e,
                       RandomStream& rng, ExplorationMode mode) {
  if (p_e <= 0.0) return;
  for (auto& a : agents) {
    if (mode == ExplorationMode::kIndependent) {
      if (rng.bernoulli(0.5 * p_e)) a.fp0 += rng.normal(mu, sigma_e);
      if (rng.bernoulli(0.5 * p_e)) a.fp1 += rng.normal(mu, sigma_e);
    } else if (rng.bernoulli(p_e)) {
      double& value = rng.below(2) == 0 ? a.fp0 : a.fp1;
      value += rng.normal(mu, sigma_e);
    }
  }
}

void apply_payoff(std::span<AgentState> agents, std::span<const double> centrality, double f_m) {
  for (std::size_t i = 0; i < agents.size(); ++i) {
    auto& a = agents[i];
    a.fp = protection_level(a.fp0, a.fp1, centrality[i], f_m);
    if (!a.failed) a.capital = capital_update(a.capital, f_m, a.fp);
  }
}

void originate_potentials(std::span<AgentState> agents, double p_n, RandomStream& rng) {
  if (p_n <= 0.0) return;
  for (auto& a : agents)
    if (rng.bernoulli(p_n)) a.failure_potential = true;
}

void propagate_potentials(const NetworkModel& net, std::span<AgentState> agents,
                          std::span<const std::uint8_t> sources, double p_l, RandomStream& rng) {
  if (p_l <= 0.0) return;
  for (NodeId v = 0; v < sources.size(); ++v) {
    if (!sources[v]) continue;
    for (NodeId w : net.neighbors(v))
      if (rng.bernoulli(p_l)) agents[w].failure_potential = true;
  }
}

ResolutionSummary resolve_failures(std::span<AgentState> agents, double pp_max, double cp_half,
                                   std::uint32_t failtime, RandomStream& rng) {
  ResolutionSummary summary;
  for (auto& a : agents) {
    if (!a.failure_potential) continue;
    if (a.failed) {
      a.capital = 0.0;
      continue;
    }
    const double p_p = protection_probability(pp_max, cp_half, a.fp, a.capital);
    ++summary.at_risk;
    summary.sum_protection += p_p;
    if (rng.bernoulli(1.0 - p_p)) {
      a.failed = true;
      a.capital = 0.0;
      a.fail_countdown = failtime;
      ++summary.new_failures;
    }
  }
  return summary;
}

void reset_potentials(std::span<AgentState> agents, double rec1, RandomStream& rng) {
  for (auto& a : agents)
    if (a.failure_potential && rng.bernoulli(rec1)) a.failure_potential = false;
}

void advance_failures(std::span<AgentState> agents, std::vector<std::uint8_t>& sources) {
  sources.resize(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    auto& a = agents[i];
    sources[i] = a.failed ? 1 : 0;
    if (a.failed && --a.fail_countdown == 0) a.failed = false;
  }
}

Population initialize_population(const ModelParams& params, std::span<const double> centrality,
                                 RandomStream& rng) {
  Population agents(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    auto& a = agents[i];
    a.fp0 = rng.normal(params.init_fp0, params.init_sd);
    a.fp1 = rng.normal(params.init_fp1, params.init_sd);
    a.fp = protection_level(a.fp0, a.fp1, centrality[i], params.f_m);
  }
  return agents;
}

}  // namespace cascade
