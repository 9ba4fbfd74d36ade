#include <doctest.h>

#include <cmath>

#include "cascade/dynamics.hpp"
#include "cascade/network.hpp"

using namespace cascade;

namespace {

Population population(std::size_t n, double capital = 1.0) {
  Population agents(n);
  for (std::size_t i = 0; i < n; ++i) {
    agents[i].capital = capital;
    agents[i].fp0 = 0.01 * static_cast<double>(i);
    agents[i].fp1 = -0.01 * static_cast<double>(i);
  }
  return agents;
}

std::size_t flagged(const Population& agents) {
  std::size_t count = 0;
  for (const auto& a : agents) count += a.failure_potential;
  return count;
}

}  // namespace

TEST_CASE("protection_level truncates to [0, 1 - f_m]") {
  CHECK(protection_level(0.4, 0.5, 1.0, 0.1) == doctest::Approx(0.9));
  CHECK(protection_level(-0.2, 0.1, 0.5, 0.1) == 0.0);
  CHECK(protection_level(0.7, 0.7, 1.0, 0.1) == doctest::Approx(0.9));
  CHECK(protection_level(0.2, 0.3, 0.5, 0.1) == doctest::Approx(0.35));
}

TEST_CASE("capital_update") {
  CHECK(capital_update(0.0, 0.1, 0.5) == 1.0);
  CHECK(capital_update(1.0, 0.1, 0.9) == doctest::Approx(1.0));
  CHECK(capital_update(1.0, 0.1, 0.4) == doctest::Approx(1.5));
}

TEST_CASE("protection_probability scenarios A-D") {
  CHECK(protection_probability(1.0, 1.0, 0.9, 1.0) == doctest::Approx(0.9 / 1.9).epsilon(1e-12));
  CHECK(std::abs(protection_probability(1.0, 1.0, 0.9, 1.0) - 0.4737) < 1e-4);
  CHECK(std::abs(protection_probability(0.1, 1.0, 0.9, 1.0) - 0.0474) < 1e-4);
  CHECK(protection_probability(0.1, 0.1, 0.1, 1.0) == doctest::Approx(0.05));
  CHECK(protection_probability(1.0, 0.1, 0.1, 1.0) == doctest::Approx(0.5));
  CHECK(protection_probability(0.7, 0.3, 0.0, 5.0) == 0.0);
  CHECK(protection_probability(0.7, 0.3, 0.5, 0.0) == 0.0);
  CHECK(protection_probability(0.7, 0.0, 0.0, 0.0) == 0.7);
  CHECK(protection_probability(0.7, 0.0, 0.3, 2.0) == 0.7);
}

TEST_CASE("protection_probability is monotone in each argument") {
  RandomStream rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double pp = rng.uniform(), cp = rng.uniform(), fp = rng.uniform(), c = 5 * rng.uniform();
    const double base = protection_probability(pp, cp, fp, c);
    CHECK(base >= 0.0);
    CHECK(base <= pp);
    const double bump = rng.uniform() * 0.5;
    CHECK(protection_probability(pp, cp, fp + bump, c) >= base);
    CHECK(protection_probability(pp, cp, fp, c + bump) >= base);
    CHECK(protection_probability(std::min(1.0, pp + bump), cp, fp, c) >= base);
    CHECK(protection_probability(pp, cp + bump, fp, c) <= base);
  }
}

TEST_CASE("imitation_probability") {
  CHECK(imitation_probability(1.0, 0.0) == 0.5);
  CHECK(imitation_probability(100.0, 0.1) == doctest::Approx(1.0 / (1.0 + std::exp(-10.0))).epsilon(1e-14));
  CHECK(std::abs(imitation_probability(100.0, 0.1) - 0.9999546) < 1e-7);
  CHECK(std::abs(imitation_probability(1.0, -1.0) - 0.2689) < 1e-4);
  CHECK(imitation_probability(1e6, 1e6) == 1.0);
  CHECK(imitation_probability(1e6, -1e6) == 0.0);
  CHECK(std::isfinite(imitation_probability(HUGE_VAL, -1.0)));

  RandomStream rng(8);
  for (int i = 0; i < 10000; ++i) {
    const double s = 100 * rng.uniform(), x = 20 * rng.uniform() - 10;
    CHECK(imitation_probability(s, x) + imitation_probability(s, -x) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(imitation_probability(s, x + 0.1) >= imitation_probability(s, x));
  }
}

TEST_CASE("imitation_sweep") {
  SUBCASE("p_r = 0 leaves strategies unchanged") {
    auto agents = population(20);
    const auto before = agents;
    RandomStream rng(1);
    imitation_sweep(agents, 0.0, 100.0, rng);
    CHECK(agents == before);
  }
  SUBCASE("single agent is a no-op") {
    auto agents = population(1);
    const auto before = agents;
    RandomStream rng(1);
    imitation_sweep(agents, 1.0, 100.0, rng);
    CHECK(agents == before);
  }
  SUBCASE("strong selection: the poorer agent copies, the richer keeps its own") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Population agents(2);
      agents[0] = {.capital = 0.0, .fp0 = 0.1, .fp1 = 0.2};
      agents[1] = {.capital = 10.0, .fp0 = 0.5, .fp1 = 0.6};
      RandomStream rng(seed);
      imitation_sweep(agents, 1.0, 1e6, rng);
      CHECK(agents[0].fp0 == 0.5);
      CHECK(agents[0].fp1 == 0.6);
      CHECK(agents[1].fp0 == 0.5);
      CHECK(agents[1].capital == 10.0);
    }
  }
  SUBCASE("equal capitals copy with probability one half") {
    std::size_t copies = 0;
    const std::size_t trials = 20000;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
      Population agents(2);
      agents[0] = {.capital = 1.0, .fp0 = 0.1, .fp1 = 0.1};
      agents[1] = {.capital = 1.0, .fp0 = 0.2, .fp1 = 0.2};
      RandomStream rng(seed);
      imitation_sweep(agents, 1.0, 100.0, rng);
      copies += agents[0].fp0 == 0.2;
    }
    CHECK(std::abs(static_cast<double>(copies) / trials - 0.5) < 0.015);
  }
  SUBCASE("failed focal agents do not imitate") {
    Population agents(2);
    agents[0] = {.capital = 0.0, .fp0 = 0.1, .fp1 = 0.1, .failed = true, .fail_countdown = 2};
    agents[1] = {.capital = 10.0, .fp0 = 0.9, .fp1 = 0.9};
    RandomStream rng(4);
    imitation_sweep(agents, 1.0, 1e6, rng);
    CHECK(agents[0].fp0 == 0.1);
  }
  SUBCASE("sequential copies are visible within the sweep, synchronous are not") {
    // Capital order c1 < c0 < c2. Agent 1 ends with agent 2's strategy with
    // probability 3/4 when updates are immediate (directly, or through agent 0
    // having copied agent 2 first) and 1/2 when they are simultaneous.
    auto trial = [](ImitationMode mode, std::uint64_t seed) {
      Population agents(3);
      agents[0] = {.capital = 2.0, .fp0 = 0.0, .fp1 = 0.0};
      agents[1] = {.capital = 1.0, .fp0 = 1.0, .fp1 = 1.0};
      agents[2] = {.capital = 3.0, .fp0 = 2.0, .fp1 = 2.0};
      RandomStream rng(seed);
      imitation_sweep(agents, 1.0, 1e6, rng, mode);
      return agents[1].fp0 == 2.0;
    };
    const int trials = 8000;
    int sequential = 0, synchronous = 0;
    for (int seed = 0; seed < trials; ++seed) {
      sequential += trial(ImitationMode::kSequential, seed);
      synchronous += trial(ImitationMode::kSynchronous, seed);
    }
    CHECK(std::abs(sequential / double(trials) - 0.75) < 0.02);
    CHECK(std::abs(synchronous / double(trials) - 0.5) < 0.02);
  }
}

TEST_CASE("exploration_sweep") {
  SUBCASE("p_e = 0 or a zero increment leaves strategies unchanged") {
    auto agents = population(50);
    const auto before = agents;
    RandomStream rng(2);
    exploration_sweep(agents, 0.0, 0.0, 0.1, rng);
    CHECK(agents == before);
    exploration_sweep(agents, 1.0, 0.0, 0.0, rng);
    CHECK(agents == before);
  }
  SUBCASE("perturbation frequency and increment spread") {
    const std::size_t n = 1000, steps = 100;
    std::size_t perturbed = 0;
    double sum = 0.0, sum_sq = 0.0;
    RandomStream rng(11);
    for (std::size_t t = 0; t < steps; ++t) {
      auto agents = population(n);
      const auto before = agents;
      exploration_sweep(agents, 1.0, 0.0, 0.1, rng);
      for (std::size_t i = 0; i < n; ++i) {
        for (auto [now, was] : {std::pair{agents[i].fp0, before[i].fp0}, {agents[i].fp1, before[i].fp1}}) {
          if (now == was) continue;
          ++perturbed;
          sum += now - was;
          sum_sq += (now - was) * (now - was);
        }
      }
    }
    const double values = 2.0 * n * steps;
    CHECK(std::abs(perturbed / values - 0.5) < 0.01);
    const double mean = sum / perturbed;
    const double sd = std::sqrt(sum_sq / perturbed - mean * mean);
    CHECK(std::abs(sd - 0.1) < 0.005);
    CHECK(std::abs(mean) < 0.005);
  }
  SUBCASE("single-value mode changes exactly one value with probability p_e") {
    auto agents = population(20000);
    const auto before = agents;
    RandomStream rng(5);
    exploration_sweep(agents, 0.4, 0.0, 0.1, rng, ExplorationMode::kSingleValue);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const int diffs = (agents[i].fp0 != before[i].fp0) + (agents[i].fp1 != before[i].fp1);
      CHECK(diffs <= 1);
      changed += diffs;
    }
    CHECK(std::abs(changed / 20000.0 - 0.4) < 0.015);
  }
}

TEST_CASE("originate_potentials") {
  RandomStream rng(6);
  auto agents = population(10000);
  originate_potentials(agents, 0.0, rng);
  CHECK(flagged(agents) == 0);
  originate_potentials(agents, 0.1, rng);
  CHECK(std::abs(static_cast<double>(flagged(agents)) - 1000.0) <= 60.0);
  originate_potentials(agents, 1.0, rng);
  CHECK(flagged(agents) == 10000);
}

TEST_CASE("propagate_potentials") {
  const NetworkModel star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  RandomStream rng(7);
  SUBCASE("no sources, no change") {
    auto agents = population(6);
    std::vector<std::uint8_t> sources(6, 0);
    propagate_potentials(star, agents, sources, 1.0, rng);
    CHECK(flagged(agents) == 0);
  }
  SUBCASE("failed star center flags every leaf at p_l = 1") {
    auto agents = population(6);
    std::vector<std::uint8_t> sources(6, 0);
    sources[0] = 1;
    propagate_potentials(star, agents, sources, 1.0, rng);
    for (int leaf = 1; leaf <= 5; ++leaf) CHECK(agents[leaf].failure_potential);
    CHECK_FALSE(agents[0].failure_potential);
  }
  SUBCASE("no chaining within a step") {
    const NetworkModel path(3, {{0, 1}, {1, 2}});
    auto agents = population(3);
    std::vector<std::uint8_t> sources = {1, 0, 0};
    propagate_potentials(path, agents, sources, 1.0, rng);
    CHECK(agents[1].failure_potential);
    CHECK_FALSE(agents[2].failure_potential);
  }
  SUBCASE("K10 mean number of flagged neighbors is 9 p_l") {
    const auto k10 = generate_er(10, 1.0, 0);
    double total = 0.0;
    const int trials = 20000;
    for (int trial = 0; trial < trials; ++trial) {
      auto agents = population(10);
      std::vector<std::uint8_t> sources(10, 0);
      sources[3] = 1;
      propagate_potentials(k10, agents, sources, 0.3, rng);
      total += static_cast<double>(flagged(agents));
    }
    CHECK(std::abs(total / trials - 2.7) < 0.1);
  }
}

TEST_CASE("resolve_failures") {
  RandomStream rng(9);
  SUBCASE("perfect protection never converts a potential") {
    auto agents = population(100);
    for (auto& a : agents) a.failure_potential = true, a.fp = 0.0;
    const auto summary = resolve_failures(agents, 1.0, 0.0, 1, rng);
    CHECK(summary.new_failures == 0);
    CHECK(summary.at_risk == 100);
  }
  SUBCASE("no protection converts every potential") {
    auto agents = population(100);
    for (auto& a : agents) a.failure_potential = true, a.fp = 0.5;
    const auto summary = resolve_failures(agents, 0.0, 0.1, 3, rng);
    CHECK(summary.new_failures == 100);
    for (const auto& a : agents) {
      CHECK(a.failed);
      CHECK(a.capital == 0.0);
      CHECK(a.fail_countdown == 3);
    }
  }
  SUBCASE("scenario D converts with probability one half") {
    auto agents = population(10000);
    for (auto& a : agents) a.failure_potential = true, a.fp = 0.1, a.capital = 1.0;
    const auto summary = resolve_failures(agents, 1.0, 0.1, 1, rng);
    CHECK(std::abs(summary.new_failures / 10000.0 - 0.5) < 0.02);
    CHECK(summary.sum_protection / summary.at_risk == doctest::Approx(0.5));
  }
  SUBCASE("unflagged nodes and ongoing failures are untouched") {
    auto agents = population(2);
    agents[0].fp = 0.0;
    agents[1] = {.capital = 0.0, .failed = true, .failure_potential = true, .fail_countdown = 2};
    const auto summary = resolve_failures(agents, 0.0, 0.1, 1, rng);
    CHECK(summary.at_risk == 0);
    CHECK_FALSE(agents[0].failed);
    CHECK(agents[1].fail_countdown == 2);
  }
}

TEST_CASE("reset_potentials") {
  RandomStream rng(10);
  auto agents = population(10000);
  for (auto& a : agents) a.failure_potential = true;
  reset_potentials(agents, 0.0, rng);
  CHECK(flagged(agents) == 10000);
  reset_potentials(agents, 0.5, rng);
  CHECK(std::abs(static_cast<double>(10000 - flagged(agents)) - 5000.0) <= 120.0);
  reset_potentials(agents, 1.0, rng);
  CHECK(flagged(agents) == 0);
}

TEST_CASE("advance_failures counts down and reports the previous failures") {
  Population agents(3);
  agents[0] = {.capital = 0.0, .failed = true, .fail_countdown = 3};
  agents[1] = {.capital = 0.0, .failed = true, .fail_countdown = 1};
  std::vector<std::uint8_t> sources;
  advance_failures(agents, sources);
  CHECK(sources == std::vector<std::uint8_t>{1, 1, 0});
  CHECK(agents[0].failed);
  CHECK(agents[0].fail_countdown == 2);
  CHECK_FALSE(agents[1].failed);
  CHECK(agents[1].fail_countdown == 0);
  advance_failures(agents, sources);
  advance_failures(agents, sources);
  CHECK_FALSE(agents[0].failed);
  CHECK(sources == std::vector<std::uint8_t>{1, 0, 0});
}

TEST_CASE("apply_payoff skips failed agents but refreshes fp") {
  Population agents(2);
  agents[0] = {.capital = 1.0, .fp0 = 0.2, .fp1 = 0.2};
  agents[1] = {.capital = 0.0, .fp0 = 0.5, .fp1 = 0.5, .failed = true, .fail_countdown = 1};
  const std::vector<double> centrality = {1.0, 0.5};
  apply_payoff(agents, centrality, 0.1);
  CHECK(agents[0].fp == doctest::Approx(0.4));
  CHECK(agents[0].capital == doctest::Approx(1.5));
  CHECK(agents[1].fp == doctest::Approx(0.75));
  CHECK(agents[1].capital == 0.0);
}
