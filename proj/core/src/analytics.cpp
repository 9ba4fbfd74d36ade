#include "cascade/analytics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cascade/error.hpp"

namespace cascade {

std::optional<double> coefficient_of_variation(std::span<const double> series) {
  if (series.empty()) throw InvalidParameter("coefficient of variation of an empty series");
  const double count = static_cast<double>(series.size());
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= count;
  if (std::abs(mean) < kNearZeroMean) return std::nullopt;
  double sq = 0.0;
  for (double v : series) sq += (v - mean) * (v - mean);
  return std::sqrt(sq / count) / std::abs(mean);
}

WindowStats detect_stationarity(std::span<const double> series, double window_fraction,
                                double threshold) {
  if (!(window_fraction > 0.0 && window_fraction <= 1.0))
    throw InvalidParameter("window_fraction must be in (0, 1]");
  if (series.size() < 8)
    throw InvalidParameter("stationarity needs at least 8 samples, got " +
                           std::to_string(series.size()));
  const auto width = static_cast<std::size_t>(
      std::ceil(window_fraction * static_cast<double>(series.size()) - 1e-9));
  if (width < 2) throw InvalidParameter("stationarity window shorter than 2 samples");

  WindowStats stats;
  stats.window_start = series.size() - width;
  stats.window_end = series.size() - 1;
  const auto window = series.subspan(stats.window_start);
  double sum = 0.0;
  for (double v : window) sum += v;
  stats.fixed_mean = sum / static_cast<double>(width);
  stats.cv = coefficient_of_variation(window);
  stats.converged = stats.cv && *stats.cv <= threshold;
  return stats;
}

MarkovStationary markov_stationary(double gamma, double beta) {
  if (!(gamma >= 0.0 && gamma <= 1.0 && beta >= 0.0 && beta <= 1.0))
    throw InvalidParameter("markov_stationary: rates must be in [0, 1]");
  if (gamma + beta <= 0.0) throw DegenerateChain("gamma = beta = 0: every state is absorbing");
  const double p_a = beta / (gamma + beta);
  return {p_a, 1.0 - p_a};
}

double not_failed_fraction_next(double n_f, double p_p) {
  if (!(n_f >= 0.0 && n_f <= 1.0 && p_p >= 0.0 && p_p <= 1.0))
    throw InvalidParameter("not_failed_fraction_next: inputs must be in [0, 1]");
  return n_f + p_p * (1.0 - n_f);
}

double effective_protection(double p_p, double x, double n_failed) {
  if (!(p_p >= 0.0 && p_p <= 1.0 && x >= 0.0 && x <= 1.0 && n_failed >= 0.0))
    throw InvalidParameter("effective_protection: input out of range");
  if (n_failed == 0.0) return 1.0;
  // pow(0, n) is 0 for n > 0, so x = 1 gives p_p exactly.
  return 1.0 - (1.0 - p_p) * (1.0 - std::pow(1.0 - x, n_failed));
}

double stationary_capital(double p_p_eff, double f_p, double f_m, CapitalMode mode) {
  if (!(p_p_eff >= 0.0 && p_p_eff <= 1.0))
    throw InvalidParameter("stationary_capital: p'_p must be in [0, 1]");
  if (f_p + f_m > 1.0) throw InvalidParameter("stationary_capital: f_p + f_m exceeds 1");
  const double retained = p_p_eff * (1.0 - f_p - f_m);
  if (mode == CapitalMode::kOneStep) return 1.0 + retained;
  if (retained >= 1.0) throw NoStationaryCapital("retained fraction >= 1: capital diverges");
  return 1.0 / (1.0 - retained);
}

double binomial_failure_pmf(std::size_t trials, std::size_t failures, double p) {
  if (failures > trials) throw InvalidParameter("binomial_failure_pmf: failures > trials");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("binomial_failure_pmf: p outside [0, 1]");
  if (p == 0.0) return failures == 0 ? 1.0 : 0.0;
  if (p == 1.0) return failures == trials ? 1.0 : 0.0;
  const double r = static_cast<double>(failures);
  const double rest = static_cast<double>(trials - failures);
  const double log_choose = std::lgamma(trials + 1.0) - std::lgamma(r + 1.0) - std::lgamma(rest + 1.0);
  return std::exp(log_choose + r * std::log(p) + rest * std::log1p(-p));
}

double network_effect_curve(double k, double c, double x) {
  if (!(x > 0.0)) throw DomainError("network_effect_curve: x must be > 0");
  return c - k / x;
}

MeanFieldResult mean_field(double gamma, double beta, double p_p, double x, double n_failed,
                           double f_p, double f_m) {
  MeanFieldResult r;
  const auto chain = markov_stationary(gamma, beta);
  r.p_A = chain.p_A;
  r.p_B = chain.p_B;
  r.p_p_eff = effective_protection(p_p, x, n_failed);
  r.c_one_step = stationary_capital(r.p_p_eff, f_p, f_m, CapitalMode::kOneStep);
  try {
    r.c_fixed_point = stationary_capital(r.p_p_eff, f_p, f_m, CapitalMode::kFixedPoint);
  } catch (const NoStationaryCapital&) {
    r.c_fixed_point = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace cascade
