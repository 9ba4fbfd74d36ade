#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace cascade {

// Population standard deviation (divide by N) over |mean|. Empty input throws
// InvalidParameter; |mean| < 1e-9 yields nullopt (undefined CV).
std::optional<double> coefficient_of_variation(std::span<const double> series);

inline constexpr double kNearZeroMean = 1e-9;

struct WindowStats {
  std::size_t window_start = 0;  // index of the first sample in the window
  std::size_t window_end = 0;    // index of the last sample, inclusive
  double fixed_mean = 0.0;
  std::optional<double> cv;
  bool converged = false;        // cv defined and <= threshold
};

// Trailing window of ceil(window_fraction * size) samples. Requires a series
// of at least 8 samples and a window of at least 2.
WindowStats detect_stationarity(std::span<const double> series, double window_fraction,
                                double threshold = 0.10);

struct StationaryStats {
  std::size_t window_start = 0;
  std::size_t window_end = 0;
  double fixed_mean_failure = 0.0;
  double fixed_mean_capital = 0.0;
  double fixed_mean_fp0 = 0.0;
  double fixed_mean_fp1 = 0.0;
  std::optional<double> cv_fp0;
  std::optional<double> cv_fp1;
  bool converged = false;
};

struct MarkovStationary {
  double p_A;
  double p_B;
};

// Two-state chain [[1-gamma, beta], [gamma, 1-beta]]; p_A = beta / (gamma + beta).
MarkovStationary markov_stationary(double gamma, double beta);

// N_f + p_p (1 - N_f) with the population normalized to 1.
double not_failed_fraction_next(double n_f, double p_p);

// 1 - (1 - p_p)(1 - (1 - x)^n_failed), x = p_l * p_ER.
double effective_protection(double p_p, double x, double n_failed);

enum class CapitalMode { kOneStep, kFixedPoint };

// One-step: 1 + p'(1 - f_p - f_m). Fixed point of c = 1 + p'(1 - f_p - f_m) c:
// 1 / (1 - p'(1 - f_p - f_m)); throws NoStationaryCapital when that factor >= 1.
double stationary_capital(double p_p_eff, double f_p, double f_m, CapitalMode mode);

// C(trials, failures) p^failures (1 - p)^(trials - failures).
double binomial_failure_pmf(std::size_t trials, std::size_t failures, double p);

// c - k / x for x > 0; DomainError otherwise.
double network_effect_curve(double k, double c, double x);

struct MeanFieldResult {
  double p_A = 0.0;
  double p_B = 0.0;
  double p_p_eff = 0.0;
  double c_one_step = 0.0;
  double c_fixed_point = 0.0;
};

// Chains the oracles: the Markov pair from (gamma, beta), p'_p from
// (p_p, x, n_failed), and both capital modes from (p'_p, f_p, f_m).
// c_fixed_point is NaN when no fixed point exists.
MeanFieldResult mean_field(double gamma, double beta, double p_p, double x, double n_failed,
                           double f_p, double f_m);

}  // namespace cascade
