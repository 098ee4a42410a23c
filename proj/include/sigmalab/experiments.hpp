#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigmalab/fit.hpp"
#include "sigmalab/model.hpp"

namespace sigmalab {

/// Radial Fourier-side data profile.
struct RadialProfile {
  enum class Kind { Gaussian, MomentFree };
  Kind kind = Kind::Gaussian;
  double c = 1.0;
  double alpha = 1.0;

  /// c·e^{−αr²} or c·r²e^{−αr²}.
  double value(double r) const;
};

/// Initial data (û₀, û₁) given directly in frequency. Transform convention
/// û(ξ) = ∫e^{−ix·ξ}u(x)dx, so P₁ = û₁(0).
struct SpectralDataSpec {
  RadialProfile u0;
  RadialProfile u1;

  static SpectralDataSpec gaussian(double c = 1.0, double alpha = 1.0);
  static SpectralDataSpec moment_free(double c = 1.0, double alpha = 1.0);

  double p1() const { return u1.value(0.0); }
  std::string name() const;
};

/// Accepts "gaussian" and "moment_free".
SpectralDataSpec parse_data_preset(std::string_view name, double c, double alpha);

struct ErrorCurve {
  ModelParams params;
  RateCase rate_case = RateCase::PositiveSigma1;
  int k = 0;
  SpectralDataSpec data;
  std::vector<double> times;
  std::vector<double> values;
  /// Quadrature nodes where the error was below 1e−13 of the bracketed terms.
  long cancellation_nodes = 0;
};

/// max(10, (700/t)^{1/(2σ₁)}) capped at 10/ε*: the error integrand is below
/// underflow beyond it.
double error_tail_radius(const ModelParams& p, double t, double eps_star);

/// E(t) = ‖r^s(û(t) − profile₀·û₀ − profile₁·û₁)‖_{L²} for each t.
ErrorCurve error_curve(const ModelParams& p, RateCase rate_case, int k, const SpectralDataSpec& data,
                       std::span<const double> times, double tol = 1e-8);

/// Log-log fit over curve indices [first, last); target from error_exponent.
FitResult fit_slope(const ErrorCurve& curve, std::size_t first, std::size_t last);
/// Fit over the points with lo <= t <= hi.
FitResult fit_slope(const ErrorCurve& curve, double t_lo, double t_hi);

struct Band {
  double band_min = 0.0;
  double band_max = 0.0;
  double ratio() const { return band_max / band_min; }
};

/// min and max of E(t)(1+t)^{−target} over curve points with t >= 1.
Band lower_bound_band(const ErrorCurve& curve);

struct HighFrequencyReport {
  std::vector<double> times;
  std::vector<double> values;  ///< H(t) = ‖r^s û(t) χ_H‖
  FitResult fit;               ///< semilog; rate c = −fit.slope
  double rate() const { return -fit.slope; }
  bool monotone = false;
  /// Largest |H(2t)·e^{intercept}/H(t)² − 1| over grid pairs (t, 2t).
  double doubling_deviation = 0.0;
};

HighFrequencyReport high_freq_decay_check(const ModelParams& p, const SpectralDataSpec& data,
                                          std::span<const double> times, double tol = 1e-8);

/// Slope of log(E_{k+1}/E_k) against log t; target exponent_step.
FitResult order_improvement(const ErrorCurve& lower, const ErrorCurve& upper);
FitResult order_improvement_check(const ModelParams& p, RateCase rate_case, int k,
                                  const SpectralDataSpec& data, std::span<const double> times,
                                  double tol = 1e-8);

}  // namespace sigmalab
