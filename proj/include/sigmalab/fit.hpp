#pragma once

#include <span>
#include <vector>

namespace sigmalab {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  ///< in the fitted (log) units
  double target = 0.0;
  double gap = 0.0;           ///< |slope − target|
};

/// Least squares of log y against log x. Needs >= 5 points, all y > 0.
FitResult fit_loglog(std::span<const double> x, std::span<const double> y, double target);

/// Least squares of log y against x (exponential envelope y ≈ e^{intercept + slope·x}).
FitResult fit_semilog(std::span<const double> x, std::span<const double> y, double target);

/// per_decade geometric points per factor of ten from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, int per_decade);

/// count evenly spaced points from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, int count);

}  // namespace sigmalab
