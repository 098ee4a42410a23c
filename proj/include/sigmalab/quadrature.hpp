#pragma once

#include <functional>
#include <span>

#include "sigmalab/fit.hpp"

namespace sigmalab {

/// 2π^{n/2}/Γ(n/2), the measure of the unit sphere in ℝⁿ.
double surface_area(int n);

/// Smooth partition of unity split at ε*: χ_L = 1 on (0, ε*/2], 0 on [ε*, ∞).
struct Cutoff {
  double eps_star = 0.5;

  double low(double r) const;
  double high(double r) const { return 1.0 - low(r); }
};

/// A radial function with |f(r)| ~ r^γ as r → 0, γ = singularity_exponent.
struct RadialIntegrand {
  std::function<double(double)> f;
  double singularity_exponent = 0.0;
};

/// Innermost radius resolved by quadrature; the rest is a power-law endpoint term.
inline constexpr double radial_floor = 1e-12;

/// ‖f(|ξ|)‖_{L²(ℝⁿ)} over |ξ| < r_max, with relative error about tol.
/// Octave segments from r_max down to radial_floor, adaptive 16-point Gauss-Legendre.
/// Throws NonConvergence past 60 bisections and SingularityTooStrong if 2γ + n <= 0.
double l2_radial(const RadialIntegrand& f, int n, double r_max, double tol);

/// Fit of log ‖r^α e^{−c r^β t} χ_L(r)‖ against log t; target −n/(2β) − α/β.
FitResult scaling_check(double alpha, double beta, double c, int n, std::span<const double> t_grid,
                        double eps_star = 0.5, double tol = 1e-10);

}  // namespace sigmalab
