#pragma once

#include <optional>
#include <string_view>

namespace sigmalab {

/// Parameters of u_tt + (-Δ)^σ u + (-Δ)^σ₁ u_t + (-Δ)^σ₂ u_t = 0 in ℝⁿ,
/// plus the Sobolev weight s of the measured norm.
struct ModelParams {
  int n = 1;
  double sigma = 1.0;
  double sigma1 = 0.0;
  double sigma2 = 1.0;
  double s = 0.0;

  bool operator==(const ModelParams&) const = default;
};

/// Which family of asymptotic profiles applies: 𝒜 (σ₁ > 0) or ℬ (σ₁ = 0).
enum class RateCase { PositiveSigma1, ZeroSigma1 };

std::string_view to_string(RateCase c) noexcept;
RateCase parse_rate_case(std::string_view name);

/// The case implied by σ₁.
RateCase natural_case(const ModelParams& p) noexcept;

/// Throws Error{OrderingViolation | DimensionTooSmall | CaseMismatch}.
void validate(const ModelParams& p, RateCase rate_case);

/// δ = min(σ₂ − σ₁, σ − 2σ₁).
double delta(const ModelParams& p);

/// Exponent of (1+t) in the sharp error estimate for the k-th order profile.
double error_exponent(const ModelParams& p, int k, RateCase rate_case);

/// Improvement of error_exponent per extra order: −δ/(σ−σ₁) or −σ₂/σ.
double exponent_step(const ModelParams& p, RateCase rate_case);

/// (r^{2σ₁} + a r^{2σ₂})² − 4 b r^{2σ}.
double discriminant(const ModelParams& p, double r, double a, double b);

/// Radial frequencies where the characteristic roots (a = b = 1) are complex.
struct OscillationBand {
  double r_low = 0.0;
  double r_high = 0.0;
};

/// nullopt when the discriminant is nonnegative on the whole search range.
std::optional<OscillationBand> oscillation_band(const ModelParams& p);

/// ε* = r_low/2 when the band exists, else 1/2. Splits low and high frequencies.
double cutoff_radius(const ModelParams& p);

}  // namespace sigmalab
