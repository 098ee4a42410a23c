#include "sigmalab/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "sigmalab/error.hpp"

namespace sigmalab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OrderingViolation: return "OrderingViolation";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::BisectionFailure: return "BisectionFailure";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::SingularConstantTerm: return "SingularConstantTerm";
    case Errc::InsufficientOuterDerivs: return "InsufficientOuterDerivs";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::SingularityTooStrong: return "SingularityTooStrong";
    case Errc::DegenerateFit: return "DegenerateFit";
    case Errc::RequiresNonzeroP1: return "RequiresNonzeroP1";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

std::string_view to_string(RateCase c) noexcept {
  return c == RateCase::PositiveSigma1 ? "PositiveSigma1" : "ZeroSigma1";
}

RateCase parse_rate_case(std::string_view name) {
  if (name == "PositiveSigma1") return RateCase::PositiveSigma1;
  if (name == "ZeroSigma1") return RateCase::ZeroSigma1;
  throw Error(Errc::InvalidArgument, "unknown rate case '" + std::string(name) + "'");
}

RateCase natural_case(const ModelParams& p) noexcept {
  return p.sigma1 == 0.0 ? RateCase::ZeroSigma1 : RateCase::PositiveSigma1;
}

void validate(const ModelParams& p, RateCase rate_case) {
  const bool finite = std::isfinite(p.sigma) && std::isfinite(p.sigma1) &&
                      std::isfinite(p.sigma2) && std::isfinite(p.s);
  if (p.n < 1) throw Error(Errc::DimensionTooSmall, "n must be at least 1");
  if (!finite) throw Error(Errc::OrderingViolation, "parameters must be finite");
  if (p.sigma < 1.0) throw Error(Errc::OrderingViolation, "sigma must be >= 1");
  if (!(p.sigma1 >= 0.0 && p.sigma1 < p.sigma / 2 && p.sigma / 2 < p.sigma2 &&
        p.sigma2 <= p.sigma)) {
    throw Error(Errc::OrderingViolation, "need 0 <= sigma1 < sigma/2 < sigma2 <= sigma");
  }
  if (p.s < 0.0) throw Error(Errc::OrderingViolation, "s must be >= 0");

  if (rate_case == RateCase::PositiveSigma1) {
    if (p.sigma1 == 0.0) throw Error(Errc::CaseMismatch, "PositiveSigma1 requires sigma1 > 0");
    if (!(p.n > 4.0 * p.sigma1)) throw Error(Errc::DimensionTooSmall, "need n > 4 sigma1");
  } else if (p.sigma1 != 0.0) {
    throw Error(Errc::CaseMismatch, "ZeroSigma1 requires sigma1 = 0");
  }
}

double delta(const ModelParams& p) {
  return std::min(p.sigma2 - p.sigma1, p.sigma - 2.0 * p.sigma1);
}

double error_exponent(const ModelParams& p, int k, RateCase rate_case) {
  validate(p, rate_case);
  if (k < 0) throw Error(Errc::InvalidArgument, "k must be nonnegative");
  if (rate_case == RateCase::PositiveSigma1) {
    const double d = p.sigma - p.sigma1;
    return -p.n / (4.0 * d) - p.s / (2.0 * d) + p.sigma1 / d - k * delta(p) / d;
  }
  return -p.n / (4.0 * p.sigma) - p.s / (2.0 * p.sigma) - k * p.sigma2 / p.sigma;
}

double exponent_step(const ModelParams& p, RateCase rate_case) {
  validate(p, rate_case);
  if (rate_case == RateCase::PositiveSigma1) return -delta(p) / (p.sigma - p.sigma1);
  return -p.sigma2 / p.sigma;
}

double discriminant(const ModelParams& p, double r, double a, double b) {
  const double damping = std::pow(r, 2 * p.sigma1) + a * std::pow(r, 2 * p.sigma2);
  return damping * damping - 4.0 * b * std::pow(r, 2 * p.sigma);
}

namespace {

// Same sign as discriminant(p, r, 1, 1): the discriminant factors as
// (A − 2r^σ)(A + 2r^σ) with the second factor positive.
double band_indicator(const ModelParams& p, double r) {
  return std::pow(r, 2 * p.sigma1) + std::pow(r, 2 * p.sigma2) - 2.0 * std::pow(r, p.sigma);
}

double bisect(const ModelParams& p, double lo, double hi) {
  const bool lo_negative = band_indicator(p, lo) < 0.0;
  for (int it = 0; it < 400 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((band_indicator(p, mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<OscillationBand> oscillation_band(const ModelParams& p) {
  constexpr int samples = 400;
  std::array<double, samples> grid{};
  std::array<bool, samples> negative{};
  for (int i = 0; i < samples; ++i) {
    grid[i] = std::pow(10.0, -6.0 + 12.0 * i / (samples - 1));
    negative[i] = band_indicator(p, grid[i]) < 0.0;
  }
  const auto first = std::find(negative.begin(), negative.end(), true);
  if (first == negative.end()) return std::nullopt;
  const auto last = std::find(negative.rbegin(), negative.rend(), true);

  const auto i_first = static_cast<int>(first - negative.begin());
  const auto i_last = samples - 1 - static_cast<int>(last - negative.rbegin());
  if (i_first == 0 || i_last == samples - 1) {
    throw Error(Errc::BisectionFailure, "oscillation band is not bracketed by the search grid");
  }
  return OscillationBand{bisect(p, grid[i_first - 1], grid[i_first]),
                         bisect(p, grid[i_last], grid[i_last + 1])};
}

double cutoff_radius(const ModelParams& p) {
  const auto band = oscillation_band(p);
  return band ? band->r_low / 2.0 : 0.5;
}

}  // namespace sigmalab
