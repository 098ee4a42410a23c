#include "sigmalab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sigmalab/error.hpp"
#include "sigmalab/kernels.hpp"
#include "sigmalab/profiles.hpp"
#include "sigmalab/quadrature.hpp"

namespace sigmalab {

double RadialProfile::value(double r) const {
  const double g = c * std::exp(-alpha * r * r);
  return kind == Kind::Gaussian ? g : r * r * g;
}

SpectralDataSpec SpectralDataSpec::gaussian(double c, double alpha) {
  const RadialProfile g{RadialProfile::Kind::Gaussian, c, alpha};
  return {g, g};
}

SpectralDataSpec SpectralDataSpec::moment_free(double c, double alpha) {
  const RadialProfile m{RadialProfile::Kind::MomentFree, c, alpha};
  return {m, m};
}

std::string SpectralDataSpec::name() const {
  return u1.kind == RadialProfile::Kind::Gaussian ? "gaussian" : "moment_free";
}

SpectralDataSpec parse_data_preset(std::string_view name, double c, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(c)) {
    throw Error(Errc::InvalidArgument, "data presets need alpha > 0 and finite c");
  }
  if (name == "gaussian") return SpectralDataSpec::gaussian(c, alpha);
  if (name == "moment_free") return SpectralDataSpec::moment_free(c, alpha);
  throw Error(Errc::InvalidArgument, "unknown data preset '" + std::string(name) + "'");
}

double error_tail_radius(const ModelParams& p, double t, double eps_star) {
  const double cap = 10.0 / eps_star;
  if (p.sigma1 == 0.0 || t <= 0.0) return std::max(10.0, cap);
  const double r = std::max(10.0, std::pow(underflow_exponent / t, 1.0 / (2.0 * p.sigma1)));
  return std::min(r, cap);
}

ErrorCurve error_curve(const ModelParams& p, RateCase rate_case, int k, const SpectralDataSpec& data,
                       std::span<const double> times, double tol) {
  validate(p, rate_case);
  if (k < 0) throw Error(Errc::InvalidArgument, "k must be nonnegative");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
      throw Error(Errc::InvalidArgument, "times must be nonnegative and strictly increasing");
    }
  }

  ErrorCurve curve{p, rate_case, k, data, {times.begin(), times.end()}, {}, 0};
  const double eps_star = cutoff_radius(p);
  const double gamma = p.s - (rate_case == RateCase::PositiveSigma1 ? 2.0 * p.sigma1 : 0.0);

  for (double t : times) {
    RadialIntegrand f{[&](double r) {
                        const ExactMultipliers m = exact_multipliers(p, t, r);
                        const ProfilePair pr = profile(k, rate_case, p, t, r);
                        const double v0 = data.u0.value(r);
                        const double v1 = data.u1.value(r);
                        const double exact = m.K0 * v0 + m.K1 * v1;
                        const double approx = pr.p0 * v0 + pr.p1 * v1;
                        const double diff = exact - approx;
                        const double scale = std::max(std::abs(exact), std::abs(approx));
                        if (k > 0 && scale > 0.0 && std::abs(diff) < 1e-13 * scale) {
                          ++curve.cancellation_nodes;
                        }
                        return std::pow(r, p.s) * diff;
                      },
                      gamma};
    curve.values.push_back(l2_radial(f, p.n, error_tail_radius(p, t, eps_star), tol));
  }
  return curve;
}

FitResult fit_slope(const ErrorCurve& curve, std::size_t first, std::size_t last) {
  if (last > curve.times.size() || first >= last) {
    throw Error(Errc::InvalidArgument, "fit window outside the curve");
  }
  const std::span<const double> t(curve.times.data() + first, last - first);
  const std::span<const double> e(curve.values.data() + first, last - first);
  return fit_loglog(t, e, error_exponent(curve.params, curve.k, curve.rate_case));
}

FitResult fit_slope(const ErrorCurve& curve, double t_lo, double t_hi) {
  const auto lo = std::lower_bound(curve.times.begin(), curve.times.end(), t_lo);
  const auto hi = std::upper_bound(curve.times.begin(), curve.times.end(), t_hi);
  return fit_slope(curve, static_cast<std::size_t>(lo - curve.times.begin()),
                   static_cast<std::size_t>(hi - curve.times.begin()));
}

Band lower_bound_band(const ErrorCurve& curve) {
  if (curve.data.p1() == 0.0) {
    throw Error(Errc::RequiresNonzeroP1, "lower-bound band needs data with P1 != 0");
  }
  const double target = error_exponent(curve.params, curve.k, curve.rate_case);
  Band band{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    const double t = curve.times[i];
    if (t < 1.0) continue;
    const double v = curve.values[i] * std::pow(1.0 + t, -target);
    band.band_min = std::min(band.band_min, v);
    band.band_max = std::max(band.band_max, v);
  }
  if (band.band_max == 0.0 && std::isinf(band.band_min)) {
    throw Error(Errc::InvalidArgument, "lower-bound band needs points with t >= 1");
  }
  return band;
}

HighFrequencyReport high_freq_decay_check(const ModelParams& p, const SpectralDataSpec& data,
                                          std::span<const double> times, double tol) {
  const Cutoff cut{cutoff_radius(p)};
  const double r_max = std::max(20.0, 10.0 / cut.eps_star);
  HighFrequencyReport report;
  report.times.assign(times.begin(), times.end());
  for (double t : times) {
    RadialIntegrand f{[&](double r) {
                        const double chi = cut.high(r);
                        if (chi == 0.0) return 0.0;
                        const ExactMultipliers m = exact_multipliers(p, t, r);
                        return std::pow(r, p.s) * chi * (m.K0 * data.u0.value(r) + m.K1 * data.u1.value(r));
                      },
                      0.0};
    report.values.push_back(l2_radial(f, p.n, r_max, tol));
  }
  report.fit = fit_semilog(report.times, report.values, 0.0);
  report.monotone = true;
  for (std::size_t i = 1; i < report.values.size(); ++i) {
    if (!(report.values[i] < report.values[i - 1])) report.monotone = false;
  }
  const double envelope = std::exp(report.fit.intercept);
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    for (std::size_t j = i + 1; j < report.times.size(); ++j) {
      if (std::abs(report.times[j] - 2.0 * report.times[i]) > 1e-9 * report.times[j]) continue;
      const double ratio = report.values[j] * envelope / (report.values[i] * report.values[i]);
      report.doubling_deviation = std::max(report.doubling_deviation, std::abs(ratio - 1.0));
    }
  }
  return report;
}

FitResult order_improvement(const ErrorCurve& lower, const ErrorCurve& upper) {
  if (lower.times != upper.times) throw Error(Errc::InvalidArgument, "curves use different time grids");
  std::vector<double> ratio(lower.times.size());
  for (std::size_t i = 0; i < ratio.size(); ++i) ratio[i] = upper.values[i] / lower.values[i];
  const double target = upper.k == lower.k ? 0.0 : exponent_step(lower.params, lower.rate_case) * (upper.k - lower.k);
  return fit_loglog(lower.times, ratio, target);
}

FitResult order_improvement_check(const ModelParams& p, RateCase rate_case, int k,
                                  const SpectralDataSpec& data, std::span<const double> times,
                                  double tol) {
  const ErrorCurve lower = error_curve(p, rate_case, k, data, times, tol);
  const ErrorCurve upper = error_curve(p, rate_case, k + 1, data, times, tol);
  return order_improvement(lower, upper);
}

}  // namespace sigmalab
