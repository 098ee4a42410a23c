#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>
#include <vector>

#include "sigmalab/error.hpp"
#include "sigmalab/experiments.hpp"
#include "sigmalab/kernels.hpp"
#include "sigmalab/report_io.hpp"

using namespace sigmalab;

namespace {

const ModelParams positive{3, 1.0, 0.25, 0.75, 0.0};
const ModelParams zero{1, 1.0, 0.0, 0.8, 0.0};

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

// Composite Simpson on [0, R] with 2N panels; no shared code with l2_radial.
double simpson_norm(auto&& f, int n, double R, int N) {
  const double h = R / (2 * N);
  double sum = 0.0;
  for (int i = 0; i <= 2 * N; ++i) {
    const double r = i * h;
    const double w = (i == 0 || i == 2 * N) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double v = f(r);
    sum += w * v * v * std::pow(r, n - 1);
  }
  const double omega = n == 1 ? 2.0 : n == 2 ? 2 * std::numbers::pi : 4 * std::numbers::pi;
  return std::sqrt(omega * sum * h / 3.0);
}

ErrorCurve synthetic(const ModelParams& p, RateCase c, int k, std::vector<double> times, auto&& e) {
  ErrorCurve curve{p, c, k, SpectralDataSpec::gaussian(), times, {}, 0};
  for (double t : times) curve.values.push_back(e(t));
  return curve;
}

}  // namespace

TEST_CASE("data presets") {
  const SpectralDataSpec g = SpectralDataSpec::gaussian(2.0, 0.5);
  CHECK(g.p1() == 2.0);
  CHECK(g.u0.value(1.0) == doctest::Approx(2.0 * std::exp(-0.5)));
  const SpectralDataSpec m = SpectralDataSpec::moment_free(2.0, 0.5);
  CHECK(m.p1() == 0.0);
  CHECK(m.u1.value(2.0) == doctest::Approx(2.0 * 4.0 * std::exp(-2.0)));
  CHECK(parse_data_preset("gaussian", 1, 1).name() == "gaussian");
  CHECK(parse_data_preset("moment_free", 1, 1).name() == "moment_free");
  CHECK(code_of([] { parse_data_preset("lorentzian", 1, 1); }) == Errc::InvalidArgument);
  CHECK(code_of([] { parse_data_preset("gaussian", 1, 0); }) == Errc::InvalidArgument);
}

TEST_CASE("tail radius") {
  CHECK(error_tail_radius(zero, 10.0, 0.5) == 20.0);
  CHECK(error_tail_radius(positive, 1e4, 0.5) == doctest::Approx(10.0));
  // (700/7)^{1/(2σ₁)} = 1e4, capped at 10/ε*.
  CHECK(error_tail_radius(positive, 7.0, 0.5) == 20.0);
  CHECK(error_tail_radius(positive, 7.0, 0.01) == doctest::Approx(1e3));
  CHECK(error_tail_radius(positive, 7.0, 1e-4) == doctest::Approx(1e4));
}

TEST_CASE("zeroth-order error is the solution norm") {
  const SpectralDataSpec data = SpectralDataSpec::gaussian();
  const std::vector<double> times{0.5, 4.0};
  const ErrorCurve curve = error_curve(zero, RateCase::ZeroSigma1, 0, data, times, 1e-10);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const double ref = simpson_norm(
        [&](double r) {
          const ExactMultipliers m = exact_multipliers(zero, t, std::max(r, 1e-300));
          return m.K0 * data.u0.value(r) + m.K1 * data.u1.value(r);
        },
        1, 12.0, 20000);
    CHECK(curve.values[i] == doctest::Approx(ref).epsilon(1e-8));
  }
}

TEST_CASE("first-order error at t = 0 is the velocity norm") {
  const double t0[] = {0.0};
  const ErrorCurve curve = error_curve(zero, RateCase::ZeroSigma1, 1, SpectralDataSpec::gaussian(), t0, 1e-12);
  // ‖e^{−r²}‖_{L²(ℝ)} = (π/2)^{1/4}.
  CHECK(curve.values[0] == doctest::Approx(std::pow(std::numbers::pi / 2, 0.25)).epsilon(1e-11));
}

TEST_CASE("curve arguments are validated") {
  const std::vector<double> unsorted{2.0, 1.0};
  CHECK(code_of([&] { error_curve(zero, RateCase::ZeroSigma1, 1, SpectralDataSpec::gaussian(), unsorted); }) ==
        Errc::InvalidArgument);
  const std::vector<double> ok{1.0};
  CHECK(code_of([&] { error_curve(zero, RateCase::PositiveSigma1, 1, SpectralDataSpec::gaussian(), ok); }) ==
        Errc::CaseMismatch);
}

TEST_CASE("error curve tail slope in the zero-damping-exponent case") {
  const auto grid = geometric_grid(1e2, 1e3, 10);
  const ErrorCurve curve = error_curve(zero, RateCase::ZeroSigma1, 1, SpectralDataSpec::gaussian(), grid);
  const FitResult fit = fit_slope(curve, 0, grid.size());
  CHECK(fit.target == doctest::Approx(-1.05));
  CHECK(fit.gap <= 0.05);
  for (double v : curve.values) CHECK((std::isfinite(v) && v > 0.0));
}

TEST_CASE("vanishing velocity moment steepens the decay") {
  const auto grid = geometric_grid(1e2, 1e3, 10);
  for (auto [p, c, k] : {std::tuple{positive, RateCase::PositiveSigma1, 0}, {positive, RateCase::PositiveSigma1, 1},
                         {zero, RateCase::ZeroSigma1, 1}}) {
    const ErrorCurve curve = error_curve(p, c, k, SpectralDataSpec::moment_free(), grid);
    const FitResult fit = fit_slope(curve, 0, grid.size());
    CHECK(fit.slope <= fit.target - 0.1);
    CHECK(code_of([&] { lower_bound_band(curve); }) == Errc::RequiresNonzeroP1);
  }
}

TEST_CASE("fits on synthetic curves") {
  const auto grid = geometric_grid(1.0, 1e4, 10);
  const double target = error_exponent(positive, 1, RateCase::PositiveSigma1);
  const ErrorCurve exact = synthetic(positive, RateCase::PositiveSigma1, 1, grid,
                                     [&](double t) { return 3.0 * std::pow(1 + t, target); });
  const Band band = lower_bound_band(exact);
  CHECK(band.band_min == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(band.band_max == doctest::Approx(3.0).epsilon(1e-12));

  const ErrorCurve power = synthetic(positive, RateCase::PositiveSigma1, 1, grid,
                                     [](double t) { return 5.0 * std::pow(t, -1.5); });
  const FitResult f = fit_slope(power, 100.0, 1e4);
  CHECK(f.slope == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(f.target == doctest::Approx(target));
  CHECK(f.max_residual < 1e-12);
  CHECK(code_of([&] { fit_slope(power, 0, grid.size() + 1); }) == Errc::InvalidArgument);

  const FitResult same = order_improvement(power, power);
  CHECK(std::abs(same.slope) < 1e-14);
  CHECK(same.target == 0.0);
}

TEST_CASE("high-frequency part decays exponentially") {
  for (const ModelParams& p : {positive, zero}) {
    const auto grid = linear_grid(1.0, 10.0, 10);
    const HighFrequencyReport report = high_freq_decay_check(p, SpectralDataSpec::gaussian(), grid);
    CHECK(report.rate() > 0.0);
    CHECK(report.monotone);
    CHECK(report.doubling_deviation <= 0.2);
  }
}

TEST_CASE("order improvement at the first step") {
  const auto grid = geometric_grid(1e2, 1e3, 10);
  const FitResult pos = order_improvement_check(positive, RateCase::PositiveSigma1, 0, SpectralDataSpec::gaussian(), grid);
  CHECK(pos.target == doctest::Approx(-2.0 / 3.0));
  CHECK(pos.gap <= 0.05);
  const FitResult z = order_improvement_check(zero, RateCase::ZeroSigma1, 1, SpectralDataSpec::gaussian(), grid);
  CHECK(z.target == doctest::Approx(-0.8));
  CHECK(z.gap <= 0.05);
}

TEST_CASE("curve output is deterministic") {
  const auto grid = geometric_grid(10.0, 100.0, 5);
  auto render = [&] {
    const ErrorCurve curve = error_curve(positive, RateCase::PositiveSigma1, 1, SpectralDataSpec::gaussian(), grid);
    std::ostringstream csv, json;
    const FitResult fit = fit_slope(curve, 0, grid.size());
    write_curve_csv(csv, curve, fit);
    write_curve_json(json, curve, fit);
    return csv.str() + json.str();
  };
  const std::string first = render();
  CHECK(first == render());
  CHECK(first.find("t,E\n") != std::string::npos);
  CHECK(first.find("\"schema_version\":1") != std::string::npos);
}

TEST_CASE("numbers carry seventeen significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-2.0) == "-2");
  std::ostringstream out;
  JsonWriter json(out);
  json.begin_object().key("x").value(std::nan("")).key("v").array({1.0, 0.5}).end_object();
  CHECK(out.str() == "{\"x\":null,\"v\":[1,0.5]}");
}
