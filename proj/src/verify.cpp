#include "sigmalab/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "sigmalab/error.hpp"
#include "sigmalab/experiments.hpp"
#include "sigmalab/kernels.hpp"
#include "sigmalab/profiles.hpp"
#include "sigmalab/quadrature.hpp"

namespace sigmalab {

namespace {

const ModelParams positive_config{3, 1.0, 0.25, 0.75, 0.0};
const ModelParams zero_config{1, 1.0, 0.0, 0.8, 0.0};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

std::vector<double> tail_grid() { return geometric_grid(1e2, 1e4, 25); }

struct RateRun {
  std::vector<FitResult> fits;
  std::vector<ErrorCurve> curves;
};

RateRun rate_run(const ModelParams& p, RateCase c, std::vector<int> ks, double tol) {
  RateRun run;
  const auto grid = tail_grid();
  for (int k : ks) {
    run.curves.push_back(error_curve(p, c, k, SpectralDataSpec::gaussian(1.0, 1.0), grid, tol));
    run.fits.push_back(fit_slope(run.curves.back(), 0, grid.size()));
  }
  return run;
}

CriterionResult slopes(int id, std::string title, const ModelParams& p, RateCase c,
                       std::vector<int> ks, double tol) {
  const RateRun run = rate_run(p, c, ks, tol);
  CriterionResult r{id, std::move(title), true, ""};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const FitResult& f = run.fits[i];
    const bool ok = f.gap <= 0.05;
    r.passed = r.passed && ok;
    r.detail += "k=" + std::to_string(ks[i]) +
                fmt(" slope %.4f target %.4f gap %.4f", f.slope, f.target, f.gap) + (ok ? "; " : " (over 0.05); ");
  }
  return r;
}

CriterionResult criterion_shift(double tol) {
  ModelParams weighted = positive_config;
  weighted.s = 0.5;
  const RateRun base = rate_run(positive_config, RateCase::PositiveSigma1, {0, 1, 2}, tol);
  const RateRun shifted = rate_run(weighted, RateCase::PositiveSigma1, {0, 1, 2}, tol);
  const double expected = -weighted.s / (2.0 * (weighted.sigma - weighted.sigma1));
  CriterionResult r{3, "s-weight shift", true, ""};
  for (int k = 0; k < 3; ++k) {
    const double shift = shifted.fits[k].slope - base.fits[k].slope;
    const bool ok = std::abs(shift - expected) <= 0.05;
    r.passed = r.passed && ok;
    r.detail += "k=" + std::to_string(k) + fmt(" shift %.4f expected %.4f; ", shift, expected);
  }
  return r;
}

CriterionResult criterion_band(double tol) {
  CriterionResult r{4, "lower-bound band", true, ""};
  const RateRun a = rate_run(positive_config, RateCase::PositiveSigma1, {0, 1, 2}, tol);
  const RateRun b = rate_run(zero_config, RateCase::ZeroSigma1, {1, 2}, tol);
  for (const RateRun* run : {&a, &b}) {
    for (const ErrorCurve& curve : run->curves) {
      const Band band = lower_bound_band(curve);
      const bool ok = band.band_min > 0.0 && band.ratio() <= 10.0;
      r.passed = r.passed && ok;
      r.detail += std::string(to_string(curve.rate_case)) + " k=" + std::to_string(curve.k) +
                  fmt(" min %.4g ratio %.3f; ", band.band_min, band.ratio());
    }
  }
  return r;
}

CriterionResult criterion_goldens() {
  CriterionResult r{5, "golden profiles", true, ""};
  struct Case {
    ModelParams p;
    RateCase c;
    int k;
    int expected_flags;
  };
  const std::array<Case, 4> cases{{{positive_config, RateCase::PositiveSigma1, 1, 1},
                                   {positive_config, RateCase::PositiveSigma1, 2, 1},
                                   {zero_config, RateCase::ZeroSigma1, 1, 0},
                                   {zero_config, RateCase::ZeroSigma1, 2, 0}}};
  for (const Case& cs : cases) {
    const auto [g0, g1] = golden_modal(cs.k, cs.c, cs.p);
    const double eps = cutoff_radius(cs.p);
    double worst = 0.0;
    for (double t : {1.0, 10.0, 100.0}) {
      for (int i = 0; i < 20; ++i) {
        const double rr = eps * std::pow(10.0, -3.0 * (19 - i) / 19.0);
        const ProfilePair pr = profile(cs.k, cs.c, cs.p, t, rr);
        const double e0 = g0.evaluate(t, rr);
        const double e1 = g1.evaluate(t, rr);
        worst = std::max({worst, std::abs(pr.p0 - e0) / (1.0 + std::abs(e0)),
                          std::abs(pr.p1 - e1) / (1.0 + std::abs(e1))});
      }
    }
    const int flags = g0.corrected_count() + g1.corrected_count();
    const bool ok = worst <= 1e-12 && flags == cs.expected_flags;
    r.passed = r.passed && ok;
    r.detail += std::string(to_string(cs.c)) + " k=" + std::to_string(cs.k) +
                fmt(" dev %.2e", worst) + " flags " + std::to_string(flags) + "; ";
  }
  return r;
}

// Largest |x(j,m) − y(j,m)| over a degree, relative to the largest |y| of that degree.
double degree_relative_error(const Jet2& jet, const DerivativeTable& ref, int max_degree) {
  double worst = 0.0;
  for (int d = 0; d <= max_degree; ++d) {
    double scale = 0.0, err = 0.0;
    for (int m = 0; m <= d; ++m) {
      scale = std::max(scale, std::abs(ref(d - m, m)));
      err = std::max(err, std::abs(jet.derivative(d - m, m) - ref(d - m, m)));
    }
    if (scale > 0.0) worst = std::max(worst, err / scale);
  }
  return worst;
}

CriterionResult criterion_oracle() {
  CriterionResult r{6, "jet / Faa di Bruno / finite differences", true, ""};
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_fdb = 0.0, worst_fd = 0.0;
  constexpr double h = 1e-4;

  for (int draw = 0; draw < 20; ++draw) {
    ModelParams p;
    p.sigma = 1.0 + unit(rng);
    p.sigma1 = draw % 4 == 0 ? 0.0 : (0.05 + 0.4 * unit(rng)) * p.sigma;
    p.sigma2 = (0.55 + 0.45 * unit(rng)) * p.sigma;
    p.n = static_cast<int>(4.0 * p.sigma1) + 1;
    const double t = 0.1 + 4.9 * unit(rng);
    const double rr = 0.5 + 1.5 * unit(rng);

    const KernelJets jets = kernel_jets(p, t, rr, 4);
    const KernelDerivatives fdb = kernel_derivatives_fdb(p, t, rr, 4);
    const std::array<const Jet2*, 4> js{&jets.k01, &jets.k02, &jets.k11, &jets.k12};
    const std::array<const DerivativeTable*, 4> ds{&fdb.k01, &fdb.k02, &fdb.k11, &fdb.k12};
    for (int i = 0; i < 4; ++i) worst_fdb = std::max(worst_fdb, degree_relative_error(*js[i], *ds[i], 4));

    // Central differences at steps h and 2h, combined by one Richardson step.
    auto at = [&](double a, double b) { return kernel_values(p, t, rr, a, b); };
    auto pick = [](const KernelValues& v, int i) {
      return i == 0 ? v.k01 : i == 1 ? v.k02 : i == 2 ? v.k11 : v.k12;
    };
    auto central = [&](double s, int i) {
      const double c = pick(at(0, 0), i), ap = pick(at(s, 0), i), am = pick(at(-s, 0), i);
      const double bp = pick(at(0, s), i), bm = pick(at(0, -s), i);
      DerivativeTable fd(2);
      fd(0, 0) = c;
      fd(1, 0) = (ap - am) / (2 * s);
      fd(0, 1) = (bp - bm) / (2 * s);
      fd(2, 0) = (ap - 2 * c + am) / (s * s);
      fd(0, 2) = (bp - 2 * c + bm) / (s * s);
      fd(1, 1) = (pick(at(s, s), i) - pick(at(s, -s), i) - pick(at(-s, s), i) + pick(at(-s, -s), i)) /
                 (4 * s * s);
      return fd;
    };
    for (int i = 0; i < 4; ++i) {
      const DerivativeTable fd = central(h, i) * (4.0 / 3.0) + central(2 * h, i) * (-1.0 / 3.0);
      Jet2 low(2);
      for (int d = 0; d <= 2; ++d) {
        for (int m = 0; m <= d; ++m) low.set_coeff(d - m, m, js[i]->coeff(d - m, m));
      }
      worst_fd = std::max(worst_fd, degree_relative_error(low, fd, 2));
    }
  }
  r.passed = worst_fdb <= 1e-10 && worst_fd <= 1e-5;
  r.detail = fmt("partition sums max rel err %.2e (tol 1e-10); finite differences %.2e (tol 1e-5)",
                 worst_fdb, worst_fd);
  return r;
}

CriterionResult criterion_scaling() {
  CriterionResult r{7, "low-frequency scaling", true, ""};
  const auto grid = geometric_grid(1e2, 1e5, 25);
  struct Triple {
    double alpha, beta, c;
    int n;
  };
  for (const Triple& tr : {Triple{0, 2, 1, 1}, Triple{1, 2, 1, 3}, Triple{-0.4, 1, 2, 1}}) {
    const FitResult f = scaling_check(tr.alpha, tr.beta, tr.c, tr.n, grid);
    const bool ok = f.gap <= 0.02;
    r.passed = r.passed && ok;
    r.detail += fmt("(a=%g,b=%g) ", tr.alpha, tr.beta) + fmt("slope %.4f target %.4f; ", f.slope, f.target);
  }
  return r;
}

CriterionResult criterion_high_freq(double tol) {
  CriterionResult r{8, "high-frequency decay", true, ""};
  const auto grid = linear_grid(1.0, 50.0, 50);
  for (const ModelParams& p : {positive_config, zero_config}) {
    const HighFrequencyReport h = high_freq_decay_check(p, SpectralDataSpec::gaussian(1.0, 1.0), grid, tol);
    const double ratio = h.values.back() / h.values.front();
    const bool ok = h.rate() > 0.0 && ratio < 1e-10;
    r.passed = r.passed && ok;
    r.detail += fmt("sigma1=%g rate %.4f H(50)/H(1) %.3e; ", p.sigma1, h.rate(), ratio);
  }
  return r;
}

CriterionResult criterion_ode() {
  CriterionResult r{9, "mode equation residual", true, ""};
  int inside = 0;
  double worst = 0.0;
  for (const ModelParams& p : {positive_config, zero_config}) {
    // 10 × 10 log grid per configuration: r in [1/4, 4], t in [0.1, 20].
    for (std::size_t i = 0; i < 10; ++i) {
      const double rr = 0.25 * std::pow(16.0, i / 9.0);
      if (discriminant(p, rr, 1.0, 1.0) < 0.0) ++inside;
      for (std::size_t j = 0; j < 10; ++j) {
        const double t = 0.1 * std::pow(200.0, j / 9.0);
        worst = std::max(worst, ode_residual(p, t, rr));
      }
    }
  }
  r.passed = worst < 1e-6 && inside > 0;
  r.detail = fmt("max relative residual %.2e over 200 points, %g radii inside the band", worst, inside);
  return r;
}

CriterionResult criterion_order(double tol) {
  CriterionResult r{10, "order improvement", true, ""};
  const auto grid = tail_grid();
  const auto data = SpectralDataSpec::gaussian(1.0, 1.0);
  for (const auto& [p, c] : {std::pair{positive_config, RateCase::PositiveSigma1},
                             std::pair{zero_config, RateCase::ZeroSigma1}}) {
    const int first = c == RateCase::PositiveSigma1 ? 0 : 1;
    std::vector<ErrorCurve> curves;
    for (int k = first; k <= first + 2; ++k) curves.push_back(error_curve(p, c, k, data, grid, tol));
    for (int i = 0; i < 2; ++i) {
      const FitResult f = order_improvement(curves[i], curves[i + 1]);
      const bool ok = f.gap <= 0.05;
      r.passed = r.passed && ok;
      r.detail += std::string(to_string(c)) + " k=" + std::to_string(first + i) + "->" +
                  std::to_string(first + i + 1) + fmt(" slope %.4f target %.4f; ", f.slope, f.target);
    }
  }
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, double tol) {
  switch (id) {
    case 1:
      return slopes(1, "rate conformance, sigma1 > 0", positive_config, RateCase::PositiveSigma1, {0, 1, 2}, tol);
    case 2:
      return slopes(2, "rate conformance, sigma1 = 0", zero_config, RateCase::ZeroSigma1, {1, 2}, tol);
    case 3: return criterion_shift(tol);
    case 4: return criterion_band(tol);
    case 5: return criterion_goldens();
    case 6: return criterion_oracle();
    case 7: return criterion_scaling();
    case 8: return criterion_high_freq(tol);
    case 9: return criterion_ode();
    case 10: return criterion_order(tol);
    default: throw Error(Errc::InvalidArgument, "criterion ids run from 1 to 10");
  }
}

std::vector<CriterionResult> run_criteria(std::vector<int> ids, double tol) {
  if (ids.empty()) {
    for (int i = 1; i <= criterion_count; ++i) ids.push_back(i);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<CriterionResult> results;
  for (int id : ids) results.push_back(run_criterion(id, tol));
  return results;
}

}  // namespace sigmalab
