// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.
// Targets, fits, residuals and finite differences are recomputed here; only the
// quantities under test come from the library.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sigmalab/experiments.hpp"
#include "sigmalab/kernels.hpp"
#include "sigmalab/profiles.hpp"
#include "sigmalab/quadrature.hpp"

using namespace sigmalab;

namespace {

const ModelParams cfg_positive{3, 1.0, 0.25, 0.75, 0.0};
const ModelParams cfg_zero{1, 1.0, 0.0, 0.8, 0.0};

constexpr double slope_tol = 0.05;
constexpr double scaling_tol = 0.02;
constexpr double band_ratio_max = 10.0;
constexpr double golden_tol = 1e-12;
constexpr double fdb_tol = 1e-10;
constexpr double fd_tol = 1e-5;
constexpr double hf_ratio_max = 1e-10;
constexpr double ode_tol = 1e-6;
constexpr double quad_tol = 1e-8;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    passed = passed && ok;
    detail += (ok ? "" : "[out of tolerance] ") + what + "; ";
  }
};

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[200];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// Ordinary least squares slope of y against x.
double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

double loglog_slope(const std::vector<double>& t, const std::vector<double>& v) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < t.size(); ++i) {
    lx.push_back(std::log(t[i]));
    ly.push_back(std::log(v[i]));
  }
  return ols_slope(lx, ly);
}

// Sharp error exponents, written out independently of the library.
double target_rate(const ModelParams& p, int k) {
  if (p.sigma1 > 0) {
    const double w = p.sigma - p.sigma1;
    const double d = std::min(p.sigma2 - p.sigma1, p.sigma - 2 * p.sigma1);
    return -p.n / (4 * w) - p.s / (2 * w) + p.sigma1 / w - k * d / w;
  }
  return -p.n / (4 * p.sigma) - p.s / (2 * p.sigma) - k * p.sigma2 / p.sigma;
}

RateCase case_of(const ModelParams& p) { return p.sigma1 > 0 ? RateCase::PositiveSigma1 : RateCase::ZeroSigma1; }

// t ∈ [10², 10⁴], 25 points per decade.
std::vector<double> tail_times() {
  std::vector<double> t;
  for (int i = 0; i <= 50; ++i) t.push_back(100.0 * std::pow(10.0, i / 25.0));
  return t;
}

// Error curves are shared between criteria; each is computed once.
const std::vector<double>& curve(const ModelParams& p, int k) {
  static std::map<std::tuple<int, double, double, double, double, int>, std::vector<double>> cache;
  const auto key = std::make_tuple(p.n, p.sigma, p.sigma1, p.sigma2, p.s, k);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const auto times = tail_times();
    it = cache.emplace(key, error_curve(p, case_of(p), k, SpectralDataSpec::gaussian(1.0, 1.0), times, quad_tol).values)
             .first;
  }
  return it->second;
}

Outcome rate_conformance(const ModelParams& p, std::vector<int> ks) {
  Outcome o;
  for (int k : ks) {
    const double slope = loglog_slope(tail_times(), curve(p, k));
    const double target = target_rate(p, k);
    o.require(std::abs(slope - target) <= slope_tol,
              "k=" + std::to_string(k) + fmt(" slope %.4f target %.4f", slope, target));
  }
  return o;
}

Outcome weight_shift() {
  Outcome o;
  ModelParams weighted = cfg_positive;
  weighted.s = 0.5;
  const double expected = -0.5 / (2 * (weighted.sigma - weighted.sigma1));
  for (int k = 0; k <= 2; ++k) {
    const double shift = loglog_slope(tail_times(), curve(weighted, k)) - loglog_slope(tail_times(), curve(cfg_positive, k));
    o.require(std::abs(shift - expected) <= slope_tol, "k=" + std::to_string(k) + fmt(" shift %.4f expected %.4f", shift, expected));
  }
  return o;
}

Outcome lower_band() {
  Outcome o;
  const auto times = tail_times();
  for (auto [p, ks] : {std::pair{cfg_positive, std::vector<int>{0, 1, 2}}, {cfg_zero, std::vector<int>{1, 2}}}) {
    for (int k : ks) {
      const auto& e = curve(p, k);
      double lo = INFINITY, hi = 0.0;
      for (std::size_t i = 0; i < times.size(); ++i) {
        const double v = e[i] * std::pow(1 + times[i], -target_rate(p, k));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      o.require(lo > 0 && hi / lo <= band_ratio_max,
                fmt("sigma1=%g k=%g ratio %.3f", p.sigma1, k, hi / lo));
    }
  }
  return o;
}

Outcome goldens() {
  Outcome o;
  for (auto [p, k, flags] : {std::tuple{cfg_positive, 1, 1}, {cfg_positive, 2, 1}, {cfg_zero, 1, 0}, {cfg_zero, 2, 0}}) {
    const RateCase c = case_of(p);
    const auto [g0, g1] = golden_modal(k, c, p);
    const double eps = cutoff_radius(p);
    double worst = 0.0;
    for (double t : {1.0, 10.0, 100.0}) {
      for (int i = 0; i < 20; ++i) {
        const double r = eps * std::pow(10.0, -3.0 * (19 - i) / 19.0);
        const ProfilePair jet = profile(k, c, p, t, r);
        worst = std::max(worst, std::abs(jet.p0 - g0.evaluate(t, r)) / (1 + std::abs(g0.evaluate(t, r))));
        worst = std::max(worst, std::abs(jet.p1 - g1.evaluate(t, r)) / (1 + std::abs(g1.evaluate(t, r))));
      }
    }
    const int got = g0.corrected_count() + g1.corrected_count();
    o.require(worst <= golden_tol && got == flags,
              std::string(to_string(c)) + " k=" + std::to_string(k) + fmt(" dev %.2e corrected %g", worst, got));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(97531);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_fdb = 0.0, worst_fd = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    ModelParams p;
    p.sigma = 1.0 + u(rng);
    p.sigma1 = draw % 5 == 0 ? 0.0 : p.sigma * (0.05 + 0.4 * u(rng));
    p.sigma2 = p.sigma * (0.55 + 0.45 * u(rng));
    p.n = 1 + static_cast<int>(4 * p.sigma1);
    const double t = 0.1 + 4.9 * u(rng);
    const double r = 0.5 + 1.5 * u(rng);
    const KernelJets jets = kernel_jets(p, t, r, 4);
    const KernelDerivatives fdb = kernel_derivatives_fdb(p, t, r, 4);
    const std::array<std::pair<const Jet2*, const DerivativeTable*>, 4> pairs{
        {{&jets.k01, &fdb.k01}, {&jets.k02, &fdb.k02}, {&jets.k11, &fdb.k11}, {&jets.k12, &fdb.k12}}};
    for (int which = 0; which < 4; ++which) {
      const auto [jet, table] = pairs[which];
      for (int d = 0; d <= 4; ++d) {
        double scale = 0.0, err = 0.0;
        for (int m = 0; m <= d; ++m) {
          scale = std::max(scale, std::abs((*table)(d - m, m)));
          err = std::max(err, std::abs(jet->derivative(d - m, m) - (*table)(d - m, m)));
        }
        if (scale > 0) worst_fdb = std::max(worst_fdb, err / scale);
      }
      // Second-order central differences, Richardson-extrapolated from steps h and 2h.
      auto f = [&](double a, double b) {
        const KernelValues v = kernel_values(p, t, r, a, b);
        return std::array<double, 4>{v.k01, v.k02, v.k11, v.k12}[which];
      };
      auto diffs = [&](double h) {
        const double c = f(0, 0);
        return std::array<double, 5>{(f(h, 0) - f(-h, 0)) / (2 * h), (f(0, h) - f(0, -h)) / (2 * h),
                                     (f(h, 0) - 2 * c + f(-h, 0)) / (h * h), (f(0, h) - 2 * c + f(0, -h)) / (h * h),
                                     (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h)};
      };
      const auto d1 = diffs(1e-4), d2 = diffs(2e-4);
      const std::array<double, 5> exact{jet->derivative(1, 0), jet->derivative(0, 1), jet->derivative(2, 0),
                                        jet->derivative(0, 2), jet->derivative(1, 1)};
      const double s1 = std::max(std::abs(exact[0]), std::abs(exact[1]));
      const double s2 = std::max({std::abs(exact[2]), std::abs(exact[3]), std::abs(exact[4])});
      for (int i = 0; i < 5; ++i) {
        const double fd = (4 * d1[i] - d2[i]) / 3;
        const double scale = i < 2 ? s1 : s2;
        if (scale > 0) worst_fd = std::max(worst_fd, std::abs(fd - exact[i]) / scale);
      }
    }
  }
  o.require(worst_fdb <= fdb_tol, fmt("partition sums %.2e", worst_fdb));
  o.require(worst_fd <= fd_tol, fmt("finite differences %.2e", worst_fd));
  return o;
}

Outcome scaling() {
  Outcome o;
  std::vector<double> grid;
  for (int i = 0; i <= 75; ++i) grid.push_back(100.0 * std::pow(10.0, i / 25.0));
  for (auto [alpha, beta, c, n] : {std::tuple{0.0, 2.0, 1.0, 1}, {1.0, 2.0, 1.0, 3}, {-0.4, 1.0, 2.0, 1}}) {
    const double target = -n / (2 * beta) - alpha / beta;
    const double slope = scaling_check(alpha, beta, c, n, grid).slope;
    o.require(std::abs(slope - target) <= scaling_tol, fmt("alpha=%g slope %.4f target %.4f", alpha, slope, target));
  }
  return o;
}

Outcome high_frequency() {
  Outcome o;
  std::vector<double> grid;
  for (int i = 1; i <= 50; ++i) grid.push_back(i);
  for (const ModelParams& p : {cfg_positive, cfg_zero}) {
    const HighFrequencyReport h = high_freq_decay_check(p, SpectralDataSpec::gaussian(1.0, 1.0), grid, quad_tol);
    std::vector<double> logs;
    for (double v : h.values) logs.push_back(std::log(v));
    const double rate = -ols_slope(grid, logs);
    const double ratio = h.values.back() / h.values.front();
    o.require(rate > 0 && ratio < hf_ratio_max, fmt("sigma1=%g rate %.4f H(50)/H(1) %.2e", p.sigma1, rate, ratio));
  }
  return o;
}

Outcome mode_equation() {
  Outcome o;
  double worst = 0.0;
  int inside = 0;
  for (const ModelParams& p : {cfg_positive, cfg_zero}) {
    const double A0 = p.sigma1, A1 = p.sigma2;
    for (int i = 0; i < 10; ++i) {
      const double r = 0.25 * std::pow(16.0, i / 9.0);
      const double A = std::pow(r, 2 * A0) + std::pow(r, 2 * A1);
      const double B = std::pow(r, 2 * p.sigma);
      if (A * A < 4 * B) ++inside;
      for (int j = 0; j < 10; ++j) {
        const double t = 0.1 * std::pow(200.0, j / 9.0);
        const double h = 1e-4 * std::max(1.0, t);
        std::array<ExactMultipliers, 5> s;
        for (int q = 0; q < 5; ++q) s[q] = exact_multipliers(p, t + (q - 2) * h, r);
        for (int which = 0; which < 2; ++which) {
          auto u = [&](int q) { return which == 0 ? s[q].K0 : s[q].K1; };
          const double ut = (u(0) - 8 * u(1) + 8 * u(3) - u(4)) / (12 * h);
          const double utt = (-u(0) + 16 * u(1) - 30 * u(2) + 16 * u(3) - u(4)) / (12 * h * h);
          const double scale = std::max({std::abs(utt), std::abs(A * ut), std::abs(B * u(2))});
          if (scale > 0) worst = std::max(worst, std::abs(utt + A * ut + B * u(2)) / scale);
        }
      }
    }
  }
  o.require(worst < ode_tol, fmt("max residual %.2e", worst));
  o.require(inside > 0, fmt("%g sample radii inside the band", inside));
  return o;
}

Outcome improvement_per_order() {
  Outcome o;
  // (1, 0.25, 0.75) sits on the branch boundary σ₁ + σ₂ = σ.
  for (auto [p, first] : {std::pair{cfg_positive, 0}, {cfg_zero, 1}}) {
    const double step = target_rate(p, 1) - target_rate(p, 0);
    for (int k = first; k < first + 2; ++k) {
      const auto& lo = curve(p, k);
      const auto& hi = curve(p, k + 1);
      std::vector<double> ratio;
      for (std::size_t i = 0; i < lo.size(); ++i) ratio.push_back(hi[i] / lo[i]);
      const double slope = loglog_slope(tail_times(), ratio);
      o.require(std::abs(slope - step) <= slope_tol,
                fmt("sigma1=%g k=%g", p.sigma1, k) + fmt(" slope %.4f target %.4f", slope, step));
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rate conformance, sigma1 > 0", [] { return rate_conformance(cfg_positive, {0, 1, 2}); }},
      {2, "rate conformance, sigma1 = 0", [] { return rate_conformance(cfg_zero, {1, 2}); }},
      {3, "s-weight shift", weight_shift},
      {4, "lower-bound band", lower_band},
      {5, "golden profiles", goldens},
      {6, "jet / partition-sum / finite-difference equivalence", oracle_equivalence},
      {7, "low-frequency scaling", scaling},
      {8, "high-frequency decay", high_frequency},
      {9, "mode equation residual", mode_equation},
      {10, "order improvement", improvement_per_order},
  };
  int failures = 0;
  for (const auto& [id, title, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s(%.1fs)\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
