#include "sigmalab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "sigmalab/error.hpp"

namespace sigmalab {

namespace {

constexpr int gauss_points = 16;
constexpr int max_depth = 60;

struct GaussRule {
  std::array<double, gauss_points> x{};
  std::array<double, gauss_points> w{};
};

// Legendre nodes by Newton iteration on the three-term recurrence.
GaussRule make_rule() {
  GaussRule rule;
  const int n = gauss_points;
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.x[i] = z;
    rule.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

const GaussRule& rule() {
  static const GaussRule r = make_rule();
  return r;
}

template <class G>
double gauss(const G& g, double a, double b) {
  const GaussRule& q = rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < gauss_points; ++i) sum += q.w[i] * g(mid + half * q.x[i]);
  return half * sum;
}

// For smooth integrands the halving difference shrinks by orders of magnitude per
// level; once it shrinks by less than 4x the difference is evaluation noise
// (cancellation inside f) and further refinement cannot reduce it.
template <class G>
double adaptive(const G& g, double a, double b, double whole, double abs_tol, int depth,
                double parent_diff) {
  const double mid = 0.5 * (a + b);
  const double left = gauss(g, a, mid);
  const double right = gauss(g, mid, b);
  const double refined = left + right;
  const double diff = std::abs(refined - whole);
  if (diff <= abs_tol || diff <= 1e-15 * std::abs(refined)) return refined;
  if (depth >= 3 && diff >= 0.25 * parent_diff) return refined;
  if (depth >= max_depth) {
    throw Error(Errc::NonConvergence, "adaptive quadrature exceeded depth 60");
  }
  return adaptive(g, a, mid, left, 0.5 * abs_tol, depth + 1, diff) +
         adaptive(g, mid, b, right, 0.5 * abs_tol, depth + 1, diff);
}

}  // namespace

double surface_area(int n) {
  if (n < 1) throw Error(Errc::DimensionTooSmall, "dimension must be at least 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double Cutoff::low(double r) const {
  const double x = (eps_star - r) / (0.5 * eps_star);
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double bx = std::exp(-1.0 / x);
  const double by = std::exp(-1.0 / (1.0 - x));
  return bx / (bx + by);
}

double l2_radial(const RadialIntegrand& f, int n, double r_max, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  const double power = 2.0 * f.singularity_exponent + n;
  if (!(power > 0.0)) {
    throw Error(Errc::SingularityTooStrong, "|f|^2 r^(n-1) is not integrable at 0");
  }
  const double area = surface_area(n);
  if (!(r_max > radial_floor)) return 0.0;

  const auto g = [&](double r) {
    const double v = f.f(r);
    return v * v * std::pow(r, n - 1);
  };

  std::vector<std::array<double, 2>> segments;
  for (double b = r_max; b > radial_floor;) {
    const double a = std::max(0.5 * b, radial_floor);
    segments.push_back({a, b});
    b = a;
  }

  std::vector<double> coarse(segments.size());
  double estimate = 0.0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    coarse[i] = gauss(g, segments[i][0], segments[i][1]);
    estimate += std::abs(coarse[i]);
  }
  const double fr = f.f(radial_floor);
  const double endpoint = fr * fr * std::pow(radial_floor, n) / power;
  estimate += endpoint;
  if (estimate == 0.0) return 0.0;

  // Σ max(mean, |coarse_i|) <= 2·estimate, so the total error stays below tol·estimate.
  const double mean = estimate / static_cast<double>(segments.size());
  double total = endpoint;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const double seg_tol = 0.5 * tol * std::max(mean, std::abs(coarse[i]));
    total += adaptive(g, segments[i][0], segments[i][1], coarse[i], seg_tol, 0, std::numeric_limits<double>::infinity());
  }
  return std::sqrt(area * std::max(total, 0.0));
}

FitResult scaling_check(double alpha, double beta, double c, int n, std::span<const double> t_grid,
                        double eps_star, double tol) {
  if (!(beta > 0.0) || !(c > 0.0) || !(alpha > -0.5 * n)) {
    throw Error(Errc::InvalidArgument, "scaling check needs alpha > -n/2, beta > 0, c > 0");
  }
  const Cutoff cut{eps_star};
  std::vector<double> norms;
  norms.reserve(t_grid.size());
  for (double t : t_grid) {
    RadialIntegrand f{[&](double r) {
                        const double rate = c * std::pow(r, beta) * t;
                        return std::pow(r, alpha) * std::exp(-rate) * cut.low(r);
                      },
                      alpha};
    norms.push_back(l2_radial(f, n, eps_star, tol));
  }
  return fit_loglog(t_grid, norms, -n / (2.0 * beta) - alpha / beta);
}

}  // namespace sigmalab
