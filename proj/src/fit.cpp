#include "sigmalab/fit.hpp"

#include <algorithm>
#include <cmath>

#include "sigmalab/error.hpp"

namespace sigmalab {

namespace {

FitResult least_squares(std::span<const double> x, std::span<const double> ly, double target) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw Error(Errc::DegenerateFit, "abscissae are all equal");

  FitResult f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    f.max_residual = std::max(f.max_residual, std::abs(ly[i] - f.intercept - f.slope * x[i]));
  }
  f.target = target;
  f.gap = std::abs(f.slope - target);
  return f;
}

std::vector<double> logs_of_positive(std::span<const double> y) {
  std::vector<double> out;
  out.reserve(y.size());
  for (double v : y) {
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(Errc::DegenerateFit, "fit needs positive finite values");
    out.push_back(std::log(v));
  }
  return out;
}

void require_points(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(Errc::InvalidArgument, "fit abscissae and values differ in length");
  if (x.size() < 5) throw Error(Errc::DegenerateFit, "fit needs at least 5 points");
}

}  // namespace

FitResult fit_loglog(std::span<const double> x, std::span<const double> y, double target) {
  require_points(x, y);
  const std::vector<double> lx = logs_of_positive(x);
  const std::vector<double> ly = logs_of_positive(y);
  return least_squares(lx, ly, target);
}

FitResult fit_semilog(std::span<const double> x, std::span<const double> y, double target) {
  require_points(x, y);
  const std::vector<double> ly = logs_of_positive(y);
  return least_squares(x, ly, target);
}

std::vector<double> geometric_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi >= lo) || per_decade < 1) {
    throw Error(Errc::InvalidArgument, "geometric grid needs 0 < lo <= hi and per_decade >= 1");
  }
  const double decades = std::log10(hi / lo);
  const int steps = std::max(0, static_cast<int>(std::lround(decades * per_decade)));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps + 1));
  for (int i = 0; i <= steps; ++i) {
    grid.push_back(steps == 0 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / steps));
  }
  if (steps > 0) grid.back() = hi;
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 2 || !(hi > lo)) throw Error(Errc::InvalidArgument, "linear grid needs count >= 2 and hi > lo");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) grid.push_back(lo + (hi - lo) * i / (count - 1));
  return grid;
}

}  // namespace sigmalab
