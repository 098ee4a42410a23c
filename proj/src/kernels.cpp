#include "sigmalab/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "sigmalab/error.hpp"

namespace sigmalab {

namespace {

struct Powers {
  double P;  // r^{2σ₁}
  double Q;  // r^{2(σ−σ₁)}
  double X;  // r^{2(σ₂−σ₁)}
  double Y;  // r^{2(σ−2σ₁)}
};

Powers powers(const ModelParams& p, double r) {
  if (!(r > 0.0)) throw Error(Errc::InvalidArgument, "radial frequency must be positive");
  return {std::pow(r, 2 * p.sigma1), std::pow(r, 2 * (p.sigma - p.sigma1)),
          std::pow(r, 2 * (p.sigma2 - p.sigma1)), std::pow(r, 2 * (p.sigma - 2 * p.sigma1))};
}

// e^{λt} with λ(0,0) = −rate; zero when rate·t exceeds the underflow threshold.
Jet2 exp_time(const Jet2& lambda, double t) {
  const double c = lambda.value() * t;
  if (-c > underflow_exponent) return Jet2(lambda.order());
  return exp(lambda.nilpotent() * t) * std::exp(c);
}

std::vector<double> outer_reciprocal(double x0, int order) {
  std::vector<double> d(static_cast<std::size_t>(order + 1));
  double v = 1.0 / x0;
  for (int l = 0; l <= order; ++l) {
    d[l] = v;
    v *= -(l + 1) / x0;
  }
  return d;
}

std::vector<double> outer_power(double x0, double alpha, int order) {
  std::vector<double> d(static_cast<std::size_t>(order + 1));
  double falling = 1.0;
  for (int l = 0; l <= order; ++l) {
    d[l] = falling * std::pow(x0, alpha - l);
    falling *= alpha - l;
  }
  return d;
}

DerivativeTable exp_time_table(const DerivativeTable& lambda, double t) {
  const double c = lambda(0, 0) * t;
  if (-c > underflow_exponent) return DerivativeTable(lambda.order());
  const std::vector<double> d(static_cast<std::size_t>(lambda.order() + 1), std::exp(c));
  return (lambda * t).compose(d);
}

// (1 − e^{−w})/w, equal to 1 at w = 0.
double phi(double w) { return w == 0.0 ? 1.0 : -std::expm1(-w) / w; }

}  // namespace

Jet2 gamma1_jet(const ModelParams& p, double r, int order) {
  const Powers w = powers(p, r);
  return reciprocal(1.0 + Jet2::var_a(order) * w.X);
}

Jet2 gamma2_jet(const ModelParams& p, double r, int order) {
  const Powers w = powers(p, r);
  const Jet2 g1 = gamma1_jet(p, r, order);
  return sqrt(1.0 - Jet2::var_b(order) * (4.0 * w.Y) * (g1 * g1));
}

Jet2 g_inv_jet(const ModelParams& p, double r, int order) {
  const Powers w = powers(p, r);
  return gamma1_jet(p, r, order) * reciprocal(gamma2_jet(p, r, order)) * (1.0 / w.P);
}

std::pair<Jet2, Jet2> lambda_jets(const ModelParams& p, double r, int order) {
  const Powers w = powers(p, r);
  const Jet2 g1 = gamma1_jet(p, r, order);
  const Jet2 one_plus_g2 = 1.0 + gamma2_jet(p, r, order);
  Jet2 lambda1 = g1 * reciprocal(one_plus_g2) * (-2.0 * w.Q);
  Jet2 lambda2 = (1.0 + Jet2::var_a(order) * w.X) * one_plus_g2 * (-0.5 * w.P);
  return {std::move(lambda1), std::move(lambda2)};
}

KernelJets kernel_jets(const ModelParams& p, double t, double r, int order) {
  if (t < 0.0) throw Error(Errc::InvalidArgument, "time must be nonnegative");
  const Jet2 g_inv = g_inv_jet(p, r, order);
  const auto [lambda1, lambda2] = lambda_jets(p, r, order);
  const Jet2 e1 = exp_time(lambda1, t);
  const Jet2 e2 = exp_time(lambda2, t);
  return {g_inv * lambda1 * e2, g_inv * lambda2 * e1, g_inv * e1, g_inv * e2};
}

KernelDerivatives kernel_derivatives_fdb(const ModelParams& p, double t, double r, int order) {
  if (t < 0.0) throw Error(Errc::InvalidArgument, "time must be nonnegative");
  const Powers w = powers(p, r);
  using T = DerivativeTable;

  const T aX = T::linear(0.0, w.X, 0.0, order);
  const T gamma1 = aX.compose(outer_reciprocal(1.0, order));
  const T inner2 = T::constant(1.0, order) + T::linear(0.0, 0.0, -4.0 * w.Y, order) * (gamma1 * gamma1);
  const T gamma2 = inner2.compose(outer_power(1.0, 0.5, order));
  const T gamma2_inv = inner2.compose(outer_power(1.0, -0.5, order));
  const T g_inv = gamma1 * gamma2_inv * (1.0 / w.P);

  const T one_plus_g2 = T::constant(1.0, order) + gamma2;
  const T lambda1 = gamma1 * one_plus_g2.compose(outer_reciprocal(2.0, order)) * (-2.0 * w.Q);
  const T lambda2 = T::linear(1.0, w.X, 0.0, order) * one_plus_g2 * (-0.5 * w.P);

  const T e1 = exp_time_table(lambda1, t);
  const T e2 = exp_time_table(lambda2, t);
  return {g_inv * lambda1 * e2, g_inv * lambda2 * e1, g_inv * e1, g_inv * e2};
}

KernelValues kernel_values(const ModelParams& p, double t, double r, double a, double b) {
  const Powers w = powers(p, r);
  const double gamma1 = 1.0 / (1.0 + a * w.X);
  const double gamma2 = std::sqrt(1.0 - 4.0 * b * w.Y * gamma1 * gamma1);
  const double g_inv = gamma1 / (w.P * gamma2);
  const double lambda1 = -2.0 * w.Q * gamma1 / (1.0 + gamma2);
  const double lambda2 = -0.5 * w.P * (1.0 + a * w.X) * (1.0 + gamma2);
  const double e1 = std::exp(lambda1 * t);
  const double e2 = std::exp(lambda2 * t);
  return {g_inv * lambda1 * e2, g_inv * lambda2 * e1, g_inv * e1, g_inv * e2};
}

ExactMultipliers exact_multipliers(const ModelParams& p, double t, double r) {
  if (t < 0.0) throw Error(Errc::InvalidArgument, "time must be nonnegative");
  if (!(r > 0.0)) throw Error(Errc::InvalidArgument, "radial frequency must be positive");
  if (t == 0.0) return {1.0, 0.0};

  const double A = std::pow(r, 2 * p.sigma1) + std::pow(r, 2 * p.sigma2);
  const double B = std::pow(r, 2 * p.sigma);
  const double D2 = A * A - 4.0 * B;
  const double half_At = 0.5 * A * t;

  if (D2 >= 0.0) {
    const double d = std::sqrt(D2);
    const double lambda1 = -2.0 * B / (A + d);
    const double decay = lambda1 * t;
    if (decay < -underflow_exponent) return {0.0, 0.0};
    const double e = std::exp(decay);
    const double w = d * t;  // 2z
    const double ph = phi(w);
    return {e * (0.5 * (1.0 + std::exp(-w)) + half_At * ph), e * t * ph};
  }

  if (half_At > underflow_exponent) return {0.0, 0.0};
  const double e = std::exp(-half_At);
  const double y = 0.5 * std::sqrt(-D2) * t;
  const double sinc = y == 0.0 ? 1.0 : std::sin(y) / y;
  return {e * (std::cos(y) + half_At * sinc), e * t * sinc};
}

double ode_residual(const ModelParams& p, double t, double r) {
  const double h = 1e-4 * std::max(1.0, t);
  const double A = std::pow(r, 2 * p.sigma1) + std::pow(r, 2 * p.sigma2);
  const double B = std::pow(r, 2 * p.sigma);

  if (t - 2 * h < 0.0) throw Error(Errc::InvalidArgument, "ode_residual needs t >= 2h");
  std::array<ExactMultipliers, 5> s{};
  for (int i = 0; i < 5; ++i) s[i] = exact_multipliers(p, t + (i - 2) * h, r);

  double worst = 0.0;
  for (int which = 0; which < 2; ++which) {
    auto u = [&](int i) { return which == 0 ? s[i].K0 : s[i].K1; };
    const double u_t = (u(0) - 8.0 * u(1) + 8.0 * u(3) - u(4)) / (12.0 * h);
    const double u_tt = (-u(0) + 16.0 * u(1) - 30.0 * u(2) + 16.0 * u(3) - u(4)) / (12.0 * h * h);
    const double terms[3] = {u_tt, A * u_t, B * u(2)};
    const double scale = std::max({std::abs(terms[0]), std::abs(terms[1]), std::abs(terms[2])});
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(terms[0] + terms[1] + terms[2]) / scale);
  }
  return worst;
}

}  // namespace sigmalab
