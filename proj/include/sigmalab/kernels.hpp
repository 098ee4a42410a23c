#pragma once

#include <utility>

#include "sigmalab/faa_di_bruno.hpp"
#include "sigmalab/jet2.hpp"
#include "sigmalab/model.hpp"

namespace sigmalab {

/// Exponents above this (natural-log scale) flush e^{-x} to zero.
inline constexpr double underflow_exponent = 700.0;

/// Γ₁ = (1 + a r^{2(σ₂−σ₁)})^{−1}.
Jet2 gamma1_jet(const ModelParams& p, double r, int order);
/// Γ₂ = (1 − 4b r^{2(σ−2σ₁)} Γ₁²)^{1/2}.
Jet2 gamma2_jet(const ModelParams& p, double r, int order);
/// G^{−1} = r^{−2σ₁} Γ₁ Γ₂^{−1}.
Jet2 g_inv_jet(const ModelParams& p, double r, int order);

/// (λ₁⁰, λ₂⁰) with λ₁⁰ = −2r^{2(σ−σ₁)}Γ₁/(1+Γ₂), λ₂⁰ = −(r^{2σ₁}/2)(1+a r^{2(σ₂−σ₁)})(1+Γ₂).
std::pair<Jet2, Jet2> lambda_jets(const ModelParams& p, double r, int order);

/// Jets in (a, b) of the four kernels at fixed (t, r).
struct KernelJets {
  Jet2 k01;  ///< G^{−1} λ₁⁰ e^{λ₂⁰ t}
  Jet2 k02;  ///< G^{−1} λ₂⁰ e^{λ₁⁰ t}
  Jet2 k11;  ///< G^{−1} e^{λ₁⁰ t}
  Jet2 k12;  ///< G^{−1} e^{λ₂⁰ t}
};

KernelJets kernel_jets(const ModelParams& p, double t, double r, int order);

/// Same four kernels as raw derivative tables, built only from Leibniz
/// products and partition sums. Shares no arithmetic with kernel_jets.
struct KernelDerivatives {
  DerivativeTable k01;
  DerivativeTable k02;
  DerivativeTable k11;
  DerivativeTable k12;
};

KernelDerivatives kernel_derivatives_fdb(const ModelParams& p, double t, double r, int order);

/// The four kernels evaluated directly at a point (a, b) near the origin.
struct KernelValues {
  double k01 = 0.0;
  double k02 = 0.0;
  double k11 = 0.0;
  double k12 = 0.0;
};

KernelValues kernel_values(const ModelParams& p, double t, double r, double a, double b);

/// Solution multipliers at a = b = 1: û(t) = K0·û₀ + K1·û₁.
struct ExactMultipliers {
  double K0 = 1.0;
  double K1 = 0.0;
};

/// Branch-free in the discriminant sign, real in both regimes.
ExactMultipliers exact_multipliers(const ModelParams& p, double t, double r);

/// Largest relative residual of û_tt + (r^{2σ₁}+r^{2σ₂})û_t + r^{2σ}û over K0 and K1,
/// with 5-point time derivatives of step 1e−4·max(1, t).
double ode_residual(const ModelParams& p, double t, double r);

}  // namespace sigmalab
