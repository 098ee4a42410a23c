#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "sigmalab/kernels.hpp"
#include "sigmalab/model.hpp"

namespace sigmalab {

/// Profile pair (index 0 multiplies û₀, index 1 multiplies û₁).
struct ProfilePair {
  double p0 = 0.0;
  double p1 = 0.0;
};

/// Σ_{j+m<=k−1} of the (K̂₀¹ − K̂₀²) and (K̂₁¹ − K̂₁²) jet coefficients. Needs σ₁ > 0.
ProfilePair profile_A(int k, const ModelParams& p, double t, double r);

/// Σ_{j+m<=k−1} of −K̂₀² and +K̂₁¹ jet coefficients. Needs σ₁ = 0.
ProfilePair profile_B(int k, const ModelParams& p, double t, double r);

/// profile_A or profile_B by case.
ProfilePair profile(int k, RateCase rate_case, const ModelParams& p, double t, double r);

/// The j + m = d slice of the profile sums; profile(k+1) − profile(k) = increment(k).
ProfilePair profile_increment(int d, RateCase rate_case, const ModelParams& p, double t, double r);

enum class Provenance { Transcribed, Corrected };

std::string_view to_string(Provenance p) noexcept;

/// coef · r^{r_power} · t^{t_power} · e^{−r^{decay_power} t}.
struct ModalTerm {
  double coef = 0.0;
  double r_power = 0.0;
  int t_power = 0;
  double decay_power = 0.0;
  Provenance provenance = Provenance::Transcribed;

  double evaluate(double t, double r) const;
};

struct ModalSum {
  std::vector<ModalTerm> terms;

  double evaluate(double t, double r) const;
  int corrected_count() const;
};

/// Closed-form k = 1, 2 profiles as modal sums, first for index 0 then index 1.
/// Terms that differ from the published transcription are marked Corrected.
std::pair<ModalSum, ModalSum> golden_modal(int k, RateCase rate_case, const ModelParams& p);

}  // namespace sigmalab
