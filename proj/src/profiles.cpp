#include "sigmalab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sigmalab/error.hpp"

namespace sigmalab {

namespace {

void require_case(RateCase rate_case, const ModelParams& p) {
  if (rate_case == RateCase::PositiveSigma1 && p.sigma1 == 0.0) {
    throw Error(Errc::CaseMismatch, "A-profiles need sigma1 > 0");
  }
  if (rate_case == RateCase::ZeroSigma1 && p.sigma1 != 0.0) {
    throw Error(Errc::CaseMismatch, "B-profiles need sigma1 = 0");
  }
}

// Combines one degree slice (or the partial sum through it) of the kernel jets.
ProfilePair combine(RateCase rate_case, const KernelJets& kj, int d, bool cumulative) {
  auto part = [&](const Jet2& x) { return cumulative ? x.partial_sum(d) : x.degree_sum(d); };
  if (rate_case == RateCase::PositiveSigma1) {
    return {part(kj.k01) - part(kj.k02), part(kj.k11) - part(kj.k12)};
  }
  return {-part(kj.k02), part(kj.k11)};
}

ProfilePair profile_impl(int k, RateCase rate_case, const ModelParams& p, double t, double r) {
  require_case(rate_case, p);
  if (k < 0) throw Error(Errc::InvalidArgument, "profile order must be nonnegative");
  if (k - 1 > Jet2::max_order) throw Error(Errc::UnsupportedOrder, "profile order above 9");
  if (k == 0) return {};
  const KernelJets kj = kernel_jets(p, t, r, std::max(1, k - 1));
  return combine(rate_case, kj, k - 1, true);
}

}  // namespace

ProfilePair profile_A(int k, const ModelParams& p, double t, double r) {
  return profile_impl(k, RateCase::PositiveSigma1, p, t, r);
}

ProfilePair profile_B(int k, const ModelParams& p, double t, double r) {
  return profile_impl(k, RateCase::ZeroSigma1, p, t, r);
}

ProfilePair profile(int k, RateCase rate_case, const ModelParams& p, double t, double r) {
  return profile_impl(k, rate_case, p, t, r);
}

ProfilePair profile_increment(int d, RateCase rate_case, const ModelParams& p, double t, double r) {
  require_case(rate_case, p);
  if (d < 0 || d > Jet2::max_order) throw Error(Errc::UnsupportedOrder, "slice degree outside [0, 8]");
  const KernelJets kj = kernel_jets(p, t, r, std::max(1, d));
  return combine(rate_case, kj, d, false);
}

std::string_view to_string(Provenance p) noexcept {
  return p == Provenance::Transcribed ? "transcribed" : "corrected";
}

double ModalTerm::evaluate(double t, double r) const {
  const double rate = std::pow(r, decay_power) * t;
  if (rate > underflow_exponent) return 0.0;
  return coef * std::pow(r, r_power) * std::pow(t, t_power) * std::exp(-rate);
}

double ModalSum::evaluate(double t, double r) const {
  double sum = 0.0;
  for (const auto& term : terms) sum += term.evaluate(t, r);
  return sum;
}

int ModalSum::corrected_count() const {
  return static_cast<int>(std::count_if(terms.begin(), terms.end(), [](const ModalTerm& m) {
    return m.provenance == Provenance::Corrected;
  }));
}

std::pair<ModalSum, ModalSum> golden_modal(int k, RateCase rate_case, const ModelParams& p) {
  if (k < 1) throw Error(Errc::InvalidArgument, "closed forms exist for k = 1, 2");
  if (k > 2) throw Error(Errc::UnsupportedOrder, "no closed form for k = " + std::to_string(k));
  require_case(rate_case, p);
  constexpr auto fixed = Provenance::Corrected;

  if (rate_case == RateCase::ZeroSigma1) {
    const double q = 2 * p.sigma;
    const double s2 = 2 * p.sigma2;
    if (k == 1) {
      ModalSum both{{{1, 0, 0, q}}};
      return {both, both};
    }
    ModalSum b0{{{1, 0, 0, q}, {1, q, 0, q}, {1, q + s2, 1, q}, {-1, 2 * q, 1, q}}};
    ModalSum b1{{{1, 0, 0, q}, {-1, s2, 0, q}, {2, q, 0, q}, {1, q + s2, 1, q}, {-1, 2 * q, 1, q}}};
    return {b0, b1};
  }

  const double x = 2 * (p.sigma2 - p.sigma1);
  const double y = 2 * (p.sigma - 2 * p.sigma1);
  const double qp = 2 * (p.sigma - p.sigma1);
  const double pd = 2 * p.sigma1;
  const double inv = -2 * p.sigma1;

  if (k == 1) {
    ModalSum a0{{{-1, y, 0, pd}, {1, 0, 0, qp, fixed}}};
    ModalSum a1{{{1, inv, 0, qp}, {-1, inv, 0, pd}}};
    return {a0, a1};
  }
  ModalSum a0{{{-1, y, 0, pd},
               {2, y + x, 0, pd},
               {-3, 2 * y, 0, pd},
               {1, qp + x, 1, pd},
               {-1, qp + y, 1, pd},
               {1, 0, 0, qp},
               {1, y, 0, qp, fixed},
               {1, qp + x, 1, qp},
               {-1, qp + y, 1, qp}}};
  ModalSum a1{{{1, inv, 0, qp},
               {-1, inv + x, 0, qp},
               {2, inv + y, 0, qp},
               {1, qp + inv + x, 1, qp},
               {-1, qp + inv + y, 1, qp},
               {-1, inv, 0, pd},
               {1, inv + x, 0, pd},
               {-2, inv + y, 0, pd},
               {1, x, 1, pd},
               {-1, y, 1, pd}}};
  return {a0, a1};
}

}  // namespace sigmalab
