#pragma once

#include <span>
#include <vector>

#include "sigmalab/jet2.hpp"

namespace sigmalab {

/// One factor of a partition: the inner derivative of bi-order (b1, b2)
/// raised to multiplicity a.
struct PartitionBlock {
  int a = 0;
  int b1 = 0;
  int b2 = 0;
  bool operator==(const PartitionBlock&) const = default;
};

/// Blocks in strictly increasing lexicographic (b1, b2) order, never (0, 0).
/// Σa = ℓ, Σa·b1 = j, Σa·b2 = m.
using PartitionTriple = std::vector<PartitionBlock>;

/// Every partition of the bi-index (j, m) into ℓ parts, over all block counts.
/// Deterministic order: depth-first over (b1, b2) pairs, multiplicities ascending.
std::vector<PartitionTriple> enumerate_partitions(int j, int m, int ell);

/// ∂^{j+m}(f∘g)/∂a^j∂b^m at the origin by direct summation over partitions.
/// outer_derivs[ℓ] = f^{(ℓ)}(g(0,0)); needs at least j+m+1 entries.
double faa_di_bruno_coeff(std::span<const double> outer_derivs, const Jet2& inner, int j, int m);

/// Raw mixed derivatives d(j, m) = ∂^{j+m}F/∂a^j∂b^m at the origin, j + m <= order.
///
/// Kept deliberately separate from Jet2: products use Leibniz binomials and
/// compositions go through enumerate_partitions, so agreement with Jet2 is a
/// genuine cross-check.
class DerivativeTable {
 public:
  explicit DerivativeTable(int order);

  static DerivativeTable constant(double value, int order);
  /// Table of c0 + ca·a + cb·b.
  static DerivativeTable linear(double c0, double ca, double cb, int order);

  int order() const noexcept { return order_; }
  double operator()(int j, int m) const;
  double& operator()(int j, int m);

  DerivativeTable operator+(const DerivativeTable& other) const;
  DerivativeTable operator*(double scale) const;
  /// Leibniz rule.
  DerivativeTable operator*(const DerivativeTable& other) const;

  /// f∘F with outer_derivs[ℓ] = f^{(ℓ)}(F(0,0)), ℓ = 0..order.
  DerivativeTable compose(std::span<const double> outer_derivs) const;

  /// Jet with coefficients d(j, m)/(j! m!).
  Jet2 to_jet() const;

 private:
  int order_;
  std::vector<double> d_;
};

}  // namespace sigmalab
