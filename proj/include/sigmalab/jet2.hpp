#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace sigmalab {

/// Truncated bivariate Taylor expansion in (a, b) about (0, 0).
///
/// Coefficient (j, m) stores (1/(j! m!)) ∂^{j+m}f/∂a^j∂b^m at the origin, for
/// j + m <= order. Arithmetic never produces terms of total degree above the
/// order, so products and compositions are exact truncations.
class Jet2 {
 public:
  static constexpr int max_order = 8;
  static constexpr std::size_t capacity = (max_order + 1) * (max_order + 2) / 2;

  /// Zero jet of the given order.
  explicit Jet2(int order);

  static Jet2 constant(double value, int order);
  static Jet2 var_a(int order);
  static Jet2 var_b(int order);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return size_for(order_); }
  static constexpr std::size_t size_for(int order) noexcept {
    return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
  }

  /// Throws std::out_of_range for j + m > order.
  double coeff(int j, int m) const;
  void set_coeff(int j, int m, double value);

  double value() const noexcept { return c_[0]; }

  /// ∂^{j+m}f/∂a^j∂b^m at the origin, i.e. j! m! coeff(j, m).
  double derivative(int j, int m) const;

  /// Σ_{j+m=d} coeff(j, m): the degree-d part evaluated at (a, b) = (1, 1).
  double degree_sum(int d) const;

  /// Σ_{j+m<=d} coeff(j, m).
  double partial_sum(int d) const;

  /// The truncated polynomial evaluated at (da, db).
  double evaluate(double da, double db) const;

  /// Copy with the constant term removed.
  Jet2 nilpotent() const;

  std::span<const double> coefficients() const noexcept { return {c_.data(), size()}; }

  Jet2& operator+=(const Jet2& other);
  Jet2& operator-=(const Jet2& other);
  Jet2& operator*=(const Jet2& other);
  Jet2& operator*=(double scale);
  Jet2& operator+=(double shift);

  friend Jet2 operator+(Jet2 x, const Jet2& y) { return x += y; }
  friend Jet2 operator-(Jet2 x, const Jet2& y) { return x -= y; }
  friend Jet2 operator*(const Jet2& x, const Jet2& y);
  friend Jet2 operator*(Jet2 x, double s) { return x *= s; }
  friend Jet2 operator*(double s, Jet2 x) { return x *= s; }
  friend Jet2 operator+(Jet2 x, double s) { return x += s; }
  friend Jet2 operator+(double s, Jet2 x) { return x += s; }
  friend Jet2 operator-(double s, const Jet2& x) { return (x * -1.0) += s; }
  Jet2 operator-() const { return *this * -1.0; }

  bool operator==(const Jet2& other) const;

 private:
  static constexpr std::size_t index(int j, int m) noexcept {
    const int d = j + m;
    return static_cast<std::size_t>(d * (d + 1) / 2 + m);
  }

  int order_;
  std::array<double, capacity> c_{};
};

/// f(x) for analytic f given f^{(l)}(x₀) for l = 0..order, x₀ = x.value().
/// Horner evaluation of the outer Taylor series in the nilpotent part of x.
Jet2 compose(const Jet2& inner, std::span<const double> outer_derivs);

Jet2 reciprocal(const Jet2& x);
Jet2 sqrt(const Jet2& x);
Jet2 exp(const Jet2& x);
Jet2 log(const Jet2& x);
Jet2 pow(const Jet2& x, double exponent);

}  // namespace sigmalab
