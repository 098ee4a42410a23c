#include "sigmalab/jet2.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sigmalab/error.hpp"

namespace sigmalab {

namespace {

void require_same_order(const Jet2& x, const Jet2& y) {
  if (x.order() != y.order()) {
    throw Error(Errc::OrderMismatch, "jet orders " + std::to_string(x.order()) + " and " +
                                         std::to_string(y.order()) + " differ");
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Jet2::Jet2(int order) : order_(order) {
  if (order < 0 || order > max_order) {
    throw Error(Errc::UnsupportedOrder, "jet order must lie in [0, 8], got " + std::to_string(order));
  }
}

Jet2 Jet2::constant(double value, int order) {
  Jet2 x(order);
  x.c_[0] = value;
  return x;
}

Jet2 Jet2::var_a(int order) {
  if (order < 1) throw Error(Errc::OrderTooSmall, "variable jets need order >= 1");
  Jet2 x(order);
  x.c_[index(1, 0)] = 1.0;
  return x;
}

Jet2 Jet2::var_b(int order) {
  if (order < 1) throw Error(Errc::OrderTooSmall, "variable jets need order >= 1");
  Jet2 x(order);
  x.c_[index(0, 1)] = 1.0;
  return x;
}

double Jet2::coeff(int j, int m) const {
  if (j < 0 || m < 0 || j + m > order_) throw std::out_of_range("jet coefficient outside order");
  return c_[index(j, m)];
}

void Jet2::set_coeff(int j, int m, double value) {
  if (j < 0 || m < 0 || j + m > order_) throw std::out_of_range("jet coefficient outside order");
  c_[index(j, m)] = value;
}

double Jet2::derivative(int j, int m) const { return factorial(j) * factorial(m) * coeff(j, m); }

double Jet2::degree_sum(int d) const {
  if (d < 0 || d > order_) throw std::out_of_range("degree outside order");
  double sum = 0.0;
  for (int m = 0; m <= d; ++m) sum += c_[index(d - m, m)];
  return sum;
}

double Jet2::partial_sum(int d) const {
  double sum = 0.0;
  for (int e = 0; e <= d; ++e) sum += degree_sum(e);
  return sum;
}

double Jet2::evaluate(double da, double db) const {
  // Horner in a within each power of b would be faster; clarity wins at order <= 8.
  double sum = 0.0;
  for (int d = 0; d <= order_; ++d) {
    for (int m = 0; m <= d; ++m) {
      sum += c_[index(d - m, m)] * std::pow(da, d - m) * std::pow(db, m);
    }
  }
  return sum;
}

Jet2 Jet2::nilpotent() const {
  Jet2 x = *this;
  x.c_[0] = 0.0;
  return x;
}

Jet2& Jet2::operator+=(const Jet2& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < size(); ++i) c_[i] += other.c_[i];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& other) { return *this = *this * other; }

Jet2& Jet2::operator*=(double scale) {
  for (std::size_t i = 0; i < size(); ++i) c_[i] *= scale;
  return *this;
}

Jet2& Jet2::operator+=(double shift) {
  c_[0] += shift;
  return *this;
}

Jet2 operator*(const Jet2& x, const Jet2& y) {
  require_same_order(x, y);
  const int K = x.order();
  Jet2 z(K);
  // Factor pairs (p, q) and (j−p, m−q) are summed together, so x·y and y·x agree bitwise.
  for (int d = 0; d <= K; ++d) {
    for (int m = 0; m <= d; ++m) {
      const int j = d - m;
      double acc = 0.0;
      for (int p = 0; p <= j; ++p) {
        for (int q = 0; q <= m; ++q) {
          const int pc = j - p, qc = m - q;
          if (p > pc || (p == pc && q > qc)) continue;
          const std::size_t i = Jet2::index(p, q), c = Jet2::index(pc, qc);
          acc += i == c ? x.c_[i] * y.c_[i] : x.c_[i] * y.c_[c] + x.c_[c] * y.c_[i];
        }
      }
      z.c_[Jet2::index(j, m)] = acc;
    }
  }
  return z;
}

bool Jet2::operator==(const Jet2& other) const {
  if (order_ != other.order_) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (c_[i] != other.c_[i]) return false;
  }
  return true;
}

Jet2 compose(const Jet2& inner, std::span<const double> outer_derivs) {
  const int K = inner.order();
  if (outer_derivs.size() < static_cast<std::size_t>(K + 1)) {
    throw Error(Errc::InsufficientOuterDerivs, "composition needs order+1 outer derivatives");
  }
  const Jet2 n = inner.nilpotent();
  Jet2 result = Jet2::constant(outer_derivs[K] / factorial(K), K);
  for (int l = K - 1; l >= 0; --l) {
    result = result * n;
    result += outer_derivs[l] / factorial(l);
  }
  return result;
}

Jet2 reciprocal(const Jet2& x) {
  const double c = x.value();
  if (c == 0.0) throw Error(Errc::SingularConstantTerm, "reciprocal of a jet with zero constant term");
  std::array<double, Jet2::max_order + 1> d{};
  double v = 1.0 / c;
  for (int l = 0; l <= x.order(); ++l) {
    d[l] = v;
    v *= -(l + 1) / c;
  }
  return compose(x, d);
}

Jet2 pow(const Jet2& x, double exponent) {
  const double c = x.value();
  if (!(c > 0.0)) throw Error(Errc::SingularConstantTerm, "real power of a jet needs a positive constant term");
  std::array<double, Jet2::max_order + 1> d{};
  double falling = 1.0;
  for (int l = 0; l <= x.order(); ++l) {
    d[l] = falling * std::pow(c, exponent - l);
    falling *= exponent - l;
  }
  return compose(x, d);
}

Jet2 sqrt(const Jet2& x) { return pow(x, 0.5); }

Jet2 exp(const Jet2& x) {
  std::array<double, Jet2::max_order + 1> d{};
  d.fill(std::exp(x.value()));
  return compose(x, d);
}

Jet2 log(const Jet2& x) {
  const double c = x.value();
  if (!(c > 0.0)) throw Error(Errc::SingularConstantTerm, "log of a jet needs a positive constant term");
  std::array<double, Jet2::max_order + 1> d{};
  d[0] = std::log(c);
  double v = 1.0 / c;
  for (int l = 1; l <= x.order(); ++l) {
    d[l] = v;
    v *= -l / c;
  }
  return compose(x, d);
}

}  // namespace sigmalab
