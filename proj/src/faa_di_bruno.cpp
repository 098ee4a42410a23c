#include "sigmalab/faa_di_bruno.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "sigmalab/error.hpp"

namespace sigmalab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

struct Search {
  std::vector<std::pair<int, int>> pairs;  // lexicographic, (0,0) excluded
  std::vector<PartitionTriple> out;
  PartitionTriple current;

  void descend(std::size_t first, int rj, int rm, int rl) {
    if (rj == 0 && rm == 0) {
      if (rl == 0) out.push_back(current);
      return;
    }
    if (rl == 0) return;
    for (std::size_t i = first; i < pairs.size(); ++i) {
      const auto [b1, b2] = pairs[i];
      for (int a = 1; a <= rl && a * b1 <= rj && a * b2 <= rm; ++a) {
        current.push_back({a, b1, b2});
        descend(i + 1, rj - a * b1, rm - a * b2, rl - a);
        current.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<PartitionTriple> enumerate_partitions(int j, int m, int ell) {
  if (j < 0 || m < 0 || ell < 1 || ell > j + m) return {};
  Search search;
  for (int b1 = 0; b1 <= j; ++b1) {
    for (int b2 = 0; b2 <= m; ++b2) {
      if (b1 != 0 || b2 != 0) search.pairs.emplace_back(b1, b2);
    }
  }
  search.descend(0, j, m, ell);
  return std::move(search.out);
}

double faa_di_bruno_coeff(std::span<const double> outer_derivs, const Jet2& inner, int j, int m) {
  const int total = j + m;
  if (outer_derivs.size() < static_cast<std::size_t>(total + 1)) {
    throw Error(Errc::InsufficientOuterDerivs,
                "need " + std::to_string(total + 1) + " outer derivatives, got " +
                    std::to_string(outer_derivs.size()));
  }
  if (total == 0) return outer_derivs[0];

  double sum = 0.0;
  for (int ell = 1; ell <= total; ++ell) {
    double inner_sum = 0.0;
    for (const auto& partition : enumerate_partitions(j, m, ell)) {
      double term = 1.0;
      for (const auto& block : partition) {
        const double g = inner.derivative(block.b1, block.b2) /
                         (factorial(block.b1) * factorial(block.b2));
        term *= std::pow(g, block.a) / factorial(block.a);
      }
      inner_sum += term;
    }
    sum += outer_derivs[ell] * inner_sum;
  }
  return factorial(j) * factorial(m) * sum;
}

DerivativeTable::DerivativeTable(int order)
    : order_(order), d_(static_cast<std::size_t>((order + 1) * (order + 1)), 0.0) {
  if (order < 0) throw Error(Errc::InvalidArgument, "negative derivative order");
}

DerivativeTable DerivativeTable::constant(double value, int order) {
  DerivativeTable t(order);
  t(0, 0) = value;
  return t;
}

DerivativeTable DerivativeTable::linear(double c0, double ca, double cb, int order) {
  DerivativeTable t(order);
  t(0, 0) = c0;
  if (order >= 1) {
    t(1, 0) = ca;
    t(0, 1) = cb;
  }
  return t;
}

double DerivativeTable::operator()(int j, int m) const {
  if (j < 0 || m < 0 || j + m > order_) throw std::out_of_range("derivative outside order");
  return d_[static_cast<std::size_t>(j * (order_ + 1) + m)];
}

double& DerivativeTable::operator()(int j, int m) {
  if (j < 0 || m < 0 || j + m > order_) throw std::out_of_range("derivative outside order");
  return d_[static_cast<std::size_t>(j * (order_ + 1) + m)];
}

DerivativeTable DerivativeTable::operator+(const DerivativeTable& other) const {
  if (order_ != other.order_) throw Error(Errc::OrderMismatch, "derivative table orders differ");
  DerivativeTable t = *this;
  for (std::size_t i = 0; i < d_.size(); ++i) t.d_[i] += other.d_[i];
  return t;
}

DerivativeTable DerivativeTable::operator*(double scale) const {
  DerivativeTable t = *this;
  for (double& v : t.d_) v *= scale;
  return t;
}

DerivativeTable DerivativeTable::operator*(const DerivativeTable& other) const {
  if (order_ != other.order_) throw Error(Errc::OrderMismatch, "derivative table orders differ");
  DerivativeTable t(order_);
  for (int j = 0; j <= order_; ++j) {
    for (int m = 0; j + m <= order_; ++m) {
      double sum = 0.0;
      for (int p = 0; p <= j; ++p) {
        for (int q = 0; q <= m; ++q) {
          sum += binomial(j, p) * binomial(m, q) * (*this)(p, q) * other(j - p, m - q);
        }
      }
      t(j, m) = sum;
    }
  }
  return t;
}

DerivativeTable DerivativeTable::compose(std::span<const double> outer_derivs) const {
  const Jet2 inner = to_jet();
  DerivativeTable t(order_);
  for (int j = 0; j <= order_; ++j) {
    for (int m = 0; j + m <= order_; ++m) t(j, m) = faa_di_bruno_coeff(outer_derivs, inner, j, m);
  }
  return t;
}

Jet2 DerivativeTable::to_jet() const {
  Jet2 jet(order_);
  for (int j = 0; j <= order_; ++j) {
    for (int m = 0; j + m <= order_; ++m) {
      jet.set_coeff(j, m, (*this)(j, m) / (factorial(j) * factorial(m)));
    }
  }
  return jet;
}

}  // namespace sigmalab
