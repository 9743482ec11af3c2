#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rumin/poly.hpp"
#include "rumin/sphere.hpp"

namespace rumin {

/// c_0 + c_1 t + ... + c_N t^N, known exactly up to the truncation order N.
class SeriesPoly {
 public:
  explicit SeriesPoly(int order) : coeffs_(static_cast<std::size_t>(check(order)) + 1) {}
  SeriesPoly(int order, std::vector<Rational> coeffs) : SeriesPoly(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = coeffs[k];
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  SeriesPoly truncated(int order) const {
    SeriesPoly out(std::min(order, this->order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = coeffs_[k];
    return out;
  }

  friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] + b[k];
    return out;
  }
  friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out[k] = a[k] - b[k];
    return out;
  }
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
    SeriesPoly out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i)
      for (int j = 0; i + j <= out.order(); ++j) out[i + j] += a[i] * b[j];
    return out;
  }
  friend SeriesPoly operator*(const Rational& c, const SeriesPoly& a) {
    SeriesPoly out(a.order());
    for (int k = 0; k <= a.order(); ++k) out[k] = c * a[k];
    return out;
  }
  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Formal derivative; one order of accuracy is lost.
  SeriesPoly derivative() const {
    if (order() == 0) throw std::domain_error("derivative of an order-0 series is unknown");
    SeriesPoly out(order() - 1);
    for (int k = 0; k <= out.order(); ++k) out[k] = Rational(k + 1) * coeffs_[k + 1];
    return out;
  }

  /// t * s, accurate to one order more.
  SeriesPoly times_t() const {
    SeriesPoly out(order() + 1);
    for (int k = 0; k <= order(); ++k) out[k + 1] = coeffs_[k];
    return out;
  }

  /// Substitutes t = |z|^2 in n variables.
  Poly at_radius_sq(int n) const {
    Poly out(n);
    const Poly t = Poly::radius_sq(n);
    Poly power = Poly::constant(n, GaussRational(1));
    for (int k = 0; k <= order(); ++k) {
      if (sgn(coeffs_[k]) != 0) out = out + power * GaussRational(coeffs_[k]);
      if (k < order()) power = power * t;
    }
    return out;
  }

  std::string str() const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
      if (k) s += " + ";
      s += to_exact_string(coeffs_[k]) + " t^" + std::to_string(k);
    }
    return s + " + O(t^" + std::to_string(order() + 1) + ")";
  }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return order;
  }
  std::vector<Rational> coeffs_;
};

/// 2F1(a, b; a+b+2; t) through t^N.
inline SeriesPoly hypergeom_series(int a, int b, int order) {
  SeriesPoly out(order);
  const Rational c(a + b + 2);
  for (int k = 0; k <= order; ++k)
    out[k] = pochhammer(Rational(a), k) * pochhammer(Rational(b), k) / (pochhammer(c, k) * factorial(k));
  return out;
}

}  // namespace rumin
