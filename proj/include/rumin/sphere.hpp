#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "rumin/poly.hpp"

namespace rumin {

inline Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

/// Rising factorial (x)_k = x(x+1)...(x+k-1); (x)_0 = 1.
inline Rational pochhammer(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative k");
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= x + i;
  return r;
}

namespace detail {

/// (1 - sum_{j>=2} z_j zbar_j)^c, memoised per thread.
inline const Poly& sphere_complement_power(int n, int c) {
  thread_local std::map<std::pair<int, int>, Poly> cache;
  const auto key = std::make_pair(n, c);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Poly base(n, GaussRational(1));
  for (int j = 1; j < n; ++j) {
    Monomial m;
    m.hol(j) = 1;
    m.anti(j) = 1;
    base.add_term(m, GaussRational(-1));
  }
  return cache.emplace(key, base.pow(c)).first->second;
}

}  // namespace detail

/// Normal form modulo (|z|^2 - 1): every factor z_1 zbar_1 is rewritten as
/// 1 - sum_{j>=2} z_j zbar_j. The result contains no monomial divisible by z_1 zbar_1.
inline Poly reduce_mod_sphere(const Poly& p) {
  if (p.n() < 2) throw std::invalid_argument("reduce_mod_sphere requires n >= 2");
  Poly r(p.n());
  for (const auto& [m, c] : p.terms()) {
    const int k = std::min(m.hol(0), m.anti(0));
    if (k == 0) {
      r.add_term(m, c);
      continue;
    }
    Monomial base = m;
    base.hol(0) -= k;
    base.anti(0) -= k;
    for (const auto& [mm, cc] : detail::sphere_complement_power(p.n(), k).terms())
      r.add_term(base * mm, c * cc);
  }
  return r;
}

/// Integral of z^a zbar^b against normalized surface measure on S^{2n-1}:
/// delta_{ab} (n-1)! a! / (n-1+|a|)!.
inline Rational sphere_monomial_integral(int n, const Monomial& m) {
  if (!m.is_balanced()) return Rational(0);
  Rational num = factorial(n - 1);
  int total = 0;
  for (int j = 0; j < n; ++j) {
    num *= factorial(m.hol(j));
    total += m.hol(j);
  }
  return num / factorial(n - 1 + total);
}

/// Integral over S with sigma(S) = 1, computed term by term on the given
/// representative (no reduction is applied).
inline GaussRational sphere_integral(const Poly& p) {
  if (p.n() < 2) throw std::invalid_argument("sphere_integral requires n >= 2");
  GaussRational acc;
  for (const auto& [m, c] : p.terms()) {
    if (!m.is_balanced()) continue;
    acc += c * GaussRational(sphere_monomial_integral(p.n(), m));
  }
  return acc;
}

/// Integral of z^a zbar^b over the unit ball with normalized Lebesgue measure:
/// delta_{ab} n! a! / (n+|a|)!.
inline Rational ball_monomial_integral(int n, const Monomial& m) {
  if (!m.is_balanced()) return Rational(0);
  Rational num = factorial(n);
  int total = 0;
  for (int j = 0; j < n; ++j) {
    num *= factorial(m.hol(j));
    total += m.hol(j);
  }
  return num / factorial(n + total);
}

inline GaussRational ball_integral(const Poly& p) {
  GaussRational acc;
  for (const auto& [m, c] : p.terms()) {
    if (!m.is_balanced()) continue;
    acc += c * GaussRational(ball_monomial_integral(p.n(), m));
  }
  return acc;
}

}  // namespace rumin
