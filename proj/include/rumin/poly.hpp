#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "rumin/gauss_rational.hpp"

namespace rumin {

inline constexpr int kMaxDim = 8;

/// z^hol * zbar^anti, with exponents for up to kMaxDim coordinates.
/// Entries 0..kMaxDim-1 hold the z_j exponents, the rest hold zbar_j.
struct Monomial {
  std::array<std::uint8_t, 2 * kMaxDim> exps{};

  std::uint8_t hol(int j) const { return exps[j]; }
  std::uint8_t anti(int j) const { return exps[kMaxDim + j]; }
  std::uint8_t& hol(int j) { return exps[j]; }
  std::uint8_t& anti(int j) { return exps[kMaxDim + j]; }

  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  int hol_degree() const {
    int d = 0;
    for (int j = 0; j < kMaxDim; ++j) d += exps[j];
    return d;
  }
  int anti_degree() const { return degree() - hol_degree(); }

  Monomial conj() const {
    Monomial m;
    for (int j = 0; j < kMaxDim; ++j) {
      m.hol(j) = anti(j);
      m.anti(j) = hol(j);
    }
    return m;
  }

  /// Same exponent vector for z and zbar (only such monomials integrate to non-zero).
  bool is_balanced() const {
    for (int j = 0; j < kMaxDim; ++j)
      if (hol(j) != anti(j)) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t k = 0; k < m.exps.size(); ++k) {
      const int e = a.exps[k] + b.exps[k];
      if (e > 255) throw std::overflow_error("monomial exponent overflow");
      m.exps[k] = static_cast<std::uint8_t>(e);
    }
    return m;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in z_1..z_n, zbar_1..zbar_n over Q(i).
/// Variables are 0-based in code; docs use the 1-based names.
class Poly {
 public:
  using Terms = std::map<Monomial, GaussRational>;

  Poly() = default;
  explicit Poly(int n) : n_(n) { check_dim(n); }
  Poly(int n, const GaussRational& c) : n_(n) {
    check_dim(n);
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }

  static Poly constant(int n, const GaussRational& c) { return Poly(n, c); }
  static Poly z(int n, int j) { return monomial(n, j, -1, 1); }
  static Poly zbar(int n, int j) { return monomial(n, -1, j, 1); }
  /// |z|^2 = sum_j z_j zbar_j.
  static Poly radius_sq(int n) {
    Poly p(n);
    for (int j = 0; j < n; ++j) {
      Monomial m;
      m.hol(j) = 1;
      m.anti(j) = 1;
      p.terms_.emplace(m, GaussRational(1));
    }
    return p;
  }
  static Poly from_monomial(int n, const Monomial& m, const GaussRational& c) {
    Poly p(n);
    p.add_term(m, c);
    return p;
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Constant term when the polynomial is constant; throws otherwise.
  GaussRational as_constant() const {
    if (terms_.empty()) return {};
    if (terms_.size() != 1 || terms_.begin()->first != Monomial{})
      throw std::domain_error("polynomial is not constant: " + str());
    return terms_.begin()->second;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
  }

  void add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    adopt_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const GaussRational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const GaussRational& c) { return a *= c; }
  friend Poly operator*(const GaussRational& c, Poly a) { return a *= c; }
  Poly operator-() const { return *this * GaussRational(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.n_ ? a.n_ : b.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Complex conjugation: swaps z and zbar and conjugates coefficients.
  Poly conj() const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.conj(), c.conj());
    return r;
  }

  /// Partial derivative d/dz_j (anti = false) or d/dzbar_j (anti = true).
  Poly diff(int j, bool anti) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) {
      const int e = anti ? m.anti(j) : m.hol(j);
      if (e == 0) continue;
      Monomial d = m;
      if (anti)
        --d.anti(j);
      else
        --d.hol(j);
      r.add_term(d, c * GaussRational(e));
    }
    return r;
  }

  Poly pow(int k) const {
    Poly r(n_, GaussRational(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  int max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Terms of total degree exactly d.
  Poly homogeneous_part(int d) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (int j = 0; j < n_; ++j) {
        if (m.hol(j)) os << "*z" << j + 1 << (m.hol(j) > 1 ? "^" + std::to_string(m.hol(j)) : "");
        if (m.anti(j)) os << "*zb" << j + 1 << (m.anti(j) > 1 ? "^" + std::to_string(m.anti(j)) : "");
      }
    }
    return os.str();
  }

 private:
  static void check_dim(int n) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
  }
  static Poly monomial(int n, int hol_j, int anti_j, long c) {
    Poly p(n);
    Monomial m;
    if (hol_j >= 0) m.hol(hol_j) = 1;
    if (anti_j >= 0) m.anti(anti_j) = 1;
    p.terms_.emplace(m, GaussRational(c));
    return p;
  }
  void adopt_dim(const Poly& o) {
    if (n_ == 0) n_ = o.n_;
  }

  int n_ = 0;
  Terms terms_;
};

}  // namespace rumin
