#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "rumin/poly.hpp"
#include "rumin/sphere.hpp"

namespace rumin {

/// A wedge of distinct generators in canonical order: all dzbar's ascending,
/// then all dz's ascending. Bit j of the key is dzbar_{j+1}, bit kMaxDim + j is dz_{j+1},
/// so ascending bit index is the canonical order.
struct WedgeWord {
  std::uint16_t bits = 0;

  static constexpr WedgeWord anti(int j) { return {static_cast<std::uint16_t>(1u << j)}; }
  static constexpr WedgeWord hol(int j) { return {static_cast<std::uint16_t>(1u << (kMaxDim + j))}; }

  std::uint8_t anti_mask() const { return static_cast<std::uint8_t>(bits & 0xFFu); }
  std::uint8_t hol_mask() const { return static_cast<std::uint8_t>(bits >> kMaxDim); }
  /// (p, q) = (#dz, #dzbar).
  int p() const { return std::popcount(static_cast<unsigned>(hol_mask())); }
  int q() const { return std::popcount(static_cast<unsigned>(anti_mask())); }
  int degree() const { return std::popcount(static_cast<unsigned>(bits)); }

  friend auto operator<=>(const WedgeWord&, const WedgeWord&) = default;
  friend bool operator==(const WedgeWord&, const WedgeWord&) = default;

  std::string str() const {
    if (bits == 0) return "1";
    std::string s;
    for (int b = 0; b < 2 * kMaxDim; ++b) {
      if (!(bits >> b & 1u)) continue;
      if (!s.empty()) s += "^";
      s += b < kMaxDim ? "dzb" + std::to_string(b + 1) : "dz" + std::to_string(b - kMaxDim + 1);
    }
    return s;
  }
};

namespace detail {
/// Parity of the number of generators of `w` strictly below bit `b`.
inline int sign_below(std::uint16_t w, int b) {
  const unsigned below = w & ((1u << b) - 1u);
  return (std::popcount(below) & 1) ? -1 : 1;
}
/// Sign of u ^ v reordered into canonical order (u, v disjoint).
inline int wedge_sign(std::uint16_t u, std::uint16_t v) {
  int parity = 0;
  for (unsigned rest = v; rest; rest &= rest - 1) {
    const int b = std::countr_zero(rest);
    parity += std::popcount(static_cast<unsigned>(u) >> (b + 1));
  }
  return (parity & 1) ? -1 : 1;
}
}  // namespace detail

/// Where a form's coefficients live. Ball-side forms must never meet sphere-reduced ones.
enum class Domain { Neutral, Ambient, Sphere };

inline Domain combine(Domain a, Domain b) {
  if (a == Domain::Neutral) return b;
  if (b == Domain::Neutral || a == b) return a;
  throw std::logic_error("mixing ambient (ball) and sphere-reduced forms");
}

/// Sparse map WedgeWord -> Poly. No zero coefficients are stored.
class Form {
 public:
  using Terms = std::map<WedgeWord, Poly>;

  Form() = default;
  explicit Form(int n, Domain dom = Domain::Neutral) : n_(n), domain_(dom) {}

  static Form scalar(const Poly& f) {
    Form r(f.n());
    r.add(WedgeWord{}, f);
    return r;
  }
  static Form constant(int n, const GaussRational& c) { return scalar(Poly(n, c)); }
  static Form word(int n, WedgeWord w, const Poly& f) {
    Form r(n);
    r.add(w, f);
    return r;
  }
  static Form dz(int n, int j) { return word(n, WedgeWord::hol(j), Poly(n, GaussRational(1))); }
  static Form dzbar(int n, int j) { return word(n, WedgeWord::anti(j), Poly(n, GaussRational(1))); }

  int n() const { return n_; }
  Domain domain() const { return domain_; }
  void set_domain(Domain d) { domain_ = d; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a word (zero polynomial when absent).
  Poly coefficient(WedgeWord w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Poly(n_) : it->second;
  }

  void add(WedgeWord w, const Poly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_term(WedgeWord w, const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) it = terms_.emplace(w, Poly(n_)).first;
    it->second.add_term(m, c);
    if (it->second.is_zero()) terms_.erase(it);
  }

  Form& operator+=(const Form& o) {
    adopt(o);
    for (const auto& [w, f] : o.terms_) add(w, f);
    return *this;
  }
  Form& operator-=(const Form& o) {
    adopt(o);
    for (const auto& [w, f] : o.terms_) add(w, -f);
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  Form operator-() const { return *this * GaussRational(-1); }

  friend Form operator*(const Poly& f, const Form& a) {
    Form r(a.n_, a.domain_);
    if (f.is_zero()) return r;
    for (const auto& [w, g] : a.terms_) r.add(w, f * g);
    return r;
  }
  friend Form operator*(const Form& a, const GaussRational& c) {
    Form r(a.n_, a.domain_);
    if (c.is_zero()) return r;
    for (const auto& [w, g] : a.terms_) r.terms_.emplace(w, g * c);
    return r;
  }
  friend Form operator*(const GaussRational& c, const Form& a) { return a * c; }

  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

  /// True when every word has bidegree (p, q).
  bool is_bidegree(int p, int q) const {
    for (const auto& [w, f] : terms_)
      if (w.p() != p || w.q() != q) return false;
    return true;
  }
  /// Bidegree of the first word, (-1,-1) for the zero form.
  std::pair<int, int> bidegree() const {
    if (terms_.empty()) return {-1, -1};
    return {terms_.begin()->first.p(), terms_.begin()->first.q()};
  }
  bool is_homogeneous() const {
    auto [p, q] = bidegree();
    return terms_.empty() || is_bidegree(p, q);
  }
  std::size_t term_count() const {
    std::size_t k = 0;
    for (const auto& [w, f] : terms_) k += f.size();
    return k;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "[" << f.str() << "] " << w.str();
    }
    return os.str();
  }

 private:
  void adopt(const Form& o) {
    if (n_ == 0) n_ = o.n_;
    domain_ = combine(domain_, o.domain_);
  }

  int n_ = 0;
  Domain domain_ = Domain::Neutral;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Products and contractions

inline Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
  Form r(a.n(), combine(a.domain(), b.domain()));
  for (const auto& [wa, fa] : a.terms())
    for (const auto& [wb, fb] : b.terms()) {
      if (wa.bits & wb.bits) continue;
      const int s = detail::wedge_sign(wa.bits, wb.bits);
      Poly prod = fa * fb;
      if (s < 0) prod = -prod;
      r.add(WedgeWord{static_cast<std::uint16_t>(wa.bits | wb.bits)}, prod);
    }
  return r;
}

enum class Slot { Hol, Anti };

/// Interior product with d/dz_j (Slot::Hol) or d/dzbar_j (Slot::Anti): an
/// antiderivation of degree -1 pairing dz_k (resp. dzbar_k) with delta_{jk}.
inline Form contract(int j, Slot kind, const Form& w) {
  Form r(w.n(), w.domain());
  const int bit = kind == Slot::Hol ? kMaxDim + j : j;
  for (const auto& [word, f] : w.terms()) {
    if (!(word.bits >> bit & 1u)) continue;
    const int s = detail::sign_below(word.bits, bit);
    WedgeWord out{static_cast<std::uint16_t>(word.bits & ~(1u << bit))};
    r.add(out, s < 0 ? -f : f);
  }
  return r;
}

/// Left multiplication dz_j ^ (.) or dzbar_j ^ (.).
inline Form insert(int j, Slot kind, const Form& w) {
  Form r(w.n(), w.domain());
  const int bit = kind == Slot::Hol ? kMaxDim + j : j;
  for (const auto& [word, f] : w.terms()) {
    if (word.bits >> bit & 1u) continue;
    const int s = detail::sign_below(word.bits, bit);
    WedgeWord out{static_cast<std::uint16_t>(word.bits | (1u << bit))};
    r.add(out, s < 0 ? -f : f);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Contact structure

/// tau = sum zbar_j dz_j.
inline Form tau(int n) {
  Form r(n);
  for (int j = 0; j < n; ++j) r.add(WedgeWord::hol(j), Poly::zbar(n, j));
  return r;
}
/// taubar = sum z_j dzbar_j.
inline Form tau_bar(int n) {
  Form r(n);
  for (int j = 0; j < n; ++j) r.add(WedgeWord::anti(j), Poly::z(n, j));
  return r;
}
/// dtau = sum dzbar_j ^ dz_j.
inline Form dtau(int n) {
  Form r(n);
  for (int j = 0; j < n; ++j)
    r.add(WedgeWord{static_cast<std::uint16_t>(WedgeWord::anti(j).bits | WedgeWord::hol(j).bits)},
          Poly(n, GaussRational(1)));
  return r;
}
/// theta = dtau - taubar ^ tau.
inline Form theta(int n) { return dtau(n) - wedge(tau_bar(n), tau(n)); }

inline Form i_T(const Form& w) {
  Form r(w.n(), w.domain());
  for (int j = 0; j < w.n(); ++j) r += Poly::z(w.n(), j) * contract(j, Slot::Hol, w);
  return r;
}
inline Form i_Tbar(const Form& w) {
  Form r(w.n(), w.domain());
  for (int j = 0; j < w.n(); ++j) r += Poly::zbar(w.n(), j) * contract(j, Slot::Anti, w);
  return r;
}
/// i_E = sum_j i_{d_j} i_{dbar_j}.
inline Form i_E(const Form& w) {
  Form r(w.n(), w.domain());
  for (int j = 0; j < w.n(); ++j) r += contract(j, Slot::Hol, contract(j, Slot::Anti, w));
  return r;
}

// ---------------------------------------------------------------------------
// Differentials

inline Form del(const Form& w) {
  Form r(w.n(), w.domain());
  for (int j = 0; j < w.n(); ++j) {
    Form dj(w.n(), w.domain());
    for (const auto& [word, f] : w.terms()) dj.add(word, f.diff(j, false));
    r += insert(j, Slot::Hol, dj);
  }
  return r;
}
inline Form dbar(const Form& w) {
  Form r(w.n(), w.domain());
  for (int j = 0; j < w.n(); ++j) {
    Form dj(w.n(), w.domain());
    for (const auto& [word, f] : w.terms()) dj.add(word, f.diff(j, true));
    r += insert(j, Slot::Anti, dj);
  }
  return r;
}
inline Form d(const Form& w) { return del(w) + dbar(w); }

// ---------------------------------------------------------------------------
// Sphere restriction and inner products

/// Coefficient-wise normal form modulo (|z|^2 - 1). Refuses ball-side forms.
inline Form reduce_mod_sphere(const Form& w) {
  if (w.domain() == Domain::Ambient)
    throw std::logic_error("refusing to sphere-reduce an ambient ball form; use restrict_to_sphere");
  Form r(w.n(), Domain::Sphere);
  for (const auto& [word, f] : w.terms()) r.add(word, reduce_mod_sphere(f));
  return r;
}

/// Explicit restriction of a ball-side form to the sphere.
inline Form restrict_to_sphere(Form w) {
  w.set_domain(Domain::Neutral);
  return reduce_mod_sphere(w);
}

/// <a, b> at each point: sum over shared words of f * conj(g).
inline Poly pointwise_inner(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw std::invalid_argument("pointwise_inner: dimension mismatch");
  Poly r(a.n());
  for (const auto& [w, f] : a.terms()) {
    auto it = b.terms().find(w);
    if (it == b.terms().end()) continue;
    r += f * it->second.conj();
  }
  return r;
}

/// (a, b) = integral over S of <a, b>. Only balanced monomials of the product
/// contribute, so the product is accumulated lazily into the integral.
inline GaussRational l2_inner(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw std::invalid_argument("l2_inner: dimension mismatch");
  const int n = a.n();
  GaussRational acc;
  for (const auto& [w, f] : a.terms()) {
    auto it = b.terms().find(w);
    if (it == b.terms().end()) continue;
    for (const auto& [mf, cf] : f.terms())
      for (const auto& [mg, cg] : it->second.terms()) {
        const Monomial prod = mf * mg.conj();
        if (!prod.is_balanced()) continue;
        acc += cf * cg.conj() * GaussRational(sphere_monomial_integral(n, prod));
      }
  }
  return acc;
}

inline Rational l2_norm_sq(const Form& a) { return l2_inner(a, a).re(); }

}  // namespace rumin
