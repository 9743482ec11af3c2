#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rumin/operators.hpp"
#include "rumin/rumin.hpp"

namespace rumin {

enum class Family { Alpha, Beta, Gamma, Delta };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Alpha: return "alpha";
    case Family::Beta: return "beta";
    case Family::Gamma: return "gamma";
    case Family::Delta: return "delta";
  }
  return "?";
}
inline constexpr Family kFamilies[] = {Family::Alpha, Family::Beta, Family::Gamma, Family::Delta};

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct FormulaUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Labels the highest weight vector of one isotypic component of L^2(Q^{p,q-1}).
/// p = 0 is accepted so that lower-degree adjoint targets can be built.
struct HwParams {
  int n = 2;
  int p = 1;
  int q = 1;
  int m = 0;
  int l = 0;
  Family family = Family::Alpha;

  void validate() const {
    if (n < 2 || n > kMaxDim) throw InvalidParams("n out of range");
    if (q < 1 || p < 0 || p + q > n) throw InvalidParams("need q >= 1, p >= 0, p+q <= n");
    if (m < 0 || l < 0) throw InvalidParams("m, l must be non-negative");
  }
  bool valid() const {
    try {
      validate();
      return true;
    } catch (const InvalidParams&) {
      return false;
    }
  }
  /// Whether the form labels its own summand of Q^{p,q-1}. Delta leaves Q in the middle
  /// degree. For q = 1 and m >= 1 the alpha and beta forms coincide with the gamma and
  /// delta forms of parameter m-1, so they are not separate summands.
  bool occurs() const {
    if (family == Family::Delta && p + q == n) return false;
    if ((family == Family::Alpha || family == Family::Beta) && q == 1 && m >= 1) return false;
    return true;
  }
  /// Valid, with every block of the construction defined, and landing in Q.
  bool in_rumin_space() const {
    if (!valid() || (family == Family::Delta && p + q == n)) return false;
    return !((family == Family::Beta || family == Family::Delta) && n - p < 1);
  }
  bool constructible() const { return in_rumin_space() && occurs(); }
  /// The closed norm formulas for alpha and delta are printed only below the middle degree.
  bool norm_formula_needs_interior() const {
    return family == Family::Alpha || family == Family::Delta;
  }
  /// (r, s): number of +1 and -1 entries added to (m, 0, ..., 0, -l).
  std::pair<int, int> label() const {
    switch (family) {
      case Family::Alpha: return {q - 1, p};
      case Family::Beta: return {q - 1, p + 1};
      case Family::Gamma: return {q, p};
      case Family::Delta: return {q, p + 1};
    }
    return {0, 0};
  }

  std::string str() const {
    return std::string(family_name(family)) + "(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
           ",q=" + std::to_string(q) + ",m=" + std::to_string(m) + ",l=" + std::to_string(l) + ")";
  }

  friend auto operator<=>(const HwParams&, const HwParams&) = default;
};

/// Integer weight in the eps_j basis.
struct Weight {
  std::vector<int> coords;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")";
  }
};

/// (m, 0, ..., 0, -l) + (1^r, 0, ..., 0, -1^s).
inline Weight expected_weight(const HwParams& hp) {
  Weight w{std::vector<int>(hp.n, 0)};
  w.coords[0] += hp.m;
  w.coords[hp.n - 1] -= hp.l;
  const auto [r, s] = hp.label();
  for (int i = 0; i < r; ++i) w.coords[i] += 1;
  for (int i = 0; i < s; ++i) w.coords[hp.n - 1 - i] -= 1;
  return w;
}

// ---------------------------------------------------------------------------
// Building blocks (1-based indices as in the formulas, converted on the way in)

/// zeta_1 ^ ... ^ zeta_k (the empty wedge is 1).
inline Form zeta_block(int n, int k) {
  Form r = Form::constant(n, 1);
  for (int j = 1; j <= k; ++j) r = wedge(r, zeta(n, j - 1));
  return r;
}
/// xi_a ^ ... ^ xi_b for 1 <= a, b <= n (empty when a > b).
inline Form xi_block(int n, int a, int b) {
  Form r = Form::constant(n, 1);
  for (int i = a; i <= b; ++i) r = wedge(r, xi(n, i - 1));
  return r;
}
inline Form dzbar_block(int n, int k) {
  Form r = Form::constant(n, 1);
  for (int j = 1; j <= k; ++j) r = wedge(r, Form::dzbar(n, j - 1));
  return r;
}
inline Form dz_block(int n, int a, int b) {
  Form r = Form::constant(n, 1);
  for (int i = a; i <= b; ++i) r = wedge(r, Form::dz(n, i - 1));
  return r;
}

namespace detail {
/// sum_{j=1}^{q} (-1)^{j-1} c_j g_1 ^ .. ^ g_j-hat ^ .. ^ g_q on a list of 1-forms.
inline Form alternating_sum(int n, const std::vector<Poly>& coeffs, const std::vector<Form>& gens) {
  Form r(n);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Form w = Form::constant(n, 1);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != j) w = wedge(w, gens[i]);
    r += coeffs[j] * w * GaussRational(j % 2 ? -1 : 1);
  }
  return r;
}
}  // namespace detail

/// omega_1(q) = sum_j (-1)^{j-1} zbar_j zeta_1 ^ .. zeta_j-hat .. ^ zeta_q.
inline Form omega1(int n, int q) {
  std::vector<Poly> c;
  std::vector<Form> g;
  for (int j = 1; j <= q; ++j) {
    c.push_back(Poly::zbar(n, j - 1));
    g.push_back(zeta(n, j - 1));
  }
  return detail::alternating_sum(n, c, g);
}
/// The same sum with dzbar_j in place of zeta_j.
inline Form omega1_flat(int n, int q) {
  std::vector<Poly> c;
  std::vector<Form> g;
  for (int j = 1; j <= q; ++j) {
    c.push_back(Poly::zbar(n, j - 1));
    g.push_back(Form::dzbar(n, j - 1));
  }
  return detail::alternating_sum(n, c, g);
}
/// omega_2(p) = sum_{i=n-p}^{n} (-1)^{i-(n-p)} z_i xi_{n-p} ^ .. xi_i-hat .. ^ xi_n.
inline Form omega2(int n, int p) {
  if (n - p < 1) throw InvalidParams("omega_2(p) needs n - p >= 1");
  std::vector<Poly> c;
  std::vector<Form> g;
  for (int i = n - p; i <= n; ++i) {
    c.push_back(Poly::z(n, i - 1));
    g.push_back(xi(n, i - 1));
  }
  return detail::alternating_sum(n, c, g);
}
inline Form omega2_flat(int n, int p) {
  if (n - p < 1) throw InvalidParams("omega_2(p) needs n - p >= 1");
  std::vector<Poly> c;
  std::vector<Form> g;
  for (int i = n - p; i <= n; ++i) {
    c.push_back(Poly::z(n, i - 1));
    g.push_back(Form::dz(n, i - 1));
  }
  return detail::alternating_sum(n, c, g);
}

/// kappa = zeta_1 ^ .. ^ zeta_{q-1} ^ xi_{n-p+1} ^ .. ^ xi_n.
inline Form kappa(int n, int p, int q) { return wedge(zeta_block(n, q - 1), xi_block(n, n - p + 1, n)); }

/// zbar_1^m z_n^l.
inline Poly hw_monomial(int n, int m, int l) {
  Monomial mono;
  mono.anti(0) = static_cast<std::uint8_t>(m);
  mono.hol(n - 1) = static_cast<std::uint8_t>(l);
  return Poly::from_monomial(n, mono, 1);
}

/// Unreduced polynomial representative of the highest weight form.
inline Form hw_form_ambient(const HwParams& hp) {
  hp.validate();
  const int n = hp.n, p = hp.p, q = hp.q;
  Form core;
  switch (hp.family) {
    case Family::Alpha: {
      const Form k = kappa(n, p, q);
      // i_E L_theta acts on i_E(kappa) as n-p-q+2; this is n-1 only when p+q = 3.
      core = k - wedge(theta(n), i_E(k)) * GaussRational(Rational(1, n - p - q + 2));
      break;
    }
    case Family::Beta: core = wedge(zeta_block(n, q - 1), omega2(n, p)); break;
    case Family::Gamma: core = wedge(omega1(n, q), xi_block(n, n - p + 1, n)); break;
    case Family::Delta: core = wedge(omega1(n, q), omega2(n, p)); break;
  }
  return hw_monomial(n, hp.m, hp.l) * core;
}

inline SphereForm hw_form(const HwParams& hp) { return SphereForm(hw_form_ambient(hp)); }

// ---------------------------------------------------------------------------
// gl(n) action

/// pi(E_jk) = zbar_j d/dzbar_k - z_k d/dz_j, extended to forms as a derivation with
/// dzbar_k -> dzbar_j and dz_j -> -dz_k. Indices are 0-based.
inline Form gl_action(int j, int k, const Form& w) {
  const int n = w.n();
  Form r(n, w.domain());
  for (const auto& [word, f] : w.terms()) {
    Poly g = Poly::zbar(n, j) * f.diff(k, true) - Poly::z(n, k) * f.diff(j, false);
    r.add(word, g);
  }
  r += insert(j, Slot::Anti, contract(k, Slot::Anti, w));
  r -= insert(k, Slot::Hol, contract(j, Slot::Hol, w));
  return r;
}

struct NotWeightVector : std::runtime_error {
  NotWeightVector(int j, const std::string& witness)
      : std::runtime_error("not an eigenvector of H_" + std::to_string(j + 1) + ": " + witness),
        index(j) {}
  int index;
};

/// Simultaneous eigenvalues of pi(H_j) = pi(E_jj).
inline Weight weight_of(const Form& w) {
  if (w.is_zero()) throw NotWeightVector(0, "zero form");
  const int n = w.n();
  Weight out{std::vector<int>(n, 0)};
  const auto& [w0, f0] = *w.terms().begin();
  const auto& [m0, c0] = *f0.terms().begin();
  for (int j = 0; j < n; ++j) {
    const Form hj = gl_action(j, j, w);
    const Poly probe = hj.coefficient(w0);
    auto it = probe.terms().find(m0);
    const GaussRational ev = it == probe.terms().end() ? GaussRational() : it->second / c0;
    if (!ev.is_real() || ev.re().get_den() != 1) throw NotWeightVector(j, "non-integral eigenvalue");
    if (!(hj == w * ev)) throw NotWeightVector(j, (hj - w * ev).str());
    out.coords[j] = static_cast<int>(ev.re().get_num().get_si());
  }
  return out;
}

/// Annihilated by pi(E_{j,j+1}) for all j on S.
inline bool is_highest_weight(const Form& w) {
  for (int j = 0; j + 1 < w.n(); ++j)
    if (!reduce_mod_sphere(gl_action(j, j + 1, w)).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Printed norm formulas

/// m! l! / (n)_{m+l+2}.
inline Rational norm_prefactor(int n, int m, int l) {
  return factorial(m) * factorial(l) / pochhammer(Rational(n), m + l + 2);
}

/// The shared bracket (l+n-q+1)(m+n-p) - (l+p)(m+q-1)/(n-1) of the alpha formulas.
inline Rational alpha_bracket(const HwParams& h) {
  const Rational a = Rational(h.l + h.n - h.q + 1) * (h.m + h.n - h.p);
  return a - frac((h.l + h.p) * (h.m + h.q - 1), h.n - 1);
}

/// The closed-form squared norms as printed. Alpha and delta are printed only for p+q < n.
inline Rational norm_sq_closed(const HwParams& h) {
  h.validate();
  const Rational k = norm_prefactor(h.n, h.m, h.l);
  const bool interior = h.p + h.q < h.n;
  switch (h.family) {
    case Family::Alpha:
      if (!interior) throw FormulaUnavailable("alpha norm is not printed for p+q = n");
      return k * alpha_bracket(h);
    case Family::Beta: return k * (h.l + h.p + 1) * (h.l + h.n - h.q);
    case Family::Gamma: return k * (h.m + h.q) * (h.m + h.n - h.p + 1);
    case Family::Delta:
      if (!interior) throw FormulaUnavailable("delta norm is not printed for p+q = n");
      return k * (h.l + h.p + 1) * (h.m + h.q);
  }
  return {};
}

}  // namespace rumin
