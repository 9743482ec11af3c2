#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rumin/series.hpp"
#include "rumin/spectra.hpp"

namespace rumin {

struct SzegoParams {
  int n = 2;
  int p = 1;
  int q = 1;
  int m = 0;
  int l = 0;

  int a() const { return p + l; }
  int b() const { return q + m; }
  void validate() const {
    if (n < 2 || n > kMaxDim) throw InvalidParams("n out of range");
    if (p < 1 || q < 1 || p + q != n) throw InvalidParams("need p, q >= 1 and p+q = n");
    if (m < 0 || l < 0) throw InvalidParams("m, l must be non-negative");
  }
  HwParams gamma() const { return HwParams{n, p, q, m, l, Family::Gamma}; }
  std::string str() const {
    return "(n=" + std::to_string(n) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q) +
           ",m=" + std::to_string(m) + ",l=" + std::to_string(l) + ")";
  }
};

/// zbar_1^m z_n^l dzbar_1 ^ ... ^ dzbar_q ^ dz_{n-p+1} ^ ... ^ dz_n on the ball.
inline Form build_seed(const SzegoParams& sp) {
  sp.validate();
  const int n = sp.n;
  Form w = Form::scalar(Poly::zbar(n, 0).pow(sp.m) * Poly::z(n, n - 1).pow(sp.l));
  for (int j = 0; j < sp.q; ++j) w = wedge(w, Form::dzbar(n, j));
  for (int j = n - sp.p; j < n; ++j) w = wedge(w, Form::dz(n, j));
  w.set_domain(Domain::Ambient);
  return w;
}

/// f0 = s0 F + s1 t F', f1 = s2 F', f2 = s3 F', f3 = s4 F''.
struct OmegaTildeConstants {
  Rational f0_F, f0_tdF, f1_dF, f2_dF, f3_ddF;

  static OmegaTildeConstants standard(const SzegoParams& sp) {
    const int a = sp.a(), b = sp.b();
    return {Rational(a * b), Rational(-1), Rational(b + 1), Rational(a + 1), Rational(1)};
  }
  Rational& operator[](int k) {
    switch (k) {
      case 0: return f0_F;
      case 1: return f0_tdF;
      case 2: return f1_dF;
      case 3: return f2_dF;
      default: return f3_ddF;
    }
  }
};

struct OmegaTildeSeries {
  SeriesPoly f0, f1, f2, f3;
};

inline OmegaTildeSeries omega_tilde_series(const SzegoParams& sp, int order, const OmegaTildeConstants& c) {
  if (order < 2) throw std::invalid_argument("series order must be at least 2");
  const SeriesPoly F = hypergeom_series(sp.a(), sp.b(), order);
  const SeriesPoly dF = F.derivative();
  const SeriesPoly ddF = dF.derivative();
  return {c.f0_F * F + c.f0_tdF * dF.times_t(), c.f1_dF * dF, c.f2_dF * dF, c.f3_ddF * ddF};
}

/// f0 w + f1 tau ^ i_T w + f2 taubar ^ i_Tbar w + f3 tau ^ taubar ^ i_Tbar i_T w, t = |z|^2.
inline Form build_omega_tilde(const SzegoParams& sp, int order,
                              const std::optional<OmegaTildeConstants>& consts = std::nullopt) {
  const int n = sp.n;
  const Form w = build_seed(sp);
  const OmegaTildeSeries f = omega_tilde_series(sp, order, consts ? *consts : OmegaTildeConstants::standard(sp));
  Form out = f.f0.at_radius_sq(n) * w;
  out += f.f1.at_radius_sq(n) * wedge(tau(n), i_T(w));
  out += f.f2.at_radius_sq(n) * wedge(tau_bar(n), i_Tbar(w));
  out += f.f3.at_radius_sq(n) * wedge(wedge(tau(n), tau_bar(n)), i_Tbar(i_T(w)));
  out.set_domain(Domain::Ambient);
  return out;
}

/// Power of t carried by a term: (coefficient degree + form degree - (m+l+n)) / 2.
inline int t_order(const SzegoParams& sp, const Monomial& mono, WedgeWord word) {
  return (static_cast<int>(mono.degree()) + word.degree() - (sp.m + sp.l + sp.n)) / 2;
}

struct ClosednessCheck {
  bool closed = true;
  int checked_below = 0;      ///< orders 0 .. checked_below-1 were required to vanish
  std::string witness;        ///< first surviving term, empty when closed
};

/// d(omega~) vanishes in every t-order below order-1.
inline ClosednessCheck check_closed_to_order(const SzegoParams& sp, int order,
                                             const std::optional<OmegaTildeConstants>& consts = std::nullopt) {
  ClosednessCheck res;
  res.checked_below = order - 1;
  const Form dw = d(build_omega_tilde(sp, order, consts));
  for (const auto& [word, coef] : dw.terms())
    for (const auto& [mono, c] : coef.terms()) {
      const int k = t_order(sp, mono, word);
      if (k >= order - 1) continue;
      res.closed = false;
      res.witness = "t^" + std::to_string(k) + ": [" + c.str() + " " +
                    Poly::from_monomial(sp.n, mono, GaussRational(1)).str() + "] " + word.str();
      return res;
    }
  return res;
}

/// Lie derivative along the rotation field sum z_j d/dz_j - zbar_j d/dzbar_j, the tangential
/// field generating the circle action on S. Each term scales by
/// (holomorphic - antiholomorphic) degree, counting coefficients and differentials.
inline Form radial_field_action(const Form& w) {
  Form out(w.n(), w.domain());
  for (const auto& [word, coef] : w.terms())
    for (const auto& [mono, c] : coef.terms()) {
      const long k = static_cast<long>(mono.hol_degree()) - static_cast<long>(mono.anti_degree()) + word.p() - word.q();
      out.add_term(word, mono, c * GaussRational(k));
    }
  return out;
}

/// ((del_Q del_Q^* + sign (T+Tbar)_*) gamma, gamma) with sign = -1 for the Sobolev norm.
inline Rational sobolev_norm_sq(const SzegoParams& sp, int sign = -1) {
  sp.validate();
  const HwParams h = sp.gamma();
  const SphereForm g = hw_form(h);
  const QDegree deg{sp.p, sp.q};
  const SphereForm star = adjoint_apply(QOp::Del, g, deg, expected_weight(h));
  const SphereForm back = apply_q(QOp::Del, star, source_degree(QOp::Del, deg));
  const Form total = back.form() + radial_field_action(g.form()) * GaussRational(sign);
  return l2_inner(total, g.form()).re();
}

/// m! l! / (n)_{m+l+2} * b^2 (a+1)(b+1).
inline Rational szego_image_norm_sq(const SzegoParams& sp) {
  sp.validate();
  const int a = sp.a(), b = sp.b();
  return factorial(sp.m) * factorial(sp.l) / pochhammer(Rational(sp.n), sp.m + sp.l + 2) *
         Rational(b * b * (a + 1) * (b + 1));
}

struct Thm42Result {
  Rational sobolev;
  Rational image;
  bool equal() const { return sobolev == image; }
};

inline Thm42Result verify_thm42(const SzegoParams& sp) { return {sobolev_norm_sq(sp), szego_image_norm_sq(sp)}; }

struct ScalarSzegoResult {
  Poly image;                ///< S f
  Rational bergman_norm_sq;  ///< ||S f||^2, normalized volume on the ball
  Rational sphere_norm_sq;   ///< ||f||^2 on S
  Rational pairing;          ///< (-(T+Tbar)_* F, F) for the (n-1,0)-form F carried by f
  Rational ratio;            ///< bergman_norm_sq / pairing
  std::optional<Rational> euler_ratio;  ///< same with the Euler derivative on f alone
};

/// S f = sum_k (n+1)_k / k! * int_S <z,w>^k f(w) dsigma(w) for f = w_n^l, kernel cut at k <= K.
inline ScalarSzegoResult scalar_szego(int n, int l, int K) {
  if (n < 2 || n > kMaxDim) throw InvalidParams("n out of range");
  if (l < 0 || K < l) throw InvalidParams("need 0 <= l <= K");
  const Poly f = Poly::z(n, n - 1).pow(l);
  Poly image(n);
  // <z,w>^k = sum_{|alpha|=k} k!/alpha! z^alpha wbar^alpha.
  for (int k = 0; k <= K; ++k) {
    const Rational kernel = pochhammer(Rational(n + 1), k) / factorial(k);
    std::vector<int> alpha(n, 0);
    auto visit = [&](auto&& self, int j, int left) -> void {
      if (j == n - 1) {
        alpha[j] = left;
        Monomial zpow, wbar;
        Rational multinomial = factorial(k);
        for (int i = 0; i < n; ++i) {
          zpow.exps[i] = static_cast<std::uint8_t>(alpha[i]);
          wbar.exps[kMaxDim + i] = static_cast<std::uint8_t>(alpha[i]);
          multinomial /= factorial(alpha[i]);
        }
        GaussRational integral;
        for (const auto& [mono, c] : f.terms()) integral += c * GaussRational(sphere_monomial_integral(n, mono * wbar));
        if (!integral.is_zero())
          image.add_term(zpow, integral * GaussRational(kernel * multinomial));
        return;
      }
      for (int a = 0; a <= left; ++a) {
        alpha[j] = a;
        self(self, j + 1, left - a);
      }
    };
    visit(visit, 0, k);
  }
  ScalarSzegoResult r;
  r.image = image;
  r.bergman_norm_sq = ball_integral(image * image.conj()).re();
  r.sphere_norm_sq = sphere_integral(f * f.conj()).re();
  Form F(n);
  for (int j = 0; j < n; ++j) {
    Form piece = Form::scalar(f * Poly::z(n, j) * Poly(n, GaussRational(j % 2 == 0 ? 1 : -1)));
    for (int i = 0; i < n; ++i)
      if (i != j) piece = wedge(piece, Form::dz(n, i));
    F += piece;
  }
  r.pairing = -l2_inner(radial_field_action(F), F).re();
  r.ratio = r.bergman_norm_sq / r.pairing;
  if (l > 0) r.euler_ratio = r.bergman_norm_sq / (Rational(-l) * r.sphere_norm_sq);
  return r;
}

}  // namespace rumin
