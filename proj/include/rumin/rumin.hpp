#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rumin/exterior.hpp"

namespace rumin {

struct DegreeOutOfRange : std::runtime_error {
  DegreeOutOfRange(int n, int p, int q)
      : std::runtime_error("bidegree (" + std::to_string(p) + "," + std::to_string(q - 1) +
                           ") needs p+q <= n = " + std::to_string(n)) {}
};

/// A form whose coefficients are all in sphere normal form.
class SphereForm {
 public:
  SphereForm() = default;
  explicit SphereForm(const Form& w) : form_(reduce_mod_sphere(w)) {}

  const Form& form() const { return form_; }
  int n() const { return form_.n(); }
  bool is_zero() const { return form_.is_zero(); }

  /// i_T, i_Tbar and i_E all vanish on S.
  bool in_Q() const {
    return reduce_mod_sphere(i_T(form_)).is_zero() && reduce_mod_sphere(i_Tbar(form_)).is_zero() &&
           reduce_mod_sphere(i_E(form_)).is_zero();
  }

  friend bool operator==(const SphereForm& a, const SphereForm& b) { return a.form_ == b.form_; }

 private:
  Form form_;
};

/// P_Q(w) together with multipliers certifying
///   w = P_Q(w) + tau ^ tau_mult + taubar ^ taubar_mult + theta ^ theta_mult  (mod |z|^2 - 1).
struct Projection {
  SphereForm q_part;
  Form tau_mult;
  Form taubar_mult;
  Form theta_mult;
};

namespace detail {

/// Lefschetz components of a horizontal sphere form h of total degree k with respect
/// to L = L_theta, Lambda = i_E on the (n-1)-dimensional horizontal space:
/// h = sum_r theta^r ^ comps[r], each comps[r] primitive.
inline std::vector<Form> lefschetz_components(const Form& h, int k) {
  const int n = h.n();
  const int horiz_dim = n - 1;
  const Form lam = reduce_mod_sphere(i_E(h));
  if (lam.is_zero()) return {h};

  // Lambda L^r w_r = r (N - k + r + 1) L^{r-1} w_r for primitive w_r of degree k - 2r.
  const std::vector<Form> lower = lefschetz_components(lam, k - 2);
  std::vector<Form> comps(lower.size() + 1, Form(n, Domain::Sphere));
  const Form th = reduce_mod_sphere(theta(n));
  Form rest = h;
  for (std::size_t s = 0; s < lower.size(); ++s) {
    if (lower[s].is_zero()) continue;
    const long r = static_cast<long>(s) + 1;
    const long factor = r * (horiz_dim - k + r + 1);
    if (factor <= 0) throw std::logic_error("Lefschetz recursion hit a vanishing sl2 factor");
    comps[s + 1] = lower[s] * GaussRational(Rational(1, factor));
    Form lifted = comps[s + 1];
    for (long i = 0; i < r; ++i) lifted = reduce_mod_sphere(wedge(th, lifted));
    rest -= lifted;
  }
  comps[0] = reduce_mod_sphere(rest);
  return comps;
}

}  // namespace detail

/// The largest p + q - 1 for which the Rumin space of bidegree (p, q-1) is used.
inline void require_q_range(int n, int p, int q) {
  if (p < 0 || q < 1 || p + q > n) throw DegreeOutOfRange(n, p, q);
}

/// Orthogonal projection onto Ker i_T ∩ Ker i_Tbar ∩ Ker i_E on S, with ideal witnesses.
/// Input must be homogeneous of bidegree (p, q-1) with p + q <= n.
inline Projection project_Q_with_witness(const Form& w) {
  const int n = w.n();
  Projection out;
  out.tau_mult = Form(n, Domain::Sphere);
  out.taubar_mult = Form(n, Domain::Sphere);
  out.theta_mult = Form(n, Domain::Sphere);
  if (w.is_zero()) {
    out.q_part = SphereForm(Form(n));
    return out;
  }
  if (!w.is_homogeneous()) throw std::invalid_argument("project_Q: form is not bi-homogeneous");
  const auto [p, qm1] = w.bidegree();
  require_q_range(n, p, qm1 + 1);

  const Form w0 = reduce_mod_sphere(w);
  // Horizontal part: (1 - L_taubar i_Tbar)(1 - L_tau i_T) w.
  out.tau_mult = reduce_mod_sphere(i_T(w0));
  const Form h1 = reduce_mod_sphere(w0 - wedge(tau(n), out.tau_mult));
  out.taubar_mult = reduce_mod_sphere(i_Tbar(h1));
  const Form h = reduce_mod_sphere(h1 - wedge(tau_bar(n), out.taubar_mult));

  const std::vector<Form> comps = detail::lefschetz_components(h, p + qm1);
  const Form th = reduce_mod_sphere(theta(n));
  // theta_mult = sum_{r>=1} theta^{r-1} ^ comps[r]
  Form rho(n, Domain::Sphere);
  for (std::size_t r = comps.size(); r-- > 1;) rho = reduce_mod_sphere(wedge(th, rho) + comps[r]);
  out.theta_mult = rho;
  out.q_part = SphereForm(comps[0]);
  return out;
}

inline SphereForm project_Q(const Form& w) { return project_Q_with_witness(w).q_part; }

/// dbar followed by projection. The target bidegree must still satisfy p + q <= n.
inline SphereForm dbar_Q(const SphereForm& w) { return project_Q(dbar(w.form())); }
inline SphereForm del_Q(const SphereForm& w) { return project_Q(del(w.form())); }

struct C23Decomposition {
  SphereForm q_part;
  Form tau_span;    ///< in L_tau Omega + L_taubar Omega
  Form theta_part;  ///< in L_theta Omega
};

/// Omega^{p,q-1} = Q ⊕ (L_tau Omega + L_taubar Omega) ⊕ L_theta Omega on S.
inline C23Decomposition decompose_c23(const Form& w) {
  const int n = w.n();
  Projection pr = project_Q_with_witness(w);
  C23Decomposition out;
  out.q_part = pr.q_part;
  out.tau_span =
      reduce_mod_sphere(wedge(tau(n), pr.tau_mult) + wedge(tau_bar(n), pr.taubar_mult));
  out.theta_part = reduce_mod_sphere(wedge(theta(n), pr.theta_mult));
  return out;
}

}  // namespace rumin
