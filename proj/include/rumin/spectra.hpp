#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rumin/isotypic.hpp"

namespace rumin {

enum class QOp { Del, Dbar };
enum class Laplacian { Box, Triangle };

inline const char* qop_name(QOp op) { return op == QOp::Del ? "del_Q" : "dbar_Q"; }
inline const char* laplacian_name(Laplacian k) { return k == Laplacian::Box ? "box" : "triangle"; }

struct NotProportional : std::runtime_error {
  NotProportional(const std::string& what, Form res)
      : std::runtime_error(what), residual(std::move(res)) {}
  Form residual;
};

/// Bidegree of the Rumin space holding a form, as (p, q) with the form in Q^{p,q-1}.
struct QDegree {
  int p;
  int q;
  bool exists(int n) const { return p >= 0 && q >= 1 && p + q <= n; }
};

inline QDegree target_degree(QOp op, QDegree d) {
  return op == QOp::Dbar ? QDegree{d.p, d.q + 1} : QDegree{d.p + 1, d.q};
}
inline QDegree source_degree(QOp op, QDegree d) {
  return op == QOp::Dbar ? QDegree{d.p, d.q - 1} : QDegree{d.p - 1, d.q};
}

/// del_Q / dbar_Q on a form of Q^{p,q-1}. The Rumin space above the middle degree
/// is trivial, so the result is zero there.
inline SphereForm apply_q(QOp op, const SphereForm& x, QDegree deg) {
  if (!target_degree(op, deg).exists(x.n())) return SphereForm(Form(x.n()));
  return op == QOp::Dbar ? dbar_Q(x) : del_Q(x);
}

namespace detail {

/// Solves G c = b exactly; G is Hermitian positive definite.
inline std::vector<GaussRational> solve(std::vector<std::vector<GaussRational>> g,
                                        std::vector<GaussRational> b) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && g[piv][c].is_zero()) ++piv;
    if (piv == k) throw std::logic_error("singular Gram matrix");
    std::swap(g[c], g[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || g[r][c].is_zero()) continue;
      const GaussRational f = g[r][c] / g[c][c];
      for (std::size_t j = c; j < k; ++j) g[r][j] -= f * g[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < k; ++c) b[c] /= g[c][c];
  return b;
}

}  // namespace detail

/// Highest weight vectors of Q^{p,q-1} with a given weight, from the four families,
/// with zero and linearly dependent members removed.
inline std::vector<SphereForm> hw_candidates(int n, QDegree deg, const Weight& w) {
  std::vector<SphereForm> out;
  if (!deg.exists(n)) return out;
  for (Family f : kFamilies) {
    HwParams h{n, deg.p, deg.q, 0, 0, f};
    const auto [r, s] = h.label();
    h.m = w.coords[0] - (r >= 1 ? 1 : 0) + (s >= n ? 1 : 0);
    h.l = -w.coords[n - 1] - (s >= 1 ? 1 : 0) + (r >= n ? 1 : 0);
    if (h.m < 0 || h.l < 0 || !h.in_rumin_space()) continue;
    if (expected_weight(h) != w) continue;
    SphereForm y = hw_form(h);
    if (y.is_zero() || !y.in_Q()) continue;
    // Keep y only if it enlarges the span (Gram determinant test by elimination).
    std::vector<SphereForm> trial = out;
    trial.push_back(y);
    std::vector<std::vector<GaussRational>> g(trial.size(), std::vector<GaussRational>(trial.size()));
    for (std::size_t i = 0; i < trial.size(); ++i)
      for (std::size_t j = 0; j < trial.size(); ++j) g[i][j] = l2_inner(trial[j].form(), trial[i].form());
    try {
      detail::solve(g, std::vector<GaussRational>(trial.size()));
      out.push_back(y);
    } catch (const std::logic_error&) {
    }
  }
  return out;
}

/// A^* u for u a highest weight vector of weight w in Q^{deg}, computed only from forward
/// applications of A and exact L^2 pairings against the highest weight vectors of the
/// same weight one degree lower.
inline SphereForm adjoint_apply(QOp op, const SphereForm& u, QDegree deg, const Weight& w) {
  const int n = u.n();
  const QDegree lower = source_degree(op, deg);
  const std::vector<SphereForm> ys = hw_candidates(n, lower, w);
  if (ys.empty() || u.is_zero()) return SphereForm(Form(n));
  std::vector<std::vector<GaussRational>> g(ys.size(), std::vector<GaussRational>(ys.size()));
  std::vector<GaussRational> b(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) g[i][j] = l2_inner(ys[j].form(), ys[i].form());
    b[i] = l2_inner(u.form(), apply_q(op, ys[i], lower).form());
  }
  const std::vector<GaussRational> c = detail::solve(g, b);
  Form acc(n, Domain::Sphere);
  for (std::size_t i = 0; i < ys.size(); ++i) acc += ys[i].form() * c[i];
  return SphereForm(acc);
}

/// c with A x = c y exactly; throws NotProportional carrying the residual otherwise.
inline Rational proportionality(const SphereForm& ax, const SphereForm& y) {
  const Rational yy = l2_norm_sq(y.form());
  if (sgn(yy) == 0) throw std::invalid_argument("proportionality: zero target");
  const GaussRational c = l2_inner(ax.form(), y.form()) / GaussRational(yy);
  const Form res = reduce_mod_sphere(ax.form() - y.form() * c);
  if (!res.is_zero() || !c.is_real()) throw NotProportional("forms are not proportional", res);
  return c.re();
}

/// Everything computed for one highest weight vector under one Laplacian.
struct EigenComputation {
  Rational eigenvalue;
  Rational forward_norm_sq;  ///< ||A x||^2
  Rational adjoint_norm_sq;  ///< ||A^* x||^2
  Rational x_norm_sq;
  Rational pairing;          ///< (Lap x, x)
  bool eigen_residual_zero = false;
};

/// Lap x = A^* A x + A A^* x with A = dbar_Q (box) or del_Q (triangle).
inline EigenComputation laplacian_compute(Laplacian kind, const HwParams& hp) {
  if (hp.p < 1 || hp.q < 1 || hp.p + hp.q > hp.n) throw InvalidParams("need p, q >= 1 and p+q <= n");
  if (!hp.in_rumin_space()) throw InvalidParams("form is not in the Rumin complex");
  const QOp op = kind == Laplacian::Box ? QOp::Dbar : QOp::Del;
  const QDegree deg{hp.p, hp.q};
  const SphereForm x = hw_form(hp);
  const Weight w = expected_weight(hp);
  const SphereForm ax = apply_q(op, x, deg);
  const SphereForm astar_x = adjoint_apply(op, x, deg, w);
  const SphereForm upper = adjoint_apply(op, ax, target_degree(op, deg), w);
  const SphereForm lower = apply_q(op, astar_x, source_degree(op, deg));
  const Form lap = reduce_mod_sphere(upper.form() + lower.form());

  EigenComputation out;
  out.x_norm_sq = l2_norm_sq(x.form());
  out.forward_norm_sq = l2_norm_sq(ax.form());
  out.adjoint_norm_sq = l2_norm_sq(astar_x.form());
  out.pairing = l2_inner(lap, x.form()).re();
  out.eigenvalue = out.pairing / out.x_norm_sq;
  out.eigen_residual_zero = reduce_mod_sphere(lap - x.form() * GaussRational(out.eigenvalue)).is_zero();
  return out;
}

inline Rational laplacian_eigen(Laplacian kind, const HwParams& hp) {
  const EigenComputation e = laplacian_compute(kind, hp);
  if (!e.eigen_residual_zero) throw NotProportional("highest weight vector is not an eigenvector", Form());
  return e.eigenvalue;
}

/// Closed-form reference eigenvalue, absent where none is listed for the component.
inline std::optional<Rational> printed_eigenvalue(Laplacian kind, const HwParams& h) {
  const int n = h.n, p = h.p, q = h.q, m = h.m, l = h.l;
  const bool interior = p + q < n;
  if (kind == Laplacian::Box) {
    switch (h.family) {
      case Family::Alpha:
        if (!interior) return std::nullopt;
        return frac(m + q - 1, m + n - p + 1) * alpha_bracket(h);
      case Family::Beta: return Rational((m + q - 1) * (l + n - q + 2));
      case Family::Gamma:
        if (!interior) return std::nullopt;
        return Rational((m + q - 1) * (l + n - q + 1));
      case Family::Delta:
        if (!interior) return std::nullopt;
        return Rational((m + q) * (l + n - q + 1));
    }
  } else {
    switch (h.family) {
      case Family::Alpha:
        if (!interior) return std::nullopt;
        return frac(l + p, l + n - q) * alpha_bracket(h);
      case Family::Beta:
        if (!interior) return std::nullopt;
        return Rational((l + p) * (m + n - p + 1));
      case Family::Gamma: return Rational((l + p) * (m + l - p + 1));
      case Family::Delta:
        if (!interior) return std::nullopt;
        return Rational((l + p) * (m + n - p + 1));
    }
  }
  return std::nullopt;
}

}  // namespace rumin
