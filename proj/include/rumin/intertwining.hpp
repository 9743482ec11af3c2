#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rumin/spectra.hpp"

namespace rumin {

enum class IntertwiningOp { Del, Dbar, DelStar, DbarStar };

inline const char* intertwining_op_name(IntertwiningOp op) {
  switch (op) {
    case IntertwiningOp::Del: return "del_Q";
    case IntertwiningOp::Dbar: return "dbar_Q";
    case IntertwiningOp::DelStar: return "del_Q*";
    case IntertwiningOp::DbarStar: return "dbar_Q*";
  }
  return "?";
}

/// One statement "A x = c y" between highest weight vectors. A zero statement has no
/// target. For the adjoint statements the coefficient multiplies the norm ratio
/// ||x||^2 / ||y||^2, which is measured.
struct IntertwiningDisplay {
  std::string name;
  Family source;
  IntertwiningOp op;
  std::optional<Family> target;
  int dp = 0;  ///< target p minus source p
  int dq = 0;  ///< target q minus source q
  std::function<Rational(const HwParams&)> coefficient;
};

/// del_Q passes the q-1 antiholomorphic factors that precede the holomorphic block.
inline int orientation_sign(const HwParams& h) { return (h.q - 1) % 2 == 0 ? 1 : -1; }

inline std::vector<IntertwiningDisplay> intertwining_displays() {
  using F = Family;
  using O = IntertwiningOp;
  auto zero = [](const HwParams&) { return Rational(0); };
  return {
      {"dbar alpha = 0", F::Alpha, O::Dbar, std::nullopt, 0, 0, zero},
      {"del alpha = 0", F::Alpha, O::Del, std::nullopt, 0, 0, zero},
      {"dbar beta = 0", F::Beta, O::Dbar, std::nullopt, 0, 0, zero},
      {"del beta = (l+p+1) alpha", F::Beta, O::Del, F::Alpha, 1, 0,
       [](const HwParams& h) { return Rational(orientation_sign(h) * (h.l + h.p + 1)); }},
      {"dbar gamma = (m+q) alpha", F::Gamma, O::Dbar, F::Alpha, 0, 1,
       [](const HwParams& h) { return Rational(h.m + h.q); }},
      {"del gamma = 0", F::Gamma, O::Del, std::nullopt, 0, 0, zero},
      {"dbar delta = (m+q) beta", F::Delta, O::Dbar, F::Beta, 0, 1,
       [](const HwParams& h) { return Rational(h.m + h.q); }},
      {"del delta = (l+p+1) gamma", F::Delta, O::Del, F::Gamma, 1, 0,
       [](const HwParams& h) { return Rational(orientation_sign(h) * (h.l + h.p + 1)); }},
      {"dbar* alpha = (m+q-1) r gamma", F::Alpha, O::DbarStar, F::Gamma, 0, -1,
       [](const HwParams& h) { return Rational(h.m + h.q - 1); }},
      {"del* alpha = (l+p) r beta", F::Alpha, O::DelStar, F::Beta, -1, 0,
       [](const HwParams& h) { return Rational(orientation_sign(h) * (h.l + h.p)); }},
      {"dbar* beta = (m+q-1) r delta", F::Beta, O::DbarStar, F::Delta, 0, -1,
       [](const HwParams& h) { return Rational(h.m + h.q - 1); }},
      {"del* beta = 0", F::Beta, O::DelStar, std::nullopt, 0, 0, zero},
      {"dbar* gamma = 0", F::Gamma, O::DbarStar, std::nullopt, 0, 0, zero},
      {"del* gamma = (l+p) r delta", F::Gamma, O::DelStar, F::Delta, -1, 0,
       [](const HwParams& h) { return Rational(orientation_sign(h) * (h.l + h.p)); }},
      {"dbar* delta = 0", F::Delta, O::DbarStar, std::nullopt, 0, 0, zero},
      {"del* delta = 0", F::Delta, O::DelStar, std::nullopt, 0, 0, zero},
  };
}

struct IntertwiningRecord {
  std::string display;
  IntertwiningOp op;
  HwParams source;
  std::optional<HwParams> target;
  Rational constant;       ///< predicted c in A x = c y
  Rational residual;       ///< ||A x - c y||^2
  std::optional<Rational> measured;  ///< c' with A x = c' y exactly, when it exists
  bool pass() const { return sgn(residual) == 0; }
};

inline SphereForm apply_intertwining(IntertwiningOp op, const SphereForm& x, const HwParams& h) {
  const QDegree deg{h.p, h.q};
  switch (op) {
    case IntertwiningOp::Del: return apply_q(QOp::Del, x, deg);
    case IntertwiningOp::Dbar: return apply_q(QOp::Dbar, x, deg);
    case IntertwiningOp::DelStar: return adjoint_apply(QOp::Del, x, deg, expected_weight(h));
    case IntertwiningOp::DbarStar: return adjoint_apply(QOp::Dbar, x, deg, expected_weight(h));
  }
  return x;
}

/// Evaluates one display at one source; absent when the statement does not apply there
/// (a form in it is not constructed, or the target degree lies outside the complex).
inline std::optional<IntertwiningRecord> check_display(const IntertwiningDisplay& d, HwParams src) {
  src.family = d.source;
  if (!src.constructible()) return std::nullopt;
  const bool adjoint = d.op == IntertwiningOp::DelStar || d.op == IntertwiningOp::DbarStar;
  std::optional<HwParams> tgt;
  if (d.target) {
    HwParams t = src;
    t.family = *d.target;
    t.p += d.dp;
    t.q += d.dq;
    if (!t.constructible()) return std::nullopt;
    tgt = t;
  } else if (adjoint && src.q - (d.op == IntertwiningOp::DbarStar ? 1 : 0) < 1) {
    return std::nullopt;
  }
  const SphereForm x = hw_form(src);
  const SphereForm ax = apply_intertwining(d.op, x, src);
  IntertwiningRecord rec{d.name, d.op, src, tgt, d.coefficient(src), Rational(0), std::nullopt};
  Form diff = ax.form();
  if (tgt) {
    const SphereForm y = hw_form(*tgt);
    Rational c = rec.constant;
    if (adjoint) c *= l2_norm_sq(x.form()) / l2_norm_sq(y.form());
    rec.constant = c;
    diff = diff - y.form() * GaussRational(c);
    try {
      rec.measured = proportionality(ax, y);
    } catch (const NotProportional&) {
    }
  }
  rec.residual = l2_norm_sq(reduce_mod_sphere(diff));
  return rec;
}

/// Every applicable display for p, q >= 1, p+q <= n, m <= maxM, l <= maxL.
inline std::vector<IntertwiningRecord> intertwining_sweep(
    int n, int maxM, int maxL, const std::vector<IntertwiningDisplay>& displays = intertwining_displays()) {
  std::vector<IntertwiningRecord> out;
  for (const auto& d : displays)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; p + q <= n; ++q)
        for (int m = 0; m <= maxM; ++m)
          for (int l = 0; l <= maxL; ++l)
            if (auto r = check_display(d, HwParams{n, p, q, m, l, d.source})) out.push_back(*r);
  return out;
}

struct SpectrumRow {
  HwParams params;
  Laplacian kind;
  Rational computed;
  std::optional<Rational> printed;
  bool match = false;
  bool duplicate = false;      ///< the form also labels another summand (q = 1, alpha/beta, m >= 1)
  bool hodge = false;          ///< (Lap x, x) = ||A x||^2 + ||A^* x||^2
  bool eigenvector = false;    ///< Lap x is exactly a multiple of x
};

inline SpectrumRow spectrum_row(Laplacian kind, const HwParams& h) {
  const EigenComputation e = laplacian_compute(kind, h);
  SpectrumRow row{h, kind, e.eigenvalue, printed_eigenvalue(kind, h)};
  row.eigenvector = e.eigen_residual_zero;
  row.match = row.printed && *row.printed == row.computed;
  row.duplicate = !h.occurs();
  row.hodge = e.pairing == e.forward_norm_sq + e.adjoint_norm_sq;
  return row;
}

/// Rows sorted by (family, p, q, m, l), box before triangle.
inline std::vector<SpectrumRow> spectrum_table(int n, int maxM, int maxL) {
  if (n < 2) throw InvalidParams("n must be at least 2");
  std::vector<SpectrumRow> rows;
  for (Family f : kFamilies)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; p + q <= n; ++q)
        for (int m = 0; m <= maxM; ++m)
          for (int l = 0; l <= maxL; ++l) {
            const HwParams h{n, p, q, m, l, f};
            if (!h.in_rumin_space()) continue;
            for (Laplacian k : {Laplacian::Box, Laplacian::Triangle}) rows.push_back(spectrum_row(k, h));
          }
  return rows;
}

}  // namespace rumin
