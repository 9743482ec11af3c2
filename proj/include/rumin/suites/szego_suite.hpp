#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rumin/parallel.hpp"
#include "rumin/report.hpp"
#include "rumin/szego.hpp"

namespace rumin {

inline Json szego_params_json(const SzegoParams& sp) {
  return Json{{"n", sp.n}, {"p", sp.p}, {"q", sp.q}, {"m", sp.m}, {"l", sp.l}};
}

struct SzegoSweep {
  int n_lo = 2;
  int n_hi = 3;
  int maxM = 3;
  int maxL = 3;
  int order = 8;
  std::optional<int> p;  ///< restrict to one bidegree; q = n - p
};

inline std::vector<SzegoParams> szego_params(const SzegoSweep& s) {
  std::vector<SzegoParams> out;
  for (int n = s.n_lo; n <= s.n_hi; ++n)
    for (int p = 1; p < n; ++p) {
      if (s.p && *s.p != p) continue;
      for (int m = 0; m <= s.maxM; ++m)
        for (int l = 0; l <= s.maxL; ++l) out.push_back({n, p, n - p, m, l});
    }
  return out;
}

inline std::vector<CheckRecord> szego_checks(const SzegoParams& sp, int order,
                                             const std::optional<OmegaTildeConstants>& consts = std::nullopt) {
  std::vector<CheckRecord> out;
  const Thm42Result t = verify_thm42(sp);
  out.push_back(equality_check("Sobolev norm = Szego image norm", szego_params_json(sp), t.sobolev, t.image));
  const ClosednessCheck c = check_closed_to_order(sp, order, consts);
  Json params = szego_params_json(sp);
  params["order"] = order;
  CheckRecord r{"d(omega~) = 0 below t^" + std::to_string(c.checked_below), params,
                c.closed ? Status::Pass : Status::Fail, std::nullopt, std::nullopt, std::nullopt};
  if (!c.closed) r.witness = c.witness;
  out.push_back(std::move(r));
  return out;
}

inline Report szego_suite(const SzegoSweep& s) {
  Report rep;
  rep.suite = "szego";
  rep.params = Json{{"n", {s.n_lo, s.n_hi}}, {"mmax", s.maxM}, {"lmax", s.maxL}, {"order", s.order}};
  if (s.p) rep.params["p"] = *s.p;
  std::vector<std::function<std::vector<CheckRecord>()>> tasks;
  for (const auto& sp : szego_params(s)) tasks.push_back([sp, o = s.order] { return szego_checks(sp, o); });
  for (auto& chunk : run_ordered(tasks)) rep.checks.insert(rep.checks.end(), chunk.begin(), chunk.end());
  rep.notes.push_back("(T+Tbar)_* is the Lie derivative along sum z_j d/dz_j - zbar_j d/dzbar_j");
  rep.notes.push_back("omega~ uses the hypergeometric series truncated at the given order");
  return rep;
}

/// ||S f||^2 over (-(T+Tbar)_* F, F) for f = z_n^l, l = 0..maxL; constant iff the map is
/// a multiple of an isometry for that norm.
inline Report scalar_szego_suite(int n, int maxL) {
  Report rep;
  rep.suite = "szego-scalar";
  rep.params = Json{{"n", n}, {"lmax", maxL}};
  std::vector<std::function<ScalarSzegoResult()>> tasks;
  for (int l = 0; l <= maxL; ++l) tasks.push_back([n, l, maxL] { return scalar_szego(n, l, maxL); });
  const std::vector<ScalarSzegoResult> res = run_ordered(tasks);
  for (int l = 0; l <= maxL; ++l) {
    const ScalarSzegoResult& r = res[static_cast<std::size_t>(l)];
    CheckRecord c = equality_check("scalar Szego ratio", Json{{"n", n}, {"l", l}}, r.ratio, res.front().ratio);
    if (c.status == Status::Fail) c.witness = "ratio at l=" + std::to_string(l) + " is " + *c.computed;
    rep.checks.push_back(std::move(c));
    Json v{{"id", "scalar Szego norms"}, {"params", {{"n", n}, {"l", l}}},
           {"bergman", to_exact_string(r.bergman_norm_sq)}, {"sphere", to_exact_string(r.sphere_norm_sq)},
           {"pairing", to_exact_string(r.pairing)}};
    v["eulerRatio"] = r.euler_ratio ? Json(to_exact_string(*r.euler_ratio)) : Json(nullptr);
    rep.reported.push_back(std::move(v));
  }
  rep.notes.push_back("the pairing is taken on the (n-1,0)-form f sum_j (-1)^j z_j dz_1 ^ .. (omit j) .. ^ dz_n");
  rep.notes.push_back("eulerRatio divides by -l ||f||^2 instead and is listed for comparison only");
  return rep;
}

}  // namespace rumin
