#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rumin/intertwining.hpp"
#include "rumin/parallel.hpp"
#include "rumin/report.hpp"

namespace rumin {

inline Json hw_params_json(const HwParams& h) {
  return Json{{"family", family_name(h.family)}, {"n", h.n}, {"p", h.p}, {"q", h.q}, {"m", h.m}, {"l", h.l}};
}

/// Table entries whose printed eigenvalue is a known misprint.
struct TypoAllowlist {
  struct Entry {
    Family family;
    Laplacian kind;
    std::string printed;
  };
  std::vector<Entry> entries;

  bool contains(Family f, Laplacian k) const {
    for (const auto& e : entries)
      if (e.family == f && e.kind == k) return true;
    return false;
  }

  static TypoAllowlist from_json(const Json& j) {
    TypoAllowlist a;
    for (const auto& e : j.at("entries")) {
      const std::string fam = e.at("family"), lap = e.at("laplacian");
      Entry out{Family::Alpha, Laplacian::Box, e.value("printed", "")};
      bool found = false;
      for (Family f : kFamilies)
        if (fam == family_name(f)) out.family = f, found = true;
      if (!found) throw std::invalid_argument("allowlist: unknown family " + fam);
      if (lap == "box") out.kind = Laplacian::Box;
      else if (lap == "triangle") out.kind = Laplacian::Triangle;
      else throw std::invalid_argument("allowlist: unknown laplacian " + lap);
      a.entries.push_back(out);
    }
    return a;
  }

  static TypoAllowlist load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open allowlist " + path);
    return from_json(Json::parse(in));
  }
};

template <class F>
void for_each_hw(int n, int maxM, int maxL, F&& f) {
  for (Family fam : kFamilies)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; p + q <= n; ++q)
        for (int m = 0; m <= maxM; ++m)
          for (int l = 0; l <= maxL; ++l) {
            const HwParams h{n, p, q, m, l, fam};
            if (h.in_rumin_space()) f(h);
          }
}

// ---------------------------------------------------------------------------
// Highest weight forms

inline CheckRecord hw_check(const HwParams& h) {
  CheckRecord r{std::string("hw ") + family_name(h.family), hw_params_json(h), Status::Pass, std::nullopt,
                expected_weight(h).str(), std::nullopt};
  const SphereForm x = hw_form(h);
  std::vector<std::string> bad;
  if (x.is_zero()) {
    bad.push_back("zero on S");
  } else {
    if (!x.in_Q()) bad.push_back("not in Q");
    try {
      const Weight w = weight_of(x.form());
      r.computed = w.str();
      if (!(w == expected_weight(h))) bad.push_back("weight " + w.str());
    } catch (const NotWeightVector& e) {
      bad.push_back(e.what());
    }
    if (!is_highest_weight(x.form())) bad.push_back("not annihilated by raising operators");
  }
  if (!bad.empty()) {
    r.status = Status::Fail;
    std::string w;
    for (const auto& b : bad) w += (w.empty() ? "" : "; ") + b;
    r.witness = w + "; form " + x.form().str();
  }
  return r;
}

inline Report hw_suite(int n_lo, int n_hi, int maxM, int maxL) {
  Report rep;
  rep.suite = "hw";
  rep.params = Json{{"n", {n_lo, n_hi}}, {"mmax", maxM}, {"lmax", maxL}};
  std::vector<std::function<CheckRecord()>> tasks;
  for (int n = n_lo; n <= n_hi; ++n)
    for_each_hw(n, maxM, maxL, [&](const HwParams& h) { tasks.push_back([h] { return hw_check(h); }); });
  rep.checks = run_ordered(tasks);
  rep.notes.push_back("delta is absent in the middle degree p+q = n and is not swept there");
  return rep;
}

// ---------------------------------------------------------------------------
// Norms

inline Report norm_suite(int n, int maxM, int maxL) {
  Report rep;
  rep.suite = "norms";
  rep.params = Json{{"n", n}, {"mmax", maxM}, {"lmax", maxL}};
  std::vector<HwParams> hs;
  for_each_hw(n, maxM, maxL, [&](const HwParams& h) { hs.push_back(h); });
  std::vector<std::function<Rational()>> tasks;
  for (const auto& h : hs) tasks.push_back([h] { return l2_norm_sq(hw_form(h).form()); });
  const std::vector<Rational> norms = run_ordered(tasks);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    Json params = hw_params_json(hs[i]);
    params["shared"] = !hs[i].occurs();
    const std::string id = std::string("norm ") + family_name(hs[i].family);
    try {
      rep.checks.push_back(equality_check(id, params, norms[i], norm_sq_closed(hs[i])));
    } catch (const FormulaUnavailable&) {
      rep.reported.push_back({{"id", id}, {"params", params}, {"computedValue", to_exact_string(norms[i])}});
    }
  }
  rep.notes.push_back("shared = true marks q = 1 alpha/beta forms that coincide with a gamma/delta form of parameter m-1");
  return rep;
}

// ---------------------------------------------------------------------------
// Intertwining constants

inline CheckRecord intertwining_check(const IntertwiningRecord& r) {
  Json params = hw_params_json(r.source);
  if (r.target) params["target"] = hw_params_json(*r.target);
  CheckRecord c{r.display, params, r.pass() ? Status::Pass : Status::Fail,
                r.measured ? std::optional<std::string>(to_exact_string(*r.measured)) : std::nullopt,
                to_exact_string(r.constant), std::nullopt};
  if (!r.pass()) c.witness = "||A x - c y||^2 = " + to_exact_string(r.residual);
  return c;
}

inline Report intertwining_suite(int n_lo, int n_hi, int maxM, int maxL,
                                 const std::vector<IntertwiningDisplay>& displays = intertwining_displays()) {
  Report rep;
  rep.suite = "intertwining";
  rep.params = Json{{"n", {n_lo, n_hi}}, {"mmax", maxM}, {"lmax", maxL}};
  std::vector<std::function<std::vector<IntertwiningRecord>()>> tasks;
  for (int n = n_lo; n <= n_hi; ++n)
    for (const auto& d : displays)
      tasks.push_back([n, maxM, maxL, d] { return intertwining_sweep(n, maxM, maxL, {d}); });
  for (const auto& chunk : run_ordered(tasks))
    for (const auto& r : chunk) rep.checks.push_back(intertwining_check(r));
  rep.notes.push_back("adjoint constants are stated for unit vectors and rescaled by ||x||^2/||y||^2");
  rep.notes.push_back("del and del^* constants carry (-1)^(q-1) from the ordering of differentials in degree (p, q-1)");
  return rep;
}

// ---------------------------------------------------------------------------
// Spectra

inline CheckRecord spectrum_check(const SpectrumRow& row, const TypoAllowlist& allow) {
  Json params = hw_params_json(row.params);
  params["shared"] = row.duplicate;
  CheckRecord c{std::string(family_name(row.params.family)) + " " + laplacian_name(row.kind), params, Status::Pass,
                to_exact_string(row.computed),
                row.printed ? std::optional<std::string>(to_exact_string(*row.printed)) : std::nullopt, std::nullopt};
  if (!row.match) {
    c.status = allow.contains(row.params.family, row.kind) ? Status::SuspectedTypo : Status::Fail;
    c.witness = "computed " + *c.computed + " != printed " + *c.reference;
  }
  return c;
}

inline std::string spectrum_markdown(int n, const std::vector<SpectrumRow>& rows) {
  std::ostringstream os;
  auto cell = [](const SpectrumRow* r) -> std::string {
    if (!r) return "";
    std::string s = to_exact_string(r->computed);
    if (r->printed && !r->match) s += " (printed " + to_exact_string(*r->printed) + ")";
    return s;
  };
  for (Family f : kFamilies) {
    std::map<std::array<int, 4>, std::pair<const SpectrumRow*, const SpectrumRow*>> byKey;
    for (const auto& r : rows)
      if (r.params.family == f) {
        auto& slot = byKey[{r.params.p, r.params.q, r.params.m, r.params.l}];
        (r.kind == Laplacian::Box ? slot.first : slot.second) = &r;
      }
    if (byKey.empty()) continue;
    os << "## " << family_name(f) << ", n = " << n << "\n\n| p | q | m | l | box | triangle |\n|---|---|---|---|---|---|\n";
    for (const auto& [k, v] : byKey)
      os << "| " << k[0] << " | " << k[1] << " | " << k[2] << " | " << k[3] << " | " << cell(v.first) << " | "
         << cell(v.second) << " |\n";
    os << "\n";
  }
  return os.str();
}

/// Eigenvalues of box and triangle on every highest weight form of the sweep.
inline Report spectrum_suite(int n, int maxM, int maxL, const TypoAllowlist& allow) {
  Report rep;
  rep.suite = "spectra";
  rep.params = Json{{"n", n}, {"mmax", maxM}, {"lmax", maxL}};
  std::vector<std::function<SpectrumRow()>> tasks;
  for_each_hw(n, maxM, maxL, [&](const HwParams& h) {
    for (Laplacian k : {Laplacian::Box, Laplacian::Triangle}) tasks.push_back([h, k] { return spectrum_row(k, h); });
  });
  const std::vector<SpectrumRow> rows = run_ordered(tasks);
  std::map<std::pair<int, int>, CheckRecord> invariants;
  for (const auto& row : rows) {
    if (row.printed) {
      rep.checks.push_back(spectrum_check(row, allow));
    } else {
      Json params = hw_params_json(row.params);
      params["laplacian"] = laplacian_name(row.kind);
      rep.reported.push_back({{"id", std::string(family_name(row.params.family)) + " " + laplacian_name(row.kind)},
                              {"params", params},
                              {"computedValue", to_exact_string(row.computed)}});
    }
    for (int which = 0; which < 2; ++which) {
      const std::pair<int, int> key{static_cast<int>(row.params.family) * 2 + static_cast<int>(row.kind), which};
      auto it = invariants.find(key);
      if (it == invariants.end()) {
        const std::string what = which == 0 ? "Hodge identity " : "eigenvector ";
        CheckRecord r{what + family_name(row.params.family) + " " + laplacian_name(row.kind),
                      Json{{"n", n}, {"mmax", maxM}, {"lmax", maxL}}, Status::Pass, std::nullopt, std::nullopt,
                      std::nullopt};
        it = invariants.emplace(key, r).first;
      }
      const bool ok = which == 0 ? row.hodge : row.eigenvector;
      if (!ok && it->second.status == Status::Pass) {
        it->second.status = Status::Fail;
        it->second.witness = row.params.str();
      }
    }
  }
  for (auto& [k, r] : invariants) rep.checks.push_back(std::move(r));
  rep.appendix_md = spectrum_markdown(n, rows);
  rep.notes.push_back("box = dbar_Q^* dbar_Q + dbar_Q dbar_Q^*, triangle = del_Q^* del_Q + del_Q del_Q^*");
  rep.notes.push_back("in the middle degree the maps into the next degree are taken to be zero");
  rep.notes.push_back("shared = true marks q = 1 alpha/beta forms that coincide with a gamma/delta form of parameter m-1");
  return rep;
}

}  // namespace rumin
