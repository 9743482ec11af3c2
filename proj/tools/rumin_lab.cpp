// rumin_lab: batch verification driver.
//
//   rumin_lab verify identities --n 2..4 --seed 7 --cases 100
//   rumin_lab verify hw --n 3..4 --mmax 3 --lmax 3
//   rumin_lab spectra --n 3 --mmax 3 --lmax 3 --format md
//   rumin_lab szego --n 2 --mmax 2 --lmax 2 --order 8
//   rumin_lab szego --scalar --n 2 --lmax 5
//   rumin_lab selftest
//
// Exit status: 0 when no check fails, 1 on a failing check, 2 on bad usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "rumin/suites/identities.hpp"
#include "rumin/suites/spectral.hpp"
#include "rumin/suites/szego_suite.hpp"

#ifndef RUMIN_LAB_DATA_DIR
#define RUMIN_LAB_DATA_DIR "data"
#endif

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NRange {
  int lo, hi;
};

NRange parse_range(const std::string& s) {
  static const std::regex re(R"((\d+)(?:\.\.(\d+))?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw UsageError("--n expects N or A..B, got '" + s + "'");
  NRange r{std::stoi(m[1]), m[2].matched ? std::stoi(m[2]) : std::stoi(m[1])};
  if (r.lo < 2) throw UsageError("--n must be at least 2 (the sphere S^{2n-1} needs n > 1)");
  if (r.hi > rumin::kMaxDim) throw UsageError("--n must be at most " + std::to_string(rumin::kMaxDim));
  if (r.lo > r.hi) throw UsageError("--n range is empty");
  return r;
}

struct Options {
  std::string n;
  int mmax = 3;
  int lmax = 3;
  std::uint64_t seed = 7;
  int cases = 100;
  int order = 8;
  std::string format = "json";
  std::string out;
  std::string allowlist = std::string(RUMIN_LAB_DATA_DIR) + "/suspected_typos.json";
  std::optional<int> p, q;
  bool scalar = false;
};

void add_output(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app->add_option("--out", o.out, "write the report here instead of stdout");
}

void add_common(CLI::App* app, Options& o, const std::string& default_n) {
  app->add_option("--n", o.n, "dimension N or range A..B (default " + default_n + ")");
  add_output(app, o);
}

void add_sweep(CLI::App* app, Options& o) {
  app->add_option("--mmax", o.mmax, "largest m")->check(CLI::Range(0, 12))->capture_default_str();
  app->add_option("--lmax", o.lmax, "largest l")->check(CLI::Range(0, 12))->capture_default_str();
}

void emit(const rumin::Report& rep, const Options& o) {
  std::string text;
  if (o.format == "csv") text = rep.to_csv();
  else if (o.format == "md") text = rep.to_markdown();
  else text = rep.to_json().dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

rumin::Report run_identities(const Options& o) {
  const NRange r = parse_range(o.n);
  if (o.cases < 0) throw UsageError("--cases must be non-negative");
  return rumin::identity_suite(r.lo, r.hi, o.cases, o.seed);
}

rumin::Report run_hw(const Options& o) {
  const NRange r = parse_range(o.n);
  rumin::Report rep = rumin::hw_suite(r.lo, r.hi, o.mmax, o.lmax);
  rep.append(rumin::intertwining_suite(r.lo, r.hi, o.mmax, o.lmax));
  rep.suite = "hw";
  return rep;
}

rumin::Report run_spectra(const Options& o) {
  const NRange r = parse_range(o.n);
  const rumin::TypoAllowlist allow = rumin::TypoAllowlist::load(o.allowlist);
  rumin::Report rep;
  rep.suite = "spectra";
  rep.params = rumin::Json{{"n", {r.lo, r.hi}}, {"mmax", o.mmax}, {"lmax", o.lmax}};
  for (int n = r.lo; n <= r.hi; ++n) {
    rep.append(rumin::norm_suite(n, o.mmax, o.lmax));
    rep.append(rumin::spectrum_suite(n, o.mmax, o.lmax, allow));
  }
  return rep;
}

rumin::Report run_szego(const Options& o) {
  const NRange r = parse_range(o.n);
  if (o.scalar) {
    if (r.lo != r.hi) throw UsageError("--scalar takes a single --n");
    return rumin::scalar_szego_suite(r.lo, o.lmax);
  }
  if (o.order < 2) throw UsageError("--order must be at least 2");
  rumin::SzegoSweep s{r.lo, r.hi, o.mmax, o.lmax, o.order, std::nullopt};
  if (o.p || o.q) {
    if (r.lo != r.hi) throw UsageError("--p/--q need a single --n");
    const int p = o.p ? *o.p : r.lo - *o.q;
    const int q = o.q ? *o.q : r.lo - *o.p;
    if (p < 1 || q < 1 || p + q != r.lo) throw UsageError("--p and --q must be positive with p+q = n");
    s.p = p;
  }
  return rumin::szego_suite(s);
}

/// Engine self-consistency on a small sweep. Comparisons with printed closed forms are
/// left to `spectra`.
rumin::Report run_selftest(const Options& o) {
  rumin::Report rep;
  rep.suite = "selftest";
  rep.params = rumin::Json{{"seed", o.seed}};
  rep.append(rumin::identity_suite(2, 3, 3, o.seed));
  rep.append(rumin::hw_suite(3, 3, 1, 1));
  rep.append(rumin::intertwining_suite(3, 3, 1, 1));
  rep.append(rumin::szego_suite({2, 2, 1, 1, 8, std::nullopt}));
  rep.append(rumin::scalar_szego_suite(2, 3));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the Rumin complex on the unit sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  bool timestamp = true;
  app.add_flag("!--no-timestamp", timestamp, "omit the timestamp field");

  auto* verify = app.add_subcommand("verify", "operator identities or highest weight forms");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* ident = verify->add_subcommand("identities", "randomized identity suite");
  add_common(ident, o, "2..4");
  ident->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  ident->add_option("--cases", o.cases, "random forms per bidegree")->capture_default_str();
  auto* hw = verify->add_subcommand("hw", "highest weight forms and intertwining constants");
  add_common(hw, o, "3..4");
  add_sweep(hw, o);

  auto* spectra = app.add_subcommand("spectra", "norms and Laplacian eigenvalues");
  add_common(spectra, o, "3");
  add_sweep(spectra, o);
  spectra->add_option("--allowlist", o.allowlist, "suspected-typo allowlist")->capture_default_str();

  auto* szego = app.add_subcommand("szego", "harmonic extension and Szego norm identity");
  add_common(szego, o, "2..3");
  add_sweep(szego, o);
  szego->add_option("--order", o.order, "series order N")->capture_default_str();
  szego->add_option("--p", o.p, "holomorphic degree");
  szego->add_option("--q", o.q, "antiholomorphic degree");
  szego->add_flag("--scalar", o.scalar, "scalar Szego ratio instead");

  auto* selftest = app.add_subcommand("selftest", "quick engine self-consistency run");
  add_output(selftest, o);
  selftest->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (o.n.empty()) {
    if (ident->parsed()) o.n = "2..4";
    else if (hw->parsed()) o.n = "3..4";
    else if (spectra->parsed()) o.n = "3";
    else o.n = "2..3";
  }
  try {
    rumin::Report rep;
    if (ident->parsed()) rep = run_identities(o);
    else if (hw->parsed()) rep = run_hw(o);
    else if (spectra->parsed()) rep = run_spectra(o);
    else if (szego->parsed()) rep = run_szego(o);
    else rep = run_selftest(o);
    rep.include_timestamp = timestamp;
    emit(rep, o);
    std::cerr << rep.suite << ": pass " << rep.count(rumin::Status::Pass) << ", fail "
              << rep.count(rumin::Status::Fail) << ", suspected " << rep.count(rumin::Status::SuspectedTypo) << "\n";
    return rep.ok() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const rumin::InvalidParams& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
