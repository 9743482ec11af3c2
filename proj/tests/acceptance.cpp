// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <string>

#include "rumin/suites/identities.hpp"
#include "rumin/suites/spectral.hpp"
#include "rumin/suites/szego_suite.hpp"

using namespace rumin;

namespace {

int failures = 0;

void line(int k, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", k, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string counts(const Report& r) {
  return std::to_string(r.count(Status::Pass)) + " pass, " + std::to_string(r.count(Status::Fail)) + " fail, " +
         std::to_string(r.count(Status::SuspectedTypo)) + " suspected";
}

void show_failures(const Report& r, int limit = 4) {
  for (const auto& c : r.checks) {
    if (c.status != Status::Fail) continue;
    if (limit-- == 0) break;
    std::printf("    %s %s computed=%s printed=%s\n", c.id.c_str(), c.params.dump().c_str(),
                c.computed.value_or("-").c_str(), c.reference.value_or("-").c_str());
  }
}

HwParams hp(int n, int p, int q, int m, int l, Family f) { return HwParams{n, p, q, m, l, f}; }

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = identity_suite(2, 4, 100, 7);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool witnessed = true;
  for (const auto& c : r.checks)
    if (c.status != Status::Pass && !c.witness) witnessed = false;
  const bool ok = r.count(Status::Fail) == 0 && r.count(Status::Pass) > 0 && witnessed && secs < 300;
  line(1, ok, "identities n=2..4, 100 cases/bidegree: " + counts(r) + ", " + std::to_string(secs) + " s");
  show_failures(r);
}

void criterion2() {
  const Report r = hw_suite(3, 4, 3, 3);
  line(2, r.count(Status::Fail) == 0 && !r.checks.empty(), "highest weight n=3..4, m,l<=3: " + counts(r));
  show_failures(r);
}

void criterion3() {
  Report r = norm_suite(3, 3, 3);
  r.append(norm_suite(4, 3, 3));
  const bool spots = norm_sq_closed(hp(3, 1, 1, 0, 0, Family::Alpha)) == frac(1, 2) &&
                     norm_sq_closed(hp(3, 1, 1, 0, 0, Family::Gamma)) == frac(1, 4) &&
                     norm_sq_closed(hp(3, 1, 1, 0, 0, Family::Delta)) == frac(1, 6);
  const Rational a = l2_norm_sq(hw_form(hp(3, 1, 1, 0, 0, Family::Alpha)).form());
  line(3, spots && r.count(Status::Fail) == 0,
       "norms n=3..4 vs closed forms: " + counts(r) + ", " + std::to_string(r.reported.size()) +
           " middle-degree values reported; ||alpha(3,1,1,0,0)||^2 = " + to_exact_string(a));
  show_failures(r);
}

void criterion4() {
  const Report r = intertwining_suite(3, 4, 3, 3);
  line(4, r.count(Status::Fail) == 0 && !r.checks.empty(), "intertwining displays n=3..4: " + counts(r));
  show_failures(r);
}

void criterion5() {
  const TypoAllowlist allow = TypoAllowlist::load(std::string(RUMIN_LAB_DATA_DIR) + "/suspected_typos.json");
  Report r = spectrum_suite(3, 3, 3, allow);
  r.append(spectrum_suite(4, 3, 3, allow));
  const Rational spot = laplacian_eigen(Laplacian::Box, hp(3, 1, 1, 1, 0, Family::Alpha));
  const bool ok = r.count(Status::Fail) == 0 && spot == frac(17, 8);
  line(5, ok, "spectra n=3..4 vs printed list with allowlist: " + counts(r) + "; box alpha(3,1,1,1,0) = " +
                  to_exact_string(spot) + " (printed 17/8)");
  show_failures(r);
}

void criterion6() {
  const Report r = szego_suite(SzegoSweep{2, 3, 3, 3, 8, std::nullopt});
  const Thm42Result t = verify_thm42({2, 1, 1, 0, 0});
  const Report s = scalar_szego_suite(2, 5);
  const bool ok = r.ok() && !r.checks.empty() && t.sobolev == frac(2, 3) && t.image == frac(2, 3) && s.ok() &&
                  s.checks.size() == 6;
  line(6, ok, "Szego n=2..3, m,l<=3, N=8: " + counts(r) + "; (2,1,1,0,0) = " + to_exact_string(t.image) +
                  "; scalar ratio l=0..5: " + counts(s));
  show_failures(r);
}

void criterion7() {
  int caught = 0, total = 0;
  std::string missed;
  const std::vector<SzegoParams> sweep = szego_params(SzegoSweep{2, 3, 1, 1, 8, std::nullopt});
  for (int k = 0; k < 5; ++k) {
    ++total;
    bool hit = false;
    for (const auto& sp : sweep) {
      OmegaTildeConstants c = OmegaTildeConstants::standard(sp);
      c[k] += 1;
      for (const auto& rec : szego_checks(sp, 8, c)) hit = hit || rec.status == Status::Fail;
      if (hit) break;
    }
    caught += hit;
    if (!hit) missed += " f-constant#" + std::to_string(k);
  }
  for (const auto& d : intertwining_displays()) {
    if (!d.target) continue;
    ++total;
    IntertwiningDisplay mutated = d;
    mutated.coefficient = [orig = d.coefficient](const HwParams& h) { return orig(h) + Rational(1); };
    const Report r = intertwining_suite(3, 4, 1, 1, {mutated});
    const bool hit = r.count(Status::Fail) > 0;
    caught += hit;
    if (!hit) missed += " [" + d.name + "]";
  }
  line(7, caught == total,
       "mutations detected: " + std::to_string(caught) + "/" + std::to_string(total) + (missed.empty() ? "" : ", missed" + missed));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
