#include <gtest/gtest.h>

#include "rumin/isotypic.hpp"

using namespace rumin;

namespace {

HwParams hp(int n, int p, int q, int m, int l, Family f) { return HwParams{n, p, q, m, l, f}; }

}  // namespace

TEST(Blocks, ZetaExpanded) {
  const int n = 2;
  const Form expect = Form::dzbar(n, 0) - Poly::zbar(n, 0) * (Poly::z(n, 0) * Form::dzbar(n, 0) +
                                                              Poly::z(n, 1) * Form::dzbar(n, 1));
  EXPECT_EQ(zeta(n, 0), expect);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(i_Tbar(zeta(3, j)),
              Poly::zbar(3, j) * (Form::constant(3, GaussRational(1)) - Form::scalar(Poly::radius_sq(3))));
    EXPECT_TRUE(i_E(zeta(3, j)).is_zero());
  }
}

TEST(Blocks, Omega1) {
  EXPECT_EQ(omega1(3, 1), Form::scalar(Poly::zbar(3, 0)));
  EXPECT_EQ(omega1(3, 2), Poly::zbar(3, 0) * Form::dzbar(3, 1) - Poly::zbar(3, 1) * Form::dzbar(3, 0));
}

TEST(Blocks, Omega1TwoExpressionsAgree) {
  // The alternating sum over zeta blocks equals the one over raw differentials on S.
  for (int n = 2; n <= 4; ++n)
    for (int q = 1; q <= n; ++q)
      EXPECT_EQ(reduce_mod_sphere(omega1(n, q)), reduce_mod_sphere(omega1_flat(n, q))) << "n=" << n << " q=" << q;
  for (int n = 2; n <= 4; ++n)
    for (int p = 1; p < n; ++p)
      EXPECT_EQ(reduce_mod_sphere(omega2(n, p)), reduce_mod_sphere(omega2_flat(n, p))) << "n=" << n << " p=" << p;
}

TEST(HwForm, GammaSmallest) {
  // (2,1,1,0,0): omega1(1) ^ xi_2 = zbar_1 xi_2.
  EXPECT_EQ(hw_form(hp(2, 1, 1, 0, 0, Family::Gamma)), SphereForm(Poly::zbar(2, 0) * xi(2, 1)));
}

TEST(HwForm, AlphaDegenerates) {
  // q = 1: kappa = xi_n and i_E kappa = 0.
  EXPECT_EQ(hw_form(hp(3, 1, 1, 0, 0, Family::Alpha)), SphereForm(xi(3, 2)));
}

TEST(HwForm, Delta) {
  EXPECT_EQ(hw_form(hp(3, 1, 1, 0, 0, Family::Delta)), SphereForm(Poly::zbar(3, 0) * omega2(3, 1)));
}

TEST(HwForm, AllInQ) {
  for (int n = 2; n <= 4; ++n)
    for (Family f : kFamilies)
      for (int p = 1; p <= n; ++p)
        for (int q = 1; p + q <= n; ++q) {
          const HwParams h = hp(n, p, q, 1, 1, f);
          if (!h.in_rumin_space()) continue;
          EXPECT_TRUE(hw_form(h).in_Q()) << h.str();
        }
}

TEST(HwForm, DeltaLeavesQInMiddleDegree) {
  const HwParams h = hp(3, 1, 2, 0, 0, Family::Delta);
  EXPECT_FALSE(h.in_rumin_space());
  EXPECT_FALSE(SphereForm(hw_form_ambient(h)).in_Q());
}

TEST(HwForm, SharedForms) {
  // q = 1: alpha^m and beta^m are the gamma and delta forms of parameter m-1.
  for (int m = 1; m <= 2; ++m) {
    const SphereForm a = hw_form(hp(3, 1, 1, m, 0, Family::Alpha));
    const SphereForm g = hw_form(hp(3, 1, 1, m - 1, 0, Family::Gamma));
    EXPECT_EQ(weight_of(a.form()), weight_of(g.form()));
    EXPECT_FALSE(hp(3, 1, 1, m, 0, Family::Alpha).occurs());
  }
}

TEST(Weights, Monomial) {
  for (int n = 2; n <= 4; ++n) {
    const Weight w = weight_of(Form::scalar(hw_monomial(n, 3, 2)));
    std::vector<int> expect(n, 0);
    expect[0] = 3;
    expect[n - 1] = -2;
    EXPECT_EQ(w.coords, expect);
  }
}

TEST(Weights, MatchLabels) {
  for (int n = 3; n <= 4; ++n)
    for (Family f : kFamilies)
      for (int p = 1; p <= n; ++p)
        for (int q = 1; p + q <= n; ++q) {
          const HwParams h = hp(n, p, q, 2, 1, f);
          if (!h.in_rumin_space()) continue;
          const SphereForm x = hw_form(h);
          EXPECT_EQ(weight_of(x.form()), expected_weight(h)) << h.str();
          EXPECT_TRUE(is_highest_weight(x.form())) << h.str();
        }
}

TEST(Weights, NonWeightVectorRejected) {
  EXPECT_THROW(weight_of(Form::scalar(Poly::z(2, 0) + Poly::z(2, 1))), NotWeightVector);
  EXPECT_FALSE(is_highest_weight(Form::scalar(Poly::z(2, 0))));
}

TEST(PrintedNorms, SpotValues) {
  EXPECT_EQ(norm_sq_closed(hp(3, 1, 1, 0, 0, Family::Alpha)), frac(1, 2));
  EXPECT_EQ(norm_sq_closed(hp(3, 1, 1, 0, 0, Family::Gamma)), frac(1, 4));
  EXPECT_EQ(norm_sq_closed(hp(3, 1, 1, 0, 0, Family::Delta)), frac(1, 6));
  EXPECT_THROW(norm_sq_closed(hp(3, 1, 2, 0, 0, Family::Alpha)), FormulaUnavailable);
}

TEST(ComputedNorms, Oracles) {
  // |xi_3|^2 = 1 - |z_3|^2 on S^5, mean 2/3; the printed alpha formula gives 1/2.
  EXPECT_EQ(l2_norm_sq(hw_form(hp(3, 1, 1, 0, 0, Family::Alpha)).form()), frac(2, 3));
  EXPECT_EQ(l2_norm_sq(hw_form(hp(3, 1, 1, 0, 0, Family::Gamma)).form()), frac(1, 4));
  EXPECT_EQ(l2_norm_sq(hw_form(hp(3, 1, 1, 0, 0, Family::Delta)).form()), frac(1, 6));
}

TEST(Params, Validation) {
  EXPECT_FALSE(hp(1, 0, 1, 0, 0, Family::Alpha).valid());
  EXPECT_FALSE(hp(3, 2, 2, 0, 0, Family::Gamma).valid());
  EXPECT_FALSE(hp(3, 1, 1, -1, 0, Family::Gamma).valid());
  EXPECT_THROW(hw_form(hp(3, 1, 0, 0, 0, Family::Gamma)), InvalidParams);
}
