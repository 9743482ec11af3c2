#include <gtest/gtest.h>

#include "rumin/szego.hpp"

using namespace rumin;

TEST(Series, Hypergeometric) {
  const SeriesPoly f = hypergeom_series(1, 1, 3);
  EXPECT_EQ(f[0], Rational(1));
  EXPECT_EQ(f[1], frac(1, 4));
  EXPECT_EQ(f[2], frac(1, 10));
  EXPECT_EQ(f[3], frac(1, 20));
}

TEST(Series, HypergeometricOde) {
  // t(1-t)F'' + (c - (a+b+1)t)F' - ab F = 0 with c = a+b+2, through order N-2.
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const int N = 8;
      const SeriesPoly F = hypergeom_series(a, b, N);
      const SeriesPoly dF = F.derivative(), ddF = dF.derivative();
      const SeriesPoly t_ddF = ddF.times_t();
      const SeriesPoly lhs = t_ddF - t_ddF.times_t().truncated(N - 1) + Rational(a + b + 2) * dF -
                             Rational(a + b + 1) * dF.times_t().truncated(N - 1) -
                             Rational(a * b) * F.truncated(N - 1);
      for (int k = 0; k <= N - 2; ++k) EXPECT_EQ(lhs[k], Rational(0)) << a << b << k;
    }
}

TEST(Series, Algebra) {
  const SeriesPoly a(3, {Rational(1), Rational(2), Rational(0), Rational(1)});
  const SeriesPoly b(3, {Rational(0), Rational(1), Rational(1), Rational(0)});
  EXPECT_EQ((a * b)[2], Rational(3));
  EXPECT_EQ(a.derivative()[2], Rational(3));
  EXPECT_EQ(a.derivative().order(), 2);
  EXPECT_EQ(a.times_t()[4], Rational(1));
  EXPECT_THROW(SeriesPoly(0).derivative(), std::domain_error);
  EXPECT_EQ(b.at_radius_sq(2), Poly::radius_sq(2) + Poly::radius_sq(2).pow(2));
}

TEST(Seed, ClosedAndPrimitive) {
  for (int n = 2; n <= 3; ++n)
    for (int p = 1; p < n; ++p) {
      const SzegoParams sp{n, p, n - p, 2, 1};
      const Form w = build_seed(sp);
      EXPECT_TRUE(d(w).is_zero());
      EXPECT_TRUE(i_E(w).is_zero());
      EXPECT_EQ(w.domain(), Domain::Ambient);
      EXPECT_THROW(reduce_mod_sphere(w), std::logic_error);
    }
}

TEST(Seed, Validation) {
  EXPECT_THROW(build_seed({3, 2, 2, 0, 0}), InvalidParams);
  EXPECT_THROW(build_seed({3, 0, 3, 0, 0}), InvalidParams);
}

TEST(OmegaTilde, LowestOrderTerm) {
  const SzegoParams sp{2, 1, 1, 1, 2};
  const Form w = build_omega_tilde(sp, 4);
  Form lowest(2, Domain::Ambient);
  for (const auto& [word, coef] : w.terms())
    for (const auto& [mono, c] : coef.terms())
      if (t_order(sp, mono, word) == 0) lowest.add_term(word, mono, c);
  EXPECT_EQ(lowest, build_seed(sp) * GaussRational(sp.a() * sp.b()));
}

TEST(Closedness, ThroughOrder) {
  EXPECT_TRUE(check_closed_to_order({2, 1, 1, 0, 0}, 8).closed);
  EXPECT_TRUE(check_closed_to_order({3, 2, 1, 1, 2}, 8).closed);
  EXPECT_TRUE(check_closed_to_order({2, 1, 1, 0, 0}, 2).closed);
}

TEST(Closedness, CorruptedF1Detected) {
  const SzegoParams sp{2, 1, 1, 0, 0};
  auto c = OmegaTildeConstants::standard(sp);
  c.f1_dF = Rational(sp.b() + 2);
  const ClosednessCheck r = check_closed_to_order(sp, 8, c);
  EXPECT_FALSE(r.closed);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Thm42, SpotValues) {
  const Thm42Result r = verify_thm42({2, 1, 1, 0, 0});
  EXPECT_EQ(r.sobolev, frac(2, 3));
  EXPECT_EQ(r.image, frac(2, 3));
  EXPECT_EQ(szego_image_norm_sq({2, 1, 1, 1, 0}), Rational(1));
}

TEST(Thm42, SignFlipBreaksEquality) {
  // At m = l = 0 the rotation term vanishes on gamma, so take m = 1.
  const SzegoParams sp{2, 1, 1, 1, 0};
  EXPECT_NE(sobolev_norm_sq(sp, +1), szego_image_norm_sq(sp));
}

TEST(RadialField, Scaling) {
  const int n = 2;
  const Form w = Poly::z(n, 0).pow(2) * Poly::zbar(n, 1) * Form::dzbar(n, 0);
  EXPECT_EQ(radial_field_action(w), w * GaussRational(0));
  const Form v = Poly::z(n, 0) * Form::dz(n, 1);
  EXPECT_EQ(radial_field_action(v), v * GaussRational(2));
}

TEST(ScalarSzego, BergmanNorms) {
  // S z_2^l = (n+1)_l / l! * l! (n-1)! / (n-1+l)! z_2^l; ||z_2^l||^2 on B is n! l! / (n+l)!.
  for (int l = 0; l <= 4; ++l) {
    const ScalarSzegoResult r = scalar_szego(2, l, 4);
    EXPECT_EQ(r.sphere_norm_sq, factorial(l) / factorial(l + 1));
    const Rational c = pochhammer(Rational(3), l) / factorial(l) * factorial(l) / factorial(l + 1);
    EXPECT_EQ(r.image, Poly::z(2, 1).pow(l) * GaussRational(c));
    EXPECT_EQ(r.ratio, frac(-1, 2));
  }
}

TEST(ScalarSzego, EulerVariantNotConstant) {
  EXPECT_NE(*scalar_szego(2, 1, 3).euler_ratio, *scalar_szego(2, 2, 3).euler_ratio);
  EXPECT_FALSE(scalar_szego(2, 0, 3).euler_ratio.has_value());
}
