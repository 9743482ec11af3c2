#include <gtest/gtest.h>

#include "rumin/suites/identities.hpp"

using namespace rumin;

namespace {

constexpr int kTrials = 25;

}  // namespace

TEST(Properties, SphereReductionIsRingHomomorphism) {
  for (int n = 2; n <= 4; ++n) {
    FormSampler s(11, {static_cast<std::uint64_t>(n)});
    for (int t = 0; t < kTrials; ++t) {
      const Poly a = s.poly(n), b = s.poly(n);
      EXPECT_EQ(reduce_mod_sphere(a * b), reduce_mod_sphere(reduce_mod_sphere(a) * reduce_mod_sphere(b)));
      EXPECT_EQ(reduce_mod_sphere(a + b), reduce_mod_sphere(a) + reduce_mod_sphere(b));
      EXPECT_EQ(sphere_integral(a), sphere_integral(reduce_mod_sphere(a)));
    }
  }
}

TEST(Properties, GradedCommutativity) {
  const int n = 3;
  FormSampler s(12);
  for (int t = 0; t < kTrials; ++t) {
    const int p1 = s.uniform(0, 1), q1 = s.uniform(0, 1), p2 = s.uniform(0, 1), q2 = s.uniform(0, 1);
    const Form a = s.form(n, p1, q1), b = s.form(n, p2, q2);
    const int sign = ((p1 + q1) * (p2 + q2)) % 2 ? -1 : 1;
    EXPECT_EQ(wedge(a, b), wedge(b, a) * GaussRational(sign));
  }
}

TEST(Properties, InnerProductHermitianPositive) {
  for (int n = 2; n <= 3; ++n) {
    FormSampler s(13, {static_cast<std::uint64_t>(n)});
    for (int t = 0; t < kTrials; ++t) {
      const Form a = s.form(n, 1, 1), b = s.form(n, 1, 1);
      EXPECT_EQ(l2_inner(a, b), l2_inner(b, a).conj());
      EXPECT_TRUE(l2_inner(a, a).is_real());
      EXPECT_GT(sgn(l2_norm_sq(reduce_mod_sphere(a))), 0);
    }
  }
}

TEST(Properties, ConjugationInvolution) {
  FormSampler s(14);
  for (int t = 0; t < kTrials; ++t) {
    const Poly a = s.poly(3), b = s.poly(3);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_TRUE(sphere_integral(a * a.conj()).is_real());
  }
}

TEST(Properties, ProjectionSelfAdjointIdempotent) {
  for (int n = 2; n <= 4; ++n) {
    FormSampler s(15, {static_cast<std::uint64_t>(n)});
    for (int t = 0; t < 8; ++t) {
      const int p = s.uniform(0, n - 1);
      const int r = s.uniform(0, n - 1 - p);
      const Form a = s.form(n, p, r), b = s.form(n, p, r);
      const SphereForm pa = project_Q(a);
      EXPECT_EQ(project_Q(pa.form()), pa);
      EXPECT_EQ(l2_inner(pa.form(), b), l2_inner(a, project_Q(b).form()));
    }
  }
}

TEST(Properties, IdentitySuiteHasNoFailures) {
  const Report r = identity_suite(2, 4, 4, 2024);
  EXPECT_EQ(r.count(Status::Fail), 0u);
  EXPECT_GT(r.count(Status::Pass), 0u);
  for (const auto& c : r.checks) {
    if (c.status != Status::Pass) {
      EXPECT_TRUE(c.witness.has_value()) << c.id;
    }
  }
}

TEST(Properties, ReferenceVariantsAreFlagged) {
  const Report r = identity_suite(3, 3, 2, 1);
  bool saw = false;
  for (const auto& c : r.checks)
    if (c.id.find("(reference form)") != std::string::npos && c.status == Status::SuspectedTypo) saw = true;
  EXPECT_TRUE(saw);
}

TEST(Properties, SamplerDeterministic) {
  FormSampler a(99, {1, 2}), b(99, {1, 2}), c(99, {2, 1});
  const Form fa = a.form(3, 1, 1), fb = b.form(3, 1, 1), fc = c.form(3, 1, 1);
  EXPECT_EQ(fa, fb);
  EXPECT_NE(fa, fc);
}

TEST(Properties, ParallelOrderIndependent) {
  std::vector<std::function<int()>> tasks;
  for (int i = 0; i < 50; ++i) tasks.push_back([i] { return i * i; });
  EXPECT_EQ(run_ordered(tasks, 1), run_ordered(tasks, 6));
  std::vector<std::function<int()>> bad{[] { return 1; }, []() -> int { throw std::runtime_error("x"); }};
  EXPECT_THROW(run_ordered(bad, 2), std::runtime_error);
}
