#include <gtest/gtest.h>

#include "rumin/operators.hpp"

using namespace rumin;

namespace {

Poly one(int n) { return Poly(n, GaussRational(1)); }

/// tau ^ taubar expanded one index pair at a time.
Form brute_tau_taubar(int n) {
  Form out(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      out += Poly::zbar(n, j) * Poly::z(n, k) * wedge(Form::dz(n, j), Form::dzbar(n, k));
  return out;
}

}  // namespace

TEST(Wedge, Anticommutativity) {
  const Form a = Form::dzbar(2, 0);
  EXPECT_TRUE(wedge(a, a).is_zero());
  const Form ab = wedge(Form::dz(2, 0), Form::dzbar(2, 0));
  EXPECT_EQ(ab, -wedge(Form::dzbar(2, 0), Form::dz(2, 0)));
  EXPECT_EQ(ab.terms().size(), 1u);
  EXPECT_EQ(ab.terms().begin()->second, Poly(2, GaussRational(-1)));
}

TEST(Wedge, BilinearExpansion) {
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(wedge(tau(n), tau_bar(n)), brute_tau_taubar(n));
}

TEST(Wedge, Associative) {
  const int n = 3;
  const Form a = tau(n), b = Form::dzbar(n, 1) + Form::dz(n, 2), c = tau_bar(n);
  EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
}

TEST(Contract, Pairing) {
  EXPECT_EQ(contract(0, Slot::Hol, Form::dz(2, 0)), Form::scalar(one(2)));
  EXPECT_TRUE(contract(0, Slot::Anti, Form::dz(2, 0)).is_zero());
  EXPECT_TRUE(contract(1, Slot::Hol, Form::dz(2, 0)).is_zero());
}

TEST(Contract, Antiderivation) {
  const int n = 3;
  const Form a = Form::dz(n, 0) + Poly::zbar(n, 2) * Form::dzbar(n, 1);
  const Form b = wedge(Form::dzbar(n, 0), Form::dz(n, 2));
  for (int j = 0; j < n; ++j)
    for (Slot s : {Slot::Hol, Slot::Anti})
      EXPECT_EQ(contract(j, s, wedge(a, b)), wedge(contract(j, s, a), b) - wedge(a, contract(j, s, b)));
}

TEST(Theta, ContractionsGiveZetaXi) {
  for (int n = 2; n <= 4; ++n)
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(contract(j, Slot::Hol, theta(n)), -zeta(n, j));
      EXPECT_EQ(contract(j, Slot::Anti, theta(n)), xi(n, j));
    }
}

TEST(Contact, IT_Tau) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(i_T(tau(n)), Form::scalar(Poly::radius_sq(n)));
    EXPECT_EQ(i_Tbar(tau_bar(n)), Form::scalar(Poly::radius_sq(n)));
    EXPECT_TRUE(i_T(tau_bar(n)).is_zero());
  }
}

TEST(Contact, IE_Dtau) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(i_E(dtau(n)), Form::constant(n, GaussRational(n)));
    const Form it = i_E(theta(n));
    EXPECT_EQ(it, Form::scalar(Poly(n, GaussRational(n)) - Poly::radius_sq(n)));
    EXPECT_EQ(reduce_mod_sphere(it), Form::constant(n, GaussRational(n - 1)));
  }
}

TEST(Contact, ITThetaOffSphere) {
  // i_T theta = (|z|^2 - 1) taubar: zero on S only.
  for (int n = 2; n <= 4; ++n) {
    const Form expect = (Poly::radius_sq(n) - one(n)) * tau_bar(n);
    EXPECT_EQ(i_T(theta(n)), expect);
    EXPECT_TRUE(reduce_mod_sphere(i_T(theta(n))).is_zero());
  }
}

TEST(Differential, Basics) {
  const int n = 3;
  for (int j = 0; j < n; ++j) EXPECT_EQ(dbar(Form::scalar(Poly::zbar(n, j))), Form::dzbar(n, j));
  EXPECT_EQ(dbar(tau(n)), dtau(n));
  EXPECT_TRUE(d(dtau(n)).is_zero());
  EXPECT_TRUE(d(Form::constant(n, GaussRational(5))).is_zero());
}

TEST(Differential, Leibniz) {
  const int n = 2;
  const Form a = Poly::z(n, 0) * Poly::zbar(n, 1) * Form::dz(n, 1);
  const Form b = Poly::zbar(n, 0).pow(2) * Form::dzbar(n, 0);
  EXPECT_EQ(d(wedge(a, b)), wedge(d(a), b) - wedge(a, d(b)));
}

TEST(Metric, Pointwise) {
  EXPECT_EQ(pointwise_inner(Form::dzbar(2, 0), Form::dzbar(2, 0)), one(2));
  EXPECT_TRUE(pointwise_inner(Form::dzbar(2, 0), Form::dz(2, 0)).is_zero());
  EXPECT_EQ(pointwise_inner(Poly::z(2, 0) * Form::dz(2, 0), Form::dz(2, 0)), Poly::z(2, 0));
}

TEST(Metric, L2) {
  EXPECT_EQ(l2_inner(Form::dzbar(2, 0), Form::dzbar(2, 0)), GaussRational(1));
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(l2_norm_sq(tau(n)), Rational(1));
  const Form f = Poly::zbar(2, 0) * Form::dzbar(2, 0);
  EXPECT_EQ(l2_norm_sq(f), frac(1, 2));
}

TEST(Metric, Sesquilinear) {
  const int n = 2;
  const Form a = Poly::z(n, 0) * Form::dz(n, 1), b = Form::dz(n, 1) + Poly::zbar(n, 0) * Form::dz(n, 1);
  const GaussRational c(Rational(1), Rational(2));
  EXPECT_EQ(l2_inner(a * c, b), c * l2_inner(a, b));
  EXPECT_EQ(l2_inner(a, b * c), c.conj() * l2_inner(a, b));
  EXPECT_EQ(l2_inner(b, a), l2_inner(a, b).conj());
}

TEST(Operators, CommutatorsAsOperators) {
  const int n = 3;
  const Operator dt = make_operator(n, {OpTag::L_dtau});
  const Operator lt = make_operator(n, {OpTag::L_tau});
  const Operator ltb = make_operator(n, {OpTag::L_taubar});
  const Operator it = make_operator(n, {OpTag::i_T});
  const Operator ie = make_operator(n, {OpTag::i_E});
  const Operator itb = make_operator(n, {OpTag::i_Tbar});
  for (WedgeWord w : words_of_bidegree(n, 1, 1)) {
    const Form x = Form::word(n, w, Poly::z(n, 1) + Poly::zbar(n, 2));
    EXPECT_EQ(commutator(it, dt)(x), -ltb(x));
    EXPECT_EQ(commutator(ie, lt)(x), -itb(x));
    EXPECT_EQ(commutator(ie, ltb)(x), it(x));
    EXPECT_EQ(anticommutator(it, lt)(x), Poly::radius_sq(n) * x);
  }
}

TEST(Operators, ScalarProbe) {
  for (int n = 2; n <= 4; ++n) {
    // On 0-forms [i_E, L_dtau] = i_E(dtau) = n.
    EXPECT_EQ(commutator_scalar_probe(n, {OpTag::i_E}, {OpTag::L_dtau}, 0, 1), Poly(n, GaussRational(n)));
    for (int p = 0; p <= n; ++p)
      for (int q = 1; p + q <= n; ++q)
        EXPECT_EQ(commutator_scalar_probe(n, {OpTag::i_E}, {OpTag::L_dtau}, p, q),
                  Poly(n, GaussRational(n - p - q + 1)));
  }
  EXPECT_THROW(commutator_scalar_probe(3, {OpTag::i_T}, {OpTag::L_dtau}, 0, 2), NotScalar);
}

TEST(Words, Counts) {
  EXPECT_EQ(words_of_bidegree(4, 2, 1).size(), 24u);
  EXPECT_EQ(words_of_bidegree(3, 0, 0).size(), 1u);
  EXPECT_TRUE(words_of_bidegree(2, 3, 0).empty());
}
