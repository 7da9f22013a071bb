#include "fixtures.hpp"
#include "lra/lie_rinehart.hpp"

#include <gtest/gtest.h>

using namespace lra;
using namespace lra::fixtures;

TEST(LieAlgebra, JacobiWitness) {
  EXPECT_FALSE(sl2().jacobi_witness().has_value());
  EXPECT_FALSE(nonabelian2().jacobi_witness().has_value());
  auto w = broken_jacobi_lie().jacobi_witness();
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((*w)[0], 0u);
  EXPECT_EQ((*w)[2], 2u);
}

TEST(LieAlgebra, DiagonalBracketRejected) {
  LieAlgebra g({"x"});
  EXPECT_THROW(g.set_bracket(0, 0, {{0, Rational(1)}}), std::invalid_argument);
}

TEST(LRBracket, EulerExamples) {
  auto s = euler();
  auto y = gen(s.base(), "y");
  auto x = s.basis(0);
  // [x, y x] = y[x,x] + x(y) x = y x
  EXPECT_EQ(lr_bracket(s, x, y * x), y * x);
  // [y x, x] = -x(y) x = -y x
  EXPECT_EQ(lr_bracket(s, y * x, x), -(y * x));
  EXPECT_TRUE(lr_bracket(s, x, x).is_zero());
}

TEST(LRBracket, AntisymmetricOnRandomElements) {
  Sampler rng(5);
  for (auto& [name, s] : positive()) {
    for (int i = 0; i < 30; ++i) {
      auto u = random_lr_element(rng, s, 3), v = random_lr_element(rng, s, 3);
      EXPECT_TRUE((lr_bracket(s, u, v) + lr_bracket(s, v, u)).is_zero()) << name;
    }
  }
}

TEST(CrossedProduct, EulerTable) {
  auto s = euler();
  EXPECT_TRUE(s.bracket(0, 0).is_zero());
  EXPECT_EQ(s.anchor(0).value(0), gen(s.base(), "y"));
}

TEST(LRAxioms, PositiveFixturesPass) {
  for (auto& [name, s] : positive()) {
    Report r = check_lr_axioms(s, 100, 1);
    EXPECT_TRUE(r.passed()) << name << ": " << (r.first_failure() ? r.first_failure()->witness : "");
  }
  EXPECT_TRUE(check_lr_axioms(over_rationals(abelian2())).passed());
}

TEST(LRAxioms, BrokenJacobiFails) {
  Report r = check_lr_axioms(broken_jacobi(), 10, 0);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.find("lr.jacobi")->verdict, Verdict::fail);
  EXPECT_NE(r.find("lr.jacobi")->witness.find("(x1, x2, x3)"), std::string::npos);
}

TEST(LRAxioms, ActionNotRespectingBracketFails) {
  Report r = check_lr_axioms(aff2_bad_action(), 10, 0);
  EXPECT_EQ(r.find("lr.anchor_bracket")->verdict, Verdict::fail);
}

TEST(Opposite, InvolutionAndSignFlip) {
  auto s = euler();
  auto op = make_opposite(s);
  EXPECT_EQ(op.anchor(0).value(0), -gen(s.base(), "y"));
  auto back = make_opposite(op);
  EXPECT_EQ(back.table(), s.table());
  EXPECT_EQ(back.anchors(), s.anchors());
  for (auto& [name, x] : positive()) EXPECT_TRUE(check_lr_axioms(make_opposite(x), 20, 2).passed()) << name;
}

TEST(Induce, IdentityReturnsSameStructure) {
  auto s = aff2();
  auto l = induce(s, AlgebraMorphism::identity(s.base()), s.anchors());
  EXPECT_EQ(l.table(), s.table());
  EXPECT_EQ(l.anchors(), s.anchors());
  EXPECT_TRUE(check_lr_morphism(s, l, induced_morphism(s, AlgebraMorphism::identity(s.base())), "id").passed());
}

TEST(Induce, AlongCounit) {
  auto s = euler();
  const auto& eps = s.hopf()->counit;
  auto l = induce(s, eps, {Derivation(eps.target())});
  EXPECT_EQ(l.rank(), 1u);
  EXPECT_EQ(l.base().num_vars(), 0u);
  EXPECT_TRUE(check_lr_axioms(l).passed());
  EXPECT_TRUE(check_lr_morphism(s, l, induced_morphism(s, eps), "eps").passed());
  // the translation field does not survive: e(x(y)) = 1
  auto t = translation();
  EXPECT_THROW(induce(t, t.hopf()->counit, {Derivation(t.hopf()->counit.target())}), HypothesisError);
}

TEST(Induce, TensorSquareIsMorphism) {
  for (auto s : {euler(), aff2(), gl2()}) {
    auto ts = TensorActionSpec::diagonal(s);
    auto l = induce(s, s.hopf()->coproduct, ts.actions);
    EXPECT_TRUE(check_lr_axioms(l, 20, 0).passed());
    EXPECT_TRUE(check_lr_morphism(s, l, induced_morphism(s, s.hopf()->coproduct), "ob4").passed());
  }
}

TEST(BiLR, EulerDiagonalPasses) {
  auto s = euler();
  Report r = check_bi_lr(s, TensorActionSpec::diagonal(s));
  EXPECT_TRUE(r.passed()) << r.first_failure()->name << ": " << r.first_failure()->witness;
}

TEST(BiLR, FlagshipFixturesPass) {
  for (auto s : {aff2(), gl2()}) EXPECT_TRUE(check_bi_lr(s, TensorActionSpec::diagonal(s)).passed());
  auto z = euler();
  auto zero = make_crossed_product(z.base(), LieAlgebra({"x"}), {Derivation(z.base())});
  EXPECT_TRUE(check_bi_lr(zero, TensorActionSpec::diagonal(zero)).passed());
}

TEST(BiLR, TranslationFailsEquivarianceAndCounit) {
  auto s = translation();
  Report r = check_bi_lr(s, TensorActionSpec::diagonal(s));
  EXPECT_FALSE(r.passed());
  const auto* eq = r.find("bi.coproduct_equivariance");
  EXPECT_EQ(eq->verdict, Verdict::fail);
  EXPECT_NE(eq->witness.find("phi(x(y)) = 1"), std::string::npos) << eq->witness;
  const auto* ce = r.find("bi.counit_morphism");
  EXPECT_EQ(ce->verdict, Verdict::fail);
  EXPECT_NE(ce->witness.find("= 1 != 0"), std::string::npos) << ce->witness;
}

TEST(BiLR, TorusIsNotBiLR) {
  // x(t) = t is not a Hopf derivation of the torus: x(t't'') = 2t't'' but D(x(t)) = t't''
  auto s = torus();
  EXPECT_EQ(check_bi_lr(s, TensorActionSpec::diagonal(s)).find("bi.coproduct_equivariance")->verdict, Verdict::fail);
}

TEST(BiLR, NonDiagonalTensorActionBreaksOb5) {
  auto s = euler();
  auto ts = TensorActionSpec::diagonal(s);
  // act on the first tensor factor only
  ts.actions[0] = slot_derivation(s.anchor(0), 2, 0);
  Report r = check_bi_lr(s, ts);
  EXPECT_EQ(r.find("bi.coproduct_equivariance")->verdict, Verdict::fail);
  EXPECT_EQ(r.find("bi.ob5_morphism.anchor_square")->verdict, Verdict::fail);
}

TEST(HopfLR, Examples) {
  auto s = euler();
  auto y = gen(s.base(), "y");
  // S(x(y)) = -y = x(-y)
  EXPECT_EQ(s.hopf()->antipode(s.anchor(0)(y)), s.anchor(0)(s.hopf()->antipode(y)));
  for (auto x : {euler(), aff2(), gl2()}) EXPECT_TRUE(check_hopf_lr(x, TensorActionSpec::diagonal(x)).passed());

  auto broken = euler_broken_antipode();
  Report r = check_hopf_lr(broken, TensorActionSpec::diagonal(broken));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.find("A.antipode_left")->verdict, Verdict::fail);

  auto t = translation();
  Report gated = check_hopf_lr(t, TensorActionSpec::diagonal(t));
  EXPECT_EQ(gated.checks.front().verdict, Verdict::not_applicable);
}

TEST(TensorPower, IsLieRinehart) {
  for (auto s : {euler(), aff2()}) {
    auto sq = tensor_power(s, 2);
    EXPECT_EQ(sq.rank(), 2 * s.rank());
    EXPECT_TRUE(check_lr_axioms(sq, 10, 0).passed());
  }
}
