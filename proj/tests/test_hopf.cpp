#include "fixtures.hpp"
#include "lra/hopf.hpp"
#include "ug_oracle.hpp"

#include <gtest/gtest.h>

using namespace lra;
using namespace lra::fixtures;

TEST(Hopf, EulerCoproduct) {
  HopfEnveloping h(euler());
  const auto& u = h.u();
  auto y = u.scalar(gen(u.base(), "y"));
  auto x = u.generator(0);
  EXPECT_EQ(h.format(h.coproduct(u.one())), "1 ⊗ 1");
  EXPECT_EQ(h.format(h.coproduct(x)), "x ⊗ 1 + 1 ⊗ x");
  EXPECT_EQ(h.format(h.coproduct(y)), "y ⊗ 1 + 1 ⊗ y");

  EnvElement xy = u.mul(x, y);
  TensorEnvElement d = h.coproduct(xy);
  EXPECT_EQ(d, h.tensor_mul(h.coproduct(x), h.coproduct(y)));
  // yx (x) 1 + y (x) x + x (x) y + 1 (x) yx + y (x) 1 + 1 (x) y
  TensorEnvElement expected = h.pure({u.mul(y, x), u.one()}) + h.pure({y, x}) + h.pure({x, y}) +
                              h.pure({u.one(), u.mul(y, x)}) + h.pure({y, u.one()}) + h.pure({u.one(), y});
  EXPECT_EQ(d, expected);
}

TEST(Hopf, TensorMul) {
  HopfEnveloping h(euler());
  const auto& u = h.u();
  auto x = u.generator(0), one = u.one(), y = u.scalar(gen(u.base(), "y"));
  EXPECT_EQ(h.tensor_mul(h.pure({x, one}), h.pure({one, x})), h.pure({x, x}));
  EXPECT_EQ(h.tensor_mul(h.pure({one, x}), h.pure({x, one})), h.pure({x, x}));
  EXPECT_EQ(h.tensor_mul(h.pure({x, one}), h.pure({y, one})), h.pure({u.mul(x, y), one}));
  EXPECT_EQ(h.format(h.pure({u.mul(x, y), one})), "y*x ⊗ 1 + y ⊗ 1");
}

TEST(Hopf, EulerCounit) {
  HopfEnveloping h(euler());
  const auto& u = h.u();
  auto x = u.generator(0), y = u.scalar(gen(u.base(), "y"));
  EXPECT_EQ(h.counit(u.one()), 1);
  EXPECT_EQ(h.counit(x), 0);
  EXPECT_EQ(h.counit(y), 0);
  EXPECT_EQ(h.counit(u.mul(x, y)), 0);
  EXPECT_EQ(h.counit(u.scalar(gen(u.base(), "y") + constant(u.base(), 3))), 3);
}

TEST(Hopf, EulerAntipode) {
  HopfEnveloping h(euler());
  const auto& u = h.u();
  auto x = u.generator(0), y = u.scalar(gen(u.base(), "y"));
  EXPECT_EQ(h.antipode(u.one()), u.one());
  EXPECT_EQ(h.antipode(x), -x);
  EXPECT_EQ(h.antipode(y), -y);
  // S(y x) = S(x) S(y) = (-x)(-y) = x y = y x + y
  EnvElement yx = u.mul(y, x);
  EXPECT_EQ(h.antipode(yx), u.mul(x, y));
  EXPECT_EQ(h.format(h.antipode(yx)), "y*x + y");
  auto id = [](const EnvElement& e) { return e; };
  auto S = [&](const EnvElement& e) { return h.antipode(e); };
  EXPECT_TRUE(h.multiply(h.coproduct(u.mul(x, y)), S, id).is_zero());
  EXPECT_TRUE(h.multiply(h.coproduct(u.mul(x, y)), id, S).is_zero());
}

TEST(Hopf, TorusAntipodeOnGroupLike) {
  // the torus fixture is not bi-LR, but the maps on A-scalars are still the Hopf maps of A
  HopfEnveloping h(torus());
  const auto& u = h.u();
  auto t = u.scalar(gen(u.base(), "t"));
  EXPECT_EQ(h.coproduct(t), h.pure({t, t}));
  EXPECT_EQ(h.antipode(t), u.scalar(gen(u.base(), "t", -1)));
  EXPECT_EQ(h.counit(t), 1);
}

TEST(Hopf, BialgebraAxiomsEuler) {
  auto s = euler();
  Report r = check_bialgebra_axioms(s, TensorActionSpec::diagonal(s), 3, 40, 0);
  EXPECT_TRUE(r.passed()) << r.first_failure()->name << ": " << r.first_failure()->witness;
  EXPECT_EQ(r.find("U.graded_coproduct")->verdict, Verdict::pass);
  EXPECT_EQ(r.find("U.antipode_left")->verdict, Verdict::pass);
}

TEST(Hopf, BialgebraAxiomsAff2) {
  auto s = aff2();
  Report r = check_bialgebra_axioms(s, TensorActionSpec::diagonal(s), 2, 20, 1);
  EXPECT_TRUE(r.passed()) << r.first_failure()->name << ": " << r.first_failure()->witness;
}

TEST(Hopf, TranslationIsGated) {
  auto s = translation();
  Report r = check_bialgebra_axioms(s, TensorActionSpec::diagonal(s));
  EXPECT_FALSE(r.passed());
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.verdict, Verdict::not_applicable) << c.name;
    EXPECT_NE(c.witness.find("bi."), std::string::npos) << c.witness;
  }
}

TEST(Hopf, BrokenAntipodeGatesAntipodeChecks) {
  auto s = euler_broken_antipode();
  Report r = check_bialgebra_axioms(s, TensorActionSpec::diagonal(s), 2, 10, 0);
  EXPECT_EQ(r.find("U.coassociativity")->verdict, Verdict::pass);
  EXPECT_EQ(r.find("U.antipode_left")->verdict, Verdict::not_applicable);
}

TEST(Hopf, NonabelianTextbookCoproduct) {
  HopfEnveloping h(over_rationals(nonabelian2()));
  const auto& u = h.u();
  auto x1 = u.generator(0), x2 = u.generator(1), one = u.one();
  TensorEnvElement expected =
      h.pure({u.mul(x1, x2), one}) + h.pure({x1, x2}) + h.pure({x2, x1}) + h.pure({one, u.mul(x1, x2)});
  EXPECT_EQ(h.coproduct(u.mul(x1, x2)), expected);
  // x2 x1 = x1 x2 - x2
  EXPECT_EQ(u.mul(x2, x1), u.mul(x1, x2) - x2);
}

TEST(Hopf, DegenerateBaseMatchesClassicalUg) {
  for (const auto& g : {abelian2(), nonabelian2(), sl2()}) {
    HopfEnveloping h(over_rationals(g));
    const auto& u = h.u();
    for (const auto& w : oracle::words_up_to(g.rank(), 3)) {
      EnvElement nf = u.word(w);
      EXPECT_EQ(oracle::to_words(nf), oracle::normal_order(g, w));
      EXPECT_EQ(oracle::to_tensor_words(h.coproduct(nf)), oracle::coproduct(g, w));
      EXPECT_EQ(h.counit(nf), oracle::counit(w));
      EXPECT_EQ(oracle::to_words(h.antipode(nf)), oracle::antipode(g, w));
    }
  }
}
