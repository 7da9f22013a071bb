#include "fixtures.hpp"
#include "lra/dsl.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace lra;
using namespace lra::fixtures;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(LRA_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kFiles[] = {"euler.lra",         "aff2.lra",          "gl2.lra",
                              "translation.lra",   "torus.lra",         "broken_jacobi.lra",
                              "broken_antipode.lra", "sl2.lra",         "nonabelian2_bialgebra.lra",
                              "nonabelian2_trivial.lra", "sl2_failing_dual.lra", "aff2_failing_dual.lra"};

void expect_same(const LieRinehartAlgebra& a, const LieRinehartAlgebra& b) {
  EXPECT_EQ(a.names(), b.names());
  EXPECT_EQ(a.table(), b.table());
  EXPECT_EQ(a.anchors(), b.anchors());
}

SourcePos error_pos(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.pos();
  }
  ADD_FAILURE() << "no error for: " << text;
  return {};
}

std::string error_message(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(StructureFile, EulerFile) {
  StructureSpecFile f = parse_spec(read_fixture("euler.lra"));
  EXPECT_EQ(f.gens.size(), 1u);
  EXPECT_EQ(f.basis.size(), 1u);
  EXPECT_EQ(f.actions.size(), 1u);
  expect_same(build_structure(f).lr, euler());
}

TEST(StructureFile, FilesMatchFixtures) {
  expect_same(parse_model(read_fixture("aff2.lra")).lr, aff2());
  expect_same(parse_model(read_fixture("gl2.lra")).lr, gl2());
  expect_same(parse_model(read_fixture("torus.lra")).lr, torus());
  expect_same(parse_model(read_fixture("broken_jacobi.lra")).lr, broken_jacobi());
  expect_same(parse_model(read_fixture("sl2.lra")).lr, over_rationals(sl2()));
  Model b = parse_model(read_fixture("broken_antipode.lra"));
  EXPECT_EQ(b.lr.hopf()->antipode, euler_broken_antipode().hopf()->antipode);
  Model d = parse_model(read_fixture("sl2_failing_dual.lra"));
  ASSERT_TRUE(d.dual.has_value());
  EXPECT_EQ(d.dual->algebra.table(), sl2_failing_dual(d.lr).algebra.table());
}

TEST(StructureFile, GroupLikeNeedsInvertible) {
  std::string msg = error_message("algebra A { gens: t group_like }\nlie g { basis: x }\naction { }");
  EXPECT_NE(msg.find("invertible"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 1, column 19"), std::string::npos) << msg;
}

TEST(StructureFile, UndeclaredBasisName) {
  std::string text = "algebra A { gens: y primitive }\nlie g {\n  basis: x1, x2\n  bracket [x1, x3] = x2\n}\n";
  std::string msg = error_message(text);
  EXPECT_NE(msg.find("'x3'"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
}

TEST(StructureFile, ErrorLocationsInsideInput) {
  const std::vector<std::string> bad = {
      "algebra A { gens: y primitive }\nlie g { basis: x }\naction { x(z) = 1 }",
      "algebra A { gens: y primitive }\nlie g { basis: x }\naction { x(y) = 1/0 }",
      "algebra A { gens: y primitive }\nlie g { basis: x }\naction { x(y) = 3/ }",
      "algebra A { gens: y primitive }\nlie g { basis: x ; bracket [x, x] = x }",
      "algebra A { gens: y primitive }\nlie g { basis: x }\naction { x(y) = y^-1 }",
      "algebra A { gens: y primitive }\nlie g { basis: x ",
      "algebra A { gens: y primitive @ }",
      "lie g { basis: x }",
      "algebra A { gens: y primitive }\nlie g { basis: x }\nwhatever { }",
      "algebra A { gens: y, y }\nlie g { basis: x }",
  };
  for (const auto& text : bad) {
    SourcePos p = error_pos(text);
    std::size_t lines = 1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    EXPECT_GE(p.line, 1u);
    EXPECT_LE(p.line, lines) << text;
    EXPECT_GE(p.column, 1u);
  }
}

TEST(Expr, EulerExamples) {
  Enveloping u(parse_model(read_fixture("euler.lra")).lr);
  EXPECT_EQ(u.format(parse_expr("x*y", u)), "y*x + y");
  EXPECT_EQ(u.format(parse_expr("y*x", u)), "y*x");
  auto x = u.generator(0), y = u.scalar(gen(u.base(), "y"));
  auto s = x + y;
  // (x + y)^2 = x^2 + x y + y x + y^2 = x^2 + 2 y x + y + y^2
  EnvElement sq = parse_expr("(x + y)^2", u);
  EXPECT_EQ(sq, u.mul(s, s));
  EXPECT_EQ(u.format(sq), "x^2 + 2*y*x + y^2 + y");
  EXPECT_EQ(parse_expr("3/4*y - 1/2", u), u.scalar(Rational(3, 4) * gen(u.base(), "y") - LaurentPoly::constant(u.base(), Rational(1, 2))));
}

TEST(Expr, Errors) {
  Enveloping u(euler());
  EXPECT_THROW(parse_expr("x*z", u), ParseError);
  EXPECT_THROW(parse_expr("1/0", u), ParseError);
  EXPECT_THROW(parse_expr("y^-1", u), ParseError);
  EXPECT_THROW(parse_expr("(x", u), ParseError);
  Enveloping t(torus());
  EXPECT_EQ(parse_expr("t^-2*t^2", t), t.one());
}

TEST(RoundTrip, SpecFiles) {
  for (const char* name : kFiles) {
    Model m = parse_model(read_fixture(name));
    std::string printed = print_model(m);
    Model again = parse_model(printed);
    expect_same(m.lr, again.lr);
    EXPECT_EQ(m.tensor_action.actions, again.tensor_action.actions) << name;
    EXPECT_EQ(m.dual.has_value(), again.dual.has_value()) << name;
    if (m.dual) expect_same(m.dual->algebra, again.dual->algebra);
    if (m.lr.hopf()) {
      EXPECT_EQ(m.lr.hopf()->antipode, again.lr.hopf()->antipode) << name;
    }
    EXPECT_EQ(print_model(again), printed) << name;
  }
}

TEST(RoundTrip, ElementsFuzzed) {
  Sampler rng(12);
  for (auto& [name, s] : positive()) {
    Enveloping u(s);
    for (int n = 0; n < 50; ++n) {
      EnvElement x = random_env_element(rng, u, 3, 3, 4);
      EXPECT_EQ(parse_expr(u.format(x), u), x) << name << ": " << u.format(x);
    }
  }
}

TEST(RoundTrip, TensorActionBlock) {
  std::string text = read_fixture("euler.lra") + "tensor_action { x(y') = y' }\n";
  Model m = parse_model(text);
  EXPECT_FALSE(m.tensor_action.actions == TensorActionSpec::diagonal(m.lr).actions);
  Model again = parse_model(print_model(m));
  EXPECT_EQ(m.tensor_action.actions, again.tensor_action.actions);
}
