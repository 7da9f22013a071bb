#pragma once

// Structures shared by the unit and acceptance suites.

#include "lra/maurer_cartan.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace lra::fixtures {

inline CommAlgebra poly_algebra(const std::vector<std::string>& names) {
  std::vector<GeneratorDecl> gens;
  for (const auto& n : names) gens.push_back({n, false, HopfKind::primitive});
  return CommAlgebra(std::move(gens));
}

inline LaurentPoly gen(const CommAlgebra& a, std::string_view name, int power = 1) {
  return LaurentPoly::variable(a, *a.find_var(name), power);
}

inline LaurentPoly constant(const CommAlgebra& a, long c) { return LaurentPoly::constant(a, c); }

/// A = Q[y], g = Qx, x(y) = y.
inline LieRinehartAlgebra euler() {
  CommAlgebra a = poly_algebra({"y"});
  LieAlgebra g({"x"});
  return make_crossed_product(a, g, {Derivation(a, {gen(a, "y")})});
}

/// A = Q[y], g = Qx, x(y) = 1. A valid Lie-Rinehart algebra that is not bi-LR.
inline LieRinehartAlgebra translation() {
  CommAlgebra a = poly_algebra({"y"});
  LieAlgebra g({"x"});
  return make_crossed_product(a, g, {Derivation(a, {constant(a, 1)})});
}

/// A = Q[y], [x1, x2] = x2, x1(y) = y, x2(y) = 0.
inline LieRinehartAlgebra aff2() {
  CommAlgebra a = poly_algebra({"y"});
  LieAlgebra g({"x1", "x2"});
  g.set_bracket(0, 1, {{1, Rational(1)}});
  return make_crossed_product(a, g, {Derivation(a, {gen(a, "y")}), Derivation(a, {constant(a, 0)})});
}

/// AFF2 with x2(y) = 1: the action does not respect [x1, x2] = x2.
inline LieRinehartAlgebra aff2_bad_action() {
  CommAlgebra a = poly_algebra({"y"});
  LieAlgebra g({"x1", "x2"});
  g.set_bracket(0, 1, {{1, Rational(1)}});
  return make_crossed_product(a, g, {Derivation(a, {gen(a, "y")}), Derivation(a, {constant(a, 1)})});
}

/// A = Q[y1, y2], g = gl2 with E_ij acting as y_i d/dy_j.
inline LieRinehartAlgebra gl2() {
  CommAlgebra a = poly_algebra({"y1", "y2"});
  LieAlgebra g({"e11", "e12", "e21", "e22"});
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * (i - 1) + (j - 1)); };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          if (idx(i, j) >= idx(k, l)) continue;
          LieAlgebra::Vector v;
          if (j == k) v[idx(i, l)] += 1;
          if (l == i) v[idx(k, j)] -= 1;
          g.set_bracket(idx(i, j), idx(k, l), v);
        }
  std::vector<Derivation> action;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Derivation d(a);
      d.set_value(static_cast<std::size_t>(j - 1), gen(a, "y" + std::to_string(i)));
      action.push_back(d);
    }
  return make_crossed_product(a, g, std::move(action));
}

/// A = Q[t, t^-1] group-like, g = Qx, x(t) = t: vector fields on the torus.
inline LieRinehartAlgebra torus() {
  CommAlgebra a({{"t", true, HopfKind::group_like}});
  LieAlgebra g({"x"});
  return make_crossed_product(a, g, {Derivation(a, {gen(a, "t")})});
}

/// Rank-3 structure constants [x1,x2] = x3, [x3,x1] = x1: the Jacobiator of
/// (x1, x2, x3) is -x3.
inline LieAlgebra broken_jacobi_lie() {
  LieAlgebra g({"x1", "x2", "x3"});
  g.set_bracket(0, 1, {{2, Rational(1)}});
  g.set_bracket(2, 0, {{0, Rational(1)}});
  return g;
}

inline LieRinehartAlgebra broken_jacobi() {
  CommAlgebra a = poly_algebra({"y"});
  LieAlgebra g = broken_jacobi_lie();
  return make_crossed_product(a, g, {Derivation(a), Derivation(a), Derivation(a)});
}

/// EULER with the antipode of A replaced by S(y) = y.
inline LieRinehartAlgebra euler_broken_antipode() {
  LieRinehartAlgebra s = euler();
  HopfStructure h = *s.hopf();
  h.antipode = AlgebraMorphism(s.base(), s.base(), {gen(s.base(), "y")});
  return s.with_hopf(h);
}

/// U(g) over A = Q.
inline LieRinehartAlgebra over_rationals(const LieAlgebra& g) {
  CommAlgebra a(std::vector<GeneratorDecl>{});
  return make_crossed_product(a, g, std::vector<Derivation>(g.rank(), Derivation(a)));
}

inline LieAlgebra abelian2() { return LieAlgebra({"x1", "x2"}); }

inline LieAlgebra nonabelian2() {
  LieAlgebra g({"x1", "x2"});
  g.set_bracket(0, 1, {{1, Rational(1)}});
  return g;
}

/// sl2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2() {
  LieAlgebra g({"h", "e", "f"});
  g.set_bracket(0, 1, {{1, Rational(2)}});
  g.set_bracket(0, 2, {{2, Rational(-2)}});
  g.set_bracket(1, 2, {{0, Rational(1)}});
  return g;
}

/// Dual structure with the given brackets [d_a, d_b] and anchors on top of the zero dual of s.
inline DualStructure dual_with(const LieRinehartAlgebra& s,
                               const std::vector<std::tuple<std::size_t, std::size_t, LRElement>>& brackets,
                               const std::vector<Derivation>& anchors = {}) {
  DualStructure z = DualStructure::zero(s);
  auto table = z.algebra.table();
  for (const auto& [a, b, v] : brackets) {
    table[a][b] = v;
    table[b][a] = -v;
  }
  auto anch = anchors.empty() ? z.algebra.anchors() : anchors;
  return DualStructure{LieRinehartAlgebra(s.base(), z.algebra.names(), std::move(table), std::move(anch))};
}

inline LRElement lr_vector(const CommAlgebra& a, std::size_t rank, std::size_t i, const LaurentPoly& c) {
  LRElement v(a, rank);
  v[i] = c;
  return v;
}

/// Nonabelian rank 2 over Q with cobracket dual to [d_x1, d_x2] = d_x1: a Lie bialgebra.
inline DualStructure nonabelian2_cobracket(const LieRinehartAlgebra& s) {
  return dual_with(s, {{0, 1, lr_vector(s.base(), 2, 0, constant(s.base(), 1))}});
}

/// sl2 over Q with [d_h, d_e] = d_h: not a cocycle.
inline DualStructure sl2_failing_dual(const LieRinehartAlgebra& s) {
  return dual_with(s, {{0, 1, lr_vector(s.base(), 3, 0, constant(s.base(), 1))}});
}

/// AFF2 with [d_x1, d_x2] = y d_x1: fails compatibility.
inline DualStructure aff2_failing_dual(const LieRinehartAlgebra& s) {
  return dual_with(s, {{0, 1, lr_vector(s.base(), 2, 0, gen(s.base(), "y"))}});
}

/// Positive fixtures: valid Lie-Rinehart algebras.
inline std::vector<std::pair<std::string, LieRinehartAlgebra>> positive() {
  return {{"EULER", euler()},
          {"AFF2", aff2()},
          {"GL2", gl2()},
          {"TORUS", torus()},
          {"TRANSLATION", translation()},
          {"SL2", over_rationals(sl2())}};
}

}  // namespace lra::fixtures
