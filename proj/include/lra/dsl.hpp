#pragma once

// The .lra structure-definition language.
//
//   # comment
//   algebra A { gens: y primitive, t group_like invertible }
//   lie g { basis: x1, x2; bracket [x1, x2] = x2 }
//   action { x1(y) = y; x2(y) = 0 }
//   tensor_action { x1(y') = y'; x1(y'') = y'' }      optional
//   antipode { y = y }                                optional override of S_A
//   dual { bracket [dx1, dx2] = dx1; anchor dx1(y) = 1 }   optional
//
// Separators between entries (',' and ';') are optional. Expressions use
// + - * ^, rationals a/b and parentheses; '*' is the product of U(A, L).

#include "lra/maurer_cartan.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lra {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& msg)
      : std::runtime_error("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + msg),
        pos_(pos) {}
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourcePos pos;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
      ++pos.column;
    }
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Token t{Tok::ident, "", pos};
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
      while (i < src.size() && src[i] == '\'') {
        t.text += '\'';
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Tok::number, "", pos};
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text += src[i];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::string_view("{}[](),;:=+-*^/").find(c) != std::string_view::npos) {
      out.push_back({Tok::punct, std::string(1, c), pos});
      advance();
    } else {
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", pos});
  return out;
}

/// Expression tree; evaluated against a structure once one is available.
struct Expr {
  enum class Kind { number, ident, add, sub, mul, neg, pow };
  Kind kind = Kind::number;
  Rational value;
  std::string name;
  long exponent = 0;
  std::vector<Expr> args;
  SourcePos pos;
};

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool at_end() const { return peek().kind == Tok::end; }
  bool is(std::string_view p) const { return peek().kind == Tok::punct && peek().text == p; }
  bool is_word(std::string_view w) const { return peek().kind == Tok::ident && peek().text == w; }
  bool accept(std::string_view p) {
    if (!is(p)) return false;
    next();
    return true;
  }
  const Token& expect(std::string_view p) {
    if (!is(p)) throw ParseError(peek().pos, "expected '" + std::string(p) + "' but found " + describe(peek()));
    return next();
  }
  const Token& expect_ident(std::string_view what) {
    if (peek().kind != Tok::ident)
      throw ParseError(peek().pos, "expected " + std::string(what) + " but found " + describe(peek()));
    return next();
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'";
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

namespace detail {

inline Expr parse_sum(TokenStream& ts);

inline Expr parse_atom(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Tok::number) {
    Expr e{Expr::Kind::number, {}, {}, 0, {}, t.pos};
    std::string lit = ts.next().text;
    if (ts.accept("/")) {
      if (ts.peek().kind != Tok::number)
        throw ParseError(ts.peek().pos, "malformed rational: expected a denominator after '/'");
      lit += "/" + ts.next().text;
    }
    try {
      e.value = parse_rational(lit);
    } catch (const std::exception&) {
      throw ParseError(t.pos, "malformed rational '" + lit + "'");
    }
    return e;
  }
  if (t.kind == Tok::ident) {
    Expr e{Expr::Kind::ident, {}, t.text, 0, {}, t.pos};
    ts.next();
    return e;
  }
  if (ts.is("(")) {
    ts.next();
    Expr e = parse_sum(ts);
    ts.expect(")");
    return e;
  }
  throw ParseError(t.pos, "expected a number, a name or '(' but found " + TokenStream::describe(t));
}

inline Expr parse_power(TokenStream& ts) {
  Expr base = parse_atom(ts);
  while (ts.is("^")) {
    SourcePos pos = ts.next().pos;
    bool neg = ts.accept("-");
    if (ts.peek().kind != Tok::number) throw ParseError(ts.peek().pos, "expected an integer exponent");
    long n = std::stol(ts.next().text);
    base = Expr{Expr::Kind::pow, {}, {}, neg ? -n : n, {std::move(base)}, pos};
  }
  return base;
}

inline Expr parse_unary(TokenStream& ts) {
  if (ts.is("-")) {
    SourcePos pos = ts.next().pos;
    return Expr{Expr::Kind::neg, {}, {}, 0, {parse_unary(ts)}, pos};
  }
  if (ts.accept("+")) return parse_unary(ts);
  return parse_power(ts);
}

inline Expr parse_product(TokenStream& ts) {
  Expr lhs = parse_unary(ts);
  while (ts.is("*")) {
    SourcePos pos = ts.next().pos;
    lhs = Expr{Expr::Kind::mul, {}, {}, 0, {std::move(lhs), parse_unary(ts)}, pos};
  }
  return lhs;
}

inline Expr parse_sum(TokenStream& ts) {
  Expr lhs = parse_product(ts);
  while (ts.is("+") || ts.is("-")) {
    const Token& op = ts.next();
    Expr::Kind k = op.text == "+" ? Expr::Kind::add : Expr::Kind::sub;
    lhs = Expr{k, {}, {}, 0, {std::move(lhs), parse_product(ts)}, op.pos};
  }
  return lhs;
}

}  // namespace detail

inline Expr parse_expression(TokenStream& ts) { return detail::parse_sum(ts); }

inline Expr parse_expression(std::string_view text) {
  TokenStream ts(tokenize(text));
  Expr e = parse_expression(ts);
  if (!ts.at_end()) throw ParseError(ts.peek().pos, "unexpected " + TokenStream::describe(ts.peek()));
  return e;
}

/// Evaluates an expression in U(A, L): names resolve to generators of A
/// (possibly primed in a tensor power) or basis elements of L.
inline EnvElement evaluate(const Enveloping& u, const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return u.scalar(LaurentPoly::constant(u.base(), e.value));
    case K::ident: {
      if (auto v = u.base().find_var(e.name)) return u.scalar(LaurentPoly::variable(u.base(), *v));
      if (auto i = u.structure().find_basis(e.name)) return u.generator(*i);
      throw ParseError(e.pos, "unknown identifier '" + e.name + "'");
    }
    case K::add: return evaluate(u, e.args[0]) + evaluate(u, e.args[1]);
    case K::sub: return evaluate(u, e.args[0]) - evaluate(u, e.args[1]);
    case K::neg: return -evaluate(u, e.args[0]);
    case K::mul: return u.mul(evaluate(u, e.args[0]), evaluate(u, e.args[1]));
    case K::pow: {
      EnvElement b = evaluate(u, e.args[0]);
      if (e.exponent >= 0) return u.pow(b, static_cast<unsigned>(e.exponent));
      if (b.filtration_degree() != 0 || !b.coefficient(PBWMonomial{}).is_unit())
        throw ParseError(e.pos, "negative power of a non-unit");
      return u.scalar(b.coefficient(PBWMonomial{}).pow(e.exponent));
    }
  }
  throw ParseError(e.pos, "bad expression");
}

/// Evaluates an expression that must lie in the commutative algebra a.
inline LaurentPoly evaluate_poly(const CommAlgebra& a, const Expr& e) {
  Enveloping u(LieRinehartAlgebra(a, {}, {}, {}));
  EnvElement r = evaluate(u, e);
  return r.coefficient(PBWMonomial{});
}

struct GenSpec {
  std::string name;
  bool invertible = false;
  HopfKind kind = HopfKind::none;
  SourcePos pos;
};

struct BracketSpec {
  std::string left, right;
  Expr rhs;
  SourcePos pos;
};

/// x(y) = rhs
struct ActionSpec {
  std::string field, generator;
  Expr rhs;
  SourcePos pos;
};

struct DualSpec {
  std::vector<BracketSpec> brackets;
  std::vector<ActionSpec> anchors;
  SourcePos pos;
};

struct StructureSpecFile {
  std::string algebra_name;
  std::vector<GenSpec> gens;
  std::string lie_name;
  std::vector<std::string> basis;
  std::vector<SourcePos> basis_pos;
  std::vector<BracketSpec> brackets;
  std::vector<ActionSpec> actions;
  std::optional<std::vector<ActionSpec>> tensor_actions;
  std::vector<std::pair<std::string, Expr>> antipode;
  std::vector<SourcePos> antipode_pos;
  std::optional<DualSpec> dual;
};

namespace detail {

inline void skip_separators(TokenStream& ts) {
  while (ts.accept(",") || ts.accept(";")) {
  }
}

inline BracketSpec parse_bracket(TokenStream& ts) {
  BracketSpec b;
  b.pos = ts.expect("[").pos;
  b.left = ts.expect_ident("a basis name").text;
  ts.expect(",");
  b.right = ts.expect_ident("a basis name").text;
  ts.expect("]");
  ts.expect("=");
  b.rhs = parse_expression(ts);
  return b;
}

inline ActionSpec parse_action(TokenStream& ts) {
  ActionSpec a;
  const Token& f = ts.expect_ident("a basis name");
  a.field = f.text;
  a.pos = f.pos;
  ts.expect("(");
  a.generator = ts.expect_ident("a generator name").text;
  ts.expect(")");
  ts.expect("=");
  a.rhs = parse_expression(ts);
  return a;
}

inline std::vector<ActionSpec> parse_action_block(TokenStream& ts) {
  std::vector<ActionSpec> out;
  ts.expect("{");
  skip_separators(ts);
  while (!ts.is("}")) {
    out.push_back(parse_action(ts));
    skip_separators(ts);
  }
  ts.expect("}");
  return out;
}

}  // namespace detail

/// Syntax only; names are resolved by build_structure.
inline StructureSpecFile parse_spec(std::string_view text) {
  TokenStream ts(tokenize(text));
  StructureSpecFile f;
  bool have_algebra = false, have_lie = false, have_action = false;
  while (!ts.at_end()) {
    const Token& kw = ts.expect_ident("a block keyword (algebra, lie, action, tensor_action, antipode, dual)");
    const std::string word = kw.text;
    const SourcePos at = kw.pos;
    if (word == "algebra") {
      if (have_algebra) throw ParseError(at, "duplicate algebra block");
      have_algebra = true;
      if (ts.peek().kind == Tok::ident) f.algebra_name = ts.next().text;
      ts.expect("{");
      if (ts.is_word("gens")) {
        ts.next();
        ts.expect(":");
        while (ts.peek().kind == Tok::ident) {
          GenSpec g;
          g.pos = ts.peek().pos;
          g.name = ts.next().text;
          while (ts.peek().kind == Tok::ident) {
            const Token& q = ts.peek();
            if (q.text == "primitive")
              g.kind = HopfKind::primitive;
            else if (q.text == "group_like")
              g.kind = HopfKind::group_like;
            else if (q.text == "invertible")
              g.invertible = true;
            else
              break;
            ts.next();
          }
          f.gens.push_back(std::move(g));
          if (!ts.accept(",")) break;
        }
      }
      detail::skip_separators(ts);
      ts.expect("}");
    } else if (word == "lie") {
      if (have_lie) throw ParseError(at, "duplicate lie block");
      have_lie = true;
      if (ts.peek().kind == Tok::ident) f.lie_name = ts.next().text;
      ts.expect("{");
      detail::skip_separators(ts);
      while (!ts.is("}")) {
        if (ts.is_word("basis")) {
          ts.next();
          ts.expect(":");
          do {
            const Token& b = ts.expect_ident("a basis name");
            f.basis.push_back(b.text);
            f.basis_pos.push_back(b.pos);
          } while (ts.accept(","));
        } else if (ts.is_word("bracket")) {
          ts.next();
          f.brackets.push_back(detail::parse_bracket(ts));
        } else {
          throw ParseError(ts.peek().pos, "expected 'basis' or 'bracket' but found " + TokenStream::describe(ts.peek()));
        }
        detail::skip_separators(ts);
      }
      ts.expect("}");
    } else if (word == "action") {
      if (have_action) throw ParseError(at, "duplicate action block");
      have_action = true;
      f.actions = detail::parse_action_block(ts);
    } else if (word == "tensor_action") {
      if (f.tensor_actions) throw ParseError(at, "duplicate tensor_action block");
      f.tensor_actions = detail::parse_action_block(ts);
    } else if (word == "antipode") {
      ts.expect("{");
      detail::skip_separators(ts);
      while (!ts.is("}")) {
        const Token& g = ts.expect_ident("a generator name");
        f.antipode_pos.push_back(g.pos);
        std::string name = g.text;
        ts.expect("=");
        f.antipode.emplace_back(std::move(name), parse_expression(ts));
        detail::skip_separators(ts);
      }
      ts.expect("}");
    } else if (word == "dual") {
      if (f.dual) throw ParseError(at, "duplicate dual block");
      DualSpec d;
      d.pos = at;
      ts.expect("{");
      detail::skip_separators(ts);
      while (!ts.is("}")) {
        if (ts.is_word("bracket")) {
          ts.next();
          d.brackets.push_back(detail::parse_bracket(ts));
        } else if (ts.is_word("anchor")) {
          ts.next();
          d.anchors.push_back(detail::parse_action(ts));
        } else {
          throw ParseError(ts.peek().pos, "expected 'bracket' or 'anchor' but found " + TokenStream::describe(ts.peek()));
        }
        detail::skip_separators(ts);
      }
      ts.expect("}");
      f.dual = std::move(d);
    } else {
      throw ParseError(at, "unknown block '" + word + "'");
    }
  }
  if (!have_algebra) throw ParseError(ts.peek().pos, "missing algebra block");
  if (!have_lie) throw ParseError(ts.peek().pos, "missing lie block");
  return f;
}

/// A parsed and validated structure ready for the checkers.
struct Model {
  LieRinehartAlgebra lr;
  TensorActionSpec tensor_action;
  std::optional<DualStructure> dual;

  DualStructure dual_or_zero() const { return dual ? *dual : DualStructure::zero(lr); }
};

namespace detail {

/// Evaluates rhs as an A-linear combination of basis elements.
inline LRElement evaluate_linear(const CommAlgebra& a, const std::vector<std::string>& names, const Expr& rhs) {
  const std::size_t m = names.size();
  std::vector<std::vector<LRElement>> table(m, std::vector<LRElement>(m, LRElement(a, m)));
  LieRinehartAlgebra flat(a, names, std::move(table), std::vector<Derivation>(m, Derivation(a)));
  Enveloping u(flat);
  EnvElement v = evaluate(u, rhs);
  LRElement out(a, m);
  for (const auto& [w, c] : v.terms()) {
    if (w.degree() != 1) throw ParseError(rhs.pos, "right-hand side must be a linear combination of basis elements");
    out[w.front()] = c;
  }
  return out;
}

inline std::size_t lookup_basis(const std::vector<std::string>& names, const std::string& n, SourcePos pos) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  throw ParseError(pos, "undeclared basis element '" + n + "'");
}

inline std::vector<std::vector<LRElement>> build_table(const CommAlgebra& a, const std::vector<std::string>& names,
                                                       const std::vector<BracketSpec>& brackets) {
  const std::size_t m = names.size();
  std::vector<std::vector<LRElement>> table(m, std::vector<LRElement>(m, LRElement(a, m)));
  std::vector<std::vector<bool>> set(m, std::vector<bool>(m, false));
  for (const auto& b : brackets) {
    std::size_t i = lookup_basis(names, b.left, b.pos), j = lookup_basis(names, b.right, b.pos);
    LRElement v = evaluate_linear(a, names, b.rhs);
    if (i == j && !v.is_zero()) throw ParseError(b.pos, "[" + b.left + "," + b.left + "] must vanish");
    if (set[i][j]) throw ParseError(b.pos, "bracket [" + b.left + "," + b.right + "] given twice");
    set[i][j] = set[j][i] = true;
    table[i][j] = v;
    table[j][i] = -v;
  }
  return table;
}

inline std::vector<Derivation> build_actions(const CommAlgebra& a, const std::vector<std::string>& names,
                                             const std::vector<ActionSpec>& specs) {
  std::vector<Derivation> out(names.size(), Derivation(a));
  for (const auto& s : specs) {
    std::size_t i = lookup_basis(names, s.field, s.pos);
    auto v = a.find_var(s.generator);
    if (!v) throw ParseError(s.pos, "undeclared generator '" + s.generator + "'");
    out[i].set_value(*v, evaluate_poly(a, s.rhs));
  }
  return out;
}

}  // namespace detail

inline Model build_structure(const StructureSpecFile& f) {
  std::vector<GeneratorDecl> gens;
  for (const auto& g : f.gens) {
    if (g.kind == HopfKind::group_like && !g.invertible)
      throw ParseError(g.pos, "group_like generator '" + g.name + "' must be declared invertible");
    for (const auto& h : gens)
      if (h.name == g.name) throw ParseError(g.pos, "generator '" + g.name + "' declared twice");
    gens.push_back({g.name, g.invertible, g.kind});
  }
  CommAlgebra a(std::move(gens));
  for (std::size_t i = 0; i < f.basis.size(); ++i) {
    if (a.find_var(f.basis[i])) throw ParseError(f.basis_pos[i], "'" + f.basis[i] + "' is already a generator of A");
    for (std::size_t j = 0; j < i; ++j)
      if (f.basis[j] == f.basis[i]) throw ParseError(f.basis_pos[i], "basis element '" + f.basis[i] + "' declared twice");
  }

  auto table = detail::build_table(a, f.basis, f.brackets);
  auto anchor = detail::build_actions(a, f.basis, f.actions);
  LieRinehartAlgebra lr(a, f.basis, std::move(table), std::move(anchor), HopfStructure::standard(a));

  if (!f.antipode.empty()) {
    if (!lr.hopf()) throw ParseError(f.antipode_pos.front(), "antipode override needs a Hopf structure on A");
    HopfStructure h = *lr.hopf();
    std::vector<LaurentPoly> images;
    for (std::size_t v = 0; v < a.num_vars(); ++v) images.push_back(h.antipode(LaurentPoly::variable(a, v)));
    for (std::size_t k = 0; k < f.antipode.size(); ++k) {
      auto v = a.find_var(f.antipode[k].first);
      if (!v) throw ParseError(f.antipode_pos[k], "undeclared generator '" + f.antipode[k].first + "'");
      images[*v] = evaluate_poly(a, f.antipode[k].second);
    }
    try {
      h.antipode = AlgebraMorphism(a, a, std::move(images));
    } catch (const std::exception& e) {
      throw ParseError(f.antipode_pos.front(), e.what());
    }
    lr = lr.with_hopf(h);
  }

  TensorActionSpec ts = TensorActionSpec::diagonal(lr);
  if (f.tensor_actions) {
    const CommAlgebra two = a.tensor_power(2);
    std::vector<Derivation> acts(f.basis.size(), Derivation(two));
    for (const auto& s : *f.tensor_actions) {
      std::size_t i = detail::lookup_basis(f.basis, s.field, s.pos);
      auto v = two.find_var(s.generator);
      if (!v) throw ParseError(s.pos, "undeclared generator '" + s.generator + "' of A (x) A");
      acts[i].set_value(*v, evaluate_poly(two, s.rhs));
    }
    ts.actions = std::move(acts);
  }

  std::optional<DualStructure> dual;
  if (f.dual) {
    DualStructure z = DualStructure::zero(lr);
    auto dtable = detail::build_table(a, z.algebra.names(), f.dual->brackets);
    auto danchor = detail::build_actions(a, z.algebra.names(), f.dual->anchors);
    dual = DualStructure{LieRinehartAlgebra(a, z.algebra.names(), std::move(dtable), std::move(danchor))};
  }
  return Model{std::move(lr), std::move(ts), std::move(dual)};
}

inline Model parse_model(std::string_view text) { return build_structure(parse_spec(text)); }

/// parse_expr: an expression in U(A, L), returned in normal form.
inline EnvElement parse_expr(std::string_view text, const Enveloping& u) { return evaluate(u, parse_expression(text)); }

/// Canonical .lra text for a model; parse_model(print_model(m)) reproduces m.
inline std::string print_model(const Model& m) {
  const LieRinehartAlgebra& s = m.lr;
  const CommAlgebra& a = s.base();
  std::string out = "algebra A { gens: ";
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    const GeneratorDecl& g = a.generators()[v];
    out += (v ? ", " : "") + g.name;
    if (g.hopf_kind == HopfKind::primitive) out += " primitive";
    if (g.hopf_kind == HopfKind::group_like) out += " group_like";
    if (g.invertible) out += " invertible";
  }
  out += " }\nlie g {\n  basis: ";
  for (std::size_t i = 0; i < s.rank(); ++i) out += (i ? ", " : "") + s.name(i);
  out += "\n";
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = i + 1; j < s.rank(); ++j)
      if (!s.bracket(i, j).is_zero())
        out += "  bracket [" + s.name(i) + ", " + s.name(j) + "] = " + s.format(s.bracket(i, j)) + "\n";
  out += "}\naction {\n";
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t v = 0; v < a.num_vars(); ++v) {
      const LaurentPoly& val = s.anchor(i).value(v);
      if (!val.is_zero()) out += "  " + s.name(i) + "(" + a.var_name(v) + ") = " + val.to_string() + "\n";
    }
  out += "}\n";
  if (s.hopf()) {
    auto standard = HopfStructure::standard(a);
    std::string lines;
    for (std::size_t v = 0; v < a.num_vars(); ++v) {
      LaurentPoly x = LaurentPoly::variable(a, v);
      if (!(s.hopf()->antipode(x) == standard->antipode(x)))
        lines += "  " + a.var_name(v) + " = " + s.hopf()->antipode(x).to_string() + "\n";
    }
    if (!lines.empty()) out += "antipode {\n" + lines + "}\n";
  }
  if (!(m.tensor_action.actions == TensorActionSpec::diagonal(s).actions)) {
    const CommAlgebra& two = m.tensor_action.actions.empty() ? a : m.tensor_action.actions.front().algebra();
    out += "tensor_action {\n";
    for (std::size_t i = 0; i < m.tensor_action.actions.size(); ++i)
      for (std::size_t v = 0; v < two.num_vars(); ++v) {
        const LaurentPoly& val = m.tensor_action.actions[i].value(v);
        if (!val.is_zero()) out += "  " + s.name(i) + "(" + two.var_name(v) + ") = " + val.to_string() + "\n";
      }
    out += "}\n";
  }
  if (m.dual) {
    const LieRinehartAlgebra& d = m.dual->algebra;
    out += "dual {\n";
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (std::size_t j = i + 1; j < d.rank(); ++j)
        if (!d.bracket(i, j).is_zero())
          out += "  bracket [" + d.name(i) + ", " + d.name(j) + "] = " + d.format(d.bracket(i, j)) + "\n";
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (std::size_t v = 0; v < a.num_vars(); ++v) {
        const LaurentPoly& val = d.anchor(i).value(v);
        if (!val.is_zero()) out += "  anchor " + d.name(i) + "(" + a.var_name(v) + ") = " + val.to_string() + "\n";
      }
    out += "}\n";
  }
  return out;
}

}  // namespace lra
