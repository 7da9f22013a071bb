#pragma once

// Commutative (Laurent) polynomial algebras over Q, their morphisms and
// derivations, and Hopf structures declared generator by generator.
//
// A tensor power A^{(x)k} of a free commutative algebra is again a polynomial
// algebra, on k primed copies of the generators. CommAlgebra carries the
// generator list once and a slot count, so A, A(x)A, A(x)A(x)A and the ground
// field Q (zero slots) all share one representation.

#include "lra/random.hpp"
#include "lra/rational.hpp"
#include "lra/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lra {

enum class HopfKind { none, primitive, group_like };

inline const char* to_string(HopfKind k) {
  switch (k) {
    case HopfKind::none: return "none";
    case HopfKind::primitive: return "primitive";
    case HopfKind::group_like: return "group_like";
  }
  return "?";
}

struct GeneratorDecl {
  std::string name;
  bool invertible = false;
  HopfKind hopf_kind = HopfKind::none;

  friend bool operator==(const GeneratorDecl&, const GeneratorDecl&) = default;
};

class CommAlgebra {
 public:
  /// The ground field Q.
  CommAlgebra() : base_(std::make_shared<const std::vector<GeneratorDecl>>()), slots_(0) {}

  explicit CommAlgebra(std::vector<GeneratorDecl> gens) : slots_(1) {
    std::unordered_set<std::string> seen;
    for (const auto& g : gens) {
      if (g.name.empty()) throw std::invalid_argument("empty generator name");
      if (!seen.insert(g.name).second)
        throw std::invalid_argument("duplicate generator name '" + g.name + "'");
      if (g.hopf_kind == HopfKind::group_like && !g.invertible)
        throw std::invalid_argument("generator '" + g.name +
                                    "' is group_like but not invertible; a group-like generator "
                                    "needs an inverse for its antipode");
    }
    base_ = std::make_shared<const std::vector<GeneratorDecl>>(std::move(gens));
  }

  CommAlgebra tensor_power(int k) const {
    if (k < 0) throw std::invalid_argument("negative tensor power");
    CommAlgebra out = *this;
    out.slots_ = k;
    return out;
  }

  CommAlgebra ground() const { return tensor_power(0); }

  int slots() const { return slots_; }
  std::size_t base_size() const { return base_->size(); }
  std::size_t num_vars() const { return static_cast<std::size_t>(slots_) * base_->size(); }
  const std::vector<GeneratorDecl>& generators() const { return *base_; }

  const GeneratorDecl& decl(std::size_t var) const { return (*base_)[var % base_->size()]; }
  bool invertible(std::size_t var) const { return decl(var).invertible; }
  int slot_of(std::size_t var) const { return static_cast<int>(var / base_->size()); }
  std::size_t generator_of(std::size_t var) const { return var % base_->size(); }
  std::size_t var(int slot, std::size_t gen) const {
    return static_cast<std::size_t>(slot) * base_->size() + gen;
  }

  /// "y" in A itself, "y'", "y''", ... for the slots of a tensor power.
  std::string var_name(std::size_t v) const {
    std::string name = decl(v).name;
    if (slots_ > 1) name.append(static_cast<std::size_t>(slot_of(v)) + 1, '\'');
    return name;
  }

  std::optional<std::size_t> find_var(std::string_view name) const {
    for (std::size_t v = 0; v < num_vars(); ++v)
      if (var_name(v) == name) return v;
    return std::nullopt;
  }

  friend bool operator==(const CommAlgebra& a, const CommAlgebra& b) {
    if (a.slots_ != b.slots_) return false;
    if (a.slots_ == 0) return true;
    return a.base_ == b.base_ || *a.base_ == *b.base_;
  }

 private:
  std::shared_ptr<const std::vector<GeneratorDecl>> base_;
  int slots_;
};

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

class LaurentPoly {
 public:
  using Terms = std::map<Exponents, Rational, GradedLex>;

  LaurentPoly() = default;
  explicit LaurentPoly(CommAlgebra alg) : alg_(std::move(alg)) {}

  static LaurentPoly constant(const CommAlgebra& alg, const Rational& c) {
    LaurentPoly p(alg);
    p.add_term(Exponents(alg.num_vars(), 0), c);
    return p;
  }
  static LaurentPoly one(const CommAlgebra& alg) { return constant(alg, 1); }

  static LaurentPoly variable(const CommAlgebra& alg, std::size_t v, int power = 1) {
    Exponents e(alg.num_vars(), 0);
    e.at(v) = power;
    return monomial(alg, std::move(e), 1);
  }

  static LaurentPoly monomial(const CommAlgebra& alg, Exponents e, const Rational& c) {
    LaurentPoly p(alg);
    p.add_term(std::move(e), c);
    return p;
  }

  const CommAlgebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  Rational constant_term() const {
    auto it = terms_.find(Exponents(alg_.num_vars(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest total degree of a term, -1 for zero.
  long degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(Exponents e, const Rational& c) {
    if (e.size() != alg_.num_vars()) throw std::invalid_argument("exponent vector length mismatch");
    if (sgn(c) == 0) return;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] < 0 && !alg_.invertible(v))
        throw std::domain_error("negative exponent on non-invertible generator '" + alg_.var_name(v) + "'");
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& q) {
    same_algebra(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& q) {
    same_algebra(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator-(LaurentPoly p) { return p *= Rational(-1); }
  friend LaurentPoly operator*(LaurentPoly p, const Rational& s) { return p *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly p) { return p *= s; }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    p.same_algebra(q);
    LaurentPoly r(p.alg_);
    Exponents e(p.alg_.num_vars());
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_) {
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = ep[v] + eq[v];
        r.add_term(e, cp * cq);
      }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  /// Single term whose variables with nonzero exponent are all invertible.
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0 && !alg_.invertible(v)) return false;
    return true;
  }

  LaurentPoly inverse() const {
    if (!is_unit()) throw std::domain_error("inverse of non-unit " + to_string());
    Exponents e = terms_.begin()->first;
    for (int& x : e) x = -x;
    return monomial(alg_, std::move(e), 1 / terms_.begin()->second);
  }

  LaurentPoly pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    LaurentPoly result = one(alg_), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
    return p.alg_ == q.alg_ && p.terms_ == q.terms_;
  }

  /// Highest graded-lex term first, e.g. "y^2 - 1", "-1/2*t^-1*y".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      bool neg = sgn(c) < 0;
      if (neg) c = -c;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      std::string mono = monomial_string(it->first);
      if (mono.empty())
        out += lra::to_string(c);
      else if (c == 1)
        out += mono;
      else
        out += lra::to_string(c) + "*" + mono;
    }
    return out;
  }

  std::string monomial_string(const Exponents& e) const {
    std::string out;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!out.empty()) out += "*";
      out += alg_.var_name(v);
      if (e[v] != 1) out += "^" + std::to_string(e[v]);
    }
    return out;
  }

  void same_algebra(const LaurentPoly& q) const {
    if (!(alg_ == q.alg_)) throw std::invalid_argument("generator-list mismatch between polynomials");
  }

 private:
  CommAlgebra alg_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

enum class PolyOp { add, mul, scale };

/// Single entry point for ring arithmetic; `scale` multiplies p by the
/// constant q (which must be constant).
inline LaurentPoly poly_arith(PolyOp op, const LaurentPoly& p, const LaurentPoly& q) {
  p.same_algebra(q);
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::mul: return p * q;
    case PolyOp::scale:
      if (!q.is_constant()) throw std::invalid_argument("scale by non-constant polynomial");
      return p * q.constant_term();
  }
  return p;
}

/// Moves p from a tensor power into a larger one, slot i of p landing in slot
/// offset + i of `target`.
inline LaurentPoly shift_slots(const LaurentPoly& p, const CommAlgebra& target, int offset) {
  const std::size_t n = target.base_size();
  if (offset < 0 || offset + p.algebra().slots() > target.slots())
    throw std::invalid_argument("slot shift out of range");
  LaurentPoly out(target);
  Exponents e(target.num_vars(), 0);
  for (const auto& [ep, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    std::copy(ep.begin(), ep.end(), e.begin() + static_cast<long>(static_cast<std::size_t>(offset) * n));
    out.add_term(e, c);
  }
  return out;
}

/// Unital algebra map determined by generator images.
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;

  AlgebraMorphism(CommAlgebra source, CommAlgebra target, std::vector<LaurentPoly> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.num_vars())
      throw std::invalid_argument("morphism needs one image per source generator");
    inverses_.resize(images_.size());
    for (std::size_t v = 0; v < images_.size(); ++v) {
      if (!(images_[v].algebra() == target_))
        throw std::invalid_argument("morphism image of '" + source_.var_name(v) + "' lives in the wrong algebra");
      if (source_.invertible(v)) {
        if (!images_[v].is_unit())
          throw std::domain_error("image " + images_[v].to_string() + " of invertible generator '" +
                                  source_.var_name(v) + "' is not a unit monomial");
        inverses_[v] = images_[v].inverse();
      }
    }
  }

  static AlgebraMorphism identity(const CommAlgebra& a) {
    std::vector<LaurentPoly> im;
    for (std::size_t v = 0; v < a.num_vars(); ++v) im.push_back(LaurentPoly::variable(a, v));
    return AlgebraMorphism(a, a, std::move(im));
  }

  const CommAlgebra& source() const { return source_; }
  const CommAlgebra& target() const { return target_; }
  const LaurentPoly& image(std::size_t v) const { return images_.at(v); }
  const std::vector<LaurentPoly>& images() const { return images_; }

  LaurentPoly operator()(const LaurentPoly& p) const {
    if (!(p.algebra() == source_)) throw std::invalid_argument("polynomial is not in the morphism's source");
    LaurentPoly out(target_);
    for (const auto& [e, c] : p.terms()) {
      LaurentPoly term = LaurentPoly::constant(target_, c);
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] > 0) term *= images_[v].pow(e[v]);
        if (e[v] < 0) {
          if (inverses_[v].is_zero())
            throw std::domain_error("negative exponent on '" + source_.var_name(v) +
                                    "' whose image is not a unit monomial");
          term *= inverses_[v].pow(-e[v]);
        }
      }
      out += term;
    }
    return out;
  }

  /// (g o f)
  friend AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
    if (!(f.target_ == g.source_)) throw std::invalid_argument("morphisms do not compose");
    std::vector<LaurentPoly> im;
    for (const auto& p : f.images_) im.push_back(g(p));
    return AlgebraMorphism(f.source_, g.target_, std::move(im));
  }

  friend bool operator==(const AlgebraMorphism& a, const AlgebraMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  CommAlgebra source_, target_;
  std::vector<LaurentPoly> images_;
  std::vector<LaurentPoly> inverses_;
};

inline LaurentPoly apply_morphism(const AlgebraMorphism& f, const LaurentPoly& p) { return f(p); }

/// f (x) g : A^{(x)(p+r)} -> A^{(x)(q+s)} for f : A^p -> A^q and g : A^r -> A^s
/// over one generator list.
inline AlgebraMorphism tensor(const AlgebraMorphism& f, const AlgebraMorphism& g) {
  const int p = f.source().slots(), q = f.target().slots();
  const int r = g.source().slots(), s = g.target().slots();
  const CommAlgebra& ref = f.source().slots() ? f.source() : g.source();
  CommAlgebra src = ref.tensor_power(p + r), tgt = ref.tensor_power(q + s);
  std::vector<LaurentPoly> im;
  for (const auto& x : f.images()) im.push_back(shift_slots(x, tgt, 0));
  for (const auto& x : g.images()) im.push_back(shift_slots(x, tgt, q));
  return AlgebraMorphism(src, tgt, std::move(im));
}

/// Slot s of A^{(x)k} -> A^{(x)k}... as the inclusion a |-> 1 (x) .. a .. (x) 1.
inline AlgebraMorphism slot_embedding(const CommAlgebra& a, int k, int s) {
  CommAlgebra tgt = a.tensor_power(k);
  std::vector<LaurentPoly> im;
  for (std::size_t g = 0; g < a.base_size(); ++g) im.push_back(LaurentPoly::variable(tgt, tgt.var(s, g)));
  return AlgebraMorphism(a.tensor_power(1), tgt, std::move(im));
}

/// Multiplication A^{(x)k} -> A.
inline AlgebraMorphism multiplication(const CommAlgebra& a, int k) {
  CommAlgebra one = a.tensor_power(1);
  std::vector<LaurentPoly> im;
  for (int s = 0; s < k; ++s)
    for (std::size_t g = 0; g < a.base_size(); ++g) im.push_back(LaurentPoly::variable(one, g));
  return AlgebraMorphism(a.tensor_power(k), one, std::move(im));
}

/// a (x) b |-> b (x) a on A (x) A.
inline AlgebraMorphism flip(const CommAlgebra& a) {
  CommAlgebra two = a.tensor_power(2);
  std::vector<LaurentPoly> im;
  for (int s = 0; s < 2; ++s)
    for (std::size_t g = 0; g < a.base_size(); ++g) im.push_back(LaurentPoly::variable(two, two.var(1 - s, g)));
  return AlgebraMorphism(two, two, std::move(im));
}

/// A derivation is freely determined by its values on the generators; the
/// value on t^-1 follows from Leibniz.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(CommAlgebra alg) : alg_(std::move(alg)), values_(alg_.num_vars(), LaurentPoly(alg_)) {}

  Derivation(CommAlgebra alg, std::vector<LaurentPoly> values) : alg_(std::move(alg)), values_(std::move(values)) {
    if (values_.size() != alg_.num_vars()) throw std::invalid_argument("derivation needs one value per generator");
    for (const auto& v : values_) v.same_algebra(LaurentPoly(alg_));
  }

  const CommAlgebra& algebra() const { return alg_; }
  const LaurentPoly& value(std::size_t v) const { return values_.at(v); }
  const std::vector<LaurentPoly>& values() const { return values_; }
  void set_value(std::size_t v, LaurentPoly p) {
    p.same_algebra(LaurentPoly(alg_));
    values_.at(v) = std::move(p);
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
  }

  LaurentPoly operator()(const LaurentPoly& p) const {
    if (!(p.algebra() == alg_)) throw std::invalid_argument("polynomial is not in the derivation's algebra");
    LaurentPoly out(alg_);
    for (const auto& [e, c] : p.terms())
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0 || values_[v].is_zero()) continue;
        Exponents lowered = e;
        --lowered[v];
        out += LaurentPoly::monomial(alg_, std::move(lowered), c * e[v]) * values_[v];
      }
    return out;
  }

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    Derivation r = a;
    for (std::size_t v = 0; v < r.values_.size(); ++v) r.values_[v] += b.values_.at(v);
    return r;
  }
  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    Derivation r = a;
    for (std::size_t v = 0; v < r.values_.size(); ++v) r.values_[v] -= b.values_.at(v);
    return r;
  }
  /// a . D, which is again a derivation since A is commutative.
  friend Derivation operator*(const LaurentPoly& a, const Derivation& d) {
    Derivation r = d;
    for (auto& x : r.values_) x = a * x;
    return r;
  }

  /// [D1, D2] = D1 o D2 - D2 o D1
  friend Derivation commutator(const Derivation& a, const Derivation& b) {
    Derivation r(a.alg_);
    for (std::size_t v = 0; v < r.values_.size(); ++v) r.values_[v] = a(b.values_[v]) - b(a.values_[v]);
    return r;
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.alg_ == b.alg_ && a.values_ == b.values_;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t v = 0; v < values_.size(); ++v) {
      if (values_[v].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + values_[v].to_string() + ")*d/d" + alg_.var_name(v);
    }
    return out.empty() ? "0" : out;
  }

 private:
  CommAlgebra alg_;
  std::vector<LaurentPoly> values_;
};

inline LaurentPoly apply_derivation(const Derivation& d, const LaurentPoly& p) { return d(p); }

/// D (x) 1 + 1 (x) D on A^{(x)k}: D acting on every slot.
inline Derivation diagonal_derivation(const Derivation& d, int k) {
  const CommAlgebra& a = d.algebra();
  CommAlgebra tgt = a.tensor_power(k);
  Derivation out(tgt);
  for (int s = 0; s < k; ++s)
    for (std::size_t g = 0; g < a.base_size(); ++g)
      out.set_value(tgt.var(s, g), shift_slots(d.value(g), tgt, s));
  return out;
}

/// D acting on slot s of A^{(x)k} only.
inline Derivation slot_derivation(const Derivation& d, int k, int s) {
  const CommAlgebra& a = d.algebra();
  CommAlgebra tgt = a.tensor_power(k);
  Derivation out(tgt);
  for (std::size_t g = 0; g < a.base_size(); ++g) out.set_value(tgt.var(s, g), shift_slots(d.value(g), tgt, s));
  return out;
}

/// Comultiplication, counit and antipode of A, given on generators.
struct HopfStructure {
  AlgebraMorphism coproduct;  // A -> A (x) A
  AlgebraMorphism counit;     // A -> Q
  AlgebraMorphism antipode;   // A -> A

  /// primitive: y |-> y' + y'', e(y) = 0, S(y) = -y;
  /// group-like: t |-> t' t'', e(t) = 1, S(t) = t^-1.
  /// nullopt when some generator has no declared kind.
  static std::optional<HopfStructure> standard(const CommAlgebra& a) {
    CommAlgebra two = a.tensor_power(2), q = a.ground();
    std::vector<LaurentPoly> delta, eps, s;
    for (std::size_t g = 0; g < a.base_size(); ++g) {
      LaurentPoly y1 = LaurentPoly::variable(two, two.var(0, g));
      LaurentPoly y2 = LaurentPoly::variable(two, two.var(1, g));
      LaurentPoly y = LaurentPoly::variable(a, g);
      switch (a.generators()[g].hopf_kind) {
        case HopfKind::none: return std::nullopt;
        case HopfKind::primitive:
          delta.push_back(y1 + y2);
          eps.push_back(LaurentPoly(q));
          s.push_back(-y);
          break;
        case HopfKind::group_like:
          delta.push_back(y1 * y2);
          eps.push_back(LaurentPoly::one(q));
          s.push_back(LaurentPoly::variable(a, g, -1));
          break;
      }
    }
    return HopfStructure{AlgebraMorphism(a, two, std::move(delta)), AlgebraMorphism(a, q, std::move(eps)),
                         AlgebraMorphism(a, a, std::move(s))};
  }

  const CommAlgebra& algebra() const { return antipode.source(); }
};

/// Every exponent vector with sum |e_v| <= max_degree, negative entries only
/// in invertible slots.
inline std::vector<Exponents> monomials_up_to(const CommAlgebra& a, int max_degree) {
  std::vector<Exponents> out;
  Exponents e(a.num_vars(), 0);
  auto rec = [&](auto&& self, std::size_t v, int budget) -> void {
    if (v == e.size()) {
      out.push_back(e);
      return;
    }
    int lo = a.invertible(v) ? -budget : 0;
    for (int x = lo; x <= budget; ++x) {
      e[v] = x;
      self(self, v + 1, budget - std::abs(x));
    }
    e[v] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

inline LaurentPoly random_poly(Sampler& rng, const CommAlgebra& a, int max_degree, int max_terms) {
  LaurentPoly p(a);
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(a.num_vars(), 0);
    int budget = rng.uniform(0, max_degree);
    for (int k = 0; k < budget && a.num_vars() > 0; ++k) {
      std::size_t v = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(a.num_vars()) - 1));
      e[v] += (a.invertible(v) && rng.coin(0.3)) ? -1 : 1;
    }
    p.add_term(std::move(e), rng.nonzero_rational());
  }
  return p;
}

/// Exact verification of the Hopf axioms of A on all monomials up to
/// `max_degree` and `samples` random polynomials (pairs for the
/// multiplicativity checks).
inline Report check_hopf_axioms_A(const HopfStructure& h, int max_degree, std::size_t samples, std::uint64_t seed) {
  const CommAlgebra& a = h.algebra();
  const AlgebraMorphism id = AlgebraMorphism::identity(a);
  const AlgebraMorphism delta_id = tensor(h.coproduct, id), id_delta = tensor(id, h.coproduct);
  const AlgebraMorphism eps_id = tensor(h.counit, id), id_eps = tensor(id, h.counit);
  const AlgebraMorphism s_id = tensor(h.antipode, id), id_s = tensor(id, h.antipode);
  const AlgebraMorphism mul = multiplication(a, 2);
  auto unit_of = [&](const LaurentPoly& p) { return LaurentPoly::constant(a, h.counit(p).constant_term()); };

  std::vector<LaurentPoly> elements;
  for (auto& e : monomials_up_to(a, max_degree)) elements.push_back(LaurentPoly::monomial(a, e, 1));
  Sampler rng(seed);
  for (std::size_t i = 0; i < samples; ++i) elements.push_back(random_poly(rng, a, 3, 4));

  CheckAccumulator coassoc("A.coassociativity"), counit("A.counit"), antipode_l("A.antipode_left"),
      antipode_r("A.antipode_right"), delta_mul("A.coproduct_multiplicative"), eps_mul("A.counit_multiplicative");
  for (const auto& p : elements) {
    const LaurentPoly dp = h.coproduct(p);
    coassoc.expect(delta_id(dp) == id_delta(dp), [&] { return p.to_string(); });
    counit.expect(eps_id(dp) == p && id_eps(dp) == p, [&] { return p.to_string(); });
    const LaurentPoly e1 = unit_of(p);
    antipode_l.expect(mul(s_id(dp)) == e1, [&] {
      return p.to_string() + ": m(S(x)id)D = " + mul(s_id(dp)).to_string() + " != " + e1.to_string();
    });
    antipode_r.expect(mul(id_s(dp)) == e1, [&] {
      return p.to_string() + ": m(id(x)S)D = " + mul(id_s(dp)).to_string() + " != " + e1.to_string();
    });
  }
  for (std::size_t i = 0; i + 1 < elements.size(); i += 2) {
    const auto &p = elements[i], &q = elements[i + 1];
    delta_mul.expect(h.coproduct(p * q) == h.coproduct(p) * h.coproduct(q),
                     [&] { return "(" + p.to_string() + ", " + q.to_string() + ")"; });
    eps_mul.expect(h.counit(p * q) == h.counit(p) * h.counit(q),
                   [&] { return "(" + p.to_string() + ", " + q.to_string() + ")"; });
  }
  Report r;
  for (auto* acc : {&coassoc, &counit, &delta_mul, &eps_mul, &antipode_l, &antipode_r}) r.add(acc->result());
  return r;
}

}  // namespace lra
