#pragma once

// Bialgebra and Hopf structure on U(A, L).
//
// U(A,L)^{(x)k} is realized as the enveloping algebra of the k-fold tensor
// power structure (A^{(x)k}, L(x)A.. (+) .. A(x)L): basis letter s*m + i is
// e_i in slot s, and letters of different slots commute. Products of
// tensors are then ordinary normal-form products there.

#include "lra/enveloping.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace lra {

class TensorEnvElement {
 public:
  TensorEnvElement() = default;
  TensorEnvElement(std::size_t rank, int slots, EnvElement value)
      : rank_(rank), slots_(slots), value_(std::move(value)) {
    if (value_.algebra().slots() != slots_) throw std::invalid_argument("tensor element has the wrong slot count");
  }

  std::size_t rank() const { return rank_; }
  int slots() const { return slots_; }
  const EnvElement& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  long filtration_degree() const { return value_.filtration_degree(); }

  /// Per-slot words of a tensor word.
  std::vector<PBWMonomial> split(const PBWMonomial& w) const {
    std::vector<std::vector<std::size_t>> parts(static_cast<std::size_t>(slots_));
    for (std::size_t l : w.letters()) parts.at(l / rank_).push_back(l % rank_);
    std::vector<PBWMonomial> out;
    for (auto& p : parts) out.emplace_back(std::move(p));
    return out;
  }

  TensorEnvElement& operator+=(const TensorEnvElement& o) {
    value_ += o.value_;
    return *this;
  }
  TensorEnvElement& operator-=(const TensorEnvElement& o) {
    value_ -= o.value_;
    return *this;
  }
  friend TensorEnvElement operator+(TensorEnvElement a, const TensorEnvElement& b) { return a += b; }
  friend TensorEnvElement operator-(TensorEnvElement a, const TensorEnvElement& b) { return a -= b; }
  friend TensorEnvElement operator*(const Rational& c, TensorEnvElement a) {
    a.value_ = c * a.value_;
    return a;
  }
  friend TensorEnvElement operator*(const LaurentPoly& c, TensorEnvElement a) {
    a.value_ = c * a.value_;
    return a;
  }
  friend bool operator==(const TensorEnvElement& a, const TensorEnvElement& b) {
    return a.slots_ == b.slots_ && a.value_ == b.value_;
  }

 private:
  std::size_t rank_ = 0;
  int slots_ = 1;
  EnvElement value_;
};

/// Part of total tensor degree p.
inline TensorEnvElement tensor_layer(const TensorEnvElement& t, std::size_t p) {
  return TensorEnvElement(t.rank(), t.slots(), t.value().layer(p));
}

/// Hopf-algebra operations on U(A, L) for a structure carrying a Hopf
/// structure on A. An optional perturbation adds delta(e_i) to the
/// primitive coproduct of each basis element.
class HopfEnveloping {
 public:
  explicit HopfEnveloping(LieRinehartAlgebra s, std::vector<TensorEnvElement> perturbation = {})
      : u_(s), u2_(tensor_power(s, 2)), u3_(tensor_power(s, 3)) {
    if (!s.hopf()) throw std::invalid_argument("the base algebra carries no Hopf structure");
    hopf_ = *s.hopf();
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::size_t m = rank();
      EnvElement d = u2_.generator(i) + u2_.generator(m + i);
      if (i < perturbation.size()) {
        if (perturbation[i].slots() != 2) throw std::invalid_argument("perturbation must live in U (x) U");
        d += perturbation[i].value();
      }
      images_.emplace_back(m, 2, std::move(d));
    }
  }

  HopfEnveloping(const HopfEnveloping&) = delete;
  HopfEnveloping& operator=(const HopfEnveloping&) = delete;

  const LieRinehartAlgebra& structure() const { return u_.structure(); }
  const Enveloping& u() const { return u_; }
  const HopfStructure& base_hopf() const { return hopf_; }
  std::size_t rank() const { return u_.rank(); }

  /// U^{(x)k} for k = 1, 2, 3.
  const Enveloping& power(int k) const {
    switch (k) {
      case 1: return u_;
      case 2: return u2_;
      case 3: return u3_;
    }
    throw std::out_of_range("tensor powers above 3 are not materialized");
  }

  TensorEnvElement zero(int k) const { return TensorEnvElement(rank(), k, power(k).zero()); }
  TensorEnvElement one(int k) const { return TensorEnvElement(rank(), k, power(k).one()); }
  TensorEnvElement lift(const EnvElement& u) const { return TensorEnvElement(rank(), 1, u); }

  /// X (x) Y with the slots of Y after those of X.
  TensorEnvElement tensor_product(const TensorEnvElement& x, const TensorEnvElement& y) const {
    const int k = x.slots() + y.slots();
    const Enveloping& target = power(k);
    const std::size_t shift = rank() * static_cast<std::size_t>(x.slots());
    EnvElement out = target.zero();
    for (const auto& [wx, ax] : x.value().terms()) {
      LaurentPoly cx = shift_slots(ax, target.base(), 0);
      for (const auto& [wy, ay] : y.value().terms()) {
        std::vector<std::size_t> letters = wx.letters();
        for (std::size_t l : wy.letters()) letters.push_back(l + shift);
        out.add_term(PBWMonomial(std::move(letters)), cx * shift_slots(ay, target.base(), x.slots()));
      }
    }
    return TensorEnvElement(rank(), k, std::move(out));
  }

  TensorEnvElement pure(const std::vector<EnvElement>& factors) const {
    TensorEnvElement t = lift(factors.at(0));
    for (std::size_t i = 1; i < factors.size(); ++i) t = tensor_product(t, lift(factors[i]));
    return t;
  }

  TensorEnvElement tensor_mul(const TensorEnvElement& a, const TensorEnvElement& b) const {
    if (a.slots() != b.slots()) throw std::invalid_argument("tensor factors of different arity");
    return TensorEnvElement(rank(), a.slots(), power(a.slots()).mul(a.value(), b.value()));
  }

  /// Expands t into pure tensors r (m_1 w_1) (x) ... (x) (m_k w_k) with
  /// monomial coefficients and sums r f(factors).
  TensorEnvElement map_pure(const TensorEnvElement& t, int out_slots,
                            const std::function<TensorEnvElement(const std::vector<EnvElement>&)>& f) const {
    const CommAlgebra& a = u_.base();
    const std::size_t n = a.base_size();
    TensorEnvElement out = zero(out_slots);
    for (const auto& [w, c] : t.value().terms()) {
      std::vector<PBWMonomial> words = t.split(w);
      for (const auto& [e, r] : c.terms()) {
        std::vector<EnvElement> factors;
        for (std::size_t s = 0; s < words.size(); ++s) {
          Exponents es(e.begin() + static_cast<long>(s * n), e.begin() + static_cast<long>((s + 1) * n));
          factors.push_back(EnvElement::monomial(a, words[s], LaurentPoly::monomial(a, std::move(es), 1)));
        }
        out += r * f(factors);
      }
    }
    return out;
  }

  /// Delta(a w) = Delta_A(a) * prod_j Delta(e_{w_j}), the product taken left to right.
  TensorEnvElement coproduct(const EnvElement& u) const {
    EnvElement out = u2_.zero();
    for (const auto& [w, a] : u.terms()) out += hopf_.coproduct(a) * word_coproduct(w);
    return TensorEnvElement(rank(), 2, std::move(out));
  }

  Rational counit(const EnvElement& u) const {
    Rational r = 0;
    for (const auto& [w, a] : u.terms())
      if (w.empty()) r += hopf_.counit(a).constant_term();
    return r;
  }

  /// S(a e_{i1}..e_{ip}) = (-1)^p e_{ip}..e_{i1} S_A(a), renormalized.
  EnvElement antipode(const EnvElement& u) const {
    EnvElement out = u_.zero();
    for (const auto& [w, a] : u.terms()) {
      std::vector<std::size_t> rev(w.letters().rbegin(), w.letters().rend());
      EnvElement t = u_.mul(u_.word(rev), u_.scalar(hopf_.antipode(a)));
      out += (w.degree() % 2 ? -t : t);
    }
    return out;
  }

  /// id (x) .. Delta .. (x) id with Delta in slot s.
  TensorEnvElement coproduct_at(const TensorEnvElement& t, int s) const {
    return map_pure(t, t.slots() + 1, [&](const std::vector<EnvElement>& f) {
      std::vector<TensorEnvElement> parts;
      for (int i = 0; i < t.slots(); ++i) parts.push_back(i == s ? coproduct(f[i]) : lift(f[i]));
      TensorEnvElement r = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) r = tensor_product(r, parts[i]);
      return r;
    });
  }

  /// id (x) .. eps .. (x) id with eps in slot s; needs at least two slots.
  TensorEnvElement counit_at(const TensorEnvElement& t, int s) const {
    return map_pure(t, t.slots() - 1, [&](const std::vector<EnvElement>& f) {
      std::vector<EnvElement> rest;
      for (int i = 0; i < t.slots(); ++i)
        if (i != s) rest.push_back(f[i]);
      return counit(f[s]) * pure(rest);
    });
  }

  /// Multiplication U (x) U -> U after applying f (x) g.
  EnvElement multiply(const TensorEnvElement& t, const std::function<EnvElement(const EnvElement&)>& f,
                      const std::function<EnvElement(const EnvElement&)>& g) const {
    return map_pure(t, 1, [&](const std::vector<EnvElement>& x) { return lift(u_.mul(f(x[0]), g(x[1]))); }).value();
  }

  /// (f (x) g) on U (x) U, optionally swapping the factors first.
  TensorEnvElement apply(const TensorEnvElement& t, const std::function<EnvElement(const EnvElement&)>& f,
                         const std::function<EnvElement(const EnvElement&)>& g, bool swap = false) const {
    return map_pure(t, 2, [&](const std::vector<EnvElement>& x) {
      return swap ? pure({f(x[1]), g(x[0])}) : pure({f(x[0]), g(x[1])});
    });
  }

  std::string format(const EnvElement& u) const { return u_.format(u); }

  struct PureTerm {
    Rational coefficient;
    std::vector<EnvElement> factors;  // monomial coefficient times a word, one per slot
  };

  /// t as a sum of r (m_1 w_1) (x) .. (x) (m_k w_k), highest total degree
  /// first, then slot by slot.
  std::vector<PureTerm> pure_terms(const TensorEnvElement& t) const {
    const CommAlgebra& a = u_.base();
    const std::size_t n = a.base_size();
    struct Key {
      std::size_t degree;
      std::vector<PBWMonomial> words;
      const Exponents* exps;
      const Rational* coeff;
    };
    std::vector<Key> keys;
    for (const auto& [w, c] : t.value().terms()) {
      auto words = t.split(w);
      for (const auto& [e, r] : c.terms()) keys.push_back({w.degree(), words, &e, &r});
    }
    std::stable_sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
      if (x.degree != y.degree) return x.degree > y.degree;
      if (x.words != y.words) return x.words > y.words;
      return GradedLex{}(*y.exps, *x.exps);
    });
    std::vector<PureTerm> out;
    for (const auto& k : keys) {
      PureTerm p{*k.coeff, {}};
      for (std::size_t s = 0; s < k.words.size(); ++s) {
        Exponents es(k.exps->begin() + static_cast<long>(s * n), k.exps->begin() + static_cast<long>((s + 1) * n));
        p.factors.push_back(EnvElement::monomial(a, k.words[s], LaurentPoly::monomial(a, std::move(es), 1)));
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  /// Sum of pure tensors: "y*x ⊗ 1 + y ⊗ x + x ⊗ y + 1 ⊗ y*x".
  std::string format(const TensorEnvElement& t) const {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& p : pure_terms(t)) {
      std::string term;
      for (std::size_t s = 0; s < p.factors.size(); ++s) {
        if (s) term += " ⊗ ";
        term += u_.format(s == 0 ? p.coefficient * p.factors[s] : p.factors[s]);
      }
      if (out.empty())
        out = term;
      else if (term.front() == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
    }
    return out;
  }

 private:
  const EnvElement& word_coproduct(const PBWMonomial& w) const {
    {
      std::lock_guard lock(mutex_);
      auto it = word_memo_.find(w);
      if (it != word_memo_.end()) return it->second;
    }
    EnvElement r = u2_.one();
    for (std::size_t l : w.letters()) r = u2_.mul(r, images_[l].value());
    std::lock_guard lock(mutex_);
    return word_memo_.try_emplace(w, std::move(r)).first->second;
  }

  Enveloping u_, u2_, u3_;
  HopfStructure hopf_;
  std::vector<TensorEnvElement> images_;
  mutable std::mutex mutex_;
  mutable std::map<PBWMonomial, EnvElement> word_memo_;
};

/// Symmetric-coalgebra diagonal on S_A[L]: coefficients through Delta_A,
/// words split into complementary subwords. Uses no rewriting.
inline TensorEnvElement symmetric_coproduct(const HopfEnveloping& h, const EnvElement& u) {
  const Enveloping& u2 = h.power(2);
  const std::size_t m = h.rank();
  EnvElement out = u2.zero();
  for (const auto& [w, a] : u.terms()) {
    LaurentPoly da = h.base_hopf().coproduct(a);
    const auto& l = w.letters();
    for (std::size_t mask = 0; mask < (std::size_t{1} << l.size()); ++mask) {
      std::vector<std::size_t> first, second;
      for (std::size_t k = 0; k < l.size(); ++k) (mask >> k & 1 ? second : first).push_back(l[k]);
      for (std::size_t x : second) first.push_back(m + x);
      out.add_term(PBWMonomial(std::move(first)), da);
    }
  }
  return TensorEnvElement(m, 2, std::move(out));
}

/// Product in the associated graded algebra S_A[L].
inline EnvElement symbol_product(const EnvElement& u, const EnvElement& v) {
  EnvElement out(u.algebra());
  for (const auto& [wu, a] : u.terms())
    for (const auto& [wv, b] : v.terms()) {
      std::vector<std::size_t> l = wu.letters();
      l.insert(l.end(), wv.letters().begin(), wv.letters().end());
      std::sort(l.begin(), l.end());
      out.add_term(PBWMonomial(std::move(l)), a * b);
    }
  return out;
}

inline EnvElement leading_symbol(const EnvElement& u) {
  return u.is_zero() ? u : u.layer(static_cast<std::size_t>(u.filtration_degree()));
}

struct BialgebraSamples {
  /// Generator words: each entry is a list of factors (generators of A or basis elements of L).
  std::vector<std::vector<EnvElement>> words;
  std::vector<std::pair<EnvElement, EnvElement>> pairs;
};

/// All products of at most max_degree generators of U(A, L), plus seeded random pairs.
inline BialgebraSamples bialgebra_samples(const Enveloping& u, int max_degree, std::size_t samples,
                                          std::uint64_t seed) {
  std::vector<EnvElement> alphabet;
  for (const auto& g : generator_probes(u.base())) alphabet.push_back(u.scalar(g));
  for (std::size_t i = 0; i < u.rank(); ++i) alphabet.push_back(u.generator(i));

  BialgebraSamples out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, int len) -> void {
    std::vector<EnvElement> w;
    for (std::size_t i : idx) w.push_back(alphabet[i]);
    out.words.push_back(std::move(w));
    if (len == max_degree) return;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      idx.push_back(i);
      self(self, len + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);

  Sampler rng(seed);
  for (std::size_t n = 0; n < samples; ++n)
    out.pairs.emplace_back(random_env_element(rng, u, max_degree, 2, 2), random_env_element(rng, u, max_degree, 2, 2));
  return out;
}

/// The coalgebra laws of h on a sample set: multiplicativity of Delta and
/// eps, coassociativity, counit laws and (non-gating) the comparison with
/// the symmetric coalgebra on the associated graded. Names are prefixed.
inline Report coalgebra_battery(const HopfEnveloping& h, const BialgebraSamples& smp, const std::string& prefix,
                                bool gating = true) {
  const Enveloping& u = h.u();
  auto fmt = [&](const EnvElement& x) { return h.format(x); };

  CheckAccumulator mult(prefix + ".coproduct_multiplicative", gating);
  CheckAccumulator coassoc(prefix + ".coassociativity", gating);
  CheckAccumulator left(prefix + ".counit_left", gating);
  CheckAccumulator right(prefix + ".counit_right", gating);
  CheckAccumulator emult(prefix + ".counit_multiplicative", gating);
  CheckAccumulator graded(prefix + ".graded_coproduct", false);

  auto unary = [&](const EnvElement& x) {
    TensorEnvElement d = h.coproduct(x);
    TensorEnvElement l = h.coproduct_at(d, 0), r = h.coproduct_at(d, 1);
    coassoc.expect(l == r, [&] { return "u = " + fmt(x) + ": " + h.format(l) + " vs " + h.format(r); });
    EnvElement cl = h.counit_at(d, 0).value(), cr = h.counit_at(d, 1).value();
    left.expect(cl == x, [&] { return "u = " + fmt(x) + ": (eps (x) id) Delta(u) = " + fmt(cl); });
    right.expect(cr == x, [&] { return "u = " + fmt(x) + ": (id (x) eps) Delta(u) = " + fmt(cr); });
  };

  for (const auto& w : smp.words) {
    EnvElement x = product(u, w);
    TensorEnvElement lhs = h.coproduct(x);
    TensorEnvElement rhs = h.one(2);
    Rational e = 1;
    for (const auto& f : w) {
      rhs = h.tensor_mul(rhs, h.coproduct(f));
      e *= h.counit(f);
    }
    mult.expect(lhs == rhs, [&] { return "word " + fmt(x) + ": " + h.format(lhs) + " vs " + h.format(rhs); });
    emult.expect(h.counit(x) == e, [&] { return "word " + fmt(x); });
    unary(x);
  }
  for (const auto& [x, y] : smp.pairs) {
    EnvElement xy = u.mul(x, y);
    TensorEnvElement lhs = h.coproduct(xy), rhs = h.tensor_mul(h.coproduct(x), h.coproduct(y));
    mult.expect(lhs == rhs, [&] { return "(" + fmt(x) + ") (" + fmt(y) + ")"; });
    emult.expect(h.counit(xy) == h.counit(x) * h.counit(y), [&] { return "(" + fmt(x) + ") (" + fmt(y) + ")"; });
    unary(x);

    EnvElement sym = symbol_product(leading_symbol(x), leading_symbol(y));
    if (!sym.is_zero()) {
      const std::size_t p = static_cast<std::size_t>(sym.filtration_degree());
      TensorEnvElement top = tensor_layer(lhs, p);
      TensorEnvElement expect = symmetric_coproduct(h, sym);
      graded.expect(xy.layer(p) == sym && top == expect,
                    [&] { return "(" + fmt(x) + ") (" + fmt(y) + "): top part " + h.format(top); });
    }
  }

  Report r;
  for (auto* a : {&mult, &coassoc, &left, &right, &emult, &graded}) r.add(a->result());
  return r;
}

inline Report antipode_battery(const HopfEnveloping& h, const BialgebraSamples& smp) {
  const Enveloping& u = h.u();
  auto fmt = [&](const EnvElement& x) { return h.format(x); };
  auto id = [](const EnvElement& x) { return x; };
  auto S = [&](const EnvElement& x) { return h.antipode(x); };

  CheckAccumulator left("U.antipode_left"), right("U.antipode_right"), anti("U.antipode_antimultiplicative"),
      eps("U.counit_antipode"), delta("U.coproduct_antipode");

  auto unary = [&](const EnvElement& x) {
    TensorEnvElement d = h.coproduct(x);
    EnvElement unit = h.counit(x) * u.one();
    EnvElement l = h.multiply(d, S, id), r = h.multiply(d, id, S);
    left.expect(l == unit, [&] { return "u = " + fmt(x) + ": m(S (x) id) Delta(u) = " + fmt(l); });
    right.expect(r == unit, [&] { return "u = " + fmt(x) + ": m(id (x) S) Delta(u) = " + fmt(r); });
    EnvElement sx = S(x);
    eps.expect(h.counit(sx) == h.counit(x), [&] { return "u = " + fmt(x); });
    TensorEnvElement ds = h.coproduct(sx), sd = h.apply(d, S, S, true);
    delta.expect(ds == sd, [&] { return "u = " + fmt(x) + ": " + h.format(ds) + " vs " + h.format(sd); });
  };

  for (const auto& w : smp.words) {
    EnvElement x = product(u, w);
    EnvElement rhs = u.one();
    for (const auto& f : w) rhs = u.mul(S(f), rhs);
    EnvElement lhs = S(x);
    anti.expect(lhs == rhs, [&] { return "word " + fmt(x) + ": S = " + fmt(lhs) + " vs " + fmt(rhs); });
    unary(x);
  }
  for (const auto& [x, y] : smp.pairs) {
    EnvElement lhs = S(u.mul(x, y)), rhs = u.mul(S(y), S(x));
    anti.expect(lhs == rhs, [&] { return "(" + fmt(x) + ") (" + fmt(y) + ")"; });
    unary(x);
  }

  Report r;
  for (auto* a : {&left, &right, &anti, &eps, &delta}) r.add(a->result());
  return r;
}

namespace detail {
inline std::string gate_reason(const Report& r) {
  const CheckResult* f = r.first_failure();
  return f ? f->name + ": " + f->witness : std::string("gate failed");
}
}  // namespace detail

/// Bialgebra and Hopf laws of U(A, L), gated on check_bi_lr and check_hopf_lr.
inline Report check_bialgebra_axioms(const LieRinehartAlgebra& s, const TensorActionSpec& ts, int max_degree = 3,
                                     std::size_t samples = 200, std::uint64_t seed = 0) {
  static const char* const coalgebra_names[] = {"U.coproduct_multiplicative", "U.coassociativity", "U.counit_left",
                                                "U.counit_right", "U.counit_multiplicative"};
  static const char* const antipode_names[] = {"U.antipode_left", "U.antipode_right", "U.antipode_antimultiplicative",
                                               "U.counit_antipode", "U.coproduct_antipode"};
  Report r;
  Report bi = check_bi_lr(s, ts, 20, seed);
  if (!bi.passed()) {
    std::string why = "bi-LR check failed, " + detail::gate_reason(bi);
    for (const char* n : coalgebra_names) r.add(not_applicable(n, why));
    for (const char* n : antipode_names) r.add(not_applicable(n, why));
    return r;
  }
  HopfEnveloping h(s);
  BialgebraSamples smp = bialgebra_samples(h.u(), max_degree, samples, seed);
  r.append(coalgebra_battery(h, smp, "U"));
  Report hl = check_hopf_lr(s, ts, 20, seed);
  if (!hl.passed()) {
    std::string why = "Hopf-LR check failed, " + detail::gate_reason(hl);
    for (const char* n : antipode_names) r.add(not_applicable(n, why));
    return r;
  }
  r.append(antipode_battery(h, smp));
  return r;
}

}  // namespace lra
