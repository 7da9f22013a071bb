#pragma once

// U(A, L) as a rewriting system on PBW normal forms.
//
// An element is a finite sum a_w * e_w with a_w in A written on the left and
// w a non-decreasing word over the basis of L. Products are normalized with
// the two defining relations
//   e_i a   -> a e_i + e_i(a)
//   e_i e_j -> e_j e_i + sum_k f^k_ij e_k      (i > j)
// which terminate since each step lowers (degree, inversions).

#include "lra/lie_rinehart.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lra {

/// Sorted word over the basis of L; its length is its PBW filtration degree.
class PBWMonomial {
 public:
  PBWMonomial() = default;
  explicit PBWMonomial(std::vector<std::size_t> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (letters_[i - 1] > letters_[i]) throw std::invalid_argument("PBW monomial must be non-decreasing");
  }

  const std::vector<std::size_t>& letters() const { return letters_; }
  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::size_t front() const { return letters_.front(); }

  PBWMonomial tail() const { return PBWMonomial(std::vector<std::size_t>(letters_.begin() + 1, letters_.end()), {}); }
  PBWMonomial prepend(std::size_t i) const {
    std::vector<std::size_t> l;
    l.reserve(letters_.size() + 1);
    l.push_back(i);
    l.insert(l.end(), letters_.begin(), letters_.end());
    return PBWMonomial(std::move(l));
  }

  /// By degree, then lexicographically.
  friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;

 private:
  struct Trusted {};
  PBWMonomial(std::vector<std::size_t> letters, Trusted) : letters_(std::move(letters)) {}
  std::vector<std::size_t> letters_;
};

/// Element of U(A, L) in normal form: PBW monomial -> left A-coefficient.
class EnvElement {
 public:
  using Terms = std::map<PBWMonomial, LaurentPoly>;

  EnvElement() = default;
  explicit EnvElement(CommAlgebra alg) : alg_(std::move(alg)) {}

  static EnvElement scalar(const LaurentPoly& a) {
    EnvElement u(a.algebra());
    u.add_term(PBWMonomial{}, a);
    return u;
  }
  static EnvElement monomial(const CommAlgebra& alg, PBWMonomial w, const LaurentPoly& a) {
    EnvElement u(alg);
    u.add_term(std::move(w), a);
    return u;
  }

  const CommAlgebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly coefficient(const PBWMonomial& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly(alg_) : it->second;
  }

  void add_term(const PBWMonomial& w, const LaurentPoly& a) {
    if (!(a.algebra() == alg_)) throw std::invalid_argument("coefficient lives in a different algebra");
    if (a.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  EnvElement& operator+=(const EnvElement& o) {
    for (const auto& [w, a] : o.terms_) add_term(w, a);
    return *this;
  }
  EnvElement& operator-=(const EnvElement& o) {
    for (const auto& [w, a] : o.terms_) add_term(w, -a);
    return *this;
  }
  friend EnvElement operator+(EnvElement u, const EnvElement& v) { return u += v; }
  friend EnvElement operator-(EnvElement u, const EnvElement& v) { return u -= v; }
  friend EnvElement operator-(EnvElement u) {
    for (auto& [w, a] : u.terms_) a = -a;
    return u;
  }
  friend EnvElement operator*(const Rational& c, EnvElement u) {
    if (sgn(c) == 0) return EnvElement(u.alg_);
    for (auto& [w, a] : u.terms_) a *= c;
    return u;
  }
  /// Left multiplication by iota_A(a); no rewriting is needed.
  friend EnvElement operator*(const LaurentPoly& a, const EnvElement& u) {
    EnvElement out(u.alg_);
    if (a.is_zero()) return out;
    for (const auto& [w, c] : u.terms_) out.add_term(w, a * c);
    return out;
  }
  friend bool operator==(const EnvElement& u, const EnvElement& v) {
    return u.alg_ == v.alg_ && u.terms_ == v.terms_;
  }

  /// Longest word with nonzero coefficient; -1 for zero (U_{-1} = 0).
  long filtration_degree() const {
    return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.degree());
  }

  /// Part of exact filtration degree p.
  EnvElement layer(std::size_t p) const {
    EnvElement out(alg_);
    for (const auto& [w, a] : terms_)
      if (w.degree() == p) out.terms_.emplace(w, a);
    return out;
  }

 private:
  CommAlgebra alg_;
  Terms terms_;
};

inline long filtration_degree(const EnvElement& u) { return u.filtration_degree(); }

/// Renders a word as "x1*x2^2" given the basis names.
inline std::string format_word(const PBWMonomial& w, const std::vector<std::string>& names) {
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    if (!out.empty()) out += "*";
    out += names.at(l[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Highest term first: "y*x^2 + 2*y*x + y", "(y + 1)*x - 1".
inline std::string format(const EnvElement& u, const std::vector<std::string>& names) {
  if (u.is_zero()) return "0";
  std::string out;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const auto& [w, a] = *it;
    std::string term;
    if (w.empty()) {
      term = a.to_string();
    } else {
      std::string word = format_word(w, names);
      if (a == LaurentPoly::one(a.algebra()))
        term = word;
      else if (a == -LaurentPoly::one(a.algebra()))
        term = "-" + word;
      else if (a.size() == 1)
        term = a.to_string() + "*" + word;
      else
        term = "(" + a.to_string() + ")*" + word;
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

/// Multiplication context for U(A, L). Normal forms of e_i * w for sorted
/// words w are memoized; the cache is guarded so a shared instance can be
/// used from several threads.
class Enveloping {
 public:
  explicit Enveloping(LieRinehartAlgebra s) : s_(std::move(s)) {}

  Enveloping(const Enveloping& o) : s_(o.s_) {}
  Enveloping& operator=(const Enveloping&) = delete;

  const LieRinehartAlgebra& structure() const { return s_; }
  const CommAlgebra& base() const { return s_.base(); }
  std::size_t rank() const { return s_.rank(); }

  EnvElement zero() const { return EnvElement(base()); }
  EnvElement one() const { return EnvElement::scalar(LaurentPoly::one(base())); }
  EnvElement scalar(const LaurentPoly& a) const { return EnvElement::scalar(a); }
  EnvElement generator(std::size_t i) const {
    if (i >= rank()) throw std::out_of_range("basis index");
    return EnvElement::monomial(base(), PBWMonomial({i}), LaurentPoly::one(base()));
  }
  EnvElement from_lr(const LRElement& u) const {
    EnvElement out = zero();
    for (std::size_t i = 0; i < rank(); ++i) out.add_term(PBWMonomial({i}), u[i]);
    return out;
  }
  /// Normal form of e_{i1} ... e_{ip} for an arbitrary (unsorted) word.
  EnvElement word(const std::vector<std::size_t>& letters) const {
    EnvElement x = one();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = letter_times(*it, x);
    return x;
  }

  /// e_i * u
  EnvElement letter_times(std::size_t i, const EnvElement& u) const {
    EnvElement out = zero();
    for (const auto& [w, a] : u.terms()) {
      // e_i a w = a (e_i w) + e_i(a) w
      out += a * letter_times_word(i, w);
      LaurentPoly da = s_.anchor(i)(a);
      if (!da.is_zero()) out.add_term(w, da);
    }
    return out;
  }

  /// u_mul: the product in U(A, L), in normal form.
  EnvElement mul(const EnvElement& u, const EnvElement& v) const {
    check(u);
    check(v);
    EnvElement out = zero();
    for (const auto& [w, a] : u.terms()) {
      EnvElement x = v;
      const auto& l = w.letters();
      for (auto it = l.rbegin(); it != l.rend(); ++it) x = letter_times(*it, x);
      out += a * x;
    }
    return out;
  }

  EnvElement pow(const EnvElement& u, unsigned n) const {
    EnvElement r = one();
    for (unsigned k = 0; k < n; ++k) r = mul(r, u);
    return r;
  }

  std::string format(const EnvElement& u) const { return lra::format(u, s_.names()); }

  std::size_t cache_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

 private:
  void check(const EnvElement& u) const {
    if (!(u.algebra() == base())) throw std::invalid_argument("element is not over this enveloping algebra");
  }

  /// Normal form of e_i * w, w sorted.
  const EnvElement& letter_times_word(std::size_t i, const PBWMonomial& w) const {
    auto key = std::make_pair(i, w);
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    EnvElement result = zero();
    if (w.empty() || i <= w.front()) {
      result.add_term(w.prepend(i), LaurentPoly::one(base()));
    } else {
      // e_i e_j rest = e_j (e_i rest) + sum_k f^k_ij (e_k rest),  j < i
      const std::size_t j = w.front();
      const PBWMonomial rest = w.tail();
      result = letter_times(j, letter_times_word(i, rest));
      const LRElement& f = s_.bracket(i, j);
      for (std::size_t k = 0; k < rank(); ++k)
        if (!f[k].is_zero()) result += f[k] * letter_times_word(k, rest);
    }
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(std::move(key), std::move(result)).first->second;
  }

  LieRinehartAlgebra s_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, PBWMonomial>, EnvElement> memo_;
};

inline EnvElement u_mul(const Enveloping& u_alg, const EnvElement& u, const EnvElement& v) { return u_alg.mul(u, v); }

/// The anchor representation of U(A, L) on A: iota_A(b) multiplies,
/// e_i differentiates. Independent of the rewriting rules.
inline LaurentPoly act_on_A(const LieRinehartAlgebra& s, const EnvElement& u, const LaurentPoly& a) {
  LaurentPoly out(s.base());
  for (const auto& [w, c] : u.terms()) {
    LaurentPoly x = a;
    const auto& l = w.letters();
    for (auto it = l.rbegin(); it != l.rend() && !x.is_zero(); ++it) x = s.anchor(*it)(x);
    out += c * x;
  }
  return out;
}

struct FiltrationLayer {
  std::size_t degree = 0;
  std::vector<PBWMonomial> basis;
};

/// Sorted words of length p over m letters.
inline FiltrationLayer filtration_layer(std::size_t m, std::size_t p) {
  FiltrationLayer layer{p, {}};
  std::vector<std::size_t> w(p, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t lo) -> void {
    if (pos == p) {
      layer.basis.emplace_back(w);
      return;
    }
    for (std::size_t i = lo; i < m; ++i) {
      w[pos] = i;
      self(self, pos + 1, i);
    }
  };
  if (m > 0 || p == 0) rec(rec, 0, 0);
  return layer;
}

/// C(p + m - 1, p), the rank of the degree-p part of a symmetric algebra on m generators.
inline std::size_t symmetric_power_rank(std::size_t m, std::size_t p) {
  if (m == 0) return p == 0 ? 1 : 0;
  std::size_t r = 1;
  for (std::size_t k = 1; k <= p; ++k) r = r * (m - 1 + k) / k;
  return r;
}

inline EnvElement random_env_element(Sampler& rng, const Enveloping& u, int max_word, int max_coeff_degree = 2,
                                     int max_terms = 3) {
  EnvElement out = u.zero();
  int terms = rng.uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::size_t> letters;
    int len = u.rank() ? rng.uniform(0, max_word) : 0;
    for (int k = 0; k < len; ++k)
      letters.push_back(static_cast<std::size_t>(rng.uniform(0, static_cast<int>(u.rank()) - 1)));
    std::sort(letters.begin(), letters.end());
    out.add_term(PBWMonomial(std::move(letters)), random_poly(rng, u.base(), max_coeff_degree, 2));
  }
  return out;
}

/// Normal form of a product of factors, folded left to right.
inline EnvElement product(const Enveloping& u, const std::vector<EnvElement>& factors) {
  EnvElement x = u.one();
  for (const auto& f : factors) x = u.mul(x, f);
  return x;
}

/// Poincare-Birkhoff-Witt battery:
///   pbw.critical_pairs  the ambiguities e_i e_j e_k (i>j>k) and e_i e_j a (i>j,
///                       a a generator of A) resolve to one normal form
///   pbw.associativity   u_mul on random triples
///   pbw.layers          for p <= max_degree the symbols of all degree-p words
///                       are the sorted words, C(p+m-1, p) of them
inline Report check_pbw(const Enveloping& u, int max_degree, std::size_t samples = 100, std::uint64_t seed = 0) {
  const LieRinehartAlgebra& s = u.structure();
  const std::size_t m = s.rank();
  auto g = [&](std::size_t i) { return u.generator(i); };
  auto sc = [&](const LaurentPoly& a) { return u.scalar(a); };

  CheckAccumulator pairs("pbw.critical_pairs");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const LRElement& fij = s.bracket(i, j);
      for (std::size_t k = 0; k < j; ++k) {
        // (e_i e_j) e_k -> (e_j e_i + [e_i,e_j]) e_k
        EnvElement left = product(u, {g(j), g(i), g(k)});
        for (std::size_t l = 0; l < m; ++l)
          if (!fij[l].is_zero()) left += product(u, {sc(fij[l]), g(l), g(k)});
        // e_i (e_j e_k) -> e_i (e_k e_j + [e_j,e_k])
        EnvElement right = product(u, {g(i), g(k), g(j)});
        const LRElement& fjk = s.bracket(j, k);
        for (std::size_t l = 0; l < m; ++l)
          if (!fjk[l].is_zero()) right += product(u, {g(i), sc(fjk[l]), g(l)});
        pairs.expect(left == right, [&] {
          return "(" + s.name(i) + ", " + s.name(j) + ", " + s.name(k) + "): " + u.format(left) + " vs " +
                 u.format(right);
        });
      }
      for (const auto& a : generator_probes(s.base())) {
        // (e_i e_j) a  vs  e_i (e_j a)
        EnvElement left = product(u, {g(j), g(i), sc(a)});
        for (std::size_t l = 0; l < m; ++l)
          if (!fij[l].is_zero()) left += product(u, {sc(fij[l]), g(l), sc(a)});
        EnvElement right = product(u, {g(i), sc(a), g(j)}) + product(u, {g(i), sc(s.anchor(j)(a))});
        pairs.expect(left == right, [&] {
          return "(" + s.name(i) + ", " + s.name(j) + ", " + a.to_string() + "): " + u.format(left) + " vs " +
                 u.format(right);
        });
      }
    }

  CheckAccumulator assoc("pbw.associativity");
  Sampler rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    EnvElement x = random_env_element(rng, u, max_degree < 3 ? max_degree : 3);
    EnvElement y = random_env_element(rng, u, max_degree < 3 ? max_degree : 3);
    EnvElement z = random_env_element(rng, u, max_degree < 3 ? max_degree : 3);
    assoc.expect(u.mul(u.mul(x, y), z) == u.mul(x, u.mul(y, z)),
                 [&] { return "(" + u.format(x) + ") (" + u.format(y) + ") (" + u.format(z) + ")"; });
  }

  CheckAccumulator layers("pbw.layers");
  for (int p = 0; p <= max_degree; ++p) {
    const std::size_t pp = static_cast<std::size_t>(p);
    std::set<PBWMonomial> symbols;
    std::size_t total = 1;
    for (int k = 0; k < p; ++k) total *= m;
    std::vector<std::size_t> w(pp, 0);
    auto visit = [&](const std::vector<std::size_t>& letters) {
      EnvElement nf = u.word(letters);
      std::vector<std::size_t> sorted = letters;
      std::sort(sorted.begin(), sorted.end());
      PBWMonomial sym(sorted);
      EnvElement top = nf.layer(pp);
      bool ok = nf.filtration_degree() == p && top == EnvElement::monomial(u.base(), sym, LaurentPoly::one(u.base()));
      layers.expect(ok, [&] { return "symbol of word " + format_word(sym, s.names()) + " is " + u.format(top); });
      symbols.insert(sym);
    };
    if (total <= 4096) {
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t pos = 0; pos < pp; ++pos, c /= m) w[pos] = c % m;
        visit(w);
      }
    } else {
      for (const auto& sorted : filtration_layer(m, pp).basis) {
        std::vector<std::size_t> perm = sorted.letters();
        std::shuffle(perm.begin(), perm.end(), rng.engine());
        visit(perm);
      }
    }
    const std::size_t expected = symmetric_power_rank(m, pp);
    layers.expect(symbols.size() == expected && filtration_layer(m, pp).basis.size() == expected, [&] {
      return "degree " + std::to_string(p) + ": " + std::to_string(symbols.size()) + " symbols, expected " +
             std::to_string(expected);
    });
  }

  Report r;
  for (auto* acc : {&pairs, &assoc, &layers}) r.add(acc->result());
  return r;
}

}  // namespace lra
