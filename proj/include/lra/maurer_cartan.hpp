#pragma once

// Exterior calculus of a Lie-Rinehart algebra with free L of rank m.
//
// Lambda_A L and Alt_A(L, A) = Lambda_A L* share one representation: a map
// from strictly increasing index tuples to coefficients in A. For forms the
// tuple (i1 < .. < ip) holds omega(e_i1, .., e_ip); for multivectors the
// coefficient of e_i1 ^ .. ^ e_ip. Conventions:
//   d omega (a_0..a_p) = sum_i (-1)^i a_i(omega(..^i..))
//                      + sum_{i<j} (-1)^{i+j} omega([a_i, a_j], ..^i..^j..)
//   Schouten bracket: Gerstenhaber degree p-1, [X, f] = X(f), [f, X] = -X(f),
//   [P, Q ^ R] = [P, Q] ^ R + (-1)^{(p-1)q} Q ^ [P, R].

#include "lra/hopf.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lra {

using IndexTuple = std::vector<std::size_t>;

class Exterior {
 public:
  using Terms = std::map<IndexTuple, LaurentPoly>;

  Exterior() = default;
  Exterior(CommAlgebra alg, std::size_t rank) : alg_(std::move(alg)), rank_(rank) {}

  static Exterior scalar(const LaurentPoly& a, std::size_t rank) {
    Exterior x(a.algebra(), rank);
    x.add_term({}, a);
    return x;
  }
  /// a e_{i1} ^ .. ^ e_{ip} for indices in any order.
  static Exterior monomial(const CommAlgebra& alg, std::size_t rank, IndexTuple idx, const LaurentPoly& a) {
    Exterior x(alg, rank);
    x.add_term(std::move(idx), a);
    return x;
  }
  static Exterior from_lr(const CommAlgebra& alg, const LRElement& u) {
    Exterior x(alg, u.rank());
    for (std::size_t i = 0; i < u.rank(); ++i) x.add_term({i}, u[i]);
    return x;
  }

  const CommAlgebra& algebra() const { return alg_; }
  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Sorts idx, tracking the sign; returns 0 on a repeated index.
  static int canonicalize(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
      for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
        if (idx[j - 1] == idx[j]) return 0;
        std::swap(idx[j - 1], idx[j]);
        sign = -sign;
      }
    return sign;
  }

  void add_term(IndexTuple idx, const LaurentPoly& a) {
    for (std::size_t i : idx)
      if (i >= rank_) throw std::out_of_range("exterior index");
    int sign = canonicalize(idx);
    if (sign == 0 || a.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, sign > 0 ? a : -a);
    if (!inserted) {
      it->second += sign > 0 ? a : -a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Coefficient at an arbitrary ordering of indices, with sign.
  LaurentPoly component(IndexTuple idx) const {
    int sign = canonicalize(idx);
    if (sign == 0) return LaurentPoly(alg_);
    auto it = terms_.find(idx);
    if (it == terms_.end()) return LaurentPoly(alg_);
    return sign > 0 ? it->second : -it->second;
  }

  Exterior grade_part(std::size_t p) const {
    Exterior out(alg_, rank_);
    for (const auto& [k, a] : terms_)
      if (k.size() == p) out.terms_.emplace(k, a);
    return out;
  }

  Exterior& operator+=(const Exterior& o) {
    for (const auto& [k, a] : o.terms_) add_term(k, a);
    return *this;
  }
  Exterior& operator-=(const Exterior& o) {
    for (const auto& [k, a] : o.terms_) add_term(k, -a);
    return *this;
  }
  friend Exterior operator+(Exterior x, const Exterior& y) { return x += y; }
  friend Exterior operator-(Exterior x, const Exterior& y) { return x -= y; }
  friend Exterior operator-(Exterior x) {
    for (auto& [k, a] : x.terms_) a = -a;
    return x;
  }
  friend Exterior operator*(const LaurentPoly& c, const Exterior& x) {
    Exterior out(x.alg_, x.rank_);
    for (const auto& [k, a] : x.terms_) out.add_term(k, c * a);
    return out;
  }
  friend Exterior operator*(const Rational& c, const Exterior& x) {
    Exterior out(x.alg_, x.rank_);
    for (const auto& [k, a] : x.terms_) out.add_term(k, c * a);
    return out;
  }
  friend bool operator==(const Exterior& x, const Exterior& y) {
    return x.rank_ == y.rank_ && x.alg_ == y.alg_ && x.terms_ == y.terms_;
  }

 private:
  CommAlgebra alg_;
  std::size_t rank_ = 0;
  Terms terms_;
};

using MultiVector = Exterior;
using AltForm = Exterior;

inline Exterior wedge(const Exterior& x, const Exterior& y) {
  Exterior out(x.algebra(), x.rank());
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) {
      IndexTuple k = i;
      k.insert(k.end(), j.begin(), j.end());
      out.add_term(std::move(k), a * b);
    }
  return out;
}

inline std::string format(const Exterior& x, const std::vector<std::string>& names) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [k, a] = *it;
    std::string word;
    for (std::size_t i : k) word += (word.empty() ? "" : "^") + names.at(i);
    std::string term = k.empty()                          ? a.to_string()
                       : a == LaurentPoly::one(a.algebra()) ? word
                       : a.size() == 1                     ? a.to_string() + "*" + word
                                                           : "(" + a.to_string() + ")*" + word;
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

/// Chevalley-Eilenberg-Rinehart differential on Alt_A(L, A), term by term on grades.
inline AltForm ce_differential(const LieRinehartAlgebra& s, const AltForm& w) {
  const std::size_t m = s.rank();
  AltForm out(s.base(), m);
  std::map<std::size_t, bool> grades;
  for (const auto& [k, a] : w.terms()) grades[k.size()] = true;
  for (const auto& [p, unused] : grades) {
    (void)unused;
    if (p + 1 > m) continue;
    AltForm wp = w.grade_part(p);
    // all (p+1)-subsets J of the basis
    IndexTuple j(p + 1);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t lo) -> void {
      if (pos == p + 1) {
        LaurentPoly v(s.base());
        for (std::size_t i = 0; i <= p; ++i) {
          IndexTuple rest;
          for (std::size_t t = 0; t <= p; ++t)
            if (t != i) rest.push_back(j[t]);
          LaurentPoly term = s.anchor(j[i])(wp.component(rest));
          v += (i % 2 ? -term : term);
        }
        for (std::size_t i = 0; i <= p; ++i)
          for (std::size_t k = i + 1; k <= p; ++k) {
            const LRElement& f = s.bracket(j[i], j[k]);
            IndexTuple rest;
            for (std::size_t t = 0; t <= p; ++t)
              if (t != i && t != k) rest.push_back(j[t]);
            LaurentPoly acc(s.base());
            for (std::size_t l = 0; l < m; ++l) {
              if (f[l].is_zero()) continue;
              IndexTuple args{l};
              args.insert(args.end(), rest.begin(), rest.end());
              acc += f[l] * wp.component(args);
            }
            v += ((i + k) % 2 ? -acc : acc);
          }
        out.add_term(j, v);
        return;
      }
      for (std::size_t i = lo; i < m; ++i) {
        j[pos] = i;
        self(self, pos + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

namespace detail {

/// [b, Q] for a function b.
inline Exterior bracket_function(const LieRinehartAlgebra& s, const LaurentPoly& b, const Exterior& q) {
  Exterior out(s.base(), s.rank());
  for (const auto& [k, c] : q.terms()) {
    // [b, c e_k1 ^ R] = c [b, e_k1 ^ R];  [b, e_i ^ R] = -e_i(b) R - e_i ^ [b, R]
    Exterior acc(s.base(), s.rank());
    for (std::size_t pos = k.size(); pos-- > 0;) {
      IndexTuple tail(k.begin() + static_cast<long>(pos) + 1, k.end());
      Exterior r = Exterior::monomial(s.base(), s.rank(), tail, LaurentPoly::one(s.base()));
      Exterior ei = Exterior::monomial(s.base(), s.rank(), {k[pos]}, LaurentPoly::one(s.base()));
      acc = -(s.anchor(k[pos])(b) * r) - wedge(ei, acc);
    }
    out += c * acc;
  }
  return out;
}

/// [e_j, Q] for a basis element e_j.
inline Exterior bracket_basis(const LieRinehartAlgebra& s, std::size_t j, const Exterior& q) {
  Exterior out(s.base(), s.rank());
  const LaurentPoly one = LaurentPoly::one(s.base());
  for (const auto& [k, c] : q.terms()) {
    // [e_j, c E] = e_j(c) E + c [e_j, E];  [e_j, e_i ^ R] = [e_j, e_i] ^ R + e_i ^ [e_j, R]
    Exterior acc(s.base(), s.rank());
    for (std::size_t pos = k.size(); pos-- > 0;) {
      IndexTuple tail(k.begin() + static_cast<long>(pos) + 1, k.end());
      Exterior r = Exterior::monomial(s.base(), s.rank(), tail, one);
      Exterior ei = Exterior::monomial(s.base(), s.rank(), {k[pos]}, one);
      acc = wedge(Exterior::from_lr(s.base(), s.bracket(j, k[pos])), r) + wedge(ei, acc);
    }
    out += s.anchor(j)(c) * Exterior::monomial(s.base(), s.rank(), k, one) + c * acc;
  }
  return out;
}

}  // namespace detail

/// Schouten bracket on Lambda_A L.
inline MultiVector schouten_bracket(const LieRinehartAlgebra& s, const MultiVector& p, const MultiVector& q) {
  const std::size_t m = s.rank();
  const LaurentPoly one = LaurentPoly::one(s.base());
  MultiVector out(s.base(), m);
  for (const auto& [kp, a] : p.terms()) {
    const std::size_t deg = kp.size();
    const MultiVector pt = MultiVector::monomial(s.base(), m, kp, a);
    // [P, b] = (-1)^p [b, P],  [P, e_j] = -[e_j, P]
    auto with_function = [&](const LaurentPoly& b) {
      MultiVector r = detail::bracket_function(s, b, pt);
      return deg % 2 ? -r : r;
    };
    auto with_basis = [&](std::size_t j) { return -detail::bracket_basis(s, j, pt); };
    for (const auto& [kq, b] : q.terms()) {
      // [P, b E] = [P, b] ^ E + b [P, E];  [P, e_j ^ R] = [P, e_j] ^ R + (-1)^{p-1} e_j ^ [P, R]
      MultiVector acc(s.base(), m);
      for (std::size_t pos = kq.size(); pos-- > 0;) {
        IndexTuple tail(kq.begin() + static_cast<long>(pos) + 1, kq.end());
        MultiVector r = MultiVector::monomial(s.base(), m, tail, one);
        MultiVector ej = MultiVector::monomial(s.base(), m, {kq[pos]}, one);
        MultiVector second = wedge(ej, acc);
        acc = wedge(with_basis(kq[pos]), r) + (deg % 2 ? second : -second);
      }
      out += wedge(with_function(b), MultiVector::monomial(s.base(), m, kq, one)) + b * acc;
    }
  }
  return out;
}

/// A Lie-Rinehart structure (A, D) on the dual basis of L.
struct DualStructure {
  LieRinehartAlgebra algebra;

  /// Zero bracket and zero anchor; names are the basis names of L with a leading "d".
  static DualStructure zero(const LieRinehartAlgebra& s) {
    const std::size_t m = s.rank();
    std::vector<std::string> names;
    for (const auto& n : s.names()) names.push_back("d" + n);
    std::vector<std::vector<LRElement>> table(m, std::vector<LRElement>(m, LRElement(s.base(), m)));
    return DualStructure{LieRinehartAlgebra(s.base(), std::move(names), std::move(table),
                                            std::vector<Derivation>(m, Derivation(s.base())))};
  }
};

/// d_* on Lambda_A L = Alt_A(D, A).
inline MultiVector dual_differential(const DualStructure& d, const MultiVector& p) {
  return ce_differential(d.algebra, p);
}

inline Exterior random_exterior(Sampler& rng, const CommAlgebra& alg, std::size_t rank, std::size_t grade,
                                int max_degree = 2, int max_terms = 2) {
  Exterior x(alg, rank);
  if (grade > rank) return x;
  int n = rng.uniform(1, max_terms);
  for (int t = 0; t < n; ++t) {
    IndexTuple idx;
    std::vector<std::size_t> pool(rank);
    for (std::size_t i = 0; i < rank; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng.engine());
    idx.assign(pool.begin(), pool.begin() + static_cast<long>(grade));
    x.add_term(std::move(idx), random_poly(rng, alg, max_degree, 2));
  }
  return x;
}

/// d^2 = 0 and the Gerstenhaber identities of the Schouten bracket.
inline Report check_gerstenhaber(const LieRinehartAlgebra& s, std::size_t samples = 20, std::uint64_t seed = 0) {
  const std::size_t m = s.rank();
  const CommAlgebra& a = s.base();
  const auto& names = s.names();
  Sampler rng(seed);
  auto fmt = [&](const Exterior& x) { return format(x, names); };

  CheckAccumulator dd("mc.d_squared");
  for (std::size_t p = 0; p < std::max<std::size_t>(m, 1); ++p) {
    for (std::size_t n = 0; n < samples; ++n) {
      AltForm w = random_exterior(rng, a, m, p);
      AltForm ddw = ce_differential(s, ce_differential(s, w));
      dd.expect(ddw.is_zero(), [&] { return "omega = " + fmt(w) + ": d d omega = " + fmt(ddw); });
    }
  }

  CheckAccumulator restrict_("schouten.restriction");
  for (std::size_t n = 0; n < samples; ++n) {
    LRElement u = random_lr_element(rng, s, 2), v = random_lr_element(rng, s, 2);
    LaurentPoly f = random_poly(rng, a, 2, 3);
    Exterior lhs = schouten_bracket(s, Exterior::from_lr(a, u), Exterior::from_lr(a, v));
    restrict_.expect(lhs == Exterior::from_lr(a, lr_bracket(s, u, v)), [&] { return "grade (1,1): " + fmt(lhs); });
    Exterior act = schouten_bracket(s, Exterior::from_lr(a, u), Exterior::scalar(f, m));
    restrict_.expect(act == Exterior::scalar(s.act(u, f), m), [&] { return "grade (1,0): " + fmt(act); });
  }

  auto gdeg = [](std::size_t p) { return static_cast<long>(p) - 1; };
  auto sign = [](long e) { return e % 2 == 0 ? 1 : -1; };

  CheckAccumulator anti("schouten.antisymmetry");
  CheckAccumulator jac("schouten.jacobi");
  for (std::size_t n = 0; n < samples; ++n) {
    std::size_t p = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(std::min<std::size_t>(m, 3))));
    std::size_t q = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(std::min<std::size_t>(m, 3))));
    Exterior x = random_exterior(rng, a, m, p), y = random_exterior(rng, a, m, q);
    Exterior sum = schouten_bracket(s, x, y) + Rational(sign(gdeg(p) * gdeg(q))) * schouten_bracket(s, y, x);
    anti.expect(sum.is_zero(), [&] { return "P = " + fmt(x) + ", Q = " + fmt(y) + ": " + fmt(sum); });

    std::size_t r_max = 4 - std::min<std::size_t>(4, p + q);
    std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(std::min(r_max, m))));
    if (p + q + r > 4) continue;
    Exterior z = random_exterior(rng, a, m, r);
    auto term = [&](const Exterior& u, std::size_t pu, const Exterior& v, const Exterior& w, std::size_t pw) {
      return Rational(sign(gdeg(pu) * gdeg(pw))) * schouten_bracket(s, u, schouten_bracket(s, v, w));
    };
    Exterior cyc = term(x, p, y, z, r) + term(y, q, z, x, p) + term(z, r, x, y, q);
    jac.expect(cyc.is_zero(),
               [&] { return "P = " + fmt(x) + ", Q = " + fmt(y) + ", R = " + fmt(z) + ": " + fmt(cyc); });
  }

  Report rep;
  for (auto* c : {&dd, &restrict_, &anti, &jac}) rep.add(c->result());
  return rep;
}

/// The compatibility of (A, L) with a dual structure (A, D), in two forms:
///   bialgebroid.derivation_L    d_*[x, y] = [d_* x, y] + [x, d_* y] for x, y in L
///   bialgebroid.derivation_D    d[x, y]_* = [dx, y]_* + (-1)^{p-1} [x, dy]_* on Lambda_A D
/// The second uses d on Alt_A(L, A) = Lambda_A D and the Schouten bracket of D.
inline Report check_lr_bialgebra(const LieRinehartAlgebra& s, const DualStructure& dual, int max_grade = 2,
                                 std::size_t samples = 20, std::uint64_t seed = 0) {
  const LieRinehartAlgebra& d = dual.algebra;
  Report rep;
  if (d.rank() != s.rank() || !(d.base() == s.base()))
    throw std::invalid_argument("dual structure does not match the rank or base algebra");
  Report dl = check_lr_axioms(d, samples, seed);
  for (auto& c : dl.checks) c.name = "dual." + c.name;
  rep.append(dl);
  if (!dl.passed()) {
    rep.add(not_applicable("bialgebroid.derivation_L", "dual structure is not Lie-Rinehart"));
    rep.add(not_applicable("bialgebroid.derivation_D", "dual structure is not Lie-Rinehart"));
    return rep;
  }

  const std::size_t m = s.rank();
  const CommAlgebra& a = s.base();
  Sampler rng(seed);

  CheckAccumulator form_l("bialgebroid.derivation_L");
  std::vector<Exterior> xs;
  for (std::size_t i = 0; i < m; ++i) {
    xs.push_back(Exterior::from_lr(s.base(), s.basis(i)));
    for (const auto& g : generator_probes(a)) xs.push_back(g * Exterior::from_lr(s.base(), s.basis(i)));
  }
  std::vector<std::pair<Exterior, Exterior>> pairs;
  for (const auto& x : xs)
    for (const auto& y : xs) pairs.emplace_back(x, y);
  for (std::size_t n = 0; n < samples; ++n)
    pairs.emplace_back(random_exterior(rng, a, m, 1), random_exterior(rng, a, m, 1));
  for (const auto& [x, y] : pairs) {
    Exterior lhs = dual_differential(dual, schouten_bracket(s, x, y));
    Exterior rhs = schouten_bracket(s, dual_differential(dual, x), y) + schouten_bracket(s, x, dual_differential(dual, y));
    form_l.expect(lhs == rhs, [&] {
      return "x = " + format(x, s.names()) + ", y = " + format(y, s.names()) + ": " + format(lhs - rhs, s.names());
    });
  }

  CheckAccumulator form_d("bialgebroid.derivation_D");
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(max_grade), m);
  for (std::size_t p = 0; p <= top; ++p)
    for (std::size_t q = 0; q <= top; ++q) {
      std::vector<std::pair<Exterior, Exterior>> pq;
      if (p <= 1 && q <= 1) {
        // basis and generator multiples in low grades
        std::vector<Exterior> lp, lq;
        auto fill = [&](std::size_t g, std::vector<Exterior>& v) {
          if (g == 0) {
            for (const auto& f : generator_probes(a)) v.push_back(Exterior::scalar(f, m));
          } else {
            for (std::size_t i = 0; i < m; ++i) v.push_back(Exterior::from_lr(s.base(), d.basis(i)));
          }
        };
        fill(p, lp);
        fill(q, lq);
        for (const auto& x : lp)
          for (const auto& y : lq) pq.emplace_back(x, y);
      }
      for (std::size_t n = 0; n < samples; ++n) pq.emplace_back(random_exterior(rng, a, m, p), random_exterior(rng, a, m, q));
      for (const auto& [x, y] : pq) {
        Exterior lhs = ce_differential(s, schouten_bracket(d, x, y));
        Exterior second = schouten_bracket(d, x, ce_differential(s, y));
        Exterior rhs = schouten_bracket(d, ce_differential(s, x), y) + (p % 2 ? second : -second);
        form_d.expect(lhs == rhs, [&] {
          return "x = " + format(x, d.names()) + ", y = " + format(y, d.names()) + ": " + format(lhs - rhs, d.names());
        });
      }
    }

  rep.add(form_l.result());
  rep.add(form_d.result());
  return rep;
}

/// delta(e_c) = sum_{a,b} Delta_A(g^{ab}_c) e_a (x) e_b where [xi^a, xi^b] = sum_c g^{ab}_c xi^c.
inline std::vector<TensorEnvElement> cobracket_perturbation(const LieRinehartAlgebra& s, const DualStructure& dual) {
  const std::size_t m = s.rank();
  const HopfStructure& h = *s.hopf();
  const CommAlgebra two = s.base().tensor_power(2);
  std::vector<TensorEnvElement> out;
  for (std::size_t c = 0; c < m; ++c) {
    EnvElement delta(two);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const LaurentPoly& g = dual.algebra.bracket(a, b)[c];
        if (!g.is_zero()) delta.add_term(PBWMonomial({a, m + b}), h.coproduct(g));
      }
    out.emplace_back(m, 2, std::move(delta));
  }
  return out;
}

/// Coalgebra laws for the coproduct perturbed by the cobracket of the dual
/// structure. Measures only; every check is non-gating.
inline Report conjecture_probe(const LieRinehartAlgebra& s, const TensorActionSpec& ts, const DualStructure& dual,
                               int max_degree = 2, std::size_t samples = 20, std::uint64_t seed = 0) {
  static const char* const names[] = {"probe.coproduct_multiplicative", "probe.coassociativity", "probe.counit_left",
                                      "probe.counit_right", "probe.counit_multiplicative", "probe.graded_coproduct"};
  Report rep;
  Report bi = check_bi_lr(s, ts, 20, seed);
  if (!bi.passed()) {
    for (const char* n : names) rep.add(not_applicable(n, "bi-LR check failed, " + detail::gate_reason(bi), false));
    return rep;
  }
  HopfEnveloping h(s, cobracket_perturbation(s, dual));
  BialgebraSamples smp = bialgebra_samples(h.u(), max_degree, samples, seed);
  rep.append(coalgebra_battery(h, smp, "probe", false));
  return rep;
}

}  // namespace lra
