#pragma once

// Lie algebras by structure constants, Lie-Rinehart algebras (A, L) with L a
// free A-module on a named basis, and the verifiers for the Lie-Rinehart,
// bi-Lie-Rinehart and Hopf-Lie-Rinehart conditions.

#include "lra/commutative.hpp"
#include "lra/report.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lra {

/// Finite dimensional Lie algebra over Q. [x_i, x_j] = sum_k c^k_ij x_k.
class LieAlgebra {
 public:
  using Vector = std::map<std::size_t, Rational>;

  explicit LieAlgebra(std::vector<std::string> basis)
      : basis_(std::move(basis)), table_(basis_.size(), std::vector<Vector>(basis_.size())) {}

  /// Sets [x_i, x_j] = v and [x_j, x_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v) {
    if (i >= rank() || j >= rank()) throw std::out_of_range("Lie basis index");
    Vector cleaned, neg;
    for (const auto& [k, c] : v) {
      if (k >= rank()) throw std::out_of_range("Lie basis index");
      if (sgn(c) != 0) {
        cleaned[k] = c;
        neg[k] = -c;
      }
    }
    if (i == j && !cleaned.empty())
      throw std::invalid_argument("[" + basis_[i] + "," + basis_[i] + "] must vanish");
    table_[i][j] = std::move(cleaned);
    table_[j][i] = std::move(neg);
  }

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Vector& bracket(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

  Vector bracket(const Vector& u, const Vector& v) const {
    Vector out;
    for (const auto& [i, a] : u)
      for (const auto& [j, b] : v)
        for (const auto& [k, c] : table_[i][j]) {
          out[k] += a * b * c;
          if (sgn(out[k]) == 0) out.erase(k);
        }
    return out;
  }

  /// First basis triple (i<j<k) violating the Jacobi identity, if any.
  /// Construction does not reject such tables so that the Lie-Rinehart
  /// checkers can be exercised on them.
  std::optional<std::array<std::size_t, 3>> jacobi_witness() const {
    auto unit = [](std::size_t i) { return Vector{{i, Rational(1)}}; };
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = i + 1; j < rank(); ++j)
        for (std::size_t k = j + 1; k < rank(); ++k) {
          Vector sum = bracket(unit(i), bracket(unit(j), unit(k)));
          for (const auto& [idx, c] : bracket(unit(j), bracket(unit(k), unit(i)))) sum[idx] += c;
          for (const auto& [idx, c] : bracket(unit(k), bracket(unit(i), unit(j)))) sum[idx] += c;
          for (const auto& [idx, c] : sum)
            if (sgn(c) != 0) return std::array<std::size_t, 3>{i, j, k};
        }
    return std::nullopt;
  }

 private:
  std::vector<std::string> basis_;
  std::vector<std::vector<Vector>> table_;
};

/// sum_i a_i e_i in a free A-module of rank m.
class LRElement {
 public:
  LRElement() = default;
  LRElement(const CommAlgebra& alg, std::size_t rank) : coeffs_(rank, LaurentPoly(alg)) {}
  explicit LRElement(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {}

  static LRElement basis(const CommAlgebra& alg, std::size_t rank, std::size_t i) {
    LRElement e(alg, rank);
    e.coeffs_.at(i) = LaurentPoly::one(alg);
    return e;
  }

  std::size_t rank() const { return coeffs_.size(); }
  const LaurentPoly& operator[](std::size_t i) const { return coeffs_.at(i); }
  LaurentPoly& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<LaurentPoly>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  LRElement& operator+=(const LRElement& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  LRElement& operator-=(const LRElement& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend LRElement operator+(LRElement a, const LRElement& b) { return a += b; }
  friend LRElement operator-(LRElement a, const LRElement& b) { return a -= b; }
  friend LRElement operator-(LRElement a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend LRElement operator*(const LaurentPoly& a, LRElement u) {
    for (auto& c : u.coeffs_) c = a * c;
    return u;
  }
  friend bool operator==(const LRElement&, const LRElement&) = default;

 private:
  void check_rank(const LRElement& o) const {
    if (o.rank() != rank()) throw std::invalid_argument("Lie-Rinehart elements of different rank");
  }
  std::vector<LaurentPoly> coeffs_;
};

/// (A, L, anchor, bracket) with L free on e_1..e_m. Brackets of general
/// elements are defined from the basis table through
///   [a e_i, b e_j] = ab[e_i,e_j] + a e_i(b) e_j - b e_j(a) e_i,
/// so that identity holds by construction; the remaining content (Jacobi,
/// anchor compatibility) is what check_lr_axioms verifies.
class LieRinehartAlgebra {
 public:
  LieRinehartAlgebra(CommAlgebra base, std::vector<std::string> names, std::vector<std::vector<LRElement>> table,
                     std::vector<Derivation> anchor, std::optional<HopfStructure> hopf = std::nullopt)
      : base_(std::move(base)),
        names_(std::move(names)),
        table_(std::move(table)),
        anchor_(std::move(anchor)),
        hopf_(std::move(hopf)) {
    const std::size_t m = names_.size();
    if (table_.size() != m || anchor_.size() != m)
      throw std::invalid_argument("bracket table and anchor must match the basis");
    for (std::size_t i = 0; i < m; ++i) {
      if (table_[i].size() != m) throw std::invalid_argument("bracket table must be square");
      if (!(anchor_[i].algebra() == base_)) throw std::invalid_argument("anchor of '" + names_[i] + "' is not a derivation of the base");
      for (std::size_t j = 0; j < m; ++j) {
        const LRElement& f = table_[i][j];
        if (f.rank() != m) throw std::invalid_argument("bracket value has wrong rank");
        for (const auto& c : f.coefficients()) c.same_algebra(LaurentPoly(base_));
        if (!(f == -table_[j][i]))
          throw std::invalid_argument("bracket table is not antisymmetric at [" + names_[i] + "," + names_[j] + "]");
      }
    }
    if (hopf_ && !(hopf_->algebra() == base_)) throw std::invalid_argument("Hopf structure on a different algebra");
  }

  const CommAlgebra& base() const { return base_; }
  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const LRElement& bracket(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  const std::vector<std::vector<LRElement>>& table() const { return table_; }
  const Derivation& anchor(std::size_t i) const { return anchor_.at(i); }
  const std::vector<Derivation>& anchors() const { return anchor_; }
  const std::optional<HopfStructure>& hopf() const { return hopf_; }

  LieRinehartAlgebra with_hopf(std::optional<HopfStructure> h) const {
    return LieRinehartAlgebra(base_, names_, table_, anchor_, std::move(h));
  }

  LRElement zero() const { return LRElement(base_, rank()); }
  LRElement basis(std::size_t i) const { return LRElement::basis(base_, rank(), i); }

  /// Anchor of a general element: (sum a_i e_i)(b) = sum a_i e_i(b).
  LaurentPoly act(const LRElement& u, const LaurentPoly& b) const {
    LaurentPoly out(base_);
    for (std::size_t i = 0; i < rank(); ++i)
      if (!u[i].is_zero()) out += u[i] * anchor_[i](b);
    return out;
  }

  Derivation anchor_of(const LRElement& u) const {
    Derivation d(base_);
    for (std::size_t i = 0; i < rank(); ++i)
      if (!u[i].is_zero()) d = d + u[i] * anchor_[i];
    return d;
  }

  std::optional<std::size_t> find_basis(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }

  std::string format(const LRElement& u) const {
    std::string out;
    for (std::size_t i = 0; i < rank(); ++i) {
      const LaurentPoly& c = u[i];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (c == LaurentPoly::one(base_))
        out += names_[i];
      else if (c.size() == 1)
        out += c.to_string() + "*" + names_[i];
      else
        out += "(" + c.to_string() + ")*" + names_[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  CommAlgebra base_;
  std::vector<std::string> names_;
  std::vector<std::vector<LRElement>> table_;
  std::vector<Derivation> anchor_;
  std::optional<HopfStructure> hopf_;
};

inline LRElement lr_bracket(const LieRinehartAlgebra& s, const LRElement& u, const LRElement& v) {
  if (u.rank() != s.rank() || v.rank() != s.rank()) throw std::invalid_argument("element not over this structure");
  LRElement out = s.zero();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < s.rank(); ++j) {
      if (v[j].is_zero()) continue;
      out += (u[i] * v[j]) * s.bracket(i, j);
      out[j] += u[i] * s.anchor(i)(v[j]);
      out[i] -= v[j] * s.anchor(j)(u[i]);
    }
  }
  return out;
}

inline LRElement random_lr_element(Sampler& rng, const LieRinehartAlgebra& s, int max_degree, int max_terms = 2) {
  LRElement u = s.zero();
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (s.rank() == 1 || rng.coin(0.6)) u[i] = random_poly(rng, s.base(), max_degree, max_terms);
  return u;
}

/// Generators of A and, for invertible ones, their inverses.
inline std::vector<LaurentPoly> generator_probes(const CommAlgebra& a) {
  std::vector<LaurentPoly> out;
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    out.push_back(LaurentPoly::variable(a, v));
    if (a.invertible(v)) out.push_back(LaurentPoly::variable(a, v, -1));
  }
  return out;
}

/// Verifies the Lie-Rinehart identities: the A-linearity of the anchor, the
/// Leibniz rule for the bracket, Jacobi on basis triples and on random
/// triples, and compatibility of the anchor with brackets.
inline Report check_lr_axioms(const LieRinehartAlgebra& s, std::size_t samples = 100, std::uint64_t seed = 0) {
  const CommAlgebra& a = s.base();
  const std::size_t m = s.rank();
  auto gens = generator_probes(a);
  std::vector<LaurentPoly> coeffs = gens;
  coeffs.push_back(LaurentPoly::one(a));

  CheckAccumulator anchor_lin("lr.anchor_linear"), leibniz("lr.bracket_leibniz"), antisym("lr.antisymmetry"),
      jacobi("lr.jacobi"), compat("lr.anchor_bracket");

  // (a alpha)(b) = a alpha(b)
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& x : coeffs)
      for (const auto& b : gens)
        anchor_lin.expect(s.act(x * s.basis(i), b) == x * s.anchor(i)(b),
                          [&] { return "(" + x.to_string() + "*" + s.name(i) + ")(" + b.to_string() + ")"; });

  // [alpha, a beta] = a[alpha, beta] + alpha(a) beta
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& x : gens) {
        LRElement lhs = lr_bracket(s, s.basis(i), x * s.basis(j));
        LRElement rhs = x * s.bracket(i, j) + s.anchor(i)(x) * s.basis(j);
        leibniz.expect(lhs == rhs, [&] {
          return "[" + s.name(i) + ", " + x.to_string() + "*" + s.name(j) + "] = " + s.format(lhs);
        });
      }

  auto jacobiator = [&](const LRElement& u, const LRElement& v, const LRElement& w) {
    return lr_bracket(s, u, lr_bracket(s, v, w)) + lr_bracket(s, v, lr_bracket(s, w, u)) +
           lr_bracket(s, w, lr_bracket(s, u, v));
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      antisym.expect((lr_bracket(s, s.basis(i), s.basis(j)) + lr_bracket(s, s.basis(j), s.basis(i))).is_zero(),
                     [&] { return "(" + s.name(i) + ", " + s.name(j) + ")"; });
      for (std::size_t k = 0; k < m; ++k) {
        if (!(i < j && j < k)) continue;
        LRElement jac = jacobiator(s.basis(i), s.basis(j), s.basis(k));
        jacobi.expect(jac.is_zero(), [&] {
          return "(" + s.name(i) + ", " + s.name(j) + ", " + s.name(k) + "): jacobiator = " + s.format(jac);
        });
      }
    }
  Sampler rng(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    LRElement u = random_lr_element(rng, s, 3), v = random_lr_element(rng, s, 3), w = random_lr_element(rng, s, 3);
    LRElement jac = jacobiator(u, v, w);
    jacobi.expect(jac.is_zero(), [&] { return "(" + s.format(u) + ", " + s.format(v) + ", " + s.format(w) + ")"; });
    antisym.expect((lr_bracket(s, u, v) + lr_bracket(s, v, u)).is_zero(),
                   [&] { return "(" + s.format(u) + ", " + s.format(v) + ")"; });
  }

  // anchor[e_i, e_j] = [anchor e_i, anchor e_j] on the generators of A
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Derivation lhs = s.anchor_of(s.bracket(i, j));
      Derivation rhs = commutator(s.anchor(i), s.anchor(j));
      for (std::size_t v = 0; v < a.num_vars(); ++v)
        compat.expect(lhs.value(v) == rhs.value(v), [&] {
          return "[" + s.name(i) + "," + s.name(j) + "](" + a.var_name(v) + ") = " + lhs.value(v).to_string() +
                 " but the commutator gives " + rhs.value(v).to_string();
        });
    }

  Report r;
  for (auto* acc : {&anchor_lin, &leibniz, &antisym, &jacobi, &compat}) r.add(acc->result());
  return r;
}

/// A (.) g: free on g's basis, [u x, v y] = uv[x,y] + u x(v) y - v y(u) x,
/// (u x)(a) = u x(a). The Hopf structure of A is the standard one when every
/// generator declares a kind.
inline LieRinehartAlgebra make_crossed_product(const CommAlgebra& a, const LieAlgebra& g,
                                               std::vector<Derivation> action) {
  const std::size_t m = g.rank();
  if (action.size() != m) throw std::invalid_argument("crossed product needs one derivation per Lie basis element");
  std::vector<std::vector<LRElement>> table(m, std::vector<LRElement>(m, LRElement(a, m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [k, c] : g.bracket(i, j)) table[i][j][k] = LaurentPoly::constant(a, c);
  return LieRinehartAlgebra(a, g.basis(), std::move(table), std::move(action), HopfStructure::standard(a));
}

/// Same module, negated bracket, anchor -omega.
inline LieRinehartAlgebra make_opposite(const LieRinehartAlgebra& s) {
  auto table = s.table();
  for (auto& row : table)
    for (auto& f : row) f = -f;
  std::vector<Derivation> anchor;
  for (const auto& d : s.anchors()) anchor.push_back(LaurentPoly::constant(s.base(), -1) * d);
  return LieRinehartAlgebra(s.base(), s.names(), std::move(table), std::move(anchor), s.hopf());
}

/// (phi, psi) : (A, L) -> (A', L'). psi is given on the basis of L and
/// extended either phi-semilinearly, psi(a e_i) = phi(a) psi(e_i), or, for
/// maps between structures over the same algebra, A-linearly.
struct LRMorphism {
  AlgebraMorphism phi;
  std::vector<LRElement> psi;
  bool semilinear = true;

  LRElement operator()(const LRElement& u) const {
    if (psi.empty()) return LRElement{};
    LRElement out(phi.target(), psi.front().rank());
    for (std::size_t i = 0; i < u.rank(); ++i) {
      if (u[i].is_zero()) continue;
      out += (semilinear ? phi(u[i]) : u[i]) * psi.at(i);
    }
    return out;
  }
};

/// Commutativity of the module square, the anchor square and Lie-morphism
/// property on basis/generator data and random samples.
inline Report check_lr_morphism(const LieRinehartAlgebra& src, const LieRinehartAlgebra& tgt, const LRMorphism& f,
                                const std::string& prefix, std::size_t samples = 20, std::uint64_t seed = 0) {
  const CommAlgebra& a = src.base();
  if (!(f.phi.source() == a) || !(f.phi.target() == tgt.base()) || f.psi.size() != src.rank())
    throw std::invalid_argument("morphism does not match its source and target");
  auto fmt_tgt = [&](const LRElement& u) { return tgt.rank() ? tgt.format(u) : std::string("0"); };
  auto image = [&](const LRElement& u) { return tgt.rank() ? f(u) : tgt.zero(); };

  std::vector<LRElement> elems;
  for (std::size_t i = 0; i < src.rank(); ++i) {
    elems.push_back(src.basis(i));
    for (const auto& g : generator_probes(a)) elems.push_back(g * src.basis(i));
  }
  Sampler rng(seed);
  for (std::size_t n = 0; n < samples && src.rank() > 0; ++n) elems.push_back(random_lr_element(rng, src, 2));
  std::vector<LaurentPoly> funcs = generator_probes(a);
  for (std::size_t n = 0; n < samples / 4 + 1; ++n) funcs.push_back(random_poly(rng, a, 2, 2));

  CheckAccumulator module(prefix + ".module_square"), anchor(prefix + ".anchor_square"), lie(prefix + ".lie_morphism");
  for (const auto& u : elems) {
    for (const auto& x : funcs) {
      module.expect(image(x * u) == f.phi(x) * image(u),
                    [&] { return "psi(" + x.to_string() + " * (" + src.format(u) + ")) = " + fmt_tgt(image(x * u)); });
      LaurentPoly lhs = f.phi(src.act(u, x));
      LaurentPoly rhs = tgt.rank() ? tgt.act(image(u), f.phi(x)) : LaurentPoly(tgt.base());
      anchor.expect(lhs == rhs, [&] {
        return "phi((" + src.format(u) + ")(" + x.to_string() + ")) = " + lhs.to_string() + " but psi(" +
               src.format(u) + ")(phi(" + x.to_string() + ")) = " + rhs.to_string();
      });
    }
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size() && j < i + 8; ++j) {
      const auto &u = elems[i], &v = elems[j];
      LRElement lhs = image(lr_bracket(src, u, v));
      LRElement rhs = tgt.rank() ? lr_bracket(tgt, image(u), image(v)) : tgt.zero();
      lie.expect(lhs == rhs, [&] {
        return "psi[" + src.format(u) + ", " + src.format(v) + "] = " + fmt_tgt(lhs) + " but [psi(" + src.format(u) + "), psi(" + src.format(v) + ")] = " +
               fmt_tgt(rhs);
      });
    }
  Report r;
  for (auto* acc : {&module, &anchor, &lie}) r.add(acc->result());
  return r;
}

/// Raised by induce() when phi is not a morphism of L-modules or the action
/// on the target is not a Lie action.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(const std::string& what, Report report) : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Structure on A' (x)_A L with basis 1 (x) e_i: bracket phi(f^k_ij), anchor
/// omega_tilde. No hypothesis is checked.
inline LieRinehartAlgebra induced_structure(const LieRinehartAlgebra& s, const AlgebraMorphism& phi,
                                            std::vector<Derivation> omega_tilde) {
  const std::size_t m = s.rank();
  const CommAlgebra& tgt = phi.target();
  if (omega_tilde.size() != m) throw std::invalid_argument("one target derivation per basis element required");
  std::vector<std::vector<LRElement>> table(m, std::vector<LRElement>(m, LRElement(tgt, m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) table[i][j][k] = phi(s.bracket(i, j)[k]);
  return LieRinehartAlgebra(tgt, s.names(), std::move(table), std::move(omega_tilde));
}

/// Hypotheses for inducing along phi: omega_tilde is a Lie action of L on A'
/// (through phi on structure functions) and phi(alpha(a)) = omega_tilde(alpha)(phi(a)).
inline Report check_induce_hypothesis(const LieRinehartAlgebra& s, const AlgebraMorphism& phi,
                                      const std::vector<Derivation>& omega_tilde, const std::string& prefix = "induce") {
  const std::size_t m = s.rank();
  const CommAlgebra& tgt = phi.target();
  CheckAccumulator equiv(prefix + ".equivariance"), action(prefix + ".lie_action");
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& g : generator_probes(s.base())) {
      LaurentPoly lhs = phi(s.anchor(i)(g)), rhs = omega_tilde[i](phi(g));
      equiv.expect(lhs == rhs, [&] {
        return "phi(" + s.name(i) + "(" + g.to_string() + ")) = " + lhs.to_string() + " but " + s.name(i) + "(phi(" +
               g.to_string() + ")) = " + rhs.to_string();
      });
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Derivation lhs(tgt);
      for (std::size_t k = 0; k < m; ++k) lhs = lhs + phi(s.bracket(i, j)[k]) * omega_tilde[k];
      Derivation rhs = commutator(omega_tilde[i], omega_tilde[j]);
      action.expect(lhs == rhs, [&] {
        return "action of [" + s.name(i) + "," + s.name(j) + "] is " + lhs.to_string() + " but the commutator is " +
               rhs.to_string();
      });
    }
  Report r;
  r.add(equiv.result());
  r.add(action.result());
  return r;
}

/// A' (x)_A L with the structure induced along phi, checked. Throws
/// HypothesisError with the failing report otherwise.
inline LieRinehartAlgebra induce(const LieRinehartAlgebra& s, const AlgebraMorphism& phi,
                                 std::vector<Derivation> omega_tilde) {
  if (!(phi.source() == s.base())) throw std::invalid_argument("phi must start at the base algebra");
  Report hyp = check_induce_hypothesis(s, phi, omega_tilde);
  if (!hyp.passed()) {
    const auto* w = hyp.first_failure();
    throw HypothesisError("induced structure hypothesis fails: " + w->name + ": " + w->witness, hyp);
  }
  return induced_structure(s, phi, std::move(omega_tilde));
}

/// (phi, phi (x) Id) : (A, L) -> (A', A' (x)_A L).
inline LRMorphism induced_morphism(const LieRinehartAlgebra& s, const AlgebraMorphism& phi) {
  std::vector<LRElement> psi;
  for (std::size_t i = 0; i < s.rank(); ++i) psi.push_back(LRElement::basis(phi.target(), s.rank(), i));
  return LRMorphism{phi, std::move(psi), true};
}

/// L (x) A (+) ... (+) A (x) L over A^{(x)k}: rank k*m, basis index
/// slot*m + i, slots mutually commuting, slot s acting on the slot-s copy of A.
inline LieRinehartAlgebra tensor_power(const LieRinehartAlgebra& s, int k) {
  const std::size_t m = s.rank(), km = m * static_cast<std::size_t>(k);
  const CommAlgebra tgt = s.base().tensor_power(k);
  std::vector<std::string> names;
  std::vector<std::vector<LRElement>> table(km, std::vector<LRElement>(km, LRElement(tgt, km)));
  std::vector<Derivation> anchor;
  for (int sl = 0; sl < k; ++sl)
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(s.name(i) + std::string(k > 1 ? static_cast<std::size_t>(sl) + 1 : 0, '\''));
      anchor.push_back(slot_derivation(s.anchor(i), k, sl));
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l)
          table[sl * m + i][sl * m + j][sl * m + l] = shift_slots(s.bracket(i, j)[l], tgt, sl);
    }
  return LieRinehartAlgebra(tgt, std::move(names), std::move(table), std::move(anchor));
}

/// Action of L on A (x) A given on basis elements; a general element acts
/// through the coproduct of its coefficients, (a e_i)(p) = D(a) e_i(p).
struct TensorActionSpec {
  std::vector<Derivation> actions;

  /// e_i(b (x) c) = e_i(b) (x) c + b (x) e_i(c)
  static TensorActionSpec diagonal(const LieRinehartAlgebra& s) {
    TensorActionSpec ts;
    for (const auto& d : s.anchors()) ts.actions.push_back(diagonal_derivation(d, 2));
    return ts;
  }
};

inline LaurentPoly tensor_action(const LieRinehartAlgebra& s, const TensorActionSpec& ts, const LRElement& u,
                                 const LaurentPoly& p) {
  const auto& h = s.hopf();
  if (!h) throw std::invalid_argument("tensor action needs a Hopf structure on the base");
  LaurentPoly out(p.algebra());
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (!u[i].is_zero()) out += h->coproduct(u[i]) * ts.actions.at(i)(p);
  return out;
}

/// Bi-Lie-Rinehart verification. Checks, each reported separately:
///   bi.ob3                     (a e_i)(b (x) c) = D(a) e_i(b (x) c)
///   bi.tensor_action_lie       the action on A (x) A is a Lie action
///   bi.coproduct_equivariance  e_i(D(a)) = D(e_i(a))
///   bi.counit_morphism         e(e_i(a)) = 0, i.e. (e, 0) is a morphism
///   bi.ob4_morphism.*          (D, D (x) Id) into the induced L(x) is a morphism
///   bi.ob5_morphism.*          L(x) -> L (x) A (+) A (x) L, 1 (x) x |-> (x, x), is a morphism
inline Report check_bi_lr(const LieRinehartAlgebra& s, const TensorActionSpec& ts, std::size_t samples = 20,
                          std::uint64_t seed = 0) {
  Report r;
  const auto& h = s.hopf();
  static const char* names[] = {"bi.ob3", "bi.tensor_action_lie", "bi.coproduct_equivariance", "bi.counit_morphism"};
  if (!h) {
    for (const char* n : names) r.add(not_applicable(n, "base algebra has no complete Hopf declaration"));
    return r;
  }
  if (ts.actions.size() != s.rank()) throw std::invalid_argument("tensor action needs one derivation per basis element");
  const CommAlgebra& a = s.base();
  const CommAlgebra two = a.tensor_power(2);
  const std::size_t m = s.rank();
  Sampler rng(seed);

  auto gens = generator_probes(a);
  std::vector<LaurentPoly> coeffs = gens;
  coeffs.push_back(LaurentPoly::one(a));
  std::vector<LaurentPoly> pure;  // b (x) c
  for (const auto& b : coeffs)
    for (const auto& c : coeffs) pure.push_back(shift_slots(b, two, 0) * shift_slots(c, two, 1));
  for (std::size_t n = 0; n < samples; ++n) pure.push_back(random_poly(rng, two, 2, 3));

  CheckAccumulator ob3("bi.ob3");
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<LaurentPoly> as = coeffs;
    for (std::size_t n = 0; n < samples / 4 + 1; ++n) as.push_back(random_poly(rng, a, 2, 2));
    for (const auto& x : as)
      for (const auto& p : pure) {
        LaurentPoly lhs = tensor_action(s, ts, x * s.basis(i), p);
        LaurentPoly rhs = h->coproduct(x) * ts.actions[i](p);
        ob3.expect(lhs == rhs, [&] {
          return "(" + x.to_string() + "*" + s.name(i) + ")(" + p.to_string() + ") = " + lhs.to_string() + " != " +
                 rhs.to_string();
        });
      }
  }
  r.add(ob3.result());

  CheckAccumulator lie("bi.tensor_action_lie");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Derivation lhs(two);
      for (std::size_t k = 0; k < m; ++k) lhs = lhs + h->coproduct(s.bracket(i, j)[k]) * ts.actions[k];
      Derivation rhs = commutator(ts.actions[i], ts.actions[j]);
      lie.expect(lhs == rhs, [&] { return "[" + s.name(i) + "," + s.name(j) + "] acts as " + lhs.to_string(); });
    }
  r.add(lie.result());

  Report hyp = check_induce_hypothesis(s, h->coproduct, ts.actions, "bi");
  CheckResult equiv = hyp.checks[0];
  equiv.name = "bi.coproduct_equivariance";
  r.add(equiv);

  CheckAccumulator counit("bi.counit_morphism");
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& g : gens) {
      LaurentPoly v = h->counit(s.anchor(i)(g));
      counit.expect(v.is_zero(), [&] {
        return "e(" + s.name(i) + "(" + g.to_string() + ")) = e(" + s.anchor(i)(g).to_string() + ") = " +
               v.to_string() + " != 0";
      });
    }
  r.add(counit.result());

  // (ob4): (D, D (x) Id) : (A, L) -> (A (x) A, L(x))
  LieRinehartAlgebra l_tensor = induced_structure(s, h->coproduct, ts.actions);
  r.append(check_lr_morphism(s, l_tensor, induced_morphism(s, h->coproduct), "bi.ob4_morphism", samples, seed));

  // (ob5): L(x) -> L (x) A (+) A (x) L, identity on A (x) A
  LieRinehartAlgebra sum = tensor_power(s, 2);
  std::vector<LRElement> psi;
  for (std::size_t i = 0; i < m; ++i) psi.push_back(sum.basis(i) + sum.basis(m + i));
  r.append(check_lr_morphism(l_tensor, sum, LRMorphism{AlgebraMorphism::identity(two), psi, true}, "bi.ob5_morphism",
                             samples, seed));
  return r;
}

/// Antipode compatibility for U(A, L): S_A commutes with every anchor
/// derivation and leaves the structure functions' contribution invariant,
///   S_A(f^k_ij) = f^k_ij and sum_k e_k(S_A(f^k_ij)) = 0,
/// plus the antipode axioms of A itself. Gated on check_bi_lr.
inline Report check_hopf_lr(const LieRinehartAlgebra& s, const TensorActionSpec& ts, std::size_t samples = 20,
                            std::uint64_t seed = 0) {
  Report r;
  Report bi = check_bi_lr(s, ts, samples, seed);
  if (!bi.passed()) {
    const auto* w = bi.first_failure();
    std::string why = "bi-Lie-Rinehart check failed: " + w->name + ": " + w->witness;
    r.add(not_applicable("hopf.antipode_equivariance", why));
    r.add(not_applicable("hopf.antipode_bracket", why));
    return r;
  }
  const HopfStructure& h = *s.hopf();
  const CommAlgebra& a = s.base();
  Sampler rng(seed);
  std::vector<LaurentPoly> probes = generator_probes(a);
  for (std::size_t n = 0; n < samples; ++n) probes.push_back(random_poly(rng, a, 3, 3));

  CheckAccumulator equiv("hopf.antipode_equivariance");
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (const auto& g : probes) {
      LaurentPoly lhs = h.antipode(s.anchor(i)(g)), rhs = s.anchor(i)(h.antipode(g));
      equiv.expect(lhs == rhs, [&] {
        return "S(" + s.name(i) + "(" + g.to_string() + ")) = " + lhs.to_string() + " but " + s.name(i) + "(S(" +
               g.to_string() + ")) = " + rhs.to_string();
      });
    }
  r.add(equiv.result());

  CheckAccumulator bracket("hopf.antipode_bracket");
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = i + 1; j < s.rank(); ++j) {
      const LRElement& f = s.bracket(i, j);
      LaurentPoly drift(a);
      for (std::size_t k = 0; k < s.rank(); ++k) {
        LaurentPoly sf = h.antipode(f[k]);
        bracket.expect(sf == f[k], [&] {
          return "S applied to the " + s.name(k) + "-coefficient of [" + s.name(i) + "," + s.name(j) + "] gives " +
                 sf.to_string();
        });
        drift += s.anchor(k)(sf);
      }
      bracket.expect(drift.is_zero(), [&] { return "sum_k e_k(S f^k) = " + drift.to_string(); });
    }
  r.add(bracket.result());

  Report ax = check_hopf_axioms_A(h, 2, samples, seed);
  r.add(*ax.find("A.antipode_left"));
  r.add(*ax.find("A.antipode_right"));
  return r;
}

}  // namespace lra
