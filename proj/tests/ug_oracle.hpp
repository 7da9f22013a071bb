#pragma once

// Classical U(g) over Q by brute-force normal ordering of raw words.
// Shares nothing with the rewriting engine except the structure constants.

#include "lra/hopf.hpp"

#include <map>
#include <utility>
#include <vector>

namespace lra::oracle {

using Word = std::vector<std::size_t>;
using Words = std::map<Word, Rational>;
using TensorWords = std::map<std::pair<Word, Word>, Rational>;

inline void accumulate(Words& w, const Word& key, const Rational& c) {
  Rational& slot = w[key];
  slot += c;
  if (sgn(slot) == 0) w.erase(key);
}

/// Repeatedly replaces the first descent ab (a > b) by ba + [a,b].
inline Words normal_order(const LieAlgebra& g, Words in) {
  Words done;
  while (!in.empty()) {
    auto node = in.extract(in.begin());
    const Word& w = node.key();
    const Rational c = node.mapped();
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      accumulate(done, w, c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    accumulate(in, swapped, c);
    for (const auto& [l, f] : g.bracket(w[k], w[k + 1])) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(k));
      shorter.push_back(l);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(k) + 2, w.end());
      accumulate(in, shorter, c * f);
    }
  }
  return done;
}

inline Words normal_order(const LieAlgebra& g, const Word& w) { return normal_order(g, Words{{w, Rational(1)}}); }

/// Delta(e_{i1}..e_{ip}) = sum over subsets T of e_T (x) e_{complement}.
inline TensorWords coproduct(const LieAlgebra& g, const Word& w) {
  TensorWords out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << w.size()); ++mask) {
    Word a, b;
    for (std::size_t k = 0; k < w.size(); ++k) (mask >> k & 1 ? b : a).push_back(w[k]);
    for (const auto& [na, ca] : normal_order(g, a))
      for (const auto& [nb, cb] : normal_order(g, b)) {
        Rational& slot = out[{na, nb}];
        slot += ca * cb;
        if (sgn(slot) == 0) out.erase({na, nb});
      }
  }
  return out;
}

inline Rational counit(const Word& w) { return w.empty() ? Rational(1) : Rational(0); }

inline Words antipode(const LieAlgebra& g, const Word& w) {
  Word rev(w.rbegin(), w.rend());
  Words out = normal_order(g, rev);
  if (w.size() % 2)
    for (auto& [k, c] : out) c = -c;
  return out;
}

// Conversions from the engine, for comparison at A = Q.

inline Words to_words(const EnvElement& u) {
  Words out;
  for (const auto& [w, a] : u.terms()) out[w.letters()] = a.constant_term();
  return out;
}

inline TensorWords to_tensor_words(const TensorEnvElement& t) {
  TensorWords out;
  for (const auto& [w, a] : t.value().terms()) {
    auto parts = t.split(w);
    out[{parts[0].letters(), parts[1].letters()}] = a.constant_term();
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> words_up_to(std::size_t m, std::size_t len) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (out[start].size() == len) continue;
    for (std::size_t i = 0; i < m; ++i) {
      auto w = out[start];
      w.push_back(i);
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace lra::oracle
