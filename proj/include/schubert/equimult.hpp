#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "schubert/root_fraction.hpp"

namespace schubert {

// Equivariant multiplicities e_x X(w) of Schubert varieties, by two
// independent algorithms, together with the derived quantities: the set
// Phi(x,w), Joseph polynomials and slice multiplicities.
//
// One engine instance carries the memo tables (recursion results, Bruhat
// tests, reflections); confine an instance to one scan or task.
class EmultEngine {
public:
  explicit EmultEngine(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }

  // e_x X(w) by the Bott-Samelson recursion: with w = s_a tau peeled off
  // the canonical word, e_x X(w) = (e_x X(tau) - s_a(e_{s_a x} X(tau)))/a.
  // Zero when x is not below w. Memoized.
  RootFraction recursive(const WeylElt& w, const WeylElt& x);

  // e_x X(w) as the sum over subexpressions of a reduced word for w of
  // prod_j s_1...s_j(alpha_j^{-1}). Exponential in the word length, kept
  // for cross-validation; guarded at max_length letters.
  RootFraction subexpr(std::span<const int> word, const WeylElt& x,
                       size_t max_length = 14);

  // e_w G/B = prod over w(Phi+) of alpha^{-1}.
  RootFraction flag_point(const WeylElt& w) const;

  // Phi(x,w) = { alpha in x(Phi+) : s_alpha x <= w }, sorted by
  // (height, lex) on raw coordinates. Elements may be negative roots.
  std::vector<Root> phi(const WeylElt& x, const WeylElt& w);

  // J(x,w) = e_x X(w) * prod over Phi(x,w); an integer-coefficient,
  // homogeneous polynomial. Requires x <= w.
  Poly joseph(const WeylElt& x, const WeylElt& w);

  // e_x N_{x,w} = e_x X(w) * prod over Phi- cap x(Phi+); requires x <= w.
  RootFraction slice(const WeylElt& x, const WeylElt& w);

  // Bruhat test through the engine's memo.
  bool leq(const WeylElt& x, const WeylElt& w);

  // s_beta for the k-th positive root, cached.
  const WeylElt& reflection_of(int positive_index);

private:
  struct VecHash {
    size_t operator()(const std::vector<int>& v) const;
  };
  static std::vector<int> pair_key(const WeylElt& a, const WeylElt& b);

  const RootSystem& rs_;
  std::unordered_map<std::vector<int>, RootFraction, VecHash> memo_;
  std::unordered_map<std::vector<int>, bool, VecHash> leq_memo_;
  std::vector<WeylElt> reflections_;  // by positive-root index, lazily filled
  std::vector<bool> reflection_ready_;
};

}  // namespace schubert
