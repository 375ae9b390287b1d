#include "schubert/equimult.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

size_t EmultEngine::VecHash::operator()(const std::vector<int>& v) const {
  size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> EmultEngine::pair_key(const WeylElt& a, const WeylElt& b) {
  std::vector<int> key = a.action_matrix();
  const auto& m = b.action_matrix();
  key.insert(key.end(), m.begin(), m.end());
  return key;
}

EmultEngine::EmultEngine(const RootSystem& rs)
    : rs_(rs),
      reflections_(),
      reflection_ready_(rs.positive_roots().size(), false) {
  reflections_.reserve(rs.positive_roots().size());
  for (size_t k = 0; k < rs.positive_roots().size(); ++k)
    reflections_.push_back(WeylElt::identity(rs));
}

const WeylElt& EmultEngine::reflection_of(int k) {
  if (!reflection_ready_[k]) {
    reflections_[k] = reflection(rs_, rs_.positive_roots()[k]);
    reflection_ready_[k] = true;
  }
  return reflections_[k];
}

bool EmultEngine::leq(const WeylElt& x, const WeylElt& w) {
  if (x.length() > w.length()) return false;
  if (x.length() == w.length()) return x == w;
  auto key = pair_key(x, w);
  auto it = leq_memo_.find(key);
  if (it != leq_memo_.end()) return it->second;
  bool r = bruhat_leq(x, w);
  leq_memo_.emplace(std::move(key), r);
  return r;
}

RootFraction EmultEngine::recursive(const WeylElt& w, const WeylElt& x) {
  if (w.is_identity())
    return x.is_identity() ? RootFraction::one(rs_) : RootFraction::zero(rs_);
  if (!leq(x, w)) return RootFraction::zero(rs_);

  auto key = pair_key(w, x);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  int a = w.word().front();
  WeylElt tau = w.left_mul_simple(a);  // shorter by one
  RootFraction f = recursive(tau, x);
  RootFraction g = recursive(tau, x.left_mul_simple(a));
  WeylElt sa = WeylElt::simple(rs_, a);
  RootFraction value = (f - g.weyl_act(sa)).div_linear(rs_.simple_root(a));
  memo_.emplace(std::move(key), value);
  return value;
}

RootFraction EmultEngine::subexpr(std::span<const int> word, const WeylElt& x,
                                  size_t max_length) {
  if (word.size() > max_length)
    throw InvalidInput("WordLengthLimit",
                       "subexpression sum over a length-" + std::to_string(word.size()) +
                           " word exceeds the limit " + std::to_string(max_length) +
                           "; use the recursive engine");
  WeylElt w = WeylElt::from_word(rs_, word);
  if (w.length() != static_cast<int>(word.size()))
    throw InvalidInput("NonReducedWord", "word of length " + std::to_string(word.size()) +
                                             " multiplies to an element of length " +
                                             std::to_string(w.length()));
  const size_t n = word.size();

  // suffix[j] = product of the reflections for word[j..n)
  std::vector<WeylElt> suffix;
  suffix.reserve(n + 1);
  suffix.push_back(WeylElt::identity(rs_));
  for (size_t j = n; j-- > 0;) suffix.push_back(suffix.back().left_mul_simple(word[j]));
  std::reverse(suffix.begin(), suffix.end());

  RootFraction total = RootFraction::zero(rs_);
  std::vector<int> den;
  den.reserve(n);

  // DFS over subexpressions; a branch survives only while the remaining
  // suffix can still complete the product to x.
  auto reachable = [&](const WeylElt& u, size_t j) {
    return leq(compose(u.inverse(), x), suffix[j]);
  };

  auto walk = [&](auto&& self, const WeylElt& u, size_t j, int sign) -> void {
    if (j == n) {
      if (!(u == x))
        throw InvariantViolation("SubexpressionPruning", "leaf product differs from x");
      total = total + RootFraction(rs_, Poly::constant(rs_.rank(), sign), den);
      return;
    }
    for (bool take : {false, true}) {
      WeylElt next = take ? u.right_mul_simple(word[j]) : u;
      if (!reachable(next, j + 1)) continue;
      Root gamma = next.act(rs_.simple_root(word[j]));
      int idx = rs_.positive_index(gamma.positive_rep());
      den.push_back(idx);
      self(self, next, j + 1, gamma.is_negative() ? -sign : sign);
      den.pop_back();
    }
  };
  WeylElt id = WeylElt::identity(rs_);
  if (reachable(id, 0)) walk(walk, id, 0, 1);
  return total;
}

RootFraction EmultEngine::flag_point(const WeylElt& w) const {
  int sign = 1;
  std::vector<int> den;
  den.reserve(rs_.positive_roots().size());
  for (const Root& beta : rs_.positive_roots()) {
    Root img = w.act(beta);
    if (img.is_negative()) {
      sign = -sign;
      img = -img;
    }
    den.push_back(rs_.positive_index(img));
  }
  return RootFraction(rs_, Poly::constant(rs_.rank(), sign), std::move(den));
}

std::vector<Root> EmultEngine::phi(const WeylElt& x, const WeylElt& w) {
  std::vector<Root> out;
  for (size_t k = 0; k < rs_.positive_roots().size(); ++k) {
    Root alpha = x.act(rs_.positive_roots()[k]);
    int pos = rs_.positive_index(alpha.positive_rep());
    if (leq(compose(reflection_of(pos), x), w)) out.push_back(alpha);
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    return RootOrder{}(a, b);
  });
  return out;
}

Poly EmultEngine::joseph(const WeylElt& x, const WeylElt& w) {
  if (!leq(x, w))
    throw InvalidInput("NotBruhatComparable",
                       x.word_string() + " is not below " + w.word_string());
  RootFraction f = recursive(w, x);
  for (const Root& alpha : phi(x, w)) f = f.mul_linear(alpha);
  if (!f.den_indices().empty())
    throw InvariantViolation("NonPolynomialResult",
                             "J(" + x.word_string() + ", " + w.word_string() +
                                 ") kept a denominator: " + f.to_string());
  if (!f.num().has_integer_coeffs())
    throw InvariantViolation("JosephNotIntegral",
                             "J(" + x.word_string() + ", " + w.word_string() +
                                 ") = " + f.num().to_string());
  return f.num();
}

RootFraction EmultEngine::slice(const WeylElt& x, const WeylElt& w) {
  if (!leq(x, w))
    throw InvalidInput("NotBruhatComparable",
                       x.word_string() + " is not below " + w.word_string());
  RootFraction f = recursive(w, x);
  for (const Root& beta : rs_.positive_roots()) {
    Root img = x.act(beta);
    if (img.is_negative()) f = f.mul_linear(img);
  }
  return f;
}

}  // namespace schubert
