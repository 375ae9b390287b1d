#include "schubert/gkm.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

GkmTuple::GkmTuple(const WeylGroup& wg)
    : wg_(&wg), values_(wg.size(), Poly(wg.root_system().rank())) {}

GkmTuple GkmTuple::constant(const WeylGroup& wg, Poly f) {
  GkmTuple t(wg);
  for (size_t i = 0; i < t.size(); ++i) t.values_[i] = f;
  return t;
}

void GkmTuple::check_group(const GkmTuple& u) const {
  if (wg_ != u.wg_ && wg_->root_system().type() != u.wg_->root_system().type())
    throw InvalidInput("RootSystemMismatch", "tuples over different groups");
}

GkmTuple GkmTuple::operator+(const GkmTuple& u) const {
  check_group(u);
  GkmTuple t(*wg_);
  for (size_t i = 0; i < size(); ++i) t.values_[i] = values_[i] + u.values_[i];
  return t;
}

GkmTuple GkmTuple::operator*(const GkmTuple& u) const {
  check_group(u);
  GkmTuple t(*wg_);
  for (size_t i = 0; i < size(); ++i) t.values_[i] = values_[i] * u.values_[i];
  return t;
}

bool GkmTuple::operator==(const GkmTuple& u) const {
  return wg_->root_system().type() == u.wg_->root_system().type() && values_ == u.values_;
}

GkmAlgebra::GkmAlgebra(const WeylGroup& wg, EmultEngine& engine)
    : wg_(wg), eng_(engine) {
  if (wg.root_system().type() != engine.root_system().type())
    throw InvalidInput("RootSystemMismatch", "group and engine disagree on the type");
}

size_t GkmAlgebra::reflected_index(int pos_root, size_t x_idx) {
  if (refl_table_.empty())
    refl_table_.assign(wg_.root_system().positive_roots().size(), {});
  auto& row = refl_table_[pos_root];
  if (row.empty()) {
    row.resize(wg_.size());
    const WeylElt& s = eng_.reflection_of(pos_root);
    for (size_t x = 0; x < wg_.size(); ++x)
      row[x] = wg_.index_of(compose(s, wg_[x]));
  }
  return row[x_idx];
}

Poly GkmAlgebra::restriction(const WeylElt& w, const WeylElt& x) {
  RootFraction f = eng_.recursive(w, x);
  if (f.is_zero()) return Poly(wg_.root_system().rank());
  for (const Root& beta : wg_.root_system().positive_roots()) f = f.mul_linear(x.act(beta));
  if (!f.den_indices().empty())
    throw InvariantViolation("NonPolynomialResult",
                             "restriction of [X(" + w.word_string() + ")] at " +
                                 x.word_string() + " kept a denominator");
  return f.num();
}

const GkmTuple& GkmAlgebra::schubert_class(size_t w_idx) {
  auto it = classes_.find(w_idx);
  if (it != classes_.end()) return it->second;
  GkmTuple t(wg_);
  for (size_t x = 0; x < wg_.size(); ++x) t.value(x) = restriction(wg_[w_idx], wg_[x]);
  if (t.value(w_idx).is_zero())
    throw InvariantViolation("SupportLaw", "xi(w)|_w vanished at w = " +
                                               wg_[w_idx].word_string());
  if (auto bad = verify(t); !bad.empty())
    throw InvariantViolation(
        "GkmCongruenceFailure",
        "class of X(" + wg_[w_idx].word_string() + ") breaks " +
            std::to_string(bad.size()) + " congruence(s); first at x = " +
            wg_[bad.front().x_index].word_string() + ", alpha = " +
            bad.front().alpha.to_string());
  return classes_.emplace(w_idx, std::move(t)).first->second;
}

const GkmTuple& GkmAlgebra::schubert_class(const WeylElt& w) {
  return schubert_class(wg_.index_of(w));
}

std::vector<GkmViolation> GkmAlgebra::verify(const GkmTuple& t) {
  std::vector<GkmViolation> out;
  const auto& roots = wg_.root_system().positive_roots();
  for (size_t x = 0; x < wg_.size(); ++x) {
    for (size_t k = 0; k < roots.size(); ++k) {
      size_t sx = reflected_index(static_cast<int>(k), x);
      if (sx < x) continue;  // each unordered pair once
      Poly diff = t.value(x) - t.value(sx);
      if (!diff.divide_by_linear(roots[k]))
        out.push_back(GkmViolation{x, roots[k], std::move(diff)});
    }
  }
  return out;
}

std::vector<std::pair<size_t, Poly>> GkmAlgebra::expand(const GkmTuple& t) {
  if (auto bad = verify(t); !bad.empty())
    throw InvalidInput("GkmCongruenceFailure",
                       "input tuple breaks " + std::to_string(bad.size()) +
                           " congruence(s); not an equivariant class");
  GkmTuple residual = t;
  std::vector<std::pair<size_t, Poly>> coeffs;
  // Descending length (ShortLex within a stratum): reverse enumeration order.
  for (size_t wi = wg_.size(); wi-- > 0;) {
    Poly r = residual.value(wi);
    if (r.is_zero()) continue;
    // xi(w)|_w is the product of the positive roots in w(Phi+).
    const WeylElt& w = wg_[wi];
    Poly c = std::move(r);
    for (const Root& beta : wg_.root_system().positive_roots()) {
      Root img = w.act(beta);
      if (!img.is_positive()) continue;
      auto q = c.divide_by_linear(img);
      if (!q)
        throw InvalidInput("NotInSpan",
                           "tuple not in the span over S: division by xi(w)|_w fails at w = " +
                               w.word_string());
      c = std::move(*q);
    }
    const GkmTuple& xi = schubert_class(wi);
    for (size_t x = 0; x < wg_.size(); ++x)
      residual.value(x) -= c * xi.value(x);
    coeffs.emplace_back(wi, std::move(c));
  }
  for (size_t x = 0; x < wg_.size(); ++x)
    if (!residual.value(x).is_zero())
      throw InvalidInput("NotInSpan", "tuple not in the span over S: nonzero residual");
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return coeffs;
}

std::vector<std::pair<size_t, Rational>> GkmAlgebra::specialize(
    const std::vector<std::pair<size_t, Poly>>& expansion) const {
  std::vector<std::pair<size_t, Rational>> out;
  for (const auto& [w, c] : expansion) {
    Rational v = c.constant_value();
    if (v != 0) out.emplace_back(w, v);
  }
  return out;
}

std::vector<std::pair<size_t, Rational>> GkmAlgebra::specialize(const GkmTuple& t) {
  return specialize(expand(t));
}

}  // namespace schubert
