#include "schubert/singularity.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

SingularityAnalyzer::SingularityAnalyzer(const WeylGroup& wg, EmultEngine& engine)
    : wg_(wg), eng_(engine) {
  if (wg.root_system().type() != engine.root_system().type())
    throw InvalidInput("RootSystemMismatch", "group and engine disagree on the type");
}

const Poly& SingularityAnalyzer::joseph_cached(size_t w_idx, size_t x_idx) {
  size_t key = w_idx * wg_.size() + x_idx;
  auto it = jmemo_.find(key);
  if (it == jmemo_.end())
    it = jmemo_.emplace(key, eng_.joseph(wg_[x_idx], wg_[w_idx])).first;
  return it->second;
}

bool SingularityAnalyzer::is_smooth_at(const WeylElt& w, const WeylElt& x) {
  size_t wi = wg_.index_of(w), xi = wg_.index_of(x);
  if (!wg_.leq(xi, wi))
    throw InvalidInput("NotBruhatComparable",
                       x.word_string() + " is not below " + w.word_string());
  return joseph_cached(wi, xi).is_one();
}

// Kumar: J(y,w) is a positive integer constant. Carrell-Peterson:
// |Phi(y,w)| equals ell(w). Run both; disagreement is fatal.
bool SingularityAnalyzer::point_rationally_smooth(size_t w_idx, size_t y_idx) {
  const Poly& j = joseph_cached(w_idx, y_idx);
  bool kumar = j.is_constant() && j.constant_value() > 0;
  bool cp = static_cast<int>(eng_.phi(wg_[y_idx], wg_[w_idx]).size()) ==
            wg_[w_idx].length();
  if (kumar != cp)
    throw InvariantViolation(
        "CriteriaDisagreement",
        "constant-J and |Phi| = ell(w) disagree at (x, w) = (" +
            wg_[y_idx].word_string() + ", " + wg_[w_idx].word_string() + ")");
  return kumar;
}

bool SingularityAnalyzer::is_rationally_smooth_at(const WeylElt& w, const WeylElt& x) {
  size_t wi = wg_.index_of(w), xi = wg_.index_of(x);
  if (!wg_.leq(xi, wi))
    throw InvalidInput("NotBruhatComparable",
                       x.word_string() + " is not below " + w.word_string());
  for (size_t y : wg_.interval_indices(xi, wi)) {
    if (y == wi) continue;  // y ranges over [x, w)
    if (!point_rationally_smooth(wi, y)) return false;
  }
  return true;
}

std::vector<WeylElt> SingularityAnalyzer::locus(const WeylElt& w, bool rational,
                                                bool maximal_only) {
  size_t wi = wg_.index_of(w);
  std::vector<size_t> below = wg_.interval_indices(0, wi);
  // bad[k] marks below[k]; scan from the top so the rationally-smooth scan
  // can reuse per-point results.
  std::vector<bool> bad(below.size(), false);
  std::vector<bool> point_bad(below.size(), false);
  for (size_t k = 0; k < below.size(); ++k)
    point_bad[k] = rational ? !point_rationally_smooth(wi, below[k])
                            : !joseph_cached(wi, below[k]).is_one();
  for (size_t k = 0; k < below.size(); ++k) {
    if (!rational) {
      bad[k] = point_bad[k];
      continue;
    }
    // rationally singular at x iff some y in [x,w) fails the point test
    for (size_t m = k; m < below.size() && !bad[k]; ++m)
      if (point_bad[m] && wg_.leq(below[k], below[m])) bad[k] = true;
  }
  // Downward closure: a singular point below a smooth one would mean the
  // non-smooth set is not closed.
  for (size_t k = 0; k < below.size(); ++k)
    for (size_t m = 0; m < below.size(); ++m)
      if (bad[m] && !bad[k] && wg_.leq(below[k], below[m]))
        throw InvariantViolation("LocusNotClosed",
                                 "singular set is not downward closed under " +
                                     w.word_string());
  std::vector<WeylElt> out;
  for (size_t k = 0; k < below.size(); ++k) {
    if (!bad[k]) continue;
    if (maximal_only) {
      bool maximal = true;
      for (size_t m = 0; m < below.size() && maximal; ++m)
        if (m != k && bad[m] && wg_.leq(below[k], below[m])) maximal = false;
      if (!maximal) continue;
    }
    out.push_back(wg_[below[k]]);
  }
  return out;
}

std::vector<WeylElt> SingularityAnalyzer::singular_locus(const WeylElt& w,
                                                         bool maximal_only) {
  return locus(w, false, maximal_only);
}

std::vector<WeylElt> SingularityAnalyzer::rationally_singular_locus(const WeylElt& w,
                                                                    bool maximal_only) {
  return locus(w, true, maximal_only);
}

PointReport SingularityAnalyzer::report(const WeylElt& w, const WeylElt& x) {
  PointReport r{x, w, false, RootFraction::zero(wg_.root_system()),
                Poly(wg_.root_system().rank()), {}, 0, w.length(), false, false, {}};
  size_t wi = wg_.index_of(w), xi = wg_.index_of(x);
  r.phi = eng_.phi(x, w);
  r.phi_count = static_cast<int>(r.phi.size());
  if (!wg_.leq(xi, wi)) return r;  // marker: in_variety stays false
  r.in_variety = true;
  r.e = eng_.recursive(w, x);
  r.joseph = joseph_cached(wi, xi);
  r.smooth = r.joseph.is_one();
  r.rationally_smooth = is_rationally_smooth_at(w, x);
  if (r.joseph.is_constant()) r.d = r.joseph.constant_value().get_num();
  if (r.smooth && !r.rationally_smooth)
    throw InvariantViolation("SmoothNotRationallySmooth",
                             "impossible flag combination at (" + x.word_string() + ", " +
                                 w.word_string() + ")");
  if (r.phi_count < r.length_w)
    throw InvariantViolation("TangentCurveCount",
                             "|Phi(x,w)| < ell(w) at (" + x.word_string() + ", " +
                                 w.word_string() + ")");
  return r;
}

}  // namespace schubert
