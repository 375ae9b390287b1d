#pragma once

#include <optional>
#include <unordered_map>

#include "schubert/equimult.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Everything known about X(w) at the fixed point x.
struct PointReport {
  WeylElt x, w;
  bool in_variety;  // x <= w; when false, e is zero and both flags false
  RootFraction e;
  Poly joseph;
  std::vector<Root> phi;
  int phi_count = 0;
  int length_w = 0;
  bool smooth = false;
  bool rationally_smooth = false;
  // The constant value of J(x,w) when it is constant (the multiplicity
  // d(x,w) of the smooth-equivalence criterion); absent otherwise.
  std::optional<Integer> d;
};

// Smoothness by the constant-1 Joseph test, rational smoothness by the
// constant-J scan over the upper interval, cross-checked against the
// tangent-curve count |Phi(y,w)| = ell(w) on every element scanned. The
// two criteria disagreeing is an internal error by construction.
class SingularityAnalyzer {
public:
  SingularityAnalyzer(const WeylGroup& wg, EmultEngine& engine);

  bool is_smooth_at(const WeylElt& w, const WeylElt& x);
  bool is_rationally_smooth_at(const WeylElt& w, const WeylElt& x);

  // The Bruhat-maximal x <= w where X(w) is not (rationally) smooth, in
  // (length, ShortLex) order; with maximal_only = false, every such x.
  std::vector<WeylElt> singular_locus(const WeylElt& w, bool maximal_only = true);
  std::vector<WeylElt> rationally_singular_locus(const WeylElt& w,
                                                 bool maximal_only = true);

  PointReport report(const WeylElt& w, const WeylElt& x);

  const WeylGroup& group() const { return wg_; }
  EmultEngine& engine() { return eng_; }

private:
  const Poly& joseph_cached(size_t w_idx, size_t x_idx);
  bool point_rationally_smooth(size_t w_idx, size_t x_idx);  // criteria pair at one y
  std::vector<WeylElt> locus(const WeylElt& w, bool rational, bool maximal_only);

  const WeylGroup& wg_;
  EmultEngine& eng_;
  std::unordered_map<size_t, Poly> jmemo_;  // key w_idx * |W| + x_idx
};

}  // namespace schubert
