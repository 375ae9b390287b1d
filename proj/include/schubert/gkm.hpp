#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/equimult.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// A candidate element of the congruence presentation: one polynomial per
// Weyl group element, indexed in the group's (length, ShortLex) order.
// Whether the congruences actually hold is checked on demand.
class GkmTuple {
public:
  explicit GkmTuple(const WeylGroup& wg);
  static GkmTuple constant(const WeylGroup& wg, Poly f);

  const WeylGroup& group() const { return *wg_; }
  size_t size() const { return values_.size(); }
  const Poly& value(size_t idx) const { return values_[idx]; }
  Poly& value(size_t idx) { return values_[idx]; }
  const Poly& value(const WeylElt& x) const { return values_[wg_->index_of(x)]; }

  GkmTuple operator+(const GkmTuple& u) const;
  GkmTuple operator*(const GkmTuple& u) const;
  bool operator==(const GkmTuple& u) const;

private:
  void check_group(const GkmTuple& u) const;
  const WeylGroup* wg_;
  std::vector<Poly> values_;
};

// A failed congruence: values(x) - values(s_alpha x) not divisible by alpha.
struct GkmViolation {
  size_t x_index;
  Root alpha;
  Poly difference;
};

// Restrictions of equivariant Schubert classes and the ring structure they
// generate. xi(w)|_x = e_x X(w) * prod over x(Phi+) of the linear form;
// the free sign is pinned by xi(e)|_e = + prod over Phi+.
class GkmAlgebra {
public:
  GkmAlgebra(const WeylGroup& wg, EmultEngine& engine);

  const WeylGroup& group() const { return wg_; }

  Poly restriction(const WeylElt& w, const WeylElt& x);

  // The full tuple of restrictions of [X(w)], congruence-verified once and
  // cached.
  const GkmTuple& schubert_class(const WeylElt& w);
  const GkmTuple& schubert_class(size_t w_idx);

  std::vector<GkmViolation> verify(const GkmTuple& t);

  // Coefficients c_w with t = sum c_w xi(w), by descending-length
  // elimination; exact divisions throughout, nonzero entries only,
  // ascending (length, ShortLex). Throws when t is not in the span.
  std::vector<std::pair<size_t, Poly>> expand(const GkmTuple& t);

  // Kill the positive-degree part: each coefficient's constant term.
  std::vector<std::pair<size_t, Rational>> specialize(
      const std::vector<std::pair<size_t, Poly>>& expansion) const;
  std::vector<std::pair<size_t, Rational>> specialize(const GkmTuple& t);

private:
  size_t reflected_index(int pos_root, size_t x_idx);  // index of s_alpha x

  const WeylGroup& wg_;
  EmultEngine& eng_;
  std::unordered_map<size_t, GkmTuple> classes_;
  std::vector<std::vector<size_t>> refl_table_;  // [pos root][x]
};

}  // namespace schubert
