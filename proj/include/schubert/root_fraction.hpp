#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/poly.hpp"

namespace schubert {

// A rational function whose denominator is a product of positive roots,
// kept as (numerator polynomial, multiset of positive-root indices).
// Always reduced: no denominator root divides the numerator, the zero
// fraction has an empty denominator, and negative roots picked up by the
// Weyl action are flipped into the numerator sign. Reduced form is
// canonical, so operator== is plain field equality.
class RootFraction {
public:
  explicit RootFraction(const RootSystem& rs) : rs_(&rs), num_(rs.rank()) {}
  RootFraction(const RootSystem& rs, Poly num, std::vector<int> den_indices);

  static RootFraction zero(const RootSystem& rs) { return RootFraction(rs); }
  static RootFraction one(const RootSystem& rs);
  static RootFraction of_poly(const RootSystem& rs, Poly p);

  // 1/gamma for any root gamma; a negative root contributes the sign.
  static RootFraction inverse_root(const RootSystem& rs, const Root& gamma);

  const RootSystem& root_system() const { return *rs_; }
  const Poly& num() const { return num_; }
  const std::vector<int>& den_indices() const { return den_; }
  std::vector<Root> den_roots() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.empty() && num_.is_one(); }

  RootFraction operator+(const RootFraction& g) const;
  RootFraction operator-(const RootFraction& g) const;
  RootFraction operator-() const;
  RootFraction operator*(const RootFraction& g) const;
  RootFraction operator*(const Rational& c) const;
  bool operator==(const RootFraction& g) const;

  // Multiply, resp. divide, by the linear form of a root (sign of a
  // negative root goes into the numerator).
  RootFraction mul_linear(const Root& alpha) const;
  RootFraction div_linear(const Root& alpha) const;

  RootFraction weyl_act(const WeylElt& w) const;

  Rational eval(std::span<const Rational> point) const;

  // deg(num) - |den| when the numerator is homogeneous and nonzero.
  std::optional<int> degree() const;

  // "num / (root * root * ...)"; multi-term factors are parenthesized.
  std::string to_string() const;
  static RootFraction parse(const RootSystem& rs, std::string_view text);

private:
  // Construction bypass for results that are reduced by construction
  // (Weyl images of reduced fractions, cancellations against the
  // denominator): a distinct positive root can never start dividing the
  // numerator when neither it nor the numerator changed.
  static RootFraction reduced_unchecked(const RootSystem& rs, Poly num,
                                        std::vector<int> den_sorted);
  void reduce();
  void check_system(const RootFraction& g) const;

  const RootSystem* rs_;
  Poly num_;
  std::vector<int> den_;  // sorted ascending = canonical (height, lex) order
};

inline RootFraction operator*(const Rational& c, const RootFraction& f) { return f * c; }

}  // namespace schubert
