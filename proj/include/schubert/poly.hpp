#pragma once

#include <utility>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/rational.hpp"
#include "schubert/root_system.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Sparse polynomial in the simple-root variables a1..an with exact
// rational coefficients. Terms with zero coefficient are never stored
// and the term list is kept sorted, so equality is plain comparison.
//
// Term keys are byte strings [total degree][e1]..[en]: byte order is
// exactly the canonical order (higher total degree first, then
// lexicographically larger exponents first), single bytes keep keys
// inline for every rank that can be scanned, and degrees are hard-capped
// at 255 with a loud error far beyond anything in scope. Terms live in a
// flat sorted vector; sums are linear merges and products sort-and-
// coalesce, which keeps exhaustive whole-group scans inside desk budgets.
class Poly {
public:
  using Exponents = std::vector<int>;
  using Key = std::string;
  using Term = std::pair<Key, Rational>;
  using Terms = std::vector<Term>;

  Poly() : rank_(0) {}
  explicit Poly(int rank) : rank_(rank) {}

  static Poly constant(int rank, const Rational& c);
  static Poly one(int rank) { return constant(rank, 1); }
  static Poly variable(int rank, int i);

  // The degree-1 polynomial with beta's coordinates.
  static Poly linear_form(const Root& beta);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // the coefficient of 1 (0 if absent)
  bool is_one() const;

  int degree() const;  // max total degree; -1 for the zero polynomial
  bool is_homogeneous() const;
  bool has_integer_coeffs() const;

  static Key pack(const Exponents& e);
  Exponents unpack(const Key& k) const;
  Rational coeff(const Exponents& e) const;
  const Terms& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly operator+(const Poly& q) const;
  Poly operator-(const Poly& q) const;
  Poly operator-() const;
  Poly operator*(const Poly& q) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& q) const { return rank_ == q.rank_ && terms_ == q.terms_; }

  Rational eval(std::span<const Rational> point) const;

  // Evaluation over Z/prime with prime < 2^31; used as a cheap filter
  // before exact linear division. Returns nullopt when a coefficient
  // denominator is divisible by the prime.
  std::optional<uint64_t> eval_mod(std::span<const uint64_t> point,
                                   uint64_t prime) const;

  // Ring automorphism determined by a_i -> w(alpha_i).
  Poly weyl_act(const WeylElt& w) const;

  // Exact division by the linear form of a positive root; nullopt when the
  // division is not exact.
  std::optional<Poly> divide_by_linear(const Root& beta) const;

  // "a1^2*a2 - 3/2*a2^3", "0" for zero. parse() accepts this grammar back.
  std::string to_string() const;
  static Poly parse(int rank, std::string_view text);

  void add_term(const Exponents& e, const Rational& c);
  void add_term_packed(Key k, const Rational& c);

private:
  void check_rank(const Poly& q) const;
  static bool key_before(const Key& a, const Key& b) { return a > b; }
  Terms::const_iterator find_key(const Key& k) const;

  int rank_;
  Terms terms_;  // sorted by key_before, no zero coefficients
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// Inverse of Root::to_string(): a degree-1 integer polynomial.
Root parse_root(int rank, std::string_view text);

}  // namespace schubert
