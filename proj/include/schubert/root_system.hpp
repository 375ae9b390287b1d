#pragma once

#include <string>
#include <vector>

#include "schubert/cartan.hpp"

namespace schubert {

// A root in simple-root coordinates. Coordinates of a genuine root are
// all >= 0 or all <= 0, never mixed.
struct Root {
  std::vector<int> coeffs;

  Root() = default;
  explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }
  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // nonzero, all coordinates >= 0
  bool is_negative() const;
  Root operator-() const;
  Root positive_rep() const { return is_negative() ? -*this : *this; }

  bool operator==(const Root&) const = default;

  // Compact form used inside fraction denominators and set listings:
  // "a1", "a1+2*a2", "-3*a1-a2".
  std::string to_string() const;
};

// (height, then lexicographic on coordinates), the canonical root order.
struct RootOrder {
  bool operator()(const Root& a, const Root& b) const;
};

// Immutable container of the positive-root combinatorics of one finite
// type: Cartan matrix, the positive roots in (height, lex) order, and the
// table of simple reflections acting on them. All methods are pure.
class RootSystem {
public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  Root simple_root(int i) const;

  // <v, alpha_i^vee>
  int pairing(const Root& v, int i) const;

  // s_i(v) = v - <v, alpha_i^vee> alpha_i
  Root reflect(int i, const Root& v) const;

  // <v, beta^vee> for an arbitrary root beta.
  int coroot_pairing(const Root& v, const Root& beta) const;

  // Index of r in positive_roots(), or -1 when r is not a positive root.
  int positive_index(const Root& r) const;

  // Signed image of s_i on the k-th positive root: the pair (index, sign)
  // with s_i(positive_roots()[k]) = sign * positive_roots()[index].
  std::pair<int, int> simple_reflection_image(int i, int k) const;

private:
  void check_simple(int i) const;
  void check_root(const Root& v) const;

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::vector<std::vector<int>> reflection_table_;  // encoded signed indices
  std::vector<long> symmetrizer_;                   // d_i with d_i c(i,j) symmetric
};

}  // namespace schubert
