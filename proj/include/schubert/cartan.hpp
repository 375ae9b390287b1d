#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schubert {

// One of the finite crystallographic families A..G with its rank.
// Simple roots are numbered as in Bourbaki; in particular B has a long
// first simple root and a short last one, C the other way around, and
// in G2 the first simple root is the short one.
struct CartanType {
  char family;  // 'A'..'G'
  int rank;

  CartanType(char family, int rank);  // validates the rank bounds
  static CartanType parse(std::string_view text);

  std::string to_string() const;  // "B2"

  // Classical counts, available without building anything.
  int positive_root_count() const;
  unsigned long long weyl_order() const;

  // Entry (i,j) is <alpha_j, alpha_i^vee>, 0-based.
  std::vector<std::vector<int>> cartan_matrix() const;

  bool operator==(const CartanType&) const = default;
};

}  // namespace schubert
