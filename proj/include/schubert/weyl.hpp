#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "schubert/root_system.hpp"

namespace schubert {

// A Weyl group element, canonically represented by its action on the
// simple roots (an integer matrix in simple-root coordinates). Both the
// action and its inverse are stored so descent tests in either direction
// are column sign checks. Length (= inversion count) is computed at
// construction; the ShortLex minimal reduced word is a lazily filled
// cache (logically immutable — fill it from one thread before sharing).
class WeylElt {
public:
  static WeylElt identity(const RootSystem& rs);
  static WeylElt simple(const RootSystem& rs, int i);
  static WeylElt from_word(const RootSystem& rs, std::span<const int> word);

  const RootSystem& root_system() const { return *rs_; }
  int rank() const { return rs_->rank(); }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  // ShortLex-minimal reduced word, 0-based simple indices.
  const std::vector<int>& word() const;
  std::string word_string() const;  // "1 2 1" (1-based), "e" for the identity

  Root act(const Root& v) const;
  Root act_inverse(const Root& v) const;

  // ell(s_i w) < ell(w), resp. ell(w s_i) < ell(w).
  bool left_descent(int i) const;
  bool right_descent(int i) const;

  WeylElt left_mul_simple(int i) const;   // s_i * w
  WeylElt right_mul_simple(int i) const;  // w * s_i
  WeylElt inverse() const;

  bool operator==(const WeylElt& o) const { return mat_ == o.mat_; }
  size_t hash() const;

  const std::vector<int>& action_matrix() const { return mat_; }
  const std::vector<int>& inverse_matrix() const { return inv_; }

private:
  WeylElt() = default;
  static WeylElt from_matrices(const RootSystem& rs, std::vector<int> mat,
                               std::vector<int> inv);
  void finish();  // computes len_ from mat_

  const RootSystem* rs_ = nullptr;
  std::vector<int> mat_, inv_;  // column-major, column j = image of alpha_j
  int len_ = 0;
  mutable std::vector<int> word_;
  mutable bool word_ready_ = false;

  friend WeylElt compose(const WeylElt&, const WeylElt&);
  friend WeylElt reflection(const RootSystem&, const Root&);
};

// u followed after v: (u v)(root) = u(v(root)).
WeylElt compose(const WeylElt& u, const WeylElt& v);

// The reflection s_beta for a positive root beta.
WeylElt reflection(const RootSystem& rs, const Root& beta);

// Bruhat order by the lifting recursion; works in any rank without
// enumerating the group.
bool bruhat_leq(const WeylElt& x, const WeylElt& w);

// The longest element, built by greedy ascent.
WeylElt longest_element(const RootSystem& rs);

// Every reduced word of w (used by word-independence checks).
std::vector<std::vector<int>> all_reduced_words(const WeylElt& w);

struct WeylEltHash {
  size_t operator()(const WeylElt& w) const { return w.hash(); }
};

// The full group, enumerated and ordered by (length, ShortLex word).
// Multiplication tables and the Bruhat table are built lazily; the class
// is intended for single-threaded scans (or one instance per task).
class WeylGroup {
public:
  static constexpr size_t default_cap = 1000000;

  explicit WeylGroup(const RootSystem& rs, size_t cap = default_cap);

  const RootSystem& root_system() const { return rs_; }
  size_t size() const { return elems_.size(); }
  const WeylElt& operator[](size_t i) const { return elems_[i]; }
  const std::vector<WeylElt>& elements() const { return elems_; }

  size_t index_of(const WeylElt& w) const;  // throws if absent
  size_t identity_index() const { return 0; }
  size_t longest_index() const { return elems_.size() - 1; }

  size_t left_mul(int i, size_t w) const;
  size_t right_mul(int i, size_t w) const;

  bool leq(size_t x, size_t w) const;  // Bruhat order

  // All y with x <= y <= w in (length, ShortLex) order; x must be <= w.
  std::vector<WeylElt> interval(const WeylElt& x, const WeylElt& w) const;
  std::vector<size_t> interval_indices(size_t x, size_t w) const;

  // Accelerator hook for the on-disk cache: install a previously computed
  // Bruhat table (row-major over (w, x) index pairs). Rejected unless the
  // size matches; the table contents are trusted.
  bool install_bruhat_table(std::vector<bool> table) const;
  const std::vector<bool>* bruhat_table() const;

private:
  void build_mul_tables() const;
  void build_bruhat() const;

  const RootSystem& rs_;
  std::vector<WeylElt> elems_;
  mutable std::vector<std::vector<size_t>> left_, right_;  // [i][w]
  mutable std::vector<bool> bruhat_;                       // row w, col x
  mutable bool bruhat_ready_ = false;
};

std::vector<WeylElt> enumerate(const RootSystem& rs, size_t cap = WeylGroup::default_cap);

std::vector<WeylElt> interval(const RootSystem& rs, const WeylElt& x, const WeylElt& w);

}  // namespace schubert
