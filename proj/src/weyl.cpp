#include "schubert/weyl.hpp"

#include <algorithm>
#include <unordered_map>

#include "schubert/error.hpp"

namespace schubert {

namespace {

// Column-major n x n matrix helpers on flat vectors.
inline int& at(std::vector<int>& m, int n, int row, int col) { return m[col * n + row]; }
inline int cat(const std::vector<int>& m, int n, int row, int col) { return m[col * n + row]; }

std::vector<int> ident(int n) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) at(m, n, i, i) = 1;
  return m;
}

// m := s_i * m (acts on every column; only row i changes).
void left_mul_inplace(const RootSystem& rs, std::vector<int>& m, int i) {
  int n = rs.rank();
  for (int j = 0; j < n; ++j) {
    long c = 0;
    for (int k = 0; k < n; ++k) c += static_cast<long>(rs.cartan(i, k)) * cat(m, n, k, j);
    at(m, n, i, j) -= static_cast<int>(c);
  }
}

// m := m * s_i (column j becomes col_j - c(i,j) col_i).
void right_mul_inplace(const RootSystem& rs, std::vector<int>& m, int i) {
  int n = rs.rank();
  std::vector<int> coli(n);
  for (int r = 0; r < n; ++r) coli[r] = cat(m, n, r, i);
  for (int j = 0; j < n; ++j) {
    int c = rs.cartan(i, j);
    if (c == 0) continue;
    for (int r = 0; r < n; ++r) at(m, n, r, j) -= c * coli[r];
  }
}

bool column_negative(const std::vector<int>& m, int n, int j) {
  for (int r = 0; r < n; ++r) {
    int v = cat(m, n, r, j);
    if (v != 0) return v < 0;
  }
  return false;  // zero column cannot happen for group elements
}

Root apply(const std::vector<int>& m, int n, const Root& v) {
  Root out(std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    int c = v.coeffs[j];
    if (c == 0) continue;
    for (int r = 0; r < n; ++r) out.coeffs[r] += c * cat(m, n, r, j);
  }
  return out;
}

void check_same_system(const WeylElt& a, const WeylElt& b) {
  if (&a.root_system() != &b.root_system() &&
      a.root_system().type() != b.root_system().type())
    throw InvalidInput("RootSystemMismatch",
                       a.root_system().type().to_string() + " element combined with " +
                           b.root_system().type().to_string() + " element");
}

}  // namespace

void WeylElt::finish() {
  const RootSystem& rs = *rs_;
  int n = rs.rank();
  // Length = |{beta in Phi+ : w(beta) in Phi-}|.
  len_ = 0;
  for (const Root& beta : rs.positive_roots())
    if (apply(mat_, n, beta).is_negative()) ++len_;
  word_ready_ = false;
}

const std::vector<int>& WeylElt::word() const {
  if (word_ready_) return word_;
  // ShortLex-minimal reduced word, left to right: repeatedly peel the
  // smallest left descent of w, which is the smallest right descent of
  // v = w^{-1} (a column sign test on v).
  const RootSystem& rs = *rs_;
  int n = rs.rank();
  word_.clear();
  word_.reserve(len_);
  std::vector<int> v = inv_;
  for (;;) {
    int j = -1;
    for (int cand = 0; cand < n; ++cand)
      if (column_negative(v, n, cand)) {
        j = cand;
        break;
      }
    if (j < 0) break;
    word_.push_back(j);
    right_mul_inplace(rs, v, j);
  }
  if (static_cast<int>(word_.size()) != len_)
    throw InvariantViolation("LengthWordMismatch",
                             "inversion count " + std::to_string(len_) + " vs word length " +
                                 std::to_string(word_.size()));
  word_ready_ = true;
  return word_;
}

WeylElt WeylElt::from_matrices(const RootSystem& rs, std::vector<int> mat,
                               std::vector<int> inv) {
  WeylElt w;
  w.rs_ = &rs;
  w.mat_ = std::move(mat);
  w.inv_ = std::move(inv);
  w.finish();
  return w;
}

WeylElt WeylElt::identity(const RootSystem& rs) {
  WeylElt w;
  w.rs_ = &rs;
  w.mat_ = ident(rs.rank());
  w.inv_ = w.mat_;
  w.len_ = 0;
  w.word_ready_ = true;
  return w;
}

WeylElt WeylElt::simple(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank())
    throw InvalidInput("IndexOutOfRange", "simple index " + std::to_string(i + 1));
  WeylElt w;
  w.rs_ = &rs;
  w.mat_ = ident(rs.rank());
  right_mul_inplace(rs, w.mat_, i);
  w.inv_ = w.mat_;
  w.len_ = 1;
  w.word_ = {i};
  w.word_ready_ = true;
  return w;
}

WeylElt WeylElt::from_word(const RootSystem& rs, std::span<const int> word) {
  std::vector<int> mat = ident(rs.rank());
  std::vector<int> inv = mat;
  for (int i : word) {
    if (i < 0 || i >= rs.rank())
      throw InvalidInput("IndexOutOfRange", "simple index " + std::to_string(i + 1));
    right_mul_inplace(rs, mat, i);
    left_mul_inplace(rs, inv, i);
  }
  return from_matrices(rs, std::move(mat), std::move(inv));
}

std::string WeylElt::word_string() const {
  const std::vector<int>& w = word();
  if (w.empty()) return "e";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w[k] + 1);
  }
  return s;
}

Root WeylElt::act(const Root& v) const {
  if (v.rank() != rank())
    throw InvalidInput("RankMismatch", "root rank does not match element rank");
  return apply(mat_, rank(), v);
}

Root WeylElt::act_inverse(const Root& v) const {
  if (v.rank() != rank())
    throw InvalidInput("RankMismatch", "root rank does not match element rank");
  return apply(inv_, rank(), v);
}

bool WeylElt::left_descent(int i) const {
  if (i < 0 || i >= rank()) throw InvalidInput("IndexOutOfRange", std::to_string(i + 1));
  return column_negative(inv_, rank(), i);
}

bool WeylElt::right_descent(int i) const {
  if (i < 0 || i >= rank()) throw InvalidInput("IndexOutOfRange", std::to_string(i + 1));
  return column_negative(mat_, rank(), i);
}

WeylElt WeylElt::left_mul_simple(int i) const {
  std::vector<int> mat = mat_, inv = inv_;
  left_mul_inplace(*rs_, mat, i);
  right_mul_inplace(*rs_, inv, i);
  return from_matrices(*rs_, std::move(mat), std::move(inv));
}

WeylElt WeylElt::right_mul_simple(int i) const {
  std::vector<int> mat = mat_, inv = inv_;
  right_mul_inplace(*rs_, mat, i);
  left_mul_inplace(*rs_, inv, i);
  return from_matrices(*rs_, std::move(mat), std::move(inv));
}

WeylElt WeylElt::inverse() const { return from_matrices(*rs_, inv_, mat_); }

size_t WeylElt::hash() const {
  size_t h = 1469598103934665603ull;
  for (int v : mat_) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

WeylElt compose(const WeylElt& u, const WeylElt& v) {
  check_same_system(u, v);
  const RootSystem& rs = u.root_system();
  int n = rs.rank();
  std::vector<int> mat(n * n, 0), inv(n * n, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      int c = cat(v.mat_, n, k, j);
      if (c == 0) continue;
      for (int r = 0; r < n; ++r) at(mat, n, r, j) += c * cat(u.mat_, n, r, k);
    }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      int c = cat(u.inv_, n, k, j);
      if (c == 0) continue;
      for (int r = 0; r < n; ++r) at(inv, n, r, j) += c * cat(v.inv_, n, r, k);
    }
  return WeylElt::from_matrices(rs, std::move(mat), std::move(inv));
}

WeylElt reflection(const RootSystem& rs, const Root& beta) {
  if (!beta.is_positive() || rs.positive_index(beta) < 0)
    throw InvalidInput("NotPositiveRoot",
                       beta.to_string() + " is not a positive root of " + rs.type().to_string());
  int n = rs.rank();
  std::vector<int> m = ident(n);
  for (int j = 0; j < n; ++j) {
    int p = rs.coroot_pairing(rs.simple_root(j), beta);
    for (int r = 0; r < n; ++r) at(m, n, r, j) -= p * beta.coeffs[r];
  }
  std::vector<int> inv = m;  // involution
  WeylElt w = WeylElt::from_matrices(rs, std::move(m), std::move(inv));
  if (!(w.act(beta) == -beta))
    throw InvariantViolation("ReflectionConstruction",
                             "s_beta does not negate beta = " + beta.to_string());
  return w;
}

WeylElt longest_element(const RootSystem& rs) {
  WeylElt w = WeylElt::identity(rs);
  for (;;) {
    int i = -1;
    for (int cand = 0; cand < rs.rank(); ++cand)
      if (!w.right_descent(cand)) {
        i = cand;
        break;
      }
    if (i < 0) return w;
    w = w.right_mul_simple(i);
  }
}

bool bruhat_leq(const WeylElt& x, const WeylElt& w) {
  check_same_system(x, w);
  if (x.length() > w.length()) return false;
  const RootSystem& rs = x.root_system();
  int n = rs.rank();
  // Lifting recursion on raw matrices: for a left descent i of w,
  // x <= w iff (s_i x <= s_i w when i is a left descent of x, else x <= s_i w).
  std::vector<int> xm = x.action_matrix(), xi = x.inverse_matrix();
  std::vector<int> wm = w.action_matrix(), wi = w.inverse_matrix();
  for (;;) {
    int i = -1;
    for (int cand = 0; cand < n; ++cand)
      if (column_negative(wi, n, cand)) {
        i = cand;
        break;
      }
    if (i < 0) return xm == ident(n);  // w = e: x <= e iff x = e
    if (column_negative(xi, n, i)) {
      left_mul_inplace(rs, xm, i);
      right_mul_inplace(rs, xi, i);
    }
    left_mul_inplace(rs, wm, i);
    right_mul_inplace(rs, wi, i);
  }
}

std::vector<std::vector<int>> all_reduced_words(const WeylElt& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < w.rank(); ++i) {
    if (!w.left_descent(i)) continue;
    for (auto& tail : all_reduced_words(w.left_mul_simple(i))) {
      std::vector<int> word;
      word.reserve(tail.size() + 1);
      word.push_back(i);
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

WeylGroup::WeylGroup(const RootSystem& rs, size_t cap) : rs_(rs) {
  unsigned long long order = rs.type().weyl_order();
  if (order > cap)
    throw InvalidInput("EnumerationCapExceeded",
                       rs.type().to_string() + " has |W| = " + std::to_string(order) +
                           " > cap " + std::to_string(cap) +
                           "; raise the cap explicitly (and consider the on-disk cache)");
  std::unordered_map<WeylElt, size_t, WeylEltHash> seen;
  elems_.push_back(WeylElt::identity(rs));
  seen.emplace(elems_[0], 0);
  for (size_t head = 0; head < elems_.size(); ++head) {
    WeylElt cur = elems_[head];
    for (int i = 0; i < rs.rank(); ++i) {
      if (cur.right_descent(i)) continue;
      WeylElt next = cur.right_mul_simple(i);
      if (seen.emplace(next, elems_.size()).second) elems_.push_back(std::move(next));
    }
  }
  if (elems_.size() != order)
    throw InvariantViolation("WeylOrderMismatch",
                             "enumerated " + std::to_string(elems_.size()) + " elements, " +
                                 "classical order is " + std::to_string(order));
  std::sort(elems_.begin(), elems_.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
}

size_t WeylGroup::index_of(const WeylElt& w) const {
  // Elements are sorted by (length, word); binary search on that key.
  auto it = std::lower_bound(elems_.begin(), elems_.end(), w,
                             [](const WeylElt& a, const WeylElt& b) {
                               if (a.length() != b.length()) return a.length() < b.length();
                               return a.word() < b.word();
                             });
  if (it == elems_.end() || !(*it == w))
    throw InvalidInput("ElementNotInGroup", "element not found in enumerated group");
  return static_cast<size_t>(it - elems_.begin());
}

void WeylGroup::build_mul_tables() const {
  if (!left_.empty()) return;
  int n = rs_.rank();
  left_.assign(n, std::vector<size_t>(size()));
  right_.assign(n, std::vector<size_t>(size()));
  for (size_t w = 0; w < size(); ++w)
    for (int i = 0; i < n; ++i) {
      left_[i][w] = index_of(elems_[w].left_mul_simple(i));
      right_[i][w] = index_of(elems_[w].right_mul_simple(i));
    }
}

size_t WeylGroup::left_mul(int i, size_t w) const {
  build_mul_tables();
  return left_[i][w];
}

size_t WeylGroup::right_mul(int i, size_t w) const {
  build_mul_tables();
  return right_[i][w];
}

void WeylGroup::build_bruhat() const {
  if (bruhat_ready_) return;
  build_mul_tables();
  size_t m = size();
  bruhat_.assign(m * m, false);
  bruhat_[0] = true;  // identity row: only e <= e
  // Elements are sorted by length, so each row can be filled from the row
  // of s_i w for the smallest left descent i.
  for (size_t w = 1; w < m; ++w) {
    int i = elems_[w].word().front();
    size_t wp = left_[i][w];
    for (size_t x = 0; x < m; ++x) {
      size_t lifted = elems_[x].left_descent(i) ? left_[i][x] : x;
      bruhat_[w * m + x] = bruhat_[wp * m + lifted];
    }
    bruhat_[w * m + w] = true;
  }
  bruhat_ready_ = true;
}

bool WeylGroup::leq(size_t x, size_t w) const {
  build_bruhat();
  return bruhat_[w * size() + x];
}

bool WeylGroup::install_bruhat_table(std::vector<bool> table) const {
  if (table.size() != size() * size()) return false;
  bruhat_ = std::move(table);
  bruhat_ready_ = true;
  return true;
}

const std::vector<bool>* WeylGroup::bruhat_table() const {
  build_bruhat();
  return &bruhat_;
}

std::vector<size_t> WeylGroup::interval_indices(size_t x, size_t w) const {
  if (!leq(x, w))
    throw InvalidInput("NotBruhatComparable",
                       elems_[x].word_string() + " is not below " + elems_[w].word_string());
  std::vector<size_t> out;
  for (size_t y = 0; y < size(); ++y)
    if (leq(x, y) && leq(y, w)) out.push_back(y);
  return out;  // ascending index = (length, ShortLex) order
}

std::vector<WeylElt> WeylGroup::interval(const WeylElt& x, const WeylElt& w) const {
  std::vector<WeylElt> out;
  for (size_t y : interval_indices(index_of(x), index_of(w))) out.push_back(elems_[y]);
  return out;
}

std::vector<WeylElt> enumerate(const RootSystem& rs, size_t cap) {
  return WeylGroup(rs, cap).elements();
}

std::vector<WeylElt> interval(const RootSystem& rs, const WeylElt& x, const WeylElt& w) {
  return WeylGroup(rs).interval(x, w);
}

}  // namespace schubert
