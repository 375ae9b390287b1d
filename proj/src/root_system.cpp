#include "schubert/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "schubert/error.hpp"

namespace schubert {

int Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() &&
         std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() &&
         std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c <= 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

std::string Root::to_string() const {
  std::string s;
  for (int i = 0; i < rank(); ++i) {
    int c = coeffs[i];
    if (c == 0) continue;
    if (!s.empty())
      s += c > 0 ? "+" : "-";
    else if (c < 0)
      s += "-";
    int a = c > 0 ? c : -c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

bool RootOrder::operator()(const Root& a, const Root& b) const {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs < b.coeffs;
}

RootSystem::RootSystem(CartanType type)
    : type_(type), cartan_(type.cartan_matrix()) {
  const int n = rank();

  // Symmetrizer: positive integers d_i with d_i c(i,j) = d_j c(j,i),
  // propagated over the Dynkin graph and cleared of denominators.
  {
    std::vector<long> num(n, 0), den(n, 1);
    for (int start = 0; start < n; ++start) {
      if (num[start] != 0) continue;
      num[start] = 1;
      std::queue<int> q;
      q.push(start);
      while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j = 0; j < n; ++j) {
          if (j == i || cartan_[i][j] == 0 || num[j] != 0) continue;
          // d_j = d_i * c(i,j) / c(j,i); both entries are negative.
          num[j] = num[i] * cartan_[i][j];
          den[j] = den[i] * cartan_[j][i];
          long g = std::gcd(num[j] < 0 ? -num[j] : num[j], den[j] < 0 ? -den[j] : den[j]);
          num[j] /= g;
          den[j] /= g;
          if (den[j] < 0) {
            num[j] = -num[j];
            den[j] = -den[j];
          }
          q.push(j);
        }
      }
    }
    long lcm = 1;
    for (int i = 0; i < n; ++i) lcm = std::lcm(lcm, den[i]);
    symmetrizer_.resize(n);
    for (int i = 0; i < n; ++i) symmetrizer_[i] = num[i] * (lcm / den[i]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (symmetrizer_[i] * cartan_[i][j] != symmetrizer_[j] * cartan_[j][i])
          throw InvariantViolation("CartanNotSymmetrizable",
                                   "symmetrizer construction failed for " + type_.to_string());
  }

  // Close the simple roots under the simple reflections.
  std::map<std::vector<int>, int> seen;
  std::vector<Root> pool;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    seen.emplace(c, static_cast<int>(pool.size()));
    pool.push_back(Root(std::move(c)));
  }
  for (size_t head = 0; head < pool.size(); ++head) {
    Root cur = pool[head];  // copy: pool reallocates
    for (int i = 0; i < n; ++i) {
      Root img = reflect(i, cur);
      if (img.is_positive() && !seen.count(img.coeffs)) {
        seen.emplace(img.coeffs, static_cast<int>(pool.size()));
        pool.push_back(img);
      }
    }
  }
  std::sort(pool.begin(), pool.end(), [](const Root& a, const Root& b) {
    return RootOrder{}(a, b);
  });
  positive_ = std::move(pool);

  if (static_cast<int>(positive_.size()) != type_.positive_root_count())
    throw InvariantViolation(
        "PositiveRootCountMismatch",
        type_.to_string() + ": enumerated " + std::to_string(positive_.size()) +
            " positive roots, classical count is " +
            std::to_string(type_.positive_root_count()));

  // Signed reflection table: s_i permutes the positive roots except that
  // it sends alpha_i to -alpha_i.
  std::map<std::vector<int>, int> index;
  for (int k = 0; k < static_cast<int>(positive_.size()); ++k)
    index.emplace(positive_[k].coeffs, k);
  reflection_table_.assign(n, std::vector<int>(positive_.size(), 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < static_cast<int>(positive_.size()); ++k) {
      Root img = reflect(i, positive_[k]);
      int sign = img.is_positive() ? 1 : -1;
      auto it = index.find((sign > 0 ? img : -img).coeffs);
      if (it == index.end())
        throw InvariantViolation("ReflectionClosureFailure",
                                 "s_" + std::to_string(i + 1) + " left the root system");
      reflection_table_[i][k] = sign * (it->second + 1);
    }
  }
}

Root RootSystem::simple_root(int i) const {
  check_simple(i);
  std::vector<int> c(rank(), 0);
  c[i] = 1;
  return Root(std::move(c));
}

int RootSystem::pairing(const Root& v, int i) const {
  check_simple(i);
  check_root(v);
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += v.coeffs[j] * cartan_[i][j];
  return s;
}

Root RootSystem::reflect(int i, const Root& v) const {
  check_simple(i);
  check_root(v);
  Root r = v;
  r.coeffs[i] -= pairing(v, i);
  return r;
}

int RootSystem::coroot_pairing(const Root& v, const Root& beta) const {
  check_root(v);
  check_root(beta);
  // (x,y) = sum_{i,j} x_i y_j d_i c(i,j); <v, beta^vee> = 2 (v,beta)/(beta,beta).
  long vb = 0, bb = 0;
  for (int i = 0; i < rank(); ++i) {
    if (beta.coeffs[i] == 0) continue;
    long row = 0, rowb = 0;
    for (int j = 0; j < rank(); ++j) {
      row += static_cast<long>(cartan_[i][j]) * v.coeffs[j];
      rowb += static_cast<long>(cartan_[i][j]) * beta.coeffs[j];
    }
    vb += symmetrizer_[i] * beta.coeffs[i] * row;
    bb += symmetrizer_[i] * beta.coeffs[i] * rowb;
  }
  if (bb == 0 || (2 * vb) % bb != 0)
    throw InvariantViolation("CorootPairingNotIntegral",
                             "pairing of " + v.to_string() + " with coroot of " +
                                 beta.to_string() + " is not an integer");
  return static_cast<int>(2 * vb / bb);
}

int RootSystem::positive_index(const Root& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank()) return -1;
  auto it = std::lower_bound(positive_.begin(), positive_.end(), r,
                             [](const Root& a, const Root& b) { return RootOrder{}(a, b); });
  if (it != positive_.end() && *it == r)
    return static_cast<int>(it - positive_.begin());
  return -1;
}

std::pair<int, int> RootSystem::simple_reflection_image(int i, int k) const {
  check_simple(i);
  if (k < 0 || k >= static_cast<int>(positive_.size()))
    throw InvalidInput("IndexOutOfRange", "positive-root index " + std::to_string(k));
  int enc = reflection_table_[i][k];
  return {(enc > 0 ? enc : -enc) - 1, enc > 0 ? 1 : -1};
}

void RootSystem::check_simple(int i) const {
  if (i < 0 || i >= rank())
    throw InvalidInput("IndexOutOfRange",
                       "simple index " + std::to_string(i + 1) + " out of range for " +
                           type_.to_string());
}

void RootSystem::check_root(const Root& v) const {
  if (static_cast<int>(v.coeffs.size()) != rank())
    throw InvalidInput("RankMismatch", "root has rank " + std::to_string(v.coeffs.size()) +
                                           ", system has rank " + std::to_string(rank()));
}

}  // namespace schubert
