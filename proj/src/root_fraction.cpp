#include "schubert/root_fraction.hpp"

#include <algorithm>

#include "schubert/error.hpp"

namespace schubert {

RootFraction::RootFraction(const RootSystem& rs, Poly num, std::vector<int> den_indices)
    : rs_(&rs), num_(std::move(num)), den_(std::move(den_indices)) {
  if (num_.rank() != rs.rank())
    throw InvalidInput("RankMismatch", "numerator rank does not match root system");
  for (int k : den_)
    if (k < 0 || k >= static_cast<int>(rs.positive_roots().size()))
      throw InvalidInput("IndexOutOfRange", "denominator root index " + std::to_string(k));
  std::sort(den_.begin(), den_.end());
  reduce();
}

RootFraction RootFraction::reduced_unchecked(const RootSystem& rs, Poly num,
                                             std::vector<int> den_sorted) {
  RootFraction f(rs);
  f.num_ = std::move(num);
  f.den_ = std::move(den_sorted);
  if (f.num_.is_zero()) f.den_.clear();
  return f;
}

RootFraction RootFraction::one(const RootSystem& rs) {
  return RootFraction(rs, Poly::one(rs.rank()), {});
}

RootFraction RootFraction::of_poly(const RootSystem& rs, Poly p) {
  return RootFraction(rs, std::move(p), {});
}

RootFraction RootFraction::inverse_root(const RootSystem& rs, const Root& gamma) {
  Root pos = gamma.positive_rep();
  int idx = rs.positive_index(pos);
  if (idx < 0)
    throw InvalidInput("NotPositiveRoot",
                       gamma.to_string() + " is not a root of " + rs.type().to_string());
  Poly num = Poly::constant(rs.rank(), gamma.is_negative() ? -1 : 1);
  return RootFraction(rs, std::move(num), {idx});
}

std::vector<Root> RootFraction::den_roots() const {
  std::vector<Root> out;
  out.reserve(den_.size());
  for (int k : den_) out.push_back(rs_->positive_roots()[k]);
  return out;
}

namespace {

// A point on the hyperplane beta = 0 over Z/p with generic other
// coordinates. If the numerator does not vanish there, beta cannot divide
// it and the exact division is skipped; a vanishing value is confirmed by
// the division itself, so the filter cannot change results.
constexpr uint64_t filter_prime = 2147483647;  // 2^31 - 1

bool may_divide(const Poly& num, const Root& beta) {
  int rank = beta.rank();
  int pivot = 0;
  while (beta.coeffs[pivot] == 0) ++pivot;
  std::vector<uint64_t> point(rank);
  uint64_t acc = 0;
  for (int j = 0; j < rank; ++j) {
    if (j == pivot) continue;
    point[j] = (0x9e3779b97f4a7c15ull * (j + 2)) % filter_prime;
    uint64_t cj = static_cast<uint64_t>(beta.coeffs[j]) % filter_prime;
    acc = (acc + cj * point[j]) % filter_prime;
  }
  // solve c_pivot * x + acc = 0 (mod p)
  uint64_t c = static_cast<uint64_t>(beta.coeffs[pivot]) % filter_prime;
  uint64_t inv = 1, base = c, exp = filter_prime - 2;
  while (exp) {
    if (exp & 1) inv = inv * base % filter_prime;
    base = base * base % filter_prime;
    exp >>= 1;
  }
  point[pivot] = (filter_prime - acc) % filter_prime * inv % filter_prime;
  auto v = num.eval_mod(point, filter_prime);
  return !v || *v == 0;
}

}  // namespace

void RootFraction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  // Repeated exact division by denominator roots; multiset stays sorted.
  for (size_t i = 0; i < den_.size();) {
    const Root& beta = rs_->positive_roots()[den_[i]];
    if (may_divide(num_, beta)) {
      if (auto q = num_.divide_by_linear(beta)) {
        num_ = std::move(*q);
        den_.erase(den_.begin() + static_cast<long>(i));
        if (num_.is_zero()) {  // cannot happen for a true quotient; stay safe
          den_.clear();
          return;
        }
        continue;
      }
    }
    ++i;
  }
}

void RootFraction::check_system(const RootFraction& g) const {
  if (rs_ != g.rs_ && rs_->type() != g.rs_->type())
    throw InvalidInput("RootSystemMismatch", "fractions over different root systems");
}

RootFraction RootFraction::operator+(const RootFraction& g) const {
  check_system(g);
  if (is_zero()) return g;
  if (g.is_zero()) return *this;
  // Common denominator = multiset max; each side is topped up by the
  // missing factors.
  std::vector<int> lcm;
  std::vector<int> extra_f, extra_g;
  size_t i = 0, j = 0;
  while (i < den_.size() || j < g.den_.size()) {
    if (j >= g.den_.size() || (i < den_.size() && den_[i] < g.den_[j])) {
      lcm.push_back(den_[i]);
      extra_g.push_back(den_[i]);
      ++i;
    } else if (i >= den_.size() || g.den_[j] < den_[i]) {
      lcm.push_back(g.den_[j]);
      extra_f.push_back(g.den_[j]);
      ++j;
    } else {
      lcm.push_back(den_[i]);
      ++i;
      ++j;
    }
  }
  Poly nf = num_;
  for (int k : extra_f) nf = nf * Poly::linear_form(rs_->positive_roots()[k]);
  Poly ng = g.num_;
  for (int k : extra_g) ng = ng * Poly::linear_form(rs_->positive_roots()[k]);
  return RootFraction(*rs_, nf + ng, std::move(lcm));
}

RootFraction RootFraction::operator-() const {
  RootFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

RootFraction RootFraction::operator-(const RootFraction& g) const { return *this + (-g); }

RootFraction RootFraction::operator*(const RootFraction& g) const {
  check_system(g);
  std::vector<int> den = den_;
  den.insert(den.end(), g.den_.begin(), g.den_.end());
  return RootFraction(*rs_, num_ * g.num_, std::move(den));
}

RootFraction RootFraction::operator*(const Rational& c) const {
  if (c == 0) return zero(*rs_);
  RootFraction r = *this;
  r.num_ = r.num_ * c;
  return r;
}

bool RootFraction::operator==(const RootFraction& g) const {
  return rs_->type() == g.rs_->type() && den_ == g.den_ && num_ == g.num_;
}

RootFraction RootFraction::mul_linear(const Root& alpha) const {
  Root pos = alpha.positive_rep();
  int idx = rs_->positive_index(pos);
  if (idx < 0)
    throw InvalidInput("NotPositiveRoot", alpha.to_string() + " is not a root");
  Poly num = alpha.is_negative() ? -num_ : num_;
  auto it = std::find(den_.begin(), den_.end(), idx);
  std::vector<int> den = den_;
  if (it != den_.end()) {
    den.erase(den.begin() + (it - den_.begin()));
    return reduced_unchecked(*rs_, std::move(num), std::move(den));
  }
  // a positive root divides num * pos only if it already divided num
  return reduced_unchecked(*rs_, num * Poly::linear_form(pos), std::move(den));
}

RootFraction RootFraction::div_linear(const Root& alpha) const {
  Root pos = alpha.positive_rep();
  int idx = rs_->positive_index(pos);
  if (idx < 0)
    throw InvalidInput("NotPositiveRoot", alpha.to_string() + " is not a root");
  Poly num = alpha.is_negative() ? -num_ : num_;
  // only the new root can cancel; the rest of the denominator is untouched
  if (may_divide(num, pos)) {
    if (auto q = num.divide_by_linear(pos))
      return reduced_unchecked(*rs_, std::move(*q), den_);
  }
  std::vector<int> den = den_;
  den.insert(std::upper_bound(den.begin(), den.end(), idx), idx);
  return reduced_unchecked(*rs_, std::move(num), std::move(den));
}

RootFraction RootFraction::weyl_act(const WeylElt& w) const {
  if (w.rank() != rs_->rank())
    throw InvalidInput("RankMismatch", "element rank does not match fraction rank");
  Poly num = num_.weyl_act(w);
  std::vector<int> den;
  den.reserve(den_.size());
  for (int k : den_) {
    Root img = w.act(rs_->positive_roots()[k]);
    if (img.is_negative()) {
      num = -num;
      img = -img;
    }
    int idx = rs_->positive_index(img);
    if (idx < 0)
      throw InvariantViolation("WeylActionClosure", "image of a root is not a root");
    den.push_back(idx);
  }
  std::sort(den.begin(), den.end());
  // automorphism image of a reduced fraction is reduced
  return reduced_unchecked(*rs_, std::move(num), std::move(den));
}

Rational RootFraction::eval(std::span<const Rational> point) const {
  Rational d = 1;
  for (int k : den_) {
    const Root& beta = rs_->positive_roots()[k];
    Rational v = Poly::linear_form(beta).eval(point);
    if (v == 0)
      throw InvalidInput("DenominatorVanishes",
                         "denominator root " + beta.to_string() + " vanishes at the point");
    d *= v;
  }
  return num_.eval(point) / d;
}

std::optional<int> RootFraction::degree() const {
  if (num_.is_zero() || !num_.is_homogeneous()) return std::nullopt;
  return num_.degree() - static_cast<int>(den_.size());
}

RootFraction RootFraction::parse(const RootSystem& rs, std::string_view text) {
  std::string s(text);
  std::string num = s, den;
  size_t cut = s.find(" / (");
  if (cut != std::string::npos) {
    num = s.substr(0, cut);
    den = s.substr(cut + 4);
    if (den.empty() || den.back() != ')')
      throw InvalidInput("ParseError", "unterminated denominator in \"" + s + "\"");
    den.pop_back();
  }
  if (num.size() >= 2 && num.front() == '(' && num.back() == ')')
    num = num.substr(1, num.size() - 2);
  Poly p = Poly::parse(rs.rank(), num);
  std::vector<int> indices;
  size_t pos = 0;
  while (pos < den.size()) {
    size_t end = den.find(" * ", pos);
    std::string factor = den.substr(pos, end == std::string::npos ? std::string::npos
                                                                  : end - pos);
    pos = end == std::string::npos ? den.size() : end + 3;
    if (factor.size() >= 2 && factor.front() == '(' && factor.back() == ')')
      factor = factor.substr(1, factor.size() - 2);
    int idx = rs.positive_index(parse_root(rs.rank(), factor));
    if (idx < 0)
      throw InvalidInput("ParseError", "\"" + factor + "\" is not a positive root");
    indices.push_back(idx);
  }
  return RootFraction(rs, std::move(p), std::move(indices));
}

std::string RootFraction::to_string() const {
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.empty()) return n;
  std::string d;
  for (size_t i = 0; i < den_.size(); ++i) {
    if (i) d += " * ";
    const Root& beta = rs_->positive_roots()[den_[i]];
    std::string rstr = beta.to_string();
    bool simple = beta.height() == 1;
    d += simple ? rstr : "(" + rstr + ")";
  }
  return n + " / (" + d + ")";
}

}  // namespace schubert
