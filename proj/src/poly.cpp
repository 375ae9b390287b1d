#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "schubert/error.hpp"

namespace schubert {

namespace {

constexpr int degree_cap = 255;  // one byte per field in the packed key

[[noreturn]] void overflow() {
  throw InvariantViolation("DegreeCapExceeded",
                           "polynomial degree beyond the symbolic-layer cap of 255");
}

}  // namespace

Poly::Key Poly::pack(const Exponents& e) {
  int deg = 0;
  Key k(e.size() + 1, '\0');
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > degree_cap) overflow();
    deg += e[i];
    k[i + 1] = static_cast<char>(e[i]);
  }
  if (deg > degree_cap) overflow();
  k[0] = static_cast<char>(deg);
  return k;
}

Poly::Exponents Poly::unpack(const Key& k) const {
  Exponents e(rank_);
  for (int i = 0; i < rank_; ++i) e[i] = static_cast<unsigned char>(k[i + 1]);
  return e;
}

Poly::Terms::const_iterator Poly::find_key(const Key& k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, const Key& key) {
                               return key_before(t.first, key);
                             });
  if (it != terms_.end() && it->first == k) return it;
  return terms_.end();
}

Poly Poly::constant(int rank, const Rational& c) {
  Poly p(rank);
  if (c != 0) p.terms_.emplace_back(Key(rank + 1, '\0'), c);
  return p;
}

Poly Poly::variable(int rank, int i) {
  if (i < 0 || i >= rank)
    throw InvalidInput("IndexOutOfRange", "variable index " + std::to_string(i + 1));
  Poly p(rank);
  Key k(rank + 1, '\0');
  k[0] = 1;
  k[i + 1] = 1;
  p.terms_.emplace_back(std::move(k), 1);
  return p;
}

Poly Poly::linear_form(const Root& beta) {
  Poly p(beta.rank());
  for (int i = 0; i < beta.rank(); ++i) {
    if (beta.coeffs[i] == 0) continue;
    Key k(beta.rank() + 1, '\0');
    k[0] = 1;
    k[i + 1] = 1;
    p.terms_.emplace_back(std::move(k), beta.coeffs[i]);
  }
  // keys a1 > a2 > ... in the canonical order; built ascending by index,
  // which is exactly key-descending, so already sorted
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first[0] == '\0');
}

Rational Poly::constant_value() const {
  if (terms_.empty() || terms_.back().first[0] != '\0') return Rational(0);
  return terms_.back().second;
}

bool Poly::is_one() const { return is_constant() && constant_value() == 1; }

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<unsigned char>(terms_.front().first[0]);
}

bool Poly::is_homogeneous() const {
  // terms are ordered by total degree first
  return terms_.empty() || terms_.front().first[0] == terms_.back().first[0];
}

bool Poly::has_integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

Rational Poly::coeff(const Exponents& e) const {
  auto it = find_key(pack(e));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != rank_)
    throw InvalidInput("RankMismatch", "exponent vector has wrong length");
  add_term_packed(pack(e), c);
}

void Poly::add_term_packed(Key k, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, const Key& key) {
                               return key_before(t.first, key);
                             });
  if (it != terms_.end() && it->first == k) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, std::move(k), c);
  }
}

void Poly::check_rank(const Poly& q) const {
  if (rank_ != q.rank_)
    throw InvalidInput("RankMismatch", "polynomial ranks " + std::to_string(rank_) + " vs " +
                                           std::to_string(q.rank_));
}

Poly& Poly::operator+=(const Poly& q) {
  check_rank(q);
  if (q.terms_.empty()) return *this;
  Terms merged;
  merged.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = q.terms_.begin(), be = q.terms_.end();
  while (a != ae && b != be) {
    if (key_before(a->first, b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (key_before(b->first, a->first)) {
      merged.push_back(*b);
      ++b;
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) merged.push_back(std::move(*a));
  for (; b != be; ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  check_rank(q);
  if (q.terms_.empty()) return *this;
  Terms merged;
  merged.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = q.terms_.begin(), be = q.terms_.end();
  while (a != ae && b != be) {
    if (key_before(a->first, b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (key_before(b->first, a->first)) {
      merged.emplace_back(b->first, -b->second);
      ++b;
    } else {
      Rational c = a->second - b->second;
      if (c != 0) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) merged.push_back(std::move(*a));
  for (; b != be; ++b) merged.emplace_back(b->first, -b->second);
  terms_ = std::move(merged);
  return *this;
}

Poly Poly::operator+(const Poly& q) const {
  Poly r = *this;
  r += q;
  return r;
}

Poly Poly::operator-(const Poly& q) const {
  Poly r = *this;
  r -= q;
  return r;
}

Poly Poly::operator-() const {
  Poly r(rank_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& q) const {
  check_rank(q);
  Poly r(rank_);
  if (terms_.empty() || q.terms_.empty()) return r;
  Terms prod;
  prod.reserve(terms_.size() * q.terms_.size());
  Key k;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : q.terms_) {
      k = ea;
      for (size_t i = 0; i < k.size(); ++i) {
        int v = static_cast<unsigned char>(ea[i]) + static_cast<unsigned char>(eb[i]);
        if (v > degree_cap) overflow();
        k[i] = static_cast<char>(v);
      }
      prod.emplace_back(k, ca * cb);
    }
  std::sort(prod.begin(), prod.end(),
            [](const Term& x, const Term& y) { return key_before(x.first, y.first); });
  // coalesce equal keys, dropping zeros
  for (auto& t : prod) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(rank_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, k] : terms_) r.terms_.emplace_back(e, k * c);
  return r;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != rank_)
    throw InvalidInput("RankMismatch", "evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < rank_; ++i) {
      int exp = static_cast<unsigned char>(e[i + 1]);
      for (int k = 0; k < exp; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

namespace {

uint64_t pow_mod(uint64_t base, unsigned exp, uint64_t prime) {
  uint64_t r = 1;
  base %= prime;
  while (exp) {
    if (exp & 1) r = r * base % prime;
    base = base * base % prime;
    exp >>= 1;
  }
  return r;
}

}  // namespace

std::optional<uint64_t> Poly::eval_mod(std::span<const uint64_t> point,
                                       uint64_t prime) const {
  if (static_cast<int>(point.size()) != rank_)
    throw InvalidInput("RankMismatch", "evaluation point has wrong dimension");
  // power tables per variable up to the top degree
  int top = degree() < 0 ? 0 : degree();
  std::vector<uint64_t> pw(static_cast<size_t>(rank_) * (top + 1));
  for (int i = 0; i < rank_; ++i) {
    pw[i * (top + 1)] = 1;
    for (int k = 1; k <= top; ++k)
      pw[i * (top + 1) + k] = pw[i * (top + 1) + k - 1] * (point[i] % prime) % prime;
  }
  uint64_t total = 0;
  for (const auto& [e, c] : terms_) {
    uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), prime);
    uint64_t t;
    if (c.get_den() == 1) {
      t = num;
    } else {
      uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), prime);
      if (den == 0) return std::nullopt;
      t = num * pow_mod(den, static_cast<unsigned>(prime - 2), prime) % prime;
    }
    for (int i = 0; i < rank_; ++i) {
      int exp = static_cast<unsigned char>(e[i + 1]);
      if (exp) t = t * pw[i * (top + 1) + exp] % prime;
    }
    total = (total + t) % prime;
  }
  return total;
}

Poly Poly::weyl_act(const WeylElt& w) const {
  if (w.rank() != rank_)
    throw InvalidInput("RankMismatch", "element rank does not match polynomial rank");
  const RootSystem& rs = w.root_system();
  std::vector<Poly> image(rank_);
  std::vector<std::vector<Poly>> powers(rank_);  // powers[i][k] = image_i^k
  for (int i = 0; i < rank_; ++i) {
    image[i] = linear_form(w.act(rs.simple_root(i)));
    powers[i] = {one(rank_)};
  }
  auto power = [&](int i, int k) -> const Poly& {
    while (static_cast<int>(powers[i].size()) <= k)
      powers[i].push_back(powers[i].back() * image[i]);
    return powers[i][k];
  };
  Poly out(rank_);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(rank_, c);
    for (int i = 0; i < rank_; ++i) {
      int exp = static_cast<unsigned char>(e[i + 1]);
      if (exp > 0) t = t * power(i, exp);
    }
    out += t;
  }
  return out;
}

std::optional<Poly> Poly::divide_by_linear(const Root& beta) const {
  if (beta.rank() != rank_)
    throw InvalidInput("RankMismatch", "root rank does not match polynomial rank");
  if (!beta.is_positive())
    throw InvalidInput("NotPositiveRoot", beta.to_string() + " is not positive");
  if (is_zero()) return Poly(rank_);

  int pivot = 0;
  while (beta.coeffs[pivot] == 0) ++pivot;
  Rational inv_c = Rational(1) / Rational(beta.coeffs[pivot]);
  Poly rest = linear_form(beta);  // beta minus its pivot component
  {
    Key k(rank_ + 1, '\0');
    k[0] = 1;
    k[pivot + 1] = 1;
    auto it = std::find_if(rest.terms_.begin(), rest.terms_.end(),
                           [&](const Term& t) { return t.first == k; });
    rest.terms_.erase(it);
  }

  // Synthetic division in the pivot variable: p_k = c q_{k-1} + rest * q_k.
  int top = 0;
  for (const auto& [e, c] : terms_)
    top = std::max(top, static_cast<int>(static_cast<unsigned char>(e[pivot + 1])));
  std::vector<Poly> slice(top + 1, Poly(rank_));  // pivot-degree -> coefficient
  for (const auto& [e, c] : terms_) {
    Key f = e;
    int d = static_cast<unsigned char>(f[pivot + 1]);
    f[0] = static_cast<char>(static_cast<unsigned char>(f[0]) - d);
    f[pivot + 1] = 0;
    slice[d].terms_.emplace_back(std::move(f), c);
  }
  for (Poly& s : slice) {
    std::sort(s.terms_.begin(), s.terms_.end(), [](const Term& x, const Term& y) {
      return key_before(x.first, y.first);
    });
  }

  std::vector<Poly> q(std::max(top, 1), Poly(rank_));  // q[k] = coeff of pivot^k
  Poly carry(rank_);                                   // rest * q_k of the level above
  for (int k = top; k >= 1; --k) {
    Poly numer = slice[k] - carry;
    q[k - 1] = numer * inv_c;
    carry = rest * q[k - 1];
  }
  if (!(slice[0] == carry)) return std::nullopt;

  Poly out(rank_);
  for (int k = 0; k < static_cast<int>(q.size()); ++k)
    for (const auto& [e, kk] : q[k].terms_) {
      Key f = e;
      int deg = static_cast<unsigned char>(f[0]) + k;
      if (deg > degree_cap) overflow();
      f[0] = static_cast<char>(deg);
      f[pivot + 1] = static_cast<char>(k);
      out.terms_.emplace_back(std::move(f), kk);
    }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& x, const Term& y) {
    return key_before(x.first, y.first);
  });
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string monom;
    for (int i = 0; i < rank_; ++i) {
      int exp = static_cast<unsigned char>(e[i + 1]);
      if (exp == 0) continue;
      if (!monom.empty()) monom += "*";
      monom += "a" + std::to_string(i + 1);
      if (exp > 1) monom += "^" + std::to_string(exp);
    }
    if (monom.empty()) {
      s += schubert::to_string(a);
    } else {
      if (a != 1) s += schubert::to_string(a) + "*";
      s += monom;
    }
  }
  return s;
}

namespace {

void fail_parse(std::string_view text, const std::string& why) {
  throw InvalidInput("ParseError", "cannot parse \"" + std::string(text) + "\": " + why);
}

}  // namespace

Poly Poly::parse(int rank, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail_parse(text, "empty input");

  Poly out(rank);
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    if (end == pos) fail_parse(text, "empty term");
    std::string term = s.substr(pos, end - pos);
    pos = end;

    Rational coef = sign;
    Exponents e(rank, 0);
    size_t fp = 0;
    while (fp < term.size()) {
      size_t fe = term.find('*', fp);
      if (fe == std::string::npos) fe = term.size();
      std::string factor = term.substr(fp, fe - fp);
      fp = fe + 1;
      if (factor.empty()) fail_parse(text, "empty factor");
      if (factor[0] == 'a') {
        size_t caret = factor.find('^');
        std::string idx = factor.substr(1, caret == std::string::npos
                                               ? std::string::npos
                                               : caret - 1);
        int exp = 1;
        if (caret != std::string::npos) {
          std::string es = factor.substr(caret + 1);
          if (es.empty()) fail_parse(text, "missing exponent");
          exp = std::stoi(es);
        }
        if (idx.empty()) fail_parse(text, "missing variable index");
        int i = std::stoi(idx) - 1;
        if (i < 0 || i >= rank) fail_parse(text, "variable index out of range");
        if (exp < 0) fail_parse(text, "negative exponent");
        e[i] += exp;
      } else {
        try {
          coef *= Rational(factor);
        } catch (const std::invalid_argument&) {
          fail_parse(text, "bad coefficient \"" + factor + "\"");
        }
        coef.canonicalize();
      }
    }
    out.add_term(e, coef);
  }
  return out;
}

Root parse_root(int rank, std::string_view text) {
  Poly p = Poly::parse(rank, text);
  Root r(std::vector<int>(rank, 0));
  for (const auto& [key, c] : p.terms()) {
    Poly::Exponents e = p.unpack(key);
    int var = -1;
    for (int i = 0; i < rank; ++i) {
      if (e[i] == 0) continue;
      if (e[i] != 1 || var >= 0)
        throw InvalidInput("ParseError", "\"" + std::string(text) + "\" is not a linear form");
      var = i;
    }
    if (var < 0 || !is_integer(c))
      throw InvalidInput("ParseError", "\"" + std::string(text) + "\" is not a root");
    r.coeffs[var] = static_cast<int>(c.get_num().get_si());
  }
  return r;
}

}  // namespace schubert
