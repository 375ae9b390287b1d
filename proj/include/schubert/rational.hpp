#pragma once

#include <gmpxx.h>

#include <string>

namespace schubert {

// All coefficient arithmetic is exact: unbounded integers and rationals
// in lowest terms with positive denominator (GMP keeps them canonical
// as long as values are built through arithmetic or make_rational).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "5", "-3/2"
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace schubert
