#pragma once

#include <gmpxx.h>

#include <string>

namespace prelie {

// Exact arithmetic throughout; no floating point anywhere in the library.
// GMP keeps rationals canonical (gcd(num, den) = 1, den >= 1, zero = 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

// "num/den" with the denominator always spelled out, e.g. "-3/2", "1/1".
inline std::string fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Shortest form: "2", "-3/2".
inline std::string plain_string(const Rational& q) { return q.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer m;
  mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return m;
}

}  // namespace prelie
