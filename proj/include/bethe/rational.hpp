#pragma once

#include <gmpxx.h>

#include <string>

namespace bethe {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q", with "/q" dropped when q == 1.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);

// p/q in lowest terms (mpq_class(p, q) does not reduce on its own).
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool same_ring(const Rational&, const Rational&) { return true; }

Rational rational_pow(const Rational& x, unsigned e);
Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace bethe
