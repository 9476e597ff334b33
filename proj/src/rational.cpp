#include "bethe/rational.hpp"

#include "bethe/errors.hpp"

namespace bethe {

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '+') t += c;
  if (t.empty() || r.set_str(t, 10) != 0) throw DomainError("not a rational: '" + s + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& x, unsigned e) {
  Rational r(1), b(x);
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace bethe
