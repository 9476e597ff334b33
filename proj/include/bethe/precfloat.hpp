#pragma once

#include <mpfr.h>

#include <string>

#include "bethe/rational.hpp"

namespace bethe {

// MPFR value that carries its own precision. Results of binary operations take
// the larger precision of the two operands. Values created without an explicit
// precision use the calling thread's default (see PrecisionScope).
class PrecFloat {
 public:
  PrecFloat();
  PrecFloat(long v);  // NOLINT(google-explicit-constructor): used as a ring scalar
  PrecFloat(const Rational& q, unsigned bits);
  explicit PrecFloat(const Rational& q);
  PrecFloat(const PrecFloat& o);
  PrecFloat(PrecFloat&& o) noexcept;
  PrecFloat& operator=(const PrecFloat& o);
  PrecFloat& operator=(PrecFloat&& o) noexcept;
  ~PrecFloat();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr data() { return v_; }

  static unsigned default_precision();
  static void set_default_precision(unsigned bits);

  PrecFloat& operator+=(const PrecFloat& o);
  PrecFloat& operator-=(const PrecFloat& o);
  PrecFloat& operator*=(const PrecFloat& o);
  PrecFloat& operator/=(const PrecFloat& o);
  PrecFloat operator-() const;

  friend PrecFloat operator+(PrecFloat a, const PrecFloat& b) { return a += b; }
  friend PrecFloat operator-(PrecFloat a, const PrecFloat& b) { return a -= b; }
  friend PrecFloat operator*(PrecFloat a, const PrecFloat& b) { return a *= b; }
  friend PrecFloat operator/(PrecFloat a, const PrecFloat& b) { return a /= b; }

  friend bool operator<(const PrecFloat& a, const PrecFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const PrecFloat& a, const PrecFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const PrecFloat& a, const PrecFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const PrecFloat& a, const PrecFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const PrecFloat& a, const PrecFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const PrecFloat& a, const PrecFloat& b) { return !mpfr_equal_p(a.v_, b.v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string str(int digits = 20) const;

 private:
  explicit PrecFloat(unsigned bits, int);
  mpfr_t v_;
};

// Sets the calling thread's default precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

PrecFloat abs(const PrecFloat& x);
PrecFloat sqrt(const PrecFloat& x);
PrecFloat ldexp(const PrecFloat& x, long e);
// 2^e at the given precision.
PrecFloat pow2(long e, unsigned bits);
int sgn(const PrecFloat& x);

inline bool is_zero(const PrecFloat& x) { return mpfr_zero_p(x.raw()) != 0; }
inline PrecFloat zero_like(const PrecFloat& x) { return PrecFloat(Rational(0), x.precision()); }
inline PrecFloat one_like(const PrecFloat& x) { return PrecFloat(Rational(1), x.precision()); }
inline bool same_ring(const PrecFloat&, const PrecFloat&) { return true; }

// Best rational approximation with denominator at most max_den (continued
// fractions). Returns false when no convergent lies within tol.
bool snap_rational(const PrecFloat& x, const Integer& max_den, const PrecFloat& tol, Rational& out);

std::string to_string(const PrecFloat& x);

}  // namespace bethe
