#include "bethe/precfloat.hpp"

#include <algorithm>
#include <vector>

#include "bethe/errors.hpp"

namespace bethe {

namespace {
thread_local unsigned t_default_bits = 128;

mpfr_prec_t widest(const PrecFloat& a, const PrecFloat& b) {
  return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}
}  // namespace

unsigned PrecFloat::default_precision() { return t_default_bits; }

void PrecFloat::set_default_precision(unsigned bits) {
  if (bits < MPFR_PREC_MIN) throw DomainError("precision too small");
  t_default_bits = bits;
}

PrecFloat::PrecFloat(unsigned bits, int) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }

PrecFloat::PrecFloat() : PrecFloat(t_default_bits, 0) { mpfr_set_zero(v_, 1); }

PrecFloat::PrecFloat(long v) : PrecFloat(t_default_bits, 0) { mpfr_set_si(v_, v, MPFR_RNDN); }

PrecFloat::PrecFloat(const Rational& q, unsigned bits) : PrecFloat(bits, 0) {
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

PrecFloat::PrecFloat(const Rational& q) : PrecFloat(q, t_default_bits) {}

PrecFloat::PrecFloat(const PrecFloat& o) : PrecFloat(o.precision(), 0) { mpfr_set(v_, o.v_, MPFR_RNDN); }

PrecFloat::PrecFloat(PrecFloat&& o) noexcept : PrecFloat(o.precision(), 0) { mpfr_swap(v_, o.v_); }

PrecFloat& PrecFloat::operator=(const PrecFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

PrecFloat& PrecFloat::operator=(PrecFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

PrecFloat::~PrecFloat() { mpfr_clear(v_); }

PrecFloat& PrecFloat::operator+=(const PrecFloat& o) {
  mpfr_prec_round(v_, widest(*this, o), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecFloat& PrecFloat::operator-=(const PrecFloat& o) {
  mpfr_prec_round(v_, widest(*this, o), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecFloat& PrecFloat::operator*=(const PrecFloat& o) {
  mpfr_prec_round(v_, widest(*this, o), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecFloat& PrecFloat::operator/=(const PrecFloat& o) {
  if (mpfr_zero_p(o.v_)) throw NotInvertibleError("PrecFloat division by zero");
  mpfr_prec_round(v_, widest(*this, o), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecFloat PrecFloat::operator-() const {
  PrecFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string PrecFloat::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_zero_p(v_)) return "0";
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_(PrecFloat::default_precision()) {
  PrecFloat::set_default_precision(bits);
}

PrecisionScope::~PrecisionScope() { PrecFloat::set_default_precision(saved_); }

PrecFloat abs(const PrecFloat& x) { return sgn(x) < 0 ? -x : x; }

PrecFloat sqrt(const PrecFloat& x) {
  PrecFloat r(x);
  mpfr_sqrt(r.data(), x.raw(), MPFR_RNDN);
  return r;
}

PrecFloat ldexp(const PrecFloat& x, long e) {
  PrecFloat r(x);
  mpfr_mul_2si(r.data(), x.raw(), e, MPFR_RNDN);
  return r;
}

PrecFloat pow2(long e, unsigned bits) { return ldexp(PrecFloat(Rational(1), bits), e); }

int sgn(const PrecFloat& x) { return mpfr_sgn(x.raw()); }

bool snap_rational(const PrecFloat& x, const Integer& max_den, const PrecFloat& tol, Rational& out) {
  // Continued-fraction convergents h/k of x.
  Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  PrecFloat rest = x;
  for (int step = 0; step < 200; ++step) {
    mpz_class a;
    mpfr_get_z(a.get_mpz_t(), rest.raw(), MPFR_RNDD);
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k > max_den) return false;
    Rational cand(h, k);
    cand.canonicalize();
    if (abs(PrecFloat(cand, x.precision()) - x) <= tol) {
      out = cand;
      return true;
    }
    PrecFloat frac = rest - PrecFloat(Rational(a), x.precision());
    if (is_zero(frac)) return false;
    rest = PrecFloat(Rational(1), x.precision()) / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return false;
}

std::string to_string(const PrecFloat& x) { return x.str(25); }

}  // namespace bethe
