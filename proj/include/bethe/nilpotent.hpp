#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/rational.hpp"

namespace bethe {

// Element of A_d[T] = T[b]/(b^{d+1}); coeffs()[j] multiplies b^j.
template <class T>
class NilpotentElement {
 public:
  NilpotentElement() : d_(0), c_(1) {}
  NilpotentElement(int d, const T& zero) : d_(d), c_(check_order(d) + 1, zero) {}
  NilpotentElement(int d, std::vector<T> coeffs) : d_(d), c_(std::move(coeffs)) {
    if (d < 0 || static_cast<int>(c_.size()) != d + 1)
      throw ShapeError("NilpotentElement needs exactly d+1 coefficients");
  }

  static NilpotentElement scalar(int d, const T& x) {
    NilpotentElement r(d, zero_like(x));
    r.c_[0] = x;
    return r;
  }
  // c * b^j (zero when j > d).
  static NilpotentElement monomial(int d, const T& c, int j) {
    NilpotentElement r(d, zero_like(c));
    if (j <= d) r.c_[static_cast<std::size_t>(j)] = c;
    return r;
  }

  int order() const { return d_; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t j) const { return c_.at(j); }
  T& operator[](std::size_t j) { return c_.at(j); }

  // Smallest j with a nonzero b^j coefficient; d+1 for zero.
  int valuation() const {
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (!is_zero(c_[j])) return static_cast<int>(j);
    return d_ + 1;
  }

  NilpotentElement& operator+=(const NilpotentElement& o) {
    check(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = c_[j] + o.c_[j];
    return *this;
  }
  NilpotentElement& operator-=(const NilpotentElement& o) {
    check(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = c_[j] - o.c_[j];
    return *this;
  }
  friend NilpotentElement operator+(NilpotentElement a, const NilpotentElement& b) { return a += b; }
  friend NilpotentElement operator-(NilpotentElement a, const NilpotentElement& b) { return a -= b; }
  NilpotentElement operator-() const {
    NilpotentElement r(*this);
    for (auto& x : r.c_) x = zero_like(x) - x;
    return r;
  }

  friend NilpotentElement operator*(const NilpotentElement& a, const NilpotentElement& b) {
    a.check(b);
    NilpotentElement r(a.d_, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return r;
  }
  NilpotentElement& operator*=(const NilpotentElement& o) { return *this = *this * o; }

  NilpotentElement scaled(const T& s) const {
    NilpotentElement r(*this);
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  // Multiplication by b^s.
  NilpotentElement shifted(int s) const {
    NilpotentElement r(d_, zero_like(c_[0]));
    for (int j = 0; j + s <= d_; ++j) r.c_[static_cast<std::size_t>(j + s)] = c_[static_cast<std::size_t>(j)];
    return r;
  }

  NilpotentElement pow(unsigned e) const {
    NilpotentElement r = scalar(d_, one_like(c_[0]));
    NilpotentElement base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  friend bool operator==(const NilpotentElement& a, const NilpotentElement& b) {
    if (a.d_ != b.d_) return false;
    for (std::size_t j = 0; j < a.c_.size(); ++j)
      if (!is_zero(a.c_[j] - b.c_[j])) return false;
    return true;
  }
  friend bool operator!=(const NilpotentElement& a, const NilpotentElement& b) { return !(a == b); }

 private:
  static int check_order(int d) {
    if (d < 0) throw DomainError("A_d needs d >= 0");
    return d;
  }
  void check(const NilpotentElement& o) const {
    if (d_ != o.d_ || !same_ring(c_[0], o.c_[0]))
      throw RingMismatchError("NilpotentElement operands from A_" + std::to_string(d_) + " and A_" +
                              std::to_string(o.d_));
  }

  int d_;
  std::vector<T> c_;
};

template <class T>
bool is_zero(const NilpotentElement<T>& x) {
  for (const auto& c : x.coeffs())
    if (!is_zero(c)) return false;
  return true;
}
template <class T>
NilpotentElement<T> zero_like(const NilpotentElement<T>& x) {
  return NilpotentElement<T>(x.order(), zero_like(x.coeffs()[0]));
}
template <class T>
NilpotentElement<T> one_like(const NilpotentElement<T>& x) {
  return NilpotentElement<T>::scalar(x.order(), one_like(x.coeffs()[0]));
}
template <class T>
bool same_ring(const NilpotentElement<T>& a, const NilpotentElement<T>& b) {
  return a.order() == b.order() && same_ring(a.coeffs()[0], b.coeffs()[0]);
}

// Inverse of a unit c0 + (nilpotent) by the truncated geometric series.
// Needs a T-level inverse for c0, supplied by the caller.
template <class T, class Inv>
NilpotentElement<T> nilpotent_invert_with(const NilpotentElement<T>& x, Inv&& inverse_of) {
  if (is_zero(x.coeffs()[0])) throw NotInvertibleError("nilpotent_invert: constant term is zero");
  const int d = x.order();
  T c0inv = inverse_of(x.coeffs()[0]);
  NilpotentElement<T> r(d, zero_like(c0inv));
  r[0] = c0inv;
  // r_m = -c0^{-1} * sum_{l=1}^{m} x_l r_{m-l}
  for (int m = 1; m <= d; ++m) {
    T acc = zero_like(c0inv);
    for (int l = 1; l <= m; ++l)
      acc = acc + x[static_cast<std::size_t>(l)] * r[static_cast<std::size_t>(m - l)];
    r[static_cast<std::size_t>(m)] = zero_like(c0inv) - acc * c0inv;
  }
  return r;
}

template <class T>
NilpotentElement<T> nilpotent_invert(const NilpotentElement<T>& x) {
  return nilpotent_invert_with(x, [](const T& c) { return T(one_like(c) / c); });
}

}  // namespace bethe
