#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/rational.hpp"

namespace bethe {

// Dense polynomial in u over a commutative ring R. R must provide the free
// functions is_zero, zero_like, one_like and same_ring. The zero element is kept
// as a prototype so that rings with run-time parameters (A_d, polynomial rings)
// can be told apart.
template <class R>
class UniPoly {
 public:
  UniPoly() : zero_(), c_() {}
  explicit UniPoly(R zero) : zero_(std::move(zero)), c_() {}
  UniPoly(R zero, std::vector<R> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  // Ring inferred from the first coefficient.
  static UniPoly from_coeffs(std::vector<R> coeffs) {
    if (coeffs.empty()) throw ShapeError("UniPoly::from_coeffs needs a coefficient to infer the ring");
    R z = zero_like(coeffs.front());
    return UniPoly(std::move(z), std::move(coeffs));
  }

  static UniPoly monomial(const R& c, std::size_t deg) {
    std::vector<R> v(deg + 1, zero_like(c));
    v[deg] = c;
    return UniPoly(zero_like(c), std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& zero() const { return zero_; }

  // Coefficient of u^i (zero past the degree).
  const R& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const R& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  UniPoly& operator+=(const UniPoly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    check(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  UniPoly operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = zero_ - x;
    return r;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check(b);
    if (a.c_.empty() || b.c_.empty()) return UniPoly(a.zero_);
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(a.zero_, std::move(out));
  }

  UniPoly scaled(const R& s) const {
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x * s);
    return UniPoly(zero_, std::move(out));
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(zero_);
    std::vector<R> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      R k = one_like(zero_);
      for (std::size_t t = 1; t < i; ++t) k = k + one_like(zero_);
      out.push_back(c_[i] * k);
    }
    return UniPoly(zero_, std::move(out));
  }

  // Horner evaluation at a point of the coefficient ring.
  R operator()(const R& x) const {
    R acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  void check(const UniPoly& o) const {
    if (!same_ring(zero_, o.zero_)) throw RingMismatchError("UniPoly operands over different coefficient rings");
  }

  R zero_;
  std::vector<R> c_;
};

// Wr(f, g) = f g' - f' g.
template <class R>
UniPoly<R> poly_wronskian(const UniPoly<R>& f, const UniPoly<R>& g) {
  if (!same_ring(f.zero(), g.zero()))
    throw RingMismatchError("poly_wronskian: operands over different coefficient rings");
  return f * g.derivative() - f.derivative() * g;
}

template <class R>
bool is_zero(const UniPoly<R>& p) {
  return p.is_zero_poly();
}

}  // namespace bethe
