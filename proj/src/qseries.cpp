#include "bethe/qseries.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "bethe/errors.hpp"

namespace bethe {

QSeries::QSeries(int lowest, int order, std::vector<Rational> coeffs)
    : lowest_(lowest), order_(order), c_(std::move(coeffs)) {
  int len = std::max(0, order_ - lowest_ + 1);
  c_.resize(static_cast<std::size_t>(len), Rational(0));
  normalize();
}

void QSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && bethe::is_zero(c_[lead])) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    lowest_ = order_ + 1;
    return;
  }
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    lowest_ += static_cast<int>(lead);
  }
}

QSeries QSeries::zero(int order) { return QSeries(order + 1, order, {}); }

QSeries QSeries::monomial(int e, const Rational& c, int order) {
  if (e > order) return zero(order);
  return QSeries(e, order, {c});
}

QSeries QSeries::polynomial(int lowest, const std::vector<Rational>& c, int order) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < c.size() && lowest + static_cast<int>(i) <= order; ++i) v.push_back(c[i]);
  return QSeries(lowest, order, std::move(v));
}

Rational QSeries::coeff(int e) const {
  if (e > order_) throw DomainError("QSeries::coeff beyond truncation order");
  if (e < lowest_ || c_.empty()) return Rational(0);
  return c_[static_cast<std::size_t>(e - lowest_)];
}

QSeries QSeries::truncated(int order) const {
  if (order > order_) throw DomainError("QSeries::truncated cannot extend precision");
  std::vector<Rational> v;
  for (int e = lowest_; e <= order && !c_.empty(); ++e) v.push_back(c_[static_cast<std::size_t>(e - lowest_)]);
  return QSeries(c_.empty() ? order + 1 : lowest_, order, std::move(v));
}

QSeries QSeries::shifted(int s) const {
  QSeries r(*this);
  r.lowest_ += s;
  r.order_ += s;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  int order = std::min(a.order_, b.order_);
  int lo = std::min(a.lowest_, b.lowest_);
  std::vector<Rational> v(static_cast<std::size_t>(std::max(0, order - lo + 1)), Rational(0));
  for (int e = lo; e <= order; ++e) {
    Rational x(0);
    if (e >= a.lowest_ && !a.c_.empty()) x += a.c_[static_cast<std::size_t>(e - a.lowest_)];
    if (e >= b.lowest_ && !b.c_.empty()) x += b.c_[static_cast<std::size_t>(e - b.lowest_)];
    v[static_cast<std::size_t>(e - lo)] = x;
  }
  return QSeries(lo, order, std::move(v));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.scaled(Rational(-1)); }

QSeries QSeries::scaled(const Rational& s) const {
  QSeries r(*this);
  for (auto& x : r.c_) x *= s;
  r.normalize();
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  // A known to order Na with valuation va, B likewise: the product is known
  // to min(Na + vb, Nb + va).
  if (a.c_.empty() || b.c_.empty()) {
    int order = std::min(a.order_ + (b.c_.empty() ? b.order_ + 1 : b.lowest_),
                         b.order_ + (a.c_.empty() ? a.order_ + 1 : a.lowest_));
    return QSeries::zero(order);
  }
  int order = std::min(a.order_ + b.lowest_, b.order_ + a.lowest_);
  int lo = a.lowest_ + b.lowest_;
  std::vector<Rational> v(static_cast<std::size_t>(std::max(0, order - lo + 1)), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (bethe::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      int e = lo + static_cast<int>(i + j);
      if (e > order) break;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return QSeries(lo, order, std::move(v));
}

QSeries QSeries::inverse() const {
  if (c_.empty()) throw NotInvertibleError("QSeries::inverse of a series with no known nonzero term");
  // this = q^L (c0 + c1 q + ...), known through relative index N - L.
  int L = lowest_;
  int rel = order_ - L;
  std::vector<Rational> inv(static_cast<std::size_t>(rel + 1), Rational(0));
  Rational c0inv = Rational(1) / c_[0];
  inv[0] = c0inv;
  for (int m = 1; m <= rel; ++m) {
    Rational acc(0);
    for (int l = 1; l <= m && l < static_cast<int>(c_.size()); ++l)
      acc += c_[static_cast<std::size_t>(l)] * inv[static_cast<std::size_t>(m - l)];
    inv[static_cast<std::size_t>(m)] = -acc * c0inv;
  }
  return QSeries(-L, rel - L, std::move(inv));
}

bool QSeries::agrees_with(const QSeries& o, int order) const {
  if (order > order_ || order > o.order_) throw DomainError("QSeries::agrees_with beyond known order");
  int lo = std::min(lowest_, o.lowest_);
  for (int e = lo; e <= order; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (bethe::is_zero(c_[i])) continue;
    int e = lowest_ + static_cast<int>(i);
    if (!first) os << (sgn(c_[i]) < 0 ? " - " : " + ");
    else if (sgn(c_[i]) < 0) os << "-";
    first = false;
    Rational m = abs(c_[i]);
    if (e == 0) os << bethe::to_string(m);
    else {
      if (m != 1) os << bethe::to_string(m) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

QSeries qseries_pochhammer(int a, int order) {
  if (a < 0) throw DomainError("qseries_pochhammer: negative a");
  QSeries r = QSeries::one(order);
  for (int j = 1; j <= a; ++j) {
    std::vector<Rational> f(static_cast<std::size_t>(j + 1), Rational(0));
    f[0] = 1;
    f[static_cast<std::size_t>(j)] = -1;
    r = r * QSeries::polynomial(0, f, order);
  }
  return r;
}

}  // namespace bethe
