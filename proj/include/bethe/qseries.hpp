#pragma once

#include <string>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

// Laurent series in q known exactly up to and including q^order.
// Leading zeros are stripped, so lowest() is the true valuation whenever the
// series is nonzero below the truncation order.
class QSeries {
 public:
  QSeries() : lowest_(0), order_(-1) {}
  QSeries(int lowest, int order, std::vector<Rational> coeffs);

  static QSeries zero(int order);
  static QSeries one(int order) { return monomial(0, Rational(1), order); }
  static QSeries monomial(int e, const Rational& c, int order);
  // Exact finite polynomial sum_i c_i q^{lowest+i}, truncated at order.
  static QSeries polynomial(int lowest, const std::vector<Rational>& c, int order);

  int lowest() const { return lowest_; }
  int order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int e) const;
  // Coefficients from lowest() through order().
  const std::vector<Rational>& coeffs() const { return c_; }

  QSeries truncated(int order) const;
  QSeries shifted(int s) const;  // times q^s

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries scaled(const Rational& s) const;
  QSeries inverse() const;
  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

  // Coefficientwise equality through q^order (both must be known that far).
  bool agrees_with(const QSeries& o, int order) const;

  std::string to_string() const;

 private:
  void normalize();

  int lowest_;
  int order_;
  std::vector<Rational> c_;
};

// (q)_a = prod_{j=1}^a (1 - q^j), truncated at order.
QSeries qseries_pochhammer(int a, int order);

}  // namespace bethe
