#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bethe/errors.hpp"
#include "bethe/rational.hpp"

namespace bethe {

// Sparse polynomial over Q in a fixed number of variables x_0 < x_1 < ... .
// Terms are ordered graded-lexicographically: total degree first, then the
// exponent of the largest variable, then the next one down.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;
  struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
  };
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  MultiPoly() : n_(0) {}
  explicit MultiPoly(std::size_t nvars) : n_(nvars) {}
  MultiPoly(std::size_t nvars, const Rational& c);
  static MultiPoly var(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const { return n_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int total_degree() const;  // -1 for zero

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly operator-() const;
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  // Division is only defined by nonzero constants.
  friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& s) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Degree under integer weights when every term agrees; false otherwise.
  // The zero polynomial counts as homogeneous of any degree (deg untouched).
  bool weighted_homogeneous(const std::vector<int>& weights, int& deg) const;

  // Copy into a ring with more variables (new ones appended).
  MultiPoly extended(std::size_t nvars) const;
  // Copy into the ring of the first nvars variables; the dropped ones must not occur.
  MultiPoly restricted(std::size_t nvars) const;

  // Evaluate with x_i -> values[i]; conv maps a Rational into R.
  template <class R, class Conv>
  R evaluate(const std::vector<R>& values, const R& zero, Conv&& conv) const {
    if (values.size() != n_) throw ShapeError("MultiPoly::evaluate: wrong number of values");
    std::vector<std::vector<R>> powers(n_);
    R acc = zero;
    for (const auto& [e, c] : t_) {
      R term = conv(c);
      for (std::size_t i = 0; i < n_; ++i) {
        int k = e[i];
        if (k == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(values[i]);
        while (static_cast<int>(pw.size()) < k) pw.push_back(pw.back() * values[i]);
        term = term * pw[static_cast<std::size_t>(k - 1)];
      }
      acc = acc + term;
    }
    return acc;
  }

  // Terms in descending order, e.g. "2*f0*g1^2 - 1/3*g3 + 1".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check(const MultiPoly& o) const;

  std::size_t n_;
  TermMap t_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.nvars()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly(p.nvars(), Rational(1)); }
inline bool same_ring(const MultiPoly& a, const MultiPoly& b) { return a.nvars() == b.nvars(); }

}  // namespace bethe
