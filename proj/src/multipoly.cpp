#include "bethe/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace bethe {

bool MultiPoly::GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly::MultiPoly(std::size_t nvars, const Rational& c) : n_(nvars) {
  if (!bethe::is_zero(c)) t_.emplace(Exponent(nvars, 0), c);
}

MultiPoly MultiPoly::var(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw ShapeError("MultiPoly::var: index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  MultiPoly p(nvars);
  p.t_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  for (int x : t_.begin()->first)
    if (x != 0) return false;
  return true;
}

Rational MultiPoly::constant_term() const {
  auto it = t_.find(Exponent(n_, 0));
  return it == t_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (t_.empty()) return -1;
  const auto& e = t_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != n_) throw RingMismatchError("MultiPoly::add_term: exponent length mismatch");
  if (bethe::is_zero(c)) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (bethe::is_zero(it->second)) t_.erase(it);
  }
}

void MultiPoly::check(const MultiPoly& o) const {
  if (n_ != o.n_)
    throw RingMismatchError("MultiPoly operands in " + std::to_string(n_) + " and " + std::to_string(o.n_) +
                            " variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check(o);
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check(o);
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& kv : r.t_) kv.second = -kv.second;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check(b);
  MultiPoly r(a.n_);
  if (a.t_.empty() || b.t_.empty()) return r;
  MultiPoly::Exponent e(a.n_);
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
  a.check(b);
  if (!b.is_constant() || b.is_zero()) throw NotInvertibleError("MultiPoly division by a non-constant or zero");
  return a.scaled(Rational(1) / b.constant_term());
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
  MultiPoly r(n_);
  if (bethe::is_zero(s)) return r;
  for (const auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e, c * s);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(n_, Rational(1)), base(*this);
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool MultiPoly::weighted_homogeneous(const std::vector<int>& weights, int& deg) const {
  if (weights.size() != n_) throw ShapeError("weighted_homogeneous: weight vector length");
  bool first = true;
  int d0 = 0;
  for (const auto& [e, c] : t_) {
    int d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += weights[i] * e[i];
    if (first) {
      d0 = d;
      first = false;
    } else if (d != d0) {
      return false;
    }
  }
  if (!first) deg = d0;
  return true;
}

MultiPoly MultiPoly::extended(std::size_t nvars) const {
  if (nvars < n_) throw ShapeError("MultiPoly::extended: fewer variables");
  MultiPoly r(nvars);
  for (const auto& [e, c] : t_) {
    Exponent f(e);
    f.resize(nvars, 0);
    r.t_.emplace(std::move(f), c);
  }
  return r;
}

MultiPoly MultiPoly::restricted(std::size_t nvars) const {
  if (nvars > n_) throw ShapeError("MultiPoly::restricted: more variables");
  MultiPoly r(nvars);
  for (const auto& [e, c] : t_) {
    for (std::size_t i = nvars; i < n_; ++i)
      if (e[i] != 0) throw DomainError("MultiPoly::restricted: dropped variable occurs");
    r.t_.emplace(Exponent(e.begin(), e.begin() + static_cast<long>(nvars)), c);
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = true;
    for (int x : e)
      if (x) unit = false;
    bool wrote = false;
    if (unit || mag != 1) {
      os << bethe::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace bethe
