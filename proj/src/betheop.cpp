#include "bethe/betheop.hpp"

namespace bethe {

namespace {

// Adds w * x^(s) y^(t) to the matrix (y applied first).
template <class T>
void add_pair(Matrix<T>& out, const SpinBasis& basis, Gen x, int s, Gen y, int t, const T& w) {
  for (std::size_t c = 0; c < basis.size(); ++c) {
    auto a = act_local(y, t, basis.mask(c));
    if (!a) continue;
    auto b = act_local(x, s, *a);
    if (!b) continue;
    out(basis.position(*b), c) += w;
  }
}

template <class T>
void add_single(Matrix<T>& out, const SpinBasis& basis, Gen x, int s, const T& w) {
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (auto a = act_local(x, s, basis.mask(c))) out(basis.position(*a), c) += w;
}

template <class T>
T int_pow(const T& x, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

template <class T>
Matrix<T> OperatorSeries<T>::coefficient(int j) const {
  const std::size_t dim = simple.empty() ? 0 : simple[0].rows();
  Matrix<T> out(dim, dim);
  if (j < 1) return out;
  for (std::size_t s = 0; s < poles.size(); ++s) {
    out += simple[s].scaled(int_pow(poles[s], j - 1));
    // 1/(u-b)^2 = sum_r (r+1) b^r u^{-r-2}
    if (j >= 2 && !double_pole[s].is_zero_matrix())
      out += double_pole[s].scaled(T(j - 1) * int_pow(poles[s], j - 2));
  }
  return out;
}

template <class T>
Matrix<T> OperatorSeries<T>::evaluate(const T& u) const {
  const std::size_t dim = simple.empty() ? 0 : simple[0].rows();
  Matrix<T> out(dim, dim);
  for (std::size_t s = 0; s < poles.size(); ++s) {
    T inv = T(1) / (u - poles[s]);
    out += simple[s].scaled(inv);
    if (!double_pole[s].is_zero_matrix()) out += double_pole[s].scaled(inv * inv);
  }
  return out;
}

template <class T>
OperatorSeries<T> bethe_b2_series(const EvalModuleT<T>& m, const KMatrix& k) {
  const int n = m.n();
  const auto& basis = m.basis();
  const auto dim = m.dim();
  const auto& b = m.points();
  OperatorSeries<T> out;
  out.poles = b;
  const T one(1);
  for (int s = 0; s < n; ++s) {
    Matrix<T> r(dim, dim), d(dim, dim);
    // Double pole at b_s: e11 e22 - e21 e12 + e22 (the last from -e22'(u)).
    add_pair(d, basis, Gen::e11, s, Gen::e22, s, one);
    add_pair(d, basis, Gen::e21, s, Gen::e12, s, T(-1));
    add_single(d, basis, Gen::e22, s, one);
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      T w = one / (b[static_cast<std::size_t>(s)] - b[static_cast<std::size_t>(t)]);
      add_pair(r, basis, Gen::e11, s, Gen::e22, t, w);
      add_pair(r, basis, Gen::e11, t, Gen::e22, s, w);
      add_pair(r, basis, Gen::e21, s, Gen::e12, t, T(-w));
      add_pair(r, basis, Gen::e21, t, Gen::e12, s, T(-w));
    }
    if (k.is_nilpotent()) add_single(r, basis, Gen::e21, s, one);
    if (!d.is_zero_matrix())
      throw TheoremViolation("bethe_b2_series: double-pole residue at site " + std::to_string(s + 1) +
                             " does not vanish");
    out.simple.push_back(std::move(r));
    out.double_pole.push_back(std::move(d));
  }
  return out;
}

template <class T>
Matrix<T> b2_coefficient_from_currents(const EvalModuleT<T>& m, const KMatrix& k, int j) {
  Matrix<T> out(m.dim(), m.dim());
  for (int r = 0; r <= j - 2; ++r) {
    int p = j - 2 - r;
    out += m.current(Gen::e11, r) * m.current(Gen::e22, p);
    out -= m.current(Gen::e21, r) * m.current(Gen::e12, p);
  }
  if (j >= 2) out += m.current(Gen::e22, j - 2).scaled(T(j - 1));
  if (k.is_nilpotent() && j >= 1) out += m.current(Gen::e21, j - 1);
  return out;
}

template <class T>
std::vector<T> elementary_symmetric(const std::vector<T>& x) {
  std::vector<T> e(x.size() + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t m = i + 1; m >= 1; --m) e[m] += e[m - 1] * x[i];
  return e;
}

template <class T>
ModuleOperator<T> universal_operator(const EvalModuleT<T>& m, const KMatrix& k) {
  auto series = bethe_b2_series(m, k);
  const int n = m.n();
  const auto& b = m.points();
  ModuleOperator<T> op;
  op.W = UniPoly<T>(T(0), {T(1)});
  for (const auto& x : b) op.W = op.W * UniPoly<T>(T(0), {-x, T(1)});
  op.U.assign(static_cast<std::size_t>(n), Matrix<T>(m.dim(), m.dim()));
  for (int s = 0; s < n; ++s) {
    std::vector<T> others;
    for (int t = 0; t < n; ++t)
      if (t != s) others.push_back(b[static_cast<std::size_t>(t)]);
    auto e = elementary_symmetric(others);
    for (int i = 1; i <= n; ++i) {
      T c = e[static_cast<std::size_t>(i - 1)];
      if ((i - 1) % 2 == 1) c = -c;
      if (!is_zero(c)) op.U[static_cast<std::size_t>(i - 1)] += series.simple[static_cast<std::size_t>(s)].scaled(c);
    }
  }
  return op;
}

template <class T>
Matrix<T> bethe_coefficient(const EvalModuleT<T>& m, int i, int j, const KMatrix& k) {
  if (i == 1) {
    if (j < 1) return Matrix<T>(m.dim(), m.dim());
    return Matrix<T>::identity(m.dim()).scaled(-m.power_sum(j - 1));
  }
  if (i == 2) return bethe_b2_series(m, k).coefficient(j);
  throw DomainError("bethe_coefficient: i must be 1 or 2");
}

template struct OperatorSeries<Rational>;
template struct OperatorSeries<PrecFloat>;
template OperatorSeries<Rational> bethe_b2_series(const EvalModuleT<Rational>&, const KMatrix&);
template OperatorSeries<PrecFloat> bethe_b2_series(const EvalModuleT<PrecFloat>&, const KMatrix&);
template Matrix<Rational> b2_coefficient_from_currents(const EvalModuleT<Rational>&, const KMatrix&, int);
template Matrix<PrecFloat> b2_coefficient_from_currents(const EvalModuleT<PrecFloat>&, const KMatrix&, int);
template ModuleOperator<Rational> universal_operator(const EvalModuleT<Rational>&, const KMatrix&);
template ModuleOperator<PrecFloat> universal_operator(const EvalModuleT<PrecFloat>&, const KMatrix&);
template Matrix<Rational> bethe_coefficient(const EvalModuleT<Rational>&, int, int, const KMatrix&);
template Matrix<PrecFloat> bethe_coefficient(const EvalModuleT<PrecFloat>&, int, int, const KMatrix&);
template std::vector<Rational> elementary_symmetric(const std::vector<Rational>&);
template std::vector<PrecFloat> elementary_symmetric(const std::vector<PrecFloat>&);

namespace {

std::string max_entry(const QMatrix& m) {
  Rational best = 0;
  for (const auto& x : m.data())
    if (abs(x) > best) best = abs(x);
  return to_string(best);
}

}  // namespace

Report commutativity_check(const EvalModule& m, const KMatrix& k, int jmax) {
  if (jmax < 2) throw DomainError("commutativity_check: jmax must be at least 2");
  Report rep;
  auto series = bethe_b2_series(m, k);
  std::vector<QMatrix> b2;
  for (int j = 1; j <= jmax; ++j) b2.push_back(series.coefficient(j));
  for (int i = 1; i <= jmax; ++i)
    for (int j = i + 1; j <= jmax; ++j) {
      QMatrix c = commutator(b2[static_cast<std::size_t>(i - 1)], b2[static_cast<std::size_t>(j - 1)]);
      rep.add("[B2," + std::to_string(i) + ",B2," + std::to_string(j) + "]", c.is_zero_matrix(), max_entry(c));
    }
  if (!k.is_nilpotent()) {
    for (Gen g : kAllGens) {
      QMatrix e = m.current(g, 0);
      for (int j = 1; j <= jmax; ++j) {
        QMatrix c = commutator(b2[static_cast<std::size_t>(j - 1)], e);
        rep.add("[B0_2," + std::to_string(j) + "," + to_string(g) + "]", c.is_zero_matrix(), max_entry(c));
      }
    }
  }
  return rep;
}

Report nilp_formula_check(const EvalModule& m, int jmax) {
  if (jmax < 1) throw DomainError("nilp_formula_check: jmax must be at least 1");
  Report rep;
  auto twisted = bethe_b2_series(m, KMatrix::nilpotent());
  auto plain = bethe_b2_series(m, KMatrix::zero());
  const auto& basis = m.basis();
  for (int j = 1; j <= jmax; ++j) {
    QMatrix diff = twisted.coefficient(j) - plain.coefficient(j);
    QMatrix want = m.current(Gen::e21, j - 1);
    rep.add("B2," + std::to_string(j) + "-B0 = e21 t^" + std::to_string(j - 1), diff == want, max_entry(diff - want));
    bool lowering = true;
    for (std::size_t r = 0; r < diff.rows(); ++r)
      for (std::size_t c = 0; c < diff.cols(); ++c)
        if (!is_zero(diff(r, c)) && basis.popcount_at(r) != basis.popcount_at(c) + 1) lowering = false;
    rep.add("B2," + std::to_string(j) + "-B0 lowers weight by one", lowering);
  }
  return rep;
}

Report reconstruction_check(const EvalModule& m, const KMatrix& k) {
  Report rep;
  const int n = m.n();
  const auto dim = m.dim();
  auto op = universal_operator(m, k);
  auto series = bethe_b2_series(m, k);
  std::vector<QMatrix> e11, e12, e21, e22;
  for (int s = 0; s < n; ++s) {
    e11.push_back(m.local(Gen::e11, s));
    e12.push_back(m.local(Gen::e12, s));
    e21.push_back(m.local(Gen::e21, s));
    e22.push_back(m.local(Gen::e22, s));
  }
  const QMatrix I = QMatrix::identity(dim);
  int taken = 0;
  for (int i = 0; taken < 2 * n + 1; ++i) {
    Rational u = Rational(i) + make_rational(1, 3);
    bool clash = false;
    for (const auto& b : m.points()) clash = clash || b == u;
    if (clash) continue;
    ++taken;
    // B_2(u) from the defining product, independent of the partial fractions.
    QMatrix E11(dim, dim), E12(dim, dim), E21(dim, dim), E22(dim, dim), dE22(dim, dim);
    for (int s = 0; s < n; ++s) {
      Rational w = Rational(1) / (u - m.points()[static_cast<std::size_t>(s)]);
      E11 += e11[static_cast<std::size_t>(s)].scaled(w);
      E12 += e12[static_cast<std::size_t>(s)].scaled(w);
      E21 += e21[static_cast<std::size_t>(s)].scaled(w);
      E22 += e22[static_cast<std::size_t>(s)].scaled(w);
      dE22 -= e22[static_cast<std::size_t>(s)].scaled(w * w);
    }
    QMatrix b2 = (I.scaled(k(1, 1)) + E11) * (I.scaled(k(2, 2)) + E22) -
                 (I.scaled(k(1, 2)) + E21) * (I.scaled(k(2, 1)) + E12) - dE22;
    QMatrix lhs(dim, dim);
    for (int j = 1; j <= n; ++j) lhs += op.U[static_cast<std::size_t>(j - 1)].scaled(rational_pow(u, static_cast<unsigned>(n - j)));
    QMatrix rhs = b2.scaled(op.W(u));
    rep.add("U(u) = W(u) B2(u) at u=" + to_string(u), lhs == rhs, max_entry(lhs - rhs));
    rep.add("partial fractions at u=" + to_string(u), series.evaluate(u) == b2, max_entry(series.evaluate(u) - b2));
  }
  for (int j = 0; j <= n + 3; ++j) {
    QMatrix a = series.coefficient(j), c = b2_coefficient_from_currents(m, k, j);
    rep.add("B2," + std::to_string(j) + " from currents", a == c, max_entry(a - c));
  }
  return rep;
}

UniPoly<Rational> irrep_bethe_image(const WeightLabel& w) {
  auto rep = build_irrep(w);
  auto mp = minimal_polynomial(rep.e21);
  auto want = UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(w.d() + 1));
  if (mp != want) throw TheoremViolation("minimal polynomial of e21 on L" + w.str() + " is not t^" + std::to_string(w.d() + 1));
  return mp;
}

SymbolicVector symbolic_bethe(int i, int j, const KMatrix& k, const SymbolicVector& v) {
  SymbolicVector out(v.n(), v.max_zdeg());
  if (j < 1) return out;
  if (i == 1) return multiply_power_sum(j - 1, v).scaled(Rational(-1));
  if (i != 2) throw DomainError("symbolic_bethe: i must be 1 or 2");
  for (int r = 0; r <= j - 2; ++r) {
    int p = j - 2 - r;
    out += symbolic_action(Gen::e11, r, symbolic_action(Gen::e22, p, v));
    out -= symbolic_action(Gen::e21, r, symbolic_action(Gen::e12, p, v));
  }
  if (j >= 2) out += symbolic_action(Gen::e22, j - 2, v).scaled(Rational(j - 1));
  if (k.is_nilpotent()) out += symbolic_action(Gen::e21, j - 1, v);
  return out;
}

}  // namespace bethe
