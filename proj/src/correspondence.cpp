#include "bethe/correspondence.hpp"

#include <map>
#include <mutex>
#include <type_traits>

#include "bethe/random.hpp"

namespace bethe {

namespace {

template <class T>
constexpr bool kExact = std::is_same_v<T, Rational>;

template <class T>
T lift(const Rational& q, const T& like) {
  if constexpr (kExact<T>)
    return q;
  else
    return PrecFloat(q, like.precision());
}

PrecFloat max_of(const PrecFloat& a, const PrecFloat& b) { return a < b ? b : a; }

template <class T>
std::string residual_str(const T& r) {
  if constexpr (kExact<T>)
    return "0";
  else
    return r.str(6);
}

// Relative difference of two A_d elements; exact comparison over Q.
template <class T>
bool near(const NilpotentElement<T>& a, const NilpotentElement<T>& b, const T& tol, T& worst) {
  if constexpr (kExact<T>) {
    (void)tol;
    (void)worst;
    return a == b;
  } else {
    bool ok = true;
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
      PrecFloat x = abs(a[j] - b[j]) / max_of(PrecFloat(1), abs(b[j]));
      worst = max_of(worst, x);
      if (x > tol) ok = false;
    }
    return ok;
  }
}

template <class T>
UniPoly<NilpotentElement<T>> lift_poly(const UniPoly<T>& p, int d) {
  NilpotentElement<T> z(d, p.zero());
  std::vector<NilpotentElement<T>> c;
  for (const auto& x : p.coeffs()) c.push_back(NilpotentElement<T>::scalar(d, x));
  return UniPoly<NilpotentElement<T>>(z, std::move(c));
}

// c / b^s for c with valuation >= s.
template <class T>
NilpotentElement<T> unshift(const NilpotentElement<T>& c, int s) {
  NilpotentElement<T> r = zero_like(c);
  for (int j = s; j <= c.order(); ++j) r[static_cast<std::size_t>(j - s)] = c[static_cast<std::size_t>(j)];
  return r;
}

template <class T>
UniPoly<T> mono(const T& one, int e) {
  return UniPoly<T>::monomial(one, static_cast<std::size_t>(e));
}

template <class T>
struct LevelSolver {
  UniPoly<T> W, W1, U0;
  std::vector<UniPoly<T>> Ul;  // b^l part of U(u), l = 0..d
  T one, tol;
  T residual;

  UniPoly<T> D0(const UniPoly<T>& p) const { return W * p.derivative().derivative() - W1 * p.derivative() + U0 * p; }

  // y_j = fixed + sum x_e u^e with D0 y_j = -sum_{l=1}^j U_l y_{j-l}.
  UniPoly<T> solve(const std::vector<UniPoly<T>>& lower, const UniPoly<T>& fixed, const std::vector<int>& unknowns,
                   const std::string& what) {
    const std::size_t j = lower.size();
    UniPoly<T> rhs = -D0(fixed);
    for (std::size_t l = 1; l <= j && l < Ul.size(); ++l) rhs -= Ul[l] * lower[j - l];
    std::vector<UniPoly<T>> cols;
    int rows = rhs.degree() + 1;
    for (int e : unknowns) {
      cols.push_back(D0(mono(one, e)));
      rows = std::max(rows, cols.back().degree() + 1);
    }
    rows = std::max(rows, 1);
    const auto nr = static_cast<std::size_t>(rows);
    Matrix<T> a(nr, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < nr; ++r) a(r, c) = cols[c].coeff(r);
    UniPoly<T> y = fixed;
    if constexpr (kExact<T>) {
      QMatrix b(nr, 1);
      for (std::size_t r = 0; r < nr; ++r) b(r, 0) = rhs.coeff(r);
      auto x = bethe::solve(a, b);
      if (!x) throw TheoremViolation(what + ": level " + std::to_string(j) + " has no polynomial solution");
      if (rank(a) != cols.size()) throw TheoremViolation(what + ": level " + std::to_string(j) + " is not unique");
      for (std::size_t c = 0; c < cols.size(); ++c) y += mono((*x)(c, 0), unknowns[c]);
    } else {
      std::vector<PrecFloat> b(nr);
      PrecFloat scale(1);
      for (std::size_t r = 0; r < nr; ++r) {
        b[r] = rhs.coeff(r);
        scale = max_of(scale, abs(b[r]));
      }
      for (const auto& x : a.data()) scale = max_of(scale, abs(x));
      std::vector<PrecFloat> x;
      if (!cols.empty()) {
        if (rank_numeric(a, tol * scale) != cols.size())
          throw TheoremViolation(what + ": level " + std::to_string(j) + " is not unique");
        x = least_squares(a, b);
      }
      PrecFloat worst(0);
      for (std::size_t r = 0; r < nr; ++r) {
        PrecFloat s = b[r];
        for (std::size_t c = 0; c < cols.size(); ++c) s -= a(r, c) * x[c];
        worst = max_of(worst, abs(s) / scale);
      }
      residual = max_of(residual, worst);
      if (worst > tol)
        throw PrecisionInsufficientError(what + ": level " + std::to_string(j) + " residual " + worst.str(6));
      for (std::size_t c = 0; c < cols.size(); ++c) y += mono(x[c], unknowns[c]);
    }
    return y;
  }
};

template <class T>
AdPoly<T> assemble(const std::vector<UniPoly<T>>& levels, int d, const T& zero) {
  std::size_t len = 0;
  for (const auto& y : levels) len = std::max(len, y.coeffs().size());
  std::vector<NilpotentElement<T>> c(len, NilpotentElement<T>(d, zero));
  for (std::size_t j = 0; j < levels.size(); ++j)
    for (std::size_t e = 0; e < levels[j].coeffs().size(); ++e) c[e][j] = levels[j].coeffs()[e];
  return AdPoly<T>(NilpotentElement<T>(d, zero), std::move(c));
}

std::vector<int> range_list(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

template <class T>
T worst_coefficient(const AdPoly<T>& p) {
  T w = zero_like(p.zero().coeffs()[0]);
  if constexpr (!kExact<T>) {
    for (const auto& c : p.coeffs())
      for (const auto& x : c.coeffs()) w = max_of(w, abs(x));
  }
  return w;
}

}  // namespace

template <class T>
SolutionPair<T> construct_solutions(const UniPoly<T>& W, const std::vector<NilpotentElement<T>>& U, int k, int d,
                                    const T& tol) {
  const int n = 2 * k + d;
  if (k < 0 || d < 0 || n < 1) throw DomainError("construct_solutions needs k >= 0, d >= 0, 2k+d >= 1");
  if (W.degree() != n || static_cast<int>(U.size()) != n)
    throw ShapeError("construct_solutions: W must have degree 2k+d and U must have 2k+d entries");
  const T one = one_like(W.leading());
  const T zero = zero_like(one);
  std::optional<PrecisionScope> scope;
  if constexpr (!kExact<T>) scope.emplace(one.precision());
  if (!is_zero(W.leading() - one)) throw DomainError("construct_solutions: W must be monic");
  for (const auto& u : U)
    if (u.order() != d) throw RingMismatchError("construct_solutions: U_i must lie in A_d");

  SolutionPair<T> sol;
  sol.k = k;
  sol.d = d;
  sol.residual = zero;
  T dummy = zero;
  if (!near(U[0], NilpotentElement<T>::monomial(d, one, 1), tol, dummy))
    throw IndicialError("U_1 must equal b");

  // chi(a) = a(a-1) - n a + v_{n-2,0}
  const T v = n >= 2 ? U[1][0] : zero;
  const T want = lift(Rational(k * (k + d + 1)), one);
  bool indicial = true;
  if constexpr (kExact<T>)
    indicial = v == want;
  else
    indicial = abs(v - want) <= tol * max_of(PrecFloat(1), abs(want));
  if (!indicial) throw IndicialError("indicial polynomial is not (a-k)(a-k-d-1)");
  sol.report.add("indicial roots k, k+d+1", true);
  auto chi = [&](int a) { return Rational(a * (a - 1) - n * a + k * (k + d + 1)); };

  LevelSolver<T> ls;
  ls.W = W;
  ls.W1 = W.derivative();
  ls.one = one;
  ls.tol = tol;
  ls.residual = zero;
  for (int l = 0; l <= d; ++l) {
    std::vector<T> c(static_cast<std::size_t>(n), zero);
    for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(n - i)] = U[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l)];
    ls.Ul.emplace_back(zero, std::move(c));
  }
  ls.U0 = ls.Ul[0];

  std::vector<UniPoly<T>> fy, gy;
  std::vector<int> low = range_list(0, k - 1);
  for (int j = 0; j <= d; ++j) {
    std::vector<int> un = low;
    for (int i = 1; i <= j; ++i) un.push_back(k + i);
    UniPoly<T> fixed = j == 0 ? mono(one, k) : UniPoly<T>(zero);
    fy.push_back(ls.solve(fy, fixed, un, "F"));
  }
  for (int j = 0; j <= d; ++j) {
    std::vector<int> un = low;
    for (int i = k + 1; i <= k + d; ++i) un.push_back(i);
    for (int i = 1; i <= j; ++i) un.push_back(k + d + 1 + i);
    UniPoly<T> fixed = j == 0 ? mono(one, k + d + 1) : UniPoly<T>(zero);
    gy.push_back(ls.solve(gy, fixed, un, "G"));
  }

  // Leading coefficient of F at level j is (-1)^j / prod_{m<=j} chi(k+m).
  bool lead_ok = true;
  T lead_worst = zero;
  for (int j = 1; j <= d; ++j) {
    Rational p(1);
    for (int m = 1; m <= j; ++m) p *= chi(k + m);
    Rational expect = Rational(j % 2 ? -1 : 1) / p;
    const T& got = fy[static_cast<std::size_t>(j)].coeff(static_cast<std::size_t>(k + j));
    if constexpr (kExact<T>) {
      if (got != expect) lead_ok = false;
    } else {
      PrecFloat x = abs(got - lift(expect, one)) / max_of(PrecFloat(1), abs(lift(expect, one)));
      lead_worst = max_of(lead_worst, x);
      if (x > tol) lead_ok = false;
    }
  }
  sol.report.add("F leading coefficients (-1)^j/prod chi(k+m)", lead_ok, residual_str(lead_worst));

  sol.F = assemble(fy, d, zero);
  sol.G = assemble(gy, d, zero);
  sol.residual = ls.residual;

  AdPoly<T> Wa = lift_poly(W, d);
  std::vector<NilpotentElement<T>> uc(static_cast<std::size_t>(n), NilpotentElement<T>(d, zero));
  for (int i = 1; i <= n; ++i) uc[static_cast<std::size_t>(n - i)] = U[static_cast<std::size_t>(i - 1)];
  AdPoly<T> Ua(NilpotentElement<T>(d, zero), uc);
  AdPoly<T> W1 = Wa.derivative();
  for (const auto* y : {&sol.F, &sol.G}) {
    AdPoly<T> r = Wa * y->derivative().derivative() - W1 * y->derivative() + Ua * (*y);
    const char* name = y == &sol.F ? "D F = 0" : "D G = 0";
    if constexpr (kExact<T>) {
      sol.report.add(name, r.is_zero_poly());
    } else {
      PrecFloat w = worst_coefficient(r) / max_of(PrecFloat(1), worst_coefficient(*y));
      sol.residual = max_of(sol.residual, w);
      sol.report.add(name, w <= tol, w.str(6));
    }
  }
  return sol;
}

template <class T>
NilpotentElement<T> eta_apply(const SpecialHom<T>& h, const OElement& x) {
  const std::size_t nv = x.coeffs()[0].nvars();
  const T one = h.values.empty() ? (h.phi.empty() ? T(1) : one_like(h.phi[0][0])) : one_like(h.values[0][0]);
  std::vector<NilpotentElement<T>> vals = h.values;
  if (nv != vals.size()) {
    FGRing big = FGRing::make(h.k, h.d, true);
    if (nv != big.nvars()) throw RingMismatchError("eta_apply: element from a different ring");
    vals.resize(big.nvars(), NilpotentElement<T>(h.d, zero_like(one)));
    for (int i = 1; i <= h.d; ++i) {
      vals[big.ft(i)] = unshift(h.phi[static_cast<std::size_t>(i - 1)], i);
      vals[big.gt(i)] = unshift(h.psi[static_cast<std::size_t>(i - 1)], i);
    }
  }
  NilpotentElement<T> zero(h.d, zero_like(one));
  NilpotentElement<T> acc = zero;
  auto conv = [&](const Rational& q) { return NilpotentElement<T>::scalar(h.d, lift(q, one)); };
  for (int j = 0; j <= h.d; ++j) {
    const MultiPoly& p = x.coeffs()[static_cast<std::size_t>(j)];
    if (p.is_zero()) continue;
    acc += p.evaluate(vals, zero, conv).shifted(j);
  }
  return acc;
}

template <class T>
std::pair<SpecialHom<T>, Report> special_hom_from_solutions(const SolutionPair<T>& sol, const OperatorO& op,
                                                            const UniPoly<T>& W, const T& tol) {
  const int k = sol.k, d = sol.d;
  if (op.k != k || op.d != d) throw RingMismatchError("special_hom_from_solutions: operator for another (k, d)");
  const T one = one_like(W.leading());
  std::optional<PrecisionScope> scope;
  if constexpr (!kExact<T>) scope.emplace(one.precision());
  SpecialHom<T> h;
  h.k = k;
  h.d = d;
  const FGRing& r = op.ring;
  h.values.assign(r.nvars(), NilpotentElement<T>(d, zero_like(one)));
  for (int i = 0; i < k; ++i) {
    h.values[r.f(i)] = sol.F.coeff(static_cast<std::size_t>(i));
    h.values[r.g(i)] = sol.G.coeff(static_cast<std::size_t>(i));
  }
  for (int i = k + 1; i <= k + d; ++i) h.values[r.g(i)] = sol.G.coeff(static_cast<std::size_t>(i));
  Report rep;
  bool val_ok = true;
  for (int i = 1; i <= d; ++i) {
    h.phi.push_back(sol.F.coeff(static_cast<std::size_t>(k + i)));
    h.psi.push_back(sol.G.coeff(static_cast<std::size_t>(k + d + 1 + i)));
    T w = zero_like(one);
    NilpotentElement<T> z(d, zero_like(one));
    for (const auto* c : {&h.phi.back(), &h.psi.back()})
      for (int j = 0; j < i; ++j)
        if (!near(NilpotentElement<T>::monomial(d, (*c)[static_cast<std::size_t>(j)], j), z, tol, w)) val_ok = false;
  }
  rep.add("tail coefficients divisible by b^i", val_ok);

  T worst = zero_like(one);
  bool rel_ok = true;
  auto sys = build_system(k, d).second;
  NilpotentElement<T> z(d, zero_like(one));
  for (const auto& e : sys.equations)
    if (!near(eta_apply(h, e), z, tol, worst)) rel_ok = false;
  rep.add("eta kills the relations", rel_ok, residual_str(worst));

  worst = zero_like(one);
  bool fg_ok = true;
  for (const auto& [pu, pa] : {std::pair{&op.f, &sol.F}, std::pair{&op.g, &sol.G}}) {
    std::size_t len = std::max(pu->coeffs().size(), pa->coeffs().size());
    for (std::size_t e = 0; e < len; ++e) {
      NilpotentElement<T> img = e < pu->coeffs().size() ? eta_apply(h, pu->coeffs()[e]) : z;
      if (!near(img, pa->coeff(e), tol, worst)) fg_ok = false;
    }
  }
  rep.add("eta({f}) = F, eta({g}) = G", fg_ok, residual_str(worst));

  // Wr(F,G) = c W with c constant in u; c = d+1 mod b. Specialness asks for c = d+1.
  worst = zero_like(one);
  AdPoly<T> wr = poly_wronskian(sol.F, sol.G);
  const int n = 2 * k + d;
  h.wr_unit = wr.coeff(static_cast<std::size_t>(n));
  AdPoly<T> target = lift_poly(W, d).scaled(h.wr_unit);
  bool unit_ok = near(NilpotentElement<T>::scalar(d, h.wr_unit[0]),
                      NilpotentElement<T>::scalar(d, lift(Rational(d + 1), one)), tol, worst);
  bool img_ok = true;
  std::size_t len = std::max({wr.coeffs().size(), target.coeffs().size(), op.wr.coeffs().size()});
  for (std::size_t e = 0; e < len; ++e) {
    if (!near(wr.coeff(e), target.coeff(e), tol, worst)) unit_ok = false;
    NilpotentElement<T> img = e < op.wr.coeffs().size() ? eta_apply(h, op.wr.coeffs()[e]) : z;
    if (!near(img, wr.coeff(e), tol, worst)) img_ok = false;
  }
  rep.add("Wr(F,G) = c W with c = d+1 mod b", unit_ok, residual_str(worst));
  rep.add("eta(Wr) = Wr(F,G)", img_ok, residual_str(worst));
  T sw = zero_like(one);
  bool special = near(h.wr_unit, NilpotentElement<T>::scalar(d, lift(Rational(d + 1), one)), tol, sw);
  std::string detail = "c =";
  for (int j = 0; j <= d; ++j) {
    if constexpr (kExact<T>)
      detail += " " + to_string(h.wr_unit[static_cast<std::size_t>(j)]);
    else
      detail += " " + h.wr_unit[static_cast<std::size_t>(j)].str(8);
    if (j > 0) detail += " b^" + std::to_string(j);
  }
  rep.add(kSpecialCheck, special, residual_str(sw), detail);
  return {std::move(h), std::move(rep)};
}

template <class T>
std::vector<NilpotentElement<T>> series_at_infinity(const AdPoly<T>& num, const AdPoly<T>& den, int J) {
  const int n = den.degree();
  if (n < 0 || num.degree() >= n) throw DomainError("series_at_infinity needs deg num < deg den");
  NilpotentElement<T> inv = nilpotent_invert(den.leading());
  std::vector<NilpotentElement<T>> c;
  for (int j = 1; j <= J; ++j) {
    NilpotentElement<T> acc = n - j >= 0 ? num.coeff(static_cast<std::size_t>(n - j)) : zero_like(inv);
    for (int i = 1; i < j; ++i) {
      int e = n - j + i;
      if (e < 0) continue;
      acc -= den.coeff(static_cast<std::size_t>(e)) * c[static_cast<std::size_t>(i - 1)];
    }
    c.push_back(acc * inv);
  }
  return c;
}

template SolutionPair<Rational> construct_solutions(const UniPoly<Rational>&, const std::vector<NilpotentElement<Rational>>&,
                                                    int, int, const Rational&);
template SolutionPair<PrecFloat> construct_solutions(const UniPoly<PrecFloat>&,
                                                     const std::vector<NilpotentElement<PrecFloat>>&, int, int,
                                                     const PrecFloat&);
template NilpotentElement<Rational> eta_apply(const SpecialHom<Rational>&, const OElement&);
template NilpotentElement<PrecFloat> eta_apply(const SpecialHom<PrecFloat>&, const OElement&);
template std::pair<SpecialHom<Rational>, Report> special_hom_from_solutions(const SolutionPair<Rational>&,
                                                                            const OperatorO&, const UniPoly<Rational>&,
                                                                            const Rational&);
template std::pair<SpecialHom<PrecFloat>, Report> special_hom_from_solutions(const SolutionPair<PrecFloat>&,
                                                                             const OperatorO&,
                                                                             const UniPoly<PrecFloat>&,
                                                                             const PrecFloat&);
template std::vector<NilpotentElement<Rational>> series_at_infinity(const AdPoly<Rational>&, const AdPoly<Rational>&,
                                                                    int);
template std::vector<NilpotentElement<PrecFloat>> series_at_infinity(const AdPoly<PrecFloat>&,
                                                                     const AdPoly<PrecFloat>&, int);

namespace {

const OperatorO& cached_operator(int k, int d, int J) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, OperatorO> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(k, d, J);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, universal_operator_O(k, d, J)).first;
  return it->second;
}

template <class T>
Report eta_leaf_impl(const std::vector<NilpotentElement<T>>& U, const std::vector<Rational>& points, int k, int d, int J,
                     const T& one, const T& tol, const T& cmp_tol) {
  const int n = 2 * k + d;
  UniPoly<T> W(zero_like(one), {one});
  for (const auto& p : points) W = W * UniPoly<T>(zero_like(one), {lift(Rational(-p), one), one});

  Report rep;
  SolutionPair<T> sol = construct_solutions(W, U, k, d, tol);
  rep.append(sol.report, "solutions: ");
  const OperatorO& op = cached_operator(k, d, std::max(J, 1));
  auto [h, hrep] = special_hom_from_solutions(sol, op, W, tol);
  rep.append(hrep, "eta: ");

  AdPoly<T> Wa = lift_poly(W, d);
  NilpotentElement<T> z(d, zero_like(one));
  std::vector<NilpotentElement<T>> uc(static_cast<std::size_t>(n), z);
  for (int i = 1; i <= n; ++i) uc[static_cast<std::size_t>(n - i)] = U[static_cast<std::size_t>(i - 1)];
  AdPoly<T> Ua(z, uc);
  auto s1 = series_at_infinity(Wa.derivative(), Wa, J);
  auto s2 = series_at_infinity(Ua, Wa, J);
  T worst = zero_like(one);
  bool ok = true;
  for (int j = 1; j <= J; ++j) {
    const auto ju = static_cast<std::size_t>(j - 1);
    if (!near(eta_apply(h, op.F1[ju]), s1[ju], cmp_tol, worst)) ok = false;
    if (!near(eta_apply(h, op.F2[ju]), s2[ju], cmp_tol, worst)) ok = false;
  }
  rep.add("eta(F_sj) = leaf coefficients, j <= " + std::to_string(J), ok, residual_str(worst));

  worst = zero_like(one);
  ok = true;
  WronskiMap wm = wronski_map(op);
  for (int s = 1; s <= n; ++s) {
    T es = W.coeff(static_cast<std::size_t>(n - s));
    if (s % 2) es = -es;
    if (!near(eta_apply(h, wm.sigma[static_cast<std::size_t>(s - 1)]), NilpotentElement<T>::scalar(d, es), cmp_tol,
              worst))
      ok = false;
  }
  rep.add("eta(pi(sigma_s)) = e_s(points)", ok, residual_str(worst));
  return rep;
}

}  // namespace

Report eta_matches_leaf(const EigenLeaf& leaf, const std::vector<Rational>& points, int J) {
  const int k = leaf.weight.k(), d = leaf.weight.d(), n = leaf.weight.n();
  if (static_cast<int>(points.size()) != n) throw ShapeError("eta_matches_leaf: wrong number of points");
  LeafOperator op = leaf_operator(leaf);
  bool exact = true;
  for (const auto& row : op.exact)
    for (const auto& e : row)
      if (!e) exact = false;
  const std::string tag = leaf.weight.str() + (exact ? " [exact]: " : " [numeric]: ");
  Report out;
  if (exact) {
    std::vector<NilpotentElement<Rational>> U;
    for (const auto& row : op.exact) {
      std::vector<Rational> c;
      for (const auto& e : row) c.push_back(*e);
      U.emplace_back(d, std::move(c));
    }
    out.append(eta_leaf_impl<Rational>(U, points, k, d, J, Rational(1), Rational(0), Rational(0)), tag);
  } else {
    PrecisionScope scope(leaf.precision);
    PrecFloat one(Rational(1), leaf.precision);
    PrecFloat tol = pow2(-static_cast<long>(leaf.precision / 3), leaf.precision);
    PrecFloat cmp = pow2(-40, leaf.precision);
    out.append(eta_leaf_impl<PrecFloat>(op.U, points, k, d, J, one, tol, cmp), tag);
  }
  return out;
}

std::vector<Rational> seeded_points(int n, std::uint64_t seed) {
  if (n < 1 || n > 11) throw DomainError("seeded_points: need 1 <= n <= 11 distinct integers in [-5, 5]");
  Rng rng(seed);
  std::vector<Rational> pts;
  while (static_cast<int>(pts.size()) < n) {
    Rational x(rng.uniform(-5, 5));
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  return pts;
}

Report dimension_identity_check(int n, std::uint64_t seed, unsigned precision) {
  Report rep;
  EvalModule m = build_eval_module(n, seeded_points(n, seed));
  std::vector<IsotypicBlock> blocks;
  try {
    blocks = deformed_isotypical_decomposition(m, KMatrix::nilpotent());
  } catch (const TheoremViolation& e) {
    rep.add("n=" + std::to_string(n) + ": isotypical decomposition", false, "0", e.what());
    return rep;
  }
  std::size_t total = 0;
  for (const auto& blk : blocks) {
    const std::string tag = blk.weight.str() + ": ";
    const auto syt = syt_count(blk.weight).get_ui();
    const auto d1 = static_cast<std::size_t>(blk.weight.d() + 1);
    total += blk.dim();
    rep.add(tag + "block dimension (d+1) #SYT", blk.dim() == d1 * syt, "0",
            std::to_string(blk.dim()) + " vs " + std::to_string(d1 * syt));
    try {
      auto leaves = eigenleaf_decomposition(blk, precision, seed);
      bool dims = true;
      for (const auto& l : leaves)
        if (l.basis.cols() != d1) dims = false;
      rep.add(tag + "leaf count #SYT", leaves.size() == syt, "0",
              std::to_string(leaves.size()) + " vs " + std::to_string(syt));
      rep.add(tag + "leaf dimension d+1", dims);
    } catch (const TheoremViolation& e) {
      rep.add(tag + "leaf count #SYT", false, "0", e.what());
    }
  }
  rep.add("n=" + std::to_string(n) + ": blocks fill 2^n", total == m.dim());
  return rep;
}

namespace {

// X = sum_m a_m N^m on a leaf, through a Krylov basis at the column where N^d is largest.
std::vector<PrecFloat> fit_in_N(const FMatrix& nm, const FMatrix& x, int d, PrecFloat& residual) {
  const auto len = static_cast<std::size_t>(d + 1);
  std::vector<FMatrix> powers{FMatrix::identity(len)};
  for (int j = 1; j <= d; ++j) powers.push_back(powers.back() * nm);
  std::size_t best = 0;
  PrecFloat best_norm(-1);
  for (std::size_t c = 0; c < len; ++c) {
    PrecFloat s(0);
    for (std::size_t r = 0; r < len; ++r) s += powers[len - 1](r, c) * powers[len - 1](r, c);
    if (s > best_norm) {
      best_norm = s;
      best = c;
    }
  }
  FMatrix kry(len, len), rhs(len, 1);
  for (std::size_t j = 0; j < len; ++j)
    for (std::size_t r = 0; r < len; ++r) kry(r, j) = powers[j](r, best);
  for (std::size_t r = 0; r < len; ++r) rhs(r, 0) = x(r, best);
  FMatrix c = solve_numeric(kry, rhs);
  FMatrix fit(len, len);
  std::vector<PrecFloat> out;
  for (std::size_t j = 0; j < len; ++j) {
    out.push_back(c(j, 0));
    fit += powers[j].scaled(c(j, 0));
  }
  residual = max_abs(fit - x) / max_of(PrecFloat(1), max_abs(x));
  return out;
}

}  // namespace

Report nu_consistency_check(const EvalModule& m, const WeightLabel& w, unsigned precision, std::uint64_t seed) {
  Report rep;
  const int n = m.n();
  const int d = w.d();
  const std::string tag = w.str() + ": ";
  const auto syt = syt_count(w).get_ui();
  auto blocks = deformed_isotypical_decomposition(m, KMatrix::nilpotent());
  const IsotypicBlock* blk = nullptr;
  for (const auto& b : blocks)
    if (b.weight == w) blk = &b;
  if (!blk) throw InvalidWeightError("nu_consistency_check: no block for " + w.str());

  // Freeness over A_d: monomials m_alpha independent mod (U_1), then N^j m_alpha a basis.
  auto alg = algebra_closure(blk->U);
  const std::size_t dim = blk->dim();
  IncrementalSpan span(dim * dim);
  for (const auto& a : alg) span.add((a * blk->U[0]).data());
  std::vector<QMatrix> reps;
  for (const auto& a : alg)
    if (span.add(a.data())) reps.push_back(a);
  IncrementalSpan free_span(dim * dim);
  std::size_t added = 0;
  for (const auto& a : reps) {
    QMatrix p = a;
    for (int j = 0; j <= d; ++j) {
      if (free_span.add(p.data())) ++added;
      p = blk->U[0] * p;
    }
  }
  rep.add(tag + "algebra free over A_d with basis N^j m_alpha",
          reps.size() == syt && added == static_cast<std::size_t>(d + 1) * syt && alg.size() == added, "0",
          std::to_string(reps.size()) + " generators, " + std::to_string(added) + " of " + std::to_string(alg.size()));

  auto leaves = eigenleaf_decomposition(*blk, precision, seed);
  std::vector<JointEigenspace> sing_spaces;
  unsigned prec = leaves.front().precision;
  if (n >= 2) {
    QMatrix sing = singular_subspace(m.basis(), w);
    std::vector<QMatrix> s0;
    for (int j = 2; j <= n; ++j) s0.push_back(restrict_to(bethe_coefficient(m, 2, j, KMatrix::zero()), sing));
    JointReport jr = joint_generalized_eigenspaces_auto(s0, precision, seed);
    sing_spaces = jr.spaces;
    prec = std::max(prec, jr.precision);
  }
  PrecisionScope scope(prec);
  PrecFloat tol = pow2(-static_cast<long>(precision / 3), prec);
  bool eig_ok = true, poly_ok = true;
  PrecFloat worst(0);
  std::vector<bool> used(sing_spaces.size(), false);
  for (const auto& leaf : leaves) {
    if (n >= 2) {
      std::size_t hit = sing_spaces.size();
      for (std::size_t b = 0; b < sing_spaces.size(); ++b) {
        bool all = true;
        for (std::size_t j = 0; j < leaf.phi.size(); ++j)
          if (abs(leaf.phi[j] - sing_spaces[b].values[j]) > tol * max_of(PrecFloat(1), abs(leaf.phi[j]))) all = false;
        if (all) hit = b;
      }
      if (hit == sing_spaces.size() || used[hit])
        eig_ok = false;
      else
        used[hit] = true;
    }
    FMatrix qt = leaf.basis.transpose();
    for (int j = 2; j <= n; ++j) {
      FMatrix bj = qt * to_numeric(blk->B2[static_cast<std::size_t>(j - 1)], prec) * leaf.basis;
      PrecFloat res;
      auto c = fit_in_N(leaf.N, bj, d, res);
      PrecFloat c0 = abs(c[0] - leaf.phi[static_cast<std::size_t>(j - 2)]) /
                     max_of(PrecFloat(1), abs(leaf.phi[static_cast<std::size_t>(j - 2)]));
      worst = max_of(worst, max_of(res, c0));
      if (res > tol || c0 > tol) poly_ok = false;
    }
  }
  rep.add(tag + "leaf eigenvalues = B0 eigenvalues on sing", eig_ok, "0",
          std::to_string(leaves.size()) + " leaves, " + std::to_string(sing_spaces.size()) + " singular eigenlines");
  rep.add(tag + "B_2j - phi_j is a polynomial in N without constant term", poly_ok, worst.str(6));
  return rep;
}

}  // namespace bethe
