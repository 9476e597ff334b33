#include "bethe/olambda.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace bethe {

namespace {

OElement scale(const OElement& x, const Rational& c) { return x.scaled(MultiPoly(x.coeffs()[0].nvars(), c)); }

MultiPoly::Exponent unit(std::size_t n, std::size_t v) {
  MultiPoly::Exponent e(n, 0);
  e[v] = 1;
  return e;
}

// Coefficient of the bare variable v in the b^j part.
Rational linear_coeff(const OElement& x, int j, std::size_t v) {
  const auto& t = x[static_cast<std::size_t>(j)].terms();
  auto it = t.find(unit(x[0].nvars(), v));
  return it == t.end() ? Rational(0) : it->second;
}

OElement coeff_or_zero(const UniPoly<OElement>& p, int j, const OElement& zero) {
  if (j < 0 || j > p.degree()) return zero;
  return p.coeff(static_cast<std::size_t>(j));
}

OElement invert_unit(const OElement& x) {
  return nilpotent_invert_with(x, [](const MultiPoly& c) {
    if (!c.is_constant()) throw NotInvertibleError("leading coefficient is not a unit of A_d ⊗ Q[f,g]");
    return MultiPoly(c.nvars(), Rational(1) / c.constant_term());
  });
}

std::string int_str(int x) { return std::to_string(x); }

}  // namespace

FGRing FGRing::make(int k, int d, bool with_unknowns) {
  if (k < 0 || d < 0) throw DomainError("FGRing needs k, d >= 0");
  FGRing r;
  r.k = k;
  r.d = d;
  r.with_unknowns = with_unknowns;
  for (int i = 0; i < k; ++i) {
    r.names.push_back("f" + int_str(i));
    r.degrees.push_back(k - i);
  }
  for (int i = 0; i < k; ++i) {
    r.names.push_back("g" + int_str(i));
    r.degrees.push_back(k + d + 1 - i);
  }
  for (int i = k + 1; i <= k + d; ++i) {
    r.names.push_back("g" + int_str(i));
    r.degrees.push_back(k + d + 1 - i);
  }
  if (with_unknowns) {
    for (int i = 1; i <= d; ++i) {
      r.names.push_back("ft" + int_str(k + i));
      r.degrees.push_back(0);
    }
    for (int i = 1; i <= d; ++i) {
      r.names.push_back("gt" + int_str(k + d + 1 + i));
      r.degrees.push_back(0);
    }
  }
  return r;
}

std::size_t FGRing::f(int i) const {
  if (i < 0 || i >= k) throw DomainError("no variable f" + int_str(i));
  return static_cast<std::size_t>(i);
}

std::size_t FGRing::g(int i) const {
  if (i >= 0 && i < k) return static_cast<std::size_t>(k + i);
  if (i > k && i <= k + d) return static_cast<std::size_t>(2 * k + i - k - 1);
  throw DomainError("no variable g" + int_str(i));
}

std::size_t FGRing::ft(int i) const {
  if (!with_unknowns || i < 1 || i > d) throw DomainError("no unknown ft" + int_str(k + i));
  return static_cast<std::size_t>(2 * k + d + i - 1);
}

std::size_t FGRing::gt(int i) const {
  if (!with_unknowns || i < 1 || i > d) throw DomainError("no unknown gt" + int_str(k + d + 1 + i));
  return static_cast<std::size_t>(2 * k + 2 * d + i - 1);
}

OElement FGRing::restrict_element(const OElement& x, const FGRing& small) const {
  std::vector<MultiPoly> c;
  for (const auto& p : x.coeffs()) c.push_back(p.restricted(small.nvars()));
  return OElement(d, std::move(c));
}

FGAnsatz make_ansatz(const FGRing& ring, const std::vector<OElement>& x, const std::vector<OElement>& y) {
  const int k = ring.k, d = ring.d;
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d) throw ShapeError("make_ansatz: need d values each");
  std::vector<OElement> fc(static_cast<std::size_t>(k + d + 1), ring.zero());
  std::vector<OElement> gc(static_cast<std::size_t>(k + 2 * d + 2), ring.zero());
  for (int i = 0; i < k; ++i) {
    fc[static_cast<std::size_t>(i)] = ring.var(ring.f(i));
    gc[static_cast<std::size_t>(i)] = ring.var(ring.g(i));
  }
  fc[static_cast<std::size_t>(k)] = ring.constant(Rational(1));
  for (int i = k + 1; i <= k + d; ++i) gc[static_cast<std::size_t>(i)] = ring.var(ring.g(i));
  gc[static_cast<std::size_t>(k + d + 1)] = ring.constant(Rational(1));
  for (int i = 1; i <= d; ++i) {
    fc[static_cast<std::size_t>(k + i)] = x[static_cast<std::size_t>(i - 1)];
    gc[static_cast<std::size_t>(k + d + 1 + i)] = y[static_cast<std::size_t>(i - 1)];
  }
  return FGAnsatz{ring, UniPoly<OElement>(ring.zero(), fc), UniPoly<OElement>(ring.zero(), gc)};
}

WronskiSystem wronski_system(const FGAnsatz& a) {
  const FGRing& ring = a.ring;
  const int k = ring.k, d = ring.d, n = 2 * k + d;
  WronskiSystem s;
  auto wr = poly_wronskian(a.f, a.g);
  auto wr1 = poly_wronskian(a.f.derivative(), a.g.derivative());
  for (int j = 0; j <= std::max(2 * k + 3 * d, wr.degree()); ++j) s.U.push_back(coeff_or_zero(wr, j, ring.zero()));
  for (int j = 0; j <= std::max(2 * k + 3 * d - 2, wr1.degree()); ++j) s.V.push_back(coeff_or_zero(wr1, j, ring.zero()));
  auto U = [&](int j) { return j < static_cast<int>(s.U.size()) ? s.U[static_cast<std::size_t>(j)] : ring.zero(); };
  auto V = [&](int j) { return j >= 0 && j < static_cast<int>(s.V.size()) ? s.V[static_cast<std::size_t>(j)] : ring.zero(); };
  if (d >= 1) {
    s.equations.push_back(U(n + 1));
    s.equations.push_back(V(n - 1) - U(n) * ring.b());
  }
  for (int i = 2; i <= d; ++i) {
    s.equations.push_back(U(n + i));
    s.equations.push_back(V(n - 2 + i));
  }
  if (ring.with_unknowns) {
    for (int i = 1; i <= d; ++i) {
      QMatrix m(2, 2);
      for (int r = 0; r < 2; ++r) {
        const auto& e = s.equations[static_cast<std::size_t>(2 * (i - 1) + r)];
        m(static_cast<std::size_t>(r), 0) = linear_coeff(e, i, ring.ft(i));
        m(static_cast<std::size_t>(r), 1) = linear_coeff(e, i, ring.gt(i));
      }
      s.stage_matrix.push_back(m);
    }
  }
  return s;
}

QMatrix stage_matrix_closed_form(int k, int d, int i) {
  QMatrix m(2, 2);
  m(0, 0) = Rational(d + 1 - i);
  m(0, 1) = Rational(d + 1 + i);
  m(1, 0) = Rational((d + 1 - i) * (k + i) * (k + d + 1));
  m(1, 1) = Rational((d + 1 + i) * k * (k + d + 1 + i));
  return m;
}

std::pair<FGAnsatz, WronskiSystem> build_system(int k, int d) {
  FGRing ring = FGRing::make(k, d, true);
  std::vector<OElement> x, y;
  for (int i = 1; i <= d; ++i) {
    x.push_back(ring.var(ring.ft(i)).shifted(i));
    y.push_back(ring.var(ring.gt(i)).shifted(i));
  }
  FGAnsatz a = make_ansatz(ring, x, y);
  WronskiSystem s = wronski_system(a);
  const int top = 2 * k + 2 * d;
  for (std::size_t i = 0; i < s.U.size(); ++i)
    if (static_cast<int>(i) > top && !is_zero(s.U[i])) throw TheoremViolation("U_" + std::to_string(i) + " survives");
  for (std::size_t i = 0; i < s.V.size(); ++i)
    if (static_cast<int>(i) + 2 > top && !is_zero(s.V[i])) throw TheoremViolation("V_" + std::to_string(i) + " survives");
  for (int i = 1; i <= d; ++i) {
    const QMatrix& m = s.stage_matrix[static_cast<std::size_t>(i - 1)];
    if (m != stage_matrix_closed_form(k, d, i))
      throw TheoremViolation("stage " + std::to_string(i) + " linear part differs from the closed form");
    if (is_zero(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)))
      throw TheoremViolation("stage " + std::to_string(i) + " determinant vanishes");
    // The bare unknowns of stage i occur in no other equation and at no other b-order.
    for (std::size_t e = 0; e < s.equations.size(); ++e)
      for (int j = 0; j <= d; ++j) {
        if (static_cast<int>(e / 2) + 1 == i && j == i) continue;
        if (!is_zero(linear_coeff(s.equations[e], j, ring.ft(i))) || !is_zero(linear_coeff(s.equations[e], j, ring.gt(i))))
          throw TheoremViolation("stage " + std::to_string(i) + " unknowns leak into another linear part");
      }
  }
  return {std::move(a), std::move(s)};
}

EliminationResult eliminate(int k, int d) {
  auto [sym, sys] = build_system(k, d);
  EliminationResult r;
  r.k = k;
  r.d = d;
  r.ring = FGRing::make(k, d, false);
  const FGRing& ring = r.ring;
  r.phi.assign(static_cast<std::size_t>(d), ring.zero());
  r.psi.assign(static_cast<std::size_t>(d), ring.zero());
  std::vector<QMatrix> inv;
  for (int i = 1; i <= d; ++i) inv.push_back(inverse(sys.stage_matrix[static_cast<std::size_t>(i - 1)]));

  // Pass p fixes the b^{i+p} part of stage i; one extra pass confirms.
  bool changed = d > 0;
  while (changed) {
    if (r.passes > d + 1) throw TheoremViolation("back-substitution does not terminate");
    ++r.passes;
    changed = false;
    for (int i = 1; i <= d; ++i) {
      const auto ii = static_cast<std::size_t>(i - 1);
      WronskiSystem s = wronski_system(make_ansatz(ring, r.phi, r.psi));
      const QMatrix& a = sys.stage_matrix[ii];
      OElement r1 = s.equations[2 * ii] - scale(r.phi[ii], a(0, 0)) - scale(r.psi[ii], a(0, 1));
      OElement r2 = s.equations[2 * ii + 1] - scale(r.phi[ii], a(1, 0)) - scale(r.psi[ii], a(1, 1));
      OElement x = -(scale(r1, inv[ii](0, 0)) + scale(r2, inv[ii](0, 1)));
      OElement y = -(scale(r1, inv[ii](1, 0)) + scale(r2, inv[ii](1, 1)));
      if (x != r.phi[ii] || y != r.psi[ii]) changed = true;
      r.phi[ii] = std::move(x);
      r.psi[ii] = std::move(y);
    }
  }
  for (int i = 1; i <= d; ++i) {
    const auto ii = static_cast<std::size_t>(i - 1);
    const QMatrix& a = sys.stage_matrix[ii];
    EliminationStage st;
    st.i = i;
    st.matrix = a;
    st.det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    st.c_f = r.phi[ii][ii + 1].constant_term();
    st.c_g = r.psi[ii][ii + 1].constant_term();
    r.stages.push_back(st);
  }
  Report rep = elimination_check(r);
  if (!rep.ok()) throw TheoremViolation("elimination: " + rep.first_failure());
  return r;
}

bool o_homogeneous(const OElement& x, const std::vector<int>& degrees, int& deg) {
  bool have = false;
  int d0 = 0;
  for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
    const MultiPoly& p = x.coeffs()[j];
    if (p.is_zero()) continue;
    int pd = 0;
    if (!p.weighted_homogeneous(degrees, pd)) return false;
    int total = pd - static_cast<int>(j);
    if (have && total != d0) return false;
    have = true;
    d0 = total;
  }
  if (have) deg = d0;
  return true;
}

Report elimination_check(const EliminationResult& r) {
  Report rep;
  WronskiSystem s = wronski_system(make_ansatz(r.ring, r.phi, r.psi));
  for (std::size_t e = 0; e < s.equations.size(); ++e)
    rep.add("equation " + std::to_string(e + 1) + " vanishes", is_zero(s.equations[e]));
  for (int i = 1; i <= r.d; ++i) {
    const auto ii = static_cast<std::size_t>(i - 1);
    for (const auto* v : {&r.phi[ii], &r.psi[ii]}) {
      const std::string nm = (v == &r.phi[ii] ? "phi_" + std::to_string(r.k + i) : "psi_" + std::to_string(r.k + r.d + 1 + i));
      bool low = true;
      for (int j = 0; j < i; ++j)
        if (!(*v)[static_cast<std::size_t>(j)].is_zero()) low = false;
      rep.add(nm + " b-degree >= " + std::to_string(i), low);
      rep.add(nm + " leading b^" + std::to_string(i) + " coefficient is a number", (*v)[ii + 1].is_constant());
      int deg = -i;
      rep.add(nm + " homogeneous of degree " + std::to_string(-i), o_homogeneous(*v, r.ring.degrees, deg) && deg == -i);
    }
  }
  return rep;
}

OperatorO universal_operator_O(int k, int d, int J) { return universal_operator_O(eliminate(k, d), J); }

OperatorO universal_operator_O(const EliminationResult& e, int J) {
  OperatorO op;
  op.k = e.k;
  op.d = e.d;
  op.J = J > 0 ? J : 2 * (e.k + e.d) + 4;
  op.ring = e.ring;
  FGAnsatz a = make_ansatz(e.ring, e.phi, e.psi);
  op.f = a.f;
  op.g = a.g;
  op.wr = poly_wronskian(a.f, a.g);
  op.wr1 = poly_wronskian(a.f.derivative(), a.g.derivative());
  const OElement zero = e.ring.zero();
  const int n = op.wr.degree();
  if (n < 0) throw TheoremViolation("Wr({f},{g}) vanishes");
  auto c = [&](int j) { return coeff_or_zero(op.wr, j, zero); };
  auto p = [&](int j) { return coeff_or_zero(op.wr1, j, zero); };

  // 1/Wr = u^{-n} sum_m h_m u^{-m}
  std::vector<OElement> h;
  h.push_back(invert_unit(c(n)));
  for (int m = 1; m <= op.J + 1; ++m) {
    OElement acc = zero;
    for (int l = 1; l <= m; ++l) acc += c(n - l) * h[static_cast<std::size_t>(m - l)];
    h.push_back(-(h[0] * acc));
  }
  for (int t = 0; t < op.J; ++t) {
    OElement acc = zero;
    for (int l = 0; l <= t; ++l) acc += scale(c(n - l) * h[static_cast<std::size_t>(t - l)], Rational(n - l));
    op.F1.push_back(acc);
  }
  for (int s = 1; s <= op.J; ++s) {
    OElement acc = zero;
    for (int j = 0; j < n; ++j) {
      int m = s + j - n;
      if (m >= 0) acc += p(j) * h[static_cast<std::size_t>(m)];
    }
    op.F2.push_back(acc);
  }
  return op;
}

Report operator_O_check(const OperatorO& op) {
  Report rep;
  const FGRing& ring = op.ring;
  const int n = 2 * op.k + op.d;
  const OElement zero = ring.zero();
  rep.add("deg Wr({f},{g}) = 2k+d", op.wr.degree() == n, "0", std::to_string(op.wr.degree()));
  rep.add("leading coefficient of Wr is d+1 mod b",
          op.wr.degree() >= 0 && op.wr.leading()[0] == MultiPoly(ring.nvars(), Rational(op.d + 1)));
  if (op.d >= 1)
    rep.add("deg Wr({f}',{g}') = 2k+d-1", op.wr1.degree() == n - 1, "0", std::to_string(op.wr1.degree()));
  else
    rep.add("deg Wr({f}',{g}') <= 2k+d-1", op.wr1.degree() <= n - 1);
  rep.add("residue at infinity is {b}",
          coeff_or_zero(op.wr1, n - 1, zero) == coeff_or_zero(op.wr, n, zero) * ring.b());
  rep.add("F_11 = 2k+d", op.F1[0] == ring.constant(Rational(n)));
  rep.add("F_21 = {b}", op.F2[0] == ring.b());

  // Abel identity and the numerator: (sum_j F_sj u^{-j}) Wr reproduces Wr' and Wr({f}',{g}').
  auto wrd = op.wr.derivative();
  bool abel = true, numer = true;
  for (int e = n - 1; e >= n - op.J; --e) {
    OElement a1 = zero, a2 = zero;
    for (int j = 1; j <= op.J; ++j) {
      OElement cw = coeff_or_zero(op.wr, e + j, zero);
      if (is_zero(cw)) continue;
      a1 += op.F1[static_cast<std::size_t>(j - 1)] * cw;
      a2 += op.F2[static_cast<std::size_t>(j - 1)] * cw;
    }
    if (a1 != coeff_or_zero(wrd, e, zero)) abel = false;
    if (a2 != coeff_or_zero(op.wr1, e, zero)) numer = false;
  }
  rep.add("Abel identity F_1 Wr = Wr'", abel);
  rep.add("F_2 Wr = Wr({f}',{g}')", numer);

  for (const auto* y : {&op.f, &op.g}) {
    auto lhs = y->derivative().derivative() * op.wr - y->derivative() * wrd + *y * op.wr1;
    rep.add(std::string("D annihilates {") + (y == &op.f ? "f" : "g") + "}", lhs.is_zero_poly());
  }
  bool homog = true;
  std::string bad;
  for (int s = 1; s <= 2; ++s)
    for (int j = 1; j <= op.J; ++j) {
      const auto& x = (s == 1 ? op.F1 : op.F2)[static_cast<std::size_t>(j - 1)];
      int deg = j - s;
      if (!o_homogeneous(x, ring.degrees, deg) || deg != j - s) {
        homog = false;
        if (bad.empty()) bad = "F_" + std::to_string(s) + std::to_string(j);
      }
    }
  rep.add("F_sj homogeneous of degree j-s", homog, "0", bad);
  return rep;
}

WronskiMap wronski_map(const OperatorO& op) {
  WronskiMap w;
  w.n = 2 * op.k + op.d;
  const OElement zero = op.ring.zero();
  for (int j = 0; j <= w.n; ++j) {
    OElement c = coeff_or_zero(op.wr, w.n - j, zero);
    w.W.push_back(j % 2 ? -c : c);
  }
  if (w.W[0][0] != MultiPoly(op.ring.nvars(), Rational(op.d + 1)))
    throw TheoremViolation("W_0 is not d+1 modulo b");
  OElement inv = invert_unit(w.W[0]);
  for (int s = 1; s <= w.n; ++s) w.sigma.push_back(w.W[static_cast<std::size_t>(s)] * inv);
  return w;
}

Report wronski_map_check(const OperatorO& op, const WronskiMap& w) {
  Report rep;
  for (int s = 1; s <= w.n; ++s) {
    int deg = s;
    rep.add("pi(sigma_" + std::to_string(s) + ") homogeneous of degree " + std::to_string(s),
            o_homogeneous(w.sigma[static_cast<std::size_t>(s - 1)], op.ring.degrees, deg) && deg == s);
  }
  // Wr = W_0 (u^n + sum_j (-1)^j sigma_j u^{n-j}).
  bool ok = true;
  for (int j = 1; j <= w.n; ++j) {
    OElement back = w.W[0] * w.sigma[static_cast<std::size_t>(j - 1)];
    if (back != w.W[static_cast<std::size_t>(j)]) ok = false;
  }
  rep.add("W_j = W_0 sigma_j", ok);
  return rep;
}

QSeries isotypical_character_closed(int n, int k, int order) {
  const int d = n - 2 * k;
  if (d < 0) throw InvalidWeightError("isotypical_character_closed: 2k > n");
  const int ord = order + d + 2;
  std::vector<Rational> a(static_cast<std::size_t>(d + 2), Rational(0));
  a[0] = 1;
  a[static_cast<std::size_t>(d + 1)] = -1;
  QSeries num = QSeries::polynomial(0, a, ord);
  QSeries one_minus_q = QSeries::polynomial(0, {Rational(1), Rational(-1)}, ord);
  QSeries r = num * num / one_minus_q / (qseries_pochhammer(n - k + 1, ord) * qseries_pochhammer(k, ord));
  return r.shifted(2 * k - n).truncated(order);
}

QSeries b0_character_closed(int n, int k, int order) {
  const int d = n - 2 * k;
  if (d < 0) throw InvalidWeightError("b0_character_closed: 2k > n");
  const int ord = order + d + 2;
  std::vector<Rational> a(static_cast<std::size_t>(d + 2), Rational(0));
  a[0] = 1;
  a[static_cast<std::size_t>(d + 1)] = -1;
  QSeries r = QSeries::polynomial(0, a, ord) / (qseries_pochhammer(n - k + 1, ord) * qseries_pochhammer(k, ord));
  return r.shifted(2 * k - n).truncated(order);
}

QSeries monomial_count_character(int k, int d, int order) {
  FGRing ring = FGRing::make(k, d, false);
  const int top = order + d;
  if (top < 0) return QSeries::zero(order);
  std::vector<Integer> count(static_cast<std::size_t>(top + 1), Integer(0));
  count[0] = 1;
  for (int w : ring.degrees)
    for (int e = w; e <= top; ++e) count[static_cast<std::size_t>(e)] += count[static_cast<std::size_t>(e - w)];
  std::vector<Rational> c;
  for (int e = -d; e <= order; ++e) {
    Integer s = 0;
    for (int j = 0; j <= d; ++j)
      if (e + j >= 0 && e + j <= top) s += count[static_cast<std::size_t>(e + j)];
    c.emplace_back(s);
  }
  return QSeries::polynomial(-d, c, order);
}

OCharacters character_O(int k, int d, int order) {
  if (order < 1) throw DomainError("character_O: order must be >= 1");
  OCharacters out;
  const int ord = order + d + 2;
  std::vector<Rational> a(static_cast<std::size_t>(d + 2), Rational(0));
  a[0] = 1;
  a[static_cast<std::size_t>(d + 1)] = -1;
  QSeries num = QSeries::polynomial(0, a, ord);
  QSeries den = qseries_pochhammer(k + d + 1, ord) * qseries_pochhammer(k, ord);
  QSeries one_minus_q = QSeries::polynomial(0, {Rational(1), Rational(-1)}, ord);
  out.ch_O0 = (num / den).truncated(order);
  out.ch_O = (num * num / one_minus_q / den).shifted(-d).truncated(order);
  QSeries chA = QSeries::polynomial(-d, std::vector<Rational>(static_cast<std::size_t>(d + 1), Rational(1)), ord);
  QSeries prod = (chA * (num / den)).truncated(order);
  out.report.add("ch_O = ch_A_d * ch_O0", out.ch_O.agrees_with(prod, order));
  out.report.add("ch_O = monomial count of A_d ⊗ Q[f,g]", out.ch_O.agrees_with(monomial_count_character(k, d, order), order));
  out.report.add("ch_O = isotypical closed form at n = 2k+d",
                 out.ch_O.agrees_with(isotypical_character_closed(2 * k + d, k, order), order));
  return out;
}

namespace {

void monomials_rec(const std::vector<int>& w, std::size_t i, int left, MultiPoly::Exponent& e,
                   std::vector<MultiPoly::Exponent>& out) {
  if (i == w.size()) {
    if (left == 0) out.push_back(e);
    return;
  }
  for (int p = 0; p * w[i] <= left; ++p) {
    e[i] = p;
    monomials_rec(w, i + 1, left - p * w[i], e, out);
  }
  e[i] = 0;
}

// Coordinates for the degree-delta piece of A_d ⊗ Q[vars].
struct Piece {
  std::map<std::pair<int, MultiPoly::Exponent>, std::size_t> index;
  std::vector<OElement> elements;
  IncrementalSpan span{0};

  std::vector<Rational> coords(const OElement& x) const {
    std::vector<Rational> v(index.size(), Rational(0));
    for (std::size_t j = 0; j < x.coeffs().size(); ++j)
      for (const auto& [e, c] : x.coeffs()[j].terms()) {
        auto it = index.find({static_cast<int>(j), e});
        if (it == index.end()) throw TheoremViolation("element is not homogeneous of the expected degree");
        v[it->second] = c;
      }
    return v;
  }
};

}  // namespace

Report generator_span_check(const OperatorO& op, int D) {
  Report rep;
  const FGRing& ring = op.ring;
  const int d = op.d;
  const int lo = std::min(-D, -d), hi = D + d;
  std::map<int, Piece> pieces;
  for (int delta = lo; delta <= hi; ++delta) {
    Piece p;
    for (int j = 0; j <= d; ++j) {
      if (delta + j < 0) continue;
      std::vector<MultiPoly::Exponent> ms;
      MultiPoly::Exponent e(ring.nvars(), 0);
      monomials_rec(ring.degrees, 0, delta + j, e, ms);
      for (auto& m : ms) p.index.emplace(std::make_pair(j, m), p.index.size());
    }
    p.span = IncrementalSpan(p.index.size());
    pieces.emplace(delta, std::move(p));
  }
  struct Gen {
    int deg;
    const OElement* x;
  };
  std::vector<Gen> gens;
  for (int s = 1; s <= 2; ++s)
    for (int j = 1; j <= op.J; ++j)
      if (j - s <= hi) gens.push_back({j - s, &(s == 1 ? op.F1 : op.F2)[static_cast<std::size_t>(j - 1)]});

  std::deque<std::pair<int, OElement>> work;
  OElement one = ring.constant(Rational(1));
  pieces.at(0).span.add(pieces.at(0).coords(one));
  work.emplace_back(0, one);
  while (!work.empty()) {
    auto [delta, x] = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) {
      int nd = delta + g.deg;
      if (nd < lo || nd > hi) continue;
      OElement y = x * *g.x;
      if (is_zero(y)) continue;
      Piece& p = pieces.at(nd);
      if (p.span.add(p.coords(y))) work.emplace_back(nd, std::move(y));
    }
  }
  for (int delta = -D; delta <= D; ++delta) {
    const Piece& p = pieces.at(delta);
    rep.add("degree " + std::to_string(delta) + " piece spanned", p.span.size() == p.index.size(), "0",
            std::to_string(p.span.size()) + "/" + std::to_string(p.index.size()));
  }
  return rep;
}

}  // namespace bethe
