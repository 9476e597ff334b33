#include "bethe/linalg.hpp"

#include <algorithm>

namespace bethe {

namespace {

using QPoly = UniPoly<Rational>;

QPoly qpoly(std::vector<Rational> c) { return QPoly(Rational(0), std::move(c)); }

}  // namespace

// ---- exact ----

RowEchelon rref(const QMatrix& m) {
  QMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!is_zero(a(row, j))) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

QMatrix column_echelon(const QMatrix& cols) {
  RowEchelon e = rref(cols.transpose());
  std::vector<std::size_t> keep(e.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return e.r.select_rows(keep).transpose();
}

QMatrix kernel(const QMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.r(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return QMatrix(m.cols(), 0);
  return column_echelon(QMatrix::from_columns(basis, m.cols()));
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row mismatch");
  RowEchelon e = rref(a.hconcat(b));
  QMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.r(i, a.cols() + j);
  }
  return x;
}

QMatrix inverse(const QMatrix& a) {
  if (!a.square()) throw ShapeError("inverse: non-square");
  RowEchelon e = rref(a.hconcat(QMatrix::identity(a.rows())));
  if (e.pivots.size() < a.rows() || e.pivots[a.rows() - 1] >= a.cols())
    throw NotInvertibleError("inverse: singular matrix");
  QMatrix inv(a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) inv(i, j) = e.r(i, a.cols() + j);
  return inv;
}

QMatrix coordinates(const QMatrix& basis, const QMatrix& v) {
  std::vector<std::size_t> rows = rref(basis.transpose()).pivots;
  if (rows.size() != basis.cols()) throw ShapeError("coordinates: basis columns are dependent");
  QMatrix c = inverse(basis.select_rows(rows)) * v.select_rows(rows);
  if (basis * c != v) throw TheoremViolation("coordinates: vector outside the span");
  return c;
}

QMatrix restrict_to(const QMatrix& m, const QMatrix& basis) {
  std::vector<std::size_t> rows = rref(basis.transpose()).pivots;
  if (rows.size() != basis.cols()) throw ShapeError("restrict_to: basis columns are dependent");
  QMatrix mb = m * basis;
  QMatrix r = inverse(basis.select_rows(rows)) * mb.select_rows(rows);
  if (basis * r != mb) throw TheoremViolation("restrict_to: subspace is not invariant");
  return r;
}

UniPoly<Rational> charpoly(const QMatrix& m) {
  if (!m.square()) throw ShapeError("charpoly: non-square");
  const std::size_t n = m.rows();
  QMatrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t p = c + 1;
    while (p < n && is_zero(h(p, c))) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c + 1));
    }
    for (std::size_t i = c + 2; i < n; ++i) {
      if (is_zero(h(i, c))) continue;
      Rational u = h(i, c) / h(c + 1, c);
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(c + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, c + 1) += u * h(r, i);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
  std::vector<QPoly> p;
  p.push_back(qpoly({Rational(1)}));
  for (std::size_t k = 0; k < n; ++k) {
    QPoly next = qpoly({-h(k, k), Rational(1)}) * p[k];
    Rational prod(1);
    for (std::size_t i = k; i-- > 0;) {
      prod *= h(i + 1, i);
      if (is_zero(prod)) break;
      if (!is_zero(h(i, k))) next -= p[i].scaled(h(i, k) * prod);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

UniPoly<Rational> minimal_polynomial(const QMatrix& m) {
  if (!m.square()) throw ShapeError("minimal_polynomial: non-square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> powers;
  QMatrix cur = QMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    powers.push_back(cur.data());
    QMatrix vecs = QMatrix::from_columns(powers, n * n);
    QMatrix ker = kernel(vecs);
    if (ker.cols() > 0) {
      std::vector<Rational> c = ker.column(0);
      Rational lead = c.back();
      for (auto& x : c) x /= lead;
      return qpoly(c);
    }
    cur = cur * m;
  }
  throw TheoremViolation("minimal_polynomial: no relation up to degree n");
}

std::pair<UniPoly<Rational>, UniPoly<Rational>> poly_divmod(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
  if (b.is_zero_poly()) throw NotInvertibleError("poly_divmod: division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {qpoly({}), a};
  std::vector<Rational> q(static_cast<std::size_t>(dq + 1), Rational(0));
  Rational lead_inv = Rational(1) / b.leading();
  for (int i = dq; i >= 0; --i) {
    Rational c = r[static_cast<std::size_t>(i + db)] * lead_inv;
    q[static_cast<std::size_t>(i)] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {qpoly(std::move(q)), qpoly(std::move(r))};
}

UniPoly<Rational> make_monic(const UniPoly<Rational>& p) {
  if (p.is_zero_poly()) return p;
  return p.scaled(Rational(1) / p.leading());
}

UniPoly<Rational> poly_gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
  QPoly x = a, y = b;
  while (!y.is_zero_poly()) {
    QPoly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

bool is_squarefree(const UniPoly<Rational>& p) { return poly_gcd(p, p.derivative()).degree() == 0; }

std::vector<std::pair<UniPoly<Rational>, int>> squarefree_factorization(const UniPoly<Rational>& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() <= 0) return out;
  QPoly f = make_monic(p);
  QPoly fp = f.derivative();
  QPoly a = poly_gcd(f, fp);
  QPoly b = poly_divmod(f, a).first;
  QPoly c = poly_divmod(fp, a).first;
  QPoly dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly g = poly_gcd(b, dd);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = poly_divmod(b, g).first;
    c = poly_divmod(dd, g).first;
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> s{p, p.derivative()};
  while (s.back().degree() > 0) {
    QPoly r = poly_divmod(s[s.size() - 2], s.back()).second;
    if (r.is_zero_poly()) break;
    s.push_back(-r);
  }
  return s;
}

int sign_changes(const std::vector<QPoly>& s, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : s) {
    int v = sgn(q(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

Rational cauchy_bound(const QPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading())));
  return m + 1;
}

}  // namespace

int count_real_roots(const UniPoly<Rational>& p) {
  if (p.degree() <= 0) return 0;
  auto s = sturm_sequence(p);
  Rational bnd = cauchy_bound(p);
  return sign_changes(s, -bnd) - sign_changes(s, bnd);
}

std::vector<PrecFloat> real_roots(const UniPoly<Rational>& p, unsigned bits) {
  std::vector<PrecFloat> roots;
  if (p.degree() <= 0) return roots;
  if (!is_squarefree(p)) throw DomainError("real_roots: polynomial is not squarefree");
  auto s = sturm_sequence(p);
  Rational bnd = cauchy_bound(p);
  // Intervals (a, b] holding exactly one root.
  std::vector<std::pair<Rational, Rational>> stack{{-bnd, bnd}}, isolated;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int cnt = sign_changes(s, a) - sign_changes(s, b);
    if (cnt == 0) continue;
    if (cnt == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rational mid = (a + b) / 2;
    stack.emplace_back(mid, b);
    stack.emplace_back(a, mid);
  }
  Rational eps = Rational(1, 1) / rational_pow(Rational(2), bits + 4);
  for (auto [a, b] : isolated) {
    int sb = sgn(p(b));
    if (sb == 0) {
      roots.emplace_back(b, bits);
      continue;
    }
    bool exact = false;
    while (b - a > eps) {
      Rational mid = (a + b) / 2;
      int sm = sgn(p(mid));
      if (sm == 0) {
        roots.emplace_back(mid, bits);
        exact = true;
        break;
      }
      if (sm == sb) b = mid;
      else a = mid;
    }
    if (!exact) roots.emplace_back(Rational((a + b) / 2), bits);
  }
  std::sort(roots.begin(), roots.end(), [](const PrecFloat& x, const PrecFloat& y) { return x < y; });
  return roots;
}

// ---- numeric ----

FMatrix to_numeric(const QMatrix& m, unsigned bits) {
  FMatrix f(m.rows(), m.cols(), PrecFloat(Rational(0), bits));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = PrecFloat(m(i, j), bits);
  return f;
}

PrecFloat max_abs(const FMatrix& m) {
  PrecFloat best(0);
  for (const auto& x : m.data()) {
    PrecFloat a = abs(x);
    if (a > best) best = a;
  }
  return best;
}

PrecFloat frobenius(const FMatrix& m) {
  PrecFloat s(0);
  for (const auto& x : m.data()) s += x * x;
  return sqrt(s);
}

NumericEchelon rref_numeric(const FMatrix& m, const PrecFloat& tol) {
  FMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    PrecFloat best = abs(a(row, col));
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      PrecFloat v = abs(a(i, col));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best <= tol) {
      for (std::size_t i = row; i < a.rows(); ++i) a(i, col) = PrecFloat(0);
      continue;
    }
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    PrecFloat inv = PrecFloat(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      PrecFloat f = a(i, col);
      if (is_zero(f)) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank_numeric(const FMatrix& m, const PrecFloat& tol) { return rref_numeric(m, tol).pivots.size(); }

std::vector<std::size_t> independent_columns(const FMatrix& m, std::size_t want, const PrecFloat& tol,
                                             PrecFloat* next_residual) {
  std::vector<std::vector<PrecFloat>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  auto norm2 = [](const std::vector<PrecFloat>& v) {
    PrecFloat s(0);
    for (const auto& x : v) s += x * x;
    return s;
  };
  std::vector<std::size_t> chosen;
  std::vector<bool> used(cols.size(), false);
  for (std::size_t step = 0; step <= want && step < cols.size(); ++step) {
    std::size_t best = cols.size();
    PrecFloat bn(0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (used[j]) continue;
      PrecFloat v = norm2(cols[j]);
      if (best == cols.size() || v > bn) {
        bn = v;
        best = j;
      }
    }
    if (best == cols.size()) break;
    PrecFloat nrm = sqrt(bn);
    if (step == want) {
      if (next_residual) *next_residual = nrm;
      break;
    }
    if (nrm <= tol) throw PrecisionInsufficientError("independent_columns: span smaller than requested");
    used[best] = true;
    chosen.push_back(best);
    std::vector<PrecFloat> q = cols[best];
    for (auto& x : q) x /= nrm;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (used[j]) continue;
      PrecFloat dot(0);
      for (std::size_t i = 0; i < q.size(); ++i) dot += q[i] * cols[j][i];
      for (std::size_t i = 0; i < q.size(); ++i) cols[j][i] -= dot * q[i];
    }
  }
  if (next_residual && chosen.size() == cols.size()) *next_residual = PrecFloat(0);
  return chosen;
}

FMatrix solve_numeric(const FMatrix& a, const FMatrix& b) {
  if (!a.square() || a.rows() != b.rows()) throw ShapeError("solve_numeric: shapes");
  const std::size_t n = a.rows();
  FMatrix aug = a.hconcat(b);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (abs(aug(i, c)) > abs(aug(p, c))) p = i;
    if (is_zero(aug(p, c))) throw NotInvertibleError("solve_numeric: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(p, j), aug(c, j));
    for (std::size_t i = c + 1; i < n; ++i) {
      PrecFloat f = aug(i, c) / aug(c, c);
      if (is_zero(f)) continue;
      for (std::size_t j = c; j < aug.cols(); ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  FMatrix x(n, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = n; i-- > 0;) {
      PrecFloat s = aug(i, n + j);
      for (std::size_t k = i + 1; k < n; ++k) s -= aug(i, k) * x(k, j);
      x(i, j) = s / aug(i, i);
    }
  }
  return x;
}

std::vector<PrecFloat> least_squares(const FMatrix& a, const std::vector<PrecFloat>& b) {
  FMatrix at = a.transpose();
  FMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  FMatrix x = solve_numeric(at * a, at * rhs);
  return x.column(0);
}

FMatrix orthonormalize(const FMatrix& cols) {
  FMatrix q = cols;
  for (std::size_t j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        PrecFloat dot(0);
        for (std::size_t i = 0; i < q.rows(); ++i) dot += q(i, k) * q(i, j);
        for (std::size_t i = 0; i < q.rows(); ++i) q(i, j) -= dot * q(i, k);
      }
    }
    PrecFloat nrm(0);
    for (std::size_t i = 0; i < q.rows(); ++i) nrm += q(i, j) * q(i, j);
    nrm = sqrt(nrm);
    if (is_zero(nrm)) throw ShapeError("orthonormalize: dependent columns");
    for (std::size_t i = 0; i < q.rows(); ++i) q(i, j) /= nrm;
  }
  return q;
}

std::vector<PrecFloat> symmetric_eigenvalues(const FMatrix& s, const PrecFloat& tol) {
  if (!s.square()) throw ShapeError("symmetric_eigenvalues: non-square");
  const std::size_t n = s.rows();
  FMatrix a = s;
  for (int sweep = 0; sweep < 100; ++sweep) {
    PrecFloat off(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (sqrt(off) <= tol) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (is_zero(a(p, q))) continue;
        PrecFloat theta = (a(q, q) - a(p, p)) / (a(p, q) * PrecFloat(2));
        PrecFloat t = PrecFloat(1) / (abs(theta) + sqrt(theta * theta + PrecFloat(1)));
        if (sgn(theta) < 0) t = -t;
        PrecFloat c = PrecFloat(1) / sqrt(t * t + PrecFloat(1));
        PrecFloat sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          PrecFloat akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          PrecFloat apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
      }
    }
  }
  std::vector<PrecFloat> ev;
  for (std::size_t i = 0; i < n; ++i) ev.push_back(a(i, i));
  std::sort(ev.begin(), ev.end(), [](const PrecFloat& x, const PrecFloat& y) { return x < y; });
  return ev;
}

}  // namespace bethe
