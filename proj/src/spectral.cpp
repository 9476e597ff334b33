#include "bethe/spectral.hpp"

#include <algorithm>

#include "bethe/random.hpp"

namespace bethe {

namespace {

PrecFloat scale_of(const FMatrix& m) {
  PrecFloat s = max_abs(m);
  return s > PrecFloat(1) ? s : PrecFloat(1);
}

PrecFloat max_of(const PrecFloat& a, const PrecFloat& b) { return a < b ? b : a; }

Rational lambda_eigenvalue(int n, const WeightLabel& w) { return Rational(w.k() * (n - w.k() + 1)); }

std::vector<std::size_t> weight_rows(const SpinBasis& basis, int m) {
  std::vector<std::size_t> rows;
  for (std::size_t p = basis.weight_begin(m); p < basis.weight_end(m); ++p) rows.push_back(p);
  return rows;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> r;
  for (std::size_t i = lo; i < hi; ++i) r.push_back(i);
  return r;
}

std::size_t cyclic_rank(const std::vector<QMatrix>& algebra, std::size_t dim, Rng& rng) {
  std::vector<Rational> v(dim);
  for (auto& x : v) x = Rational(rng.uniform(-9, 9));
  IncrementalSpan span(dim);
  for (const auto& a : algebra) span.add(a.apply(v));
  return span.size();
}

}  // namespace

std::vector<IsotypicBlock> deformed_isotypical_decomposition(const EvalModule& m, const KMatrix& k) {
  const int n = m.n();
  QMatrix b22 = bethe_coefficient(m, 2, 2, k);
  auto op = universal_operator(m, k);
  std::vector<QMatrix> b2;
  for (int j = 1; j <= n; ++j) b2.push_back(bethe_coefficient(m, 2, j, k));

  std::vector<IsotypicBlock> out;
  std::size_t total = 0;
  for (const auto& w : weights_of(n)) {
    IsotypicBlock blk;
    blk.weight = w;
    blk.eigenvalue = lambda_eigenvalue(n, w);
    blk.basis = generalized_eigenspace(b22, blk.eigenvalue, m.dim());
    std::size_t want = static_cast<std::size_t>(w.d() + 1) * syt_count(w).get_ui();
    if (blk.basis.cols() != want)
      throw TheoremViolation("block " + w.str() + " has dimension " + std::to_string(blk.basis.cols()) +
                             ", expected " + std::to_string(want));
    for (const auto& u : op.U) blk.U.push_back(restrict_to(u, blk.basis));
    for (const auto& b : b2) blk.B2.push_back(restrict_to(b, blk.basis));
    total += blk.dim();
    out.push_back(std::move(blk));
  }
  if (total != m.dim()) throw TheoremViolation("blocks do not fill the module");
  return out;
}

TriangularBasis triangular_block_basis(const EvalModule& m, const IsotypicBlock& block) {
  const int n = m.n();
  const SpinBasis& sb = m.basis();
  const QMatrix& x = block.basis;
  QMatrix b022 = bethe_coefficient(m, 2, 2, KMatrix::zero());

  TriangularBasis tb;
  tb.w = QMatrix(m.dim(), 0);
  tb.leading = QMatrix(m.dim(), 0);
  for (int wt = 0; wt <= n; ++wt) {
    auto rows = weight_rows(sb, wt);
    if (rows.empty()) continue;
    // Honest isotypical vectors of this weight.
    QMatrix bw = b022.select_rows(rows).select_columns(rows);
    for (std::size_t i = 0; i < bw.rows(); ++i) bw(i, i) -= block.eigenvalue;
    QMatrix iso = kernel(bw);
    // Block vectors with no component above this weight.
    QMatrix y = x;
    if (sb.weight_begin(wt) > 0) {
      QMatrix kc = kernel(x.select_rows(range(0, sb.weight_begin(wt))));
      y = x * kc;
    }
    QMatrix ym = y.select_rows(rows);
    if (rank(ym) != iso.cols())
      throw TheoremViolation("block " + block.weight.str() + ": leading part in weight " + std::to_string(wt) +
                             " has the wrong rank");
    if (iso.cols() == 0) continue;
    auto a = solve(ym, iso);
    if (!a) throw TheoremViolation("block " + block.weight.str() + ": no triangular basis in weight " + std::to_string(wt));
    QMatrix w = y * *a;
    QMatrix lead(m.dim(), iso.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < iso.cols(); ++j) lead(rows[i], j) = iso(i, j);
    tb.w = tb.w.hconcat(w);
    tb.leading = tb.leading.hconcat(lead);
    for (std::size_t j = 0; j < iso.cols(); ++j) tb.weight_of.push_back(wt);
  }
  if (tb.w.cols() != block.dim() || rank(tb.w) != block.dim())
    throw TheoremViolation("block " + block.weight.str() + ": triangular basis does not span the block");
  return tb;
}

namespace {

EigenLeaf make_leaf(const IsotypicBlock& block, const FMatrix& basis, const FMatrix& projector,
                    std::vector<PrecFloat> phi, unsigned precision, PrecFloat residual) {
  const int d = block.weight.d();
  EigenLeaf leaf;
  leaf.weight = block.weight;
  leaf.phi = std::move(phi);
  leaf.basis = basis;
  leaf.projector = projector;
  leaf.precision = precision;
  FMatrix qt = basis.transpose();
  for (const auto& u : block.U) {
    FMatrix uf = to_numeric(u, precision);
    FMatrix r = qt * uf * basis;
    PrecFloat res = max_abs(uf * basis - basis * r) / scale_of(uf);
    residual = max_of(residual, res);
    leaf.U.push_back(std::move(r));
  }
  leaf.N = leaf.U[0];
  PrecFloat ns = scale_of(leaf.N);
  PrecFloat tol = pow2(-static_cast<long>(precision / 2), precision);
  FMatrix top = matrix_power(leaf.N, static_cast<unsigned>(d));
  PrecFloat nil = max_abs(top * leaf.N);
  PrecFloat norm = ns;
  for (int t = 0; t < d; ++t) norm *= ns;
  nil = nil / norm;
  residual = max_of(residual, nil);
  if (nil > tol) throw PrecisionInsufficientError("leaf B_21 is not nilpotent within tolerance");
  if (max_abs(top) <= tol * norm / ns)
    throw TheoremViolation("leaf " + block.weight.str() + ": B_21 has nilpotency order below d+1");
  leaf.residual = residual;
  return leaf;
}

}  // namespace

std::vector<EigenLeaf> eigenleaf_decomposition(const IsotypicBlock& block, unsigned precision, std::uint64_t seed) {
  if (precision < 64) throw DomainError("eigenleaf_decomposition: precision below 64 bits");
  const int n = static_cast<int>(block.U.size());
  const std::size_t dim = block.dim();
  const auto syt = syt_count(block.weight).get_ui();
  const auto leaf_dim = static_cast<std::size_t>(block.weight.d() + 1);
  std::vector<EigenLeaf> out;

  if (n == 1) {
    PrecisionScope scope(precision);
    FMatrix id = FMatrix::identity(dim);
    out.push_back(make_leaf(block, id, id, {}, precision, PrecFloat(0)));
    return out;
  }
  std::vector<QMatrix> ms(block.B2.begin() + 1, block.B2.end());
  JointReport rep = joint_generalized_eigenspaces_auto(ms, precision, seed);
  PrecisionScope scope(rep.precision);
  if (rep.spaces.size() != syt)
    throw TheoremViolation("block " + block.weight.str() + " has " + std::to_string(rep.spaces.size()) +
                           " leaves, expected " + std::to_string(syt));
  for (const auto& sp : rep.spaces) {
    if (static_cast<std::size_t>(sp.multiplicity) != leaf_dim)
      throw TheoremViolation("leaf of " + block.weight.str() + " has dimension " + std::to_string(sp.multiplicity));
    out.push_back(make_leaf(block, sp.basis, sp.projector, sp.values, rep.precision, rep.residual));
  }
  return out;
}

LeafOperator leaf_operator(const EigenLeaf& leaf) {
  PrecisionScope scope(leaf.precision);
  const int d = leaf.weight.d();
  const int k = leaf.weight.k();
  const int n = leaf.weight.n();
  const auto len = static_cast<std::size_t>(d + 1);
  const FMatrix& nm = leaf.N;

  // Krylov basis v, Nv, ..., N^d v from the column where N^d is largest.
  FMatrix top = matrix_power(nm, static_cast<unsigned>(d));
  std::size_t best = 0;
  PrecFloat best_norm(-1);
  for (std::size_t c = 0; c < len; ++c) {
    PrecFloat s(0);
    for (std::size_t r = 0; r < len; ++r) s += top(r, c) * top(r, c);
    if (s > best_norm) {
      best_norm = s;
      best = c;
    }
  }
  FMatrix kry(len, len);
  std::vector<FMatrix> powers{FMatrix::identity(len)};
  for (int j = 1; j <= d; ++j) powers.push_back(powers.back() * nm);
  for (std::size_t j = 0; j < len; ++j)
    for (std::size_t r = 0; r < len; ++r) kry(r, j) = powers[j](r, best);

  LeafOperator op;
  op.n = n;
  op.d = d;
  op.residual = PrecFloat(0);
  PrecFloat fit_tol = pow2(-static_cast<long>(leaf.precision / 3), leaf.precision);
  // Tight enough that a denominator-1e6 false snap is improbable.
  PrecFloat snap_tol = pow2(-static_cast<long>(2 * leaf.precision / 3), leaf.precision);
  for (int i = 1; i <= n; ++i) {
    const FMatrix& u = leaf.U[static_cast<std::size_t>(i - 1)];
    FMatrix rhs(len, 1);
    for (std::size_t r = 0; r < len; ++r) rhs(r, 0) = u(r, best);
    FMatrix c = solve_numeric(kry, rhs);
    std::vector<PrecFloat> coeffs;
    FMatrix fit(len, len);
    for (std::size_t j = 0; j < len; ++j) {
      coeffs.push_back(c(j, 0));
      fit += powers[j].scaled(c(j, 0));
    }
    PrecFloat res = max_abs(fit - u) / scale_of(u);
    op.residual = max_of(op.residual, res);
    if (res > fit_tol) throw PrecisionInsufficientError("U_" + std::to_string(i) + " is not a polynomial in N within tolerance");

    std::vector<std::optional<Rational>> ex;
    bool all = true;
    for (auto& x : coeffs) {
      Rational q;
      if (snap_rational(x, Integer(1000000), snap_tol * max_of(PrecFloat(1), abs(x)), q)) {
        ex.emplace_back(q);
      } else {
        ex.emplace_back();
        all = false;
      }
    }
    if (all) {
      // Re-verify with the snapped values.
      FMatrix sf(len, len);
      for (std::size_t j = 0; j < len; ++j) sf += powers[j].scaled(PrecFloat(*ex[j], leaf.precision));
      if (max_abs(sf - u) / scale_of(u) > fit_tol)
        for (auto& e : ex) e.reset();
      else
        for (std::size_t j = 0; j < len; ++j) coeffs[j] = PrecFloat(*ex[j], leaf.precision);
    }
    op.U.emplace_back(d, coeffs);
    op.exact.push_back(std::move(ex));
  }
  for (std::size_t j = 0; j < len; ++j) {
    const auto& e = op.exact[0][j];
    Rational want(j == 1 ? 1 : 0);
    if (!e || *e != want) throw TheoremViolation("U_1 on leaf " + leaf.weight.str() + " is not N");
  }
  if (n >= 2) {
    const auto& c20 = op.exact[1][0];
    if (!c20 || *c20 != Rational(k * (n - k + 1)))
      throw TheoremViolation("c_20 on leaf " + leaf.weight.str() + " differs from k(n-k+1)");
  }
  return op;
}

ScalarOperator scalar_operator(const LeafOperator& op, const UniPoly<PrecFloat>& W) {
  ScalarOperator s;
  s.W = W;
  for (const auto& u : op.U) s.c0.push_back(u[0]);
  return s;
}

ScalarOperator scalar_operator_from_polynomials(const UniPoly<Rational>& F0, const UniPoly<Rational>& G0,
                                                unsigned precision) {
  if (F0.is_zero_poly() || G0.is_zero_poly() || F0.leading() != 1 || G0.leading() != 1)
    throw DomainError("F0 and G0 must be monic");
  if (G0.degree() <= F0.degree()) throw InvalidWeightError("deg G0 must exceed deg F0");
  UniPoly<Rational> wr = poly_wronskian(F0, G0);
  Rational lc = wr.leading();
  Rational inv = Rational(1) / lc;
  UniPoly<Rational> w = wr.scaled(inv);
  UniPoly<Rational> num = poly_wronskian(F0.derivative(), G0.derivative()).scaled(inv);
  const int n = w.degree();
  PrecisionScope scope(precision);
  ScalarOperator s;
  std::vector<PrecFloat> wc;
  for (const auto& c : w.coeffs()) wc.emplace_back(c, precision);
  s.W = UniPoly<PrecFloat>::from_coeffs(wc);
  for (int i = 1; i <= n; ++i) s.c0.emplace_back(num.coeff(static_cast<std::size_t>(n - i)), precision);
  return s;
}

PrecFloat scalar_operator_distance(const ScalarOperator& a, const ScalarOperator& b) {
  PrecFloat worst(0);
  auto cmp = [&](const PrecFloat& x, const PrecFloat& y) {
    PrecFloat r = abs(x - y) / max_of(PrecFloat(1), abs(y));
    worst = max_of(worst, r);
  };
  std::size_t len = std::max(a.W.coeffs().size(), b.W.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) cmp(a.W.coeff(i), b.W.coeff(i));
  if (a.c0.size() != b.c0.size()) throw ShapeError("scalar operators of different order");
  for (std::size_t i = 0; i < a.c0.size(); ++i) cmp(a.c0[i], b.c0[i]);
  return worst;
}

namespace {

// c_i0 for every leaf of the (n-k,k) block at real, possibly irrational, points.
// B0_2j is symmetric in the spin basis, so the singular spectrum comes from
// Jacobi; the leaf projectors are then spectral projectors of the twisted
// combination inside the numerically projected block.
std::vector<std::vector<PrecFloat>> numeric_leaf_scalars(int n, int k, const std::vector<PrecFloat>& pts,
                                                         unsigned precision, std::uint64_t seed) {
  PrecisionScope scope(precision);
  const PrecFloat tol = pow2(-static_cast<long>(precision / 2), precision);
  EvalModuleT<PrecFloat> mf(n, pts);
  const std::size_t dim = mf.dim();
  WeightLabel lam = WeightLabel::from_nk(n, k);
  const int d = lam.d();

  FMatrix b22 = bethe_coefficient(mf, 2, 2, KMatrix::nilpotent());
  std::vector<PrecFloat> evs;
  std::vector<int> mult;
  std::size_t idx = 0;
  for (const auto& w : weights_of(n)) {
    if (w.k() == k) idx = evs.size();
    evs.emplace_back(lambda_eigenvalue(n, w), precision);
    mult.push_back(static_cast<int>((w.d() + 1) * syt_count(w).get_ui()));
  }
  FMatrix pb = spectral_projector(b22, evs, mult, idx);
  PrecFloat idem = max_abs(pb * pb - pb) / scale_of(pb);
  if (idem > tol) throw PrecisionInsufficientError("block projector is not idempotent");
  const auto bdim = static_cast<std::size_t>(mult[idx]);
  PrecFloat next;
  auto cols = independent_columns(pb, bdim, tol * scale_of(pb), &next);
  FMatrix qb = orthonormalize(pb.select_columns(cols));
  FMatrix qbt = qb.transpose();

  auto op = universal_operator(mf, KMatrix::nilpotent());
  std::vector<FMatrix> ub;
  for (const auto& u : op.U) {
    FMatrix r = qbt * u * qb;
    if (max_abs(u * qb - qb * r) / scale_of(u) > tol) throw PrecisionInsufficientError("block is not U-invariant");
    ub.push_back(std::move(r));
  }
  const auto syt = syt_count(lam).get_ui();
  if (syt == 1) {
    std::vector<PrecFloat> c;
    for (const auto& u : ub) c.push_back(u.trace() / PrecFloat(d + 1));
    return {c};
  }

  QMatrix sing = singular_subspace(mf.basis(), lam);
  FMatrix qs = orthonormalize(to_numeric(sing, precision));
  FMatrix qst = qs.transpose();
  std::vector<FMatrix> b2, b02;
  for (int j = 2; j <= n; ++j) {
    b2.push_back(bethe_coefficient(mf, 2, j, KMatrix::nilpotent()));
    b02.push_back(bethe_coefficient(mf, 2, j, KMatrix::zero()));
  }
  for (int attempt = 0; attempt < 6; ++attempt) {
    Rng rng(seed * 7919ULL + static_cast<std::uint64_t>(attempt));
    FMatrix c(dim, dim), c0(dim, dim);
    for (std::size_t j = 0; j < b2.size(); ++j) {
      PrecFloat r(rng.uniform(1, 9 + 4 * attempt));
      c += b2[j].scaled(r);
      c0 += b02[j].scaled(r);
    }
    FMatrix cs = qst * c0 * qs;
    cs = (cs + cs.transpose()).scaled(PrecFloat(1) / PrecFloat(2));
    auto theta = symmetric_eigenvalues(cs, tol * tol);
    PrecFloat cscale = scale_of(c);
    bool close = false;
    for (std::size_t i = 1; i < theta.size(); ++i)
      if (theta[i] - theta[i - 1] <= PrecFloat(1000) * tol * cscale) close = true;
    if (close) continue;
    FMatrix cb = qbt * c * qb;
    std::vector<int> m(theta.size(), d + 1);
    std::vector<std::vector<PrecFloat>> out;
    FMatrix psum(bdim, bdim);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      FMatrix p = spectral_projector(cb, theta, m, i);
      psum += p;
      FMatrix x = cb;
      for (std::size_t t = 0; t < bdim; ++t) x(t, t) -= theta[i];
      FMatrix y = p;
      for (int t = 0; t <= d; ++t) y = x * y;
      PrecFloat denom = scale_of(p);
      for (int t = 0; t <= d; ++t) denom *= cscale;
      if (max_abs(y) / denom > tol) throw PrecisionInsufficientError("leaf projector residual above tolerance");
      std::vector<PrecFloat> cv;
      for (const auto& u : ub) cv.push_back((u * p).trace() / PrecFloat(d + 1));
      out.push_back(std::move(cv));
    }
    if (max_abs(psum - FMatrix::identity(bdim)) > tol) throw PrecisionInsufficientError("leaf projectors do not sum to 1");
    return out;
  }
  throw GenericityFailure("singular spectrum keeps clustering under random combinations");
}

}  // namespace

RoundtripResult leaf_from_polynomials(const UniPoly<Rational>& F0, const UniPoly<Rational>& G0, unsigned precision,
                                      std::uint64_t seed) {
  RoundtripResult res;
  res.target = scalar_operator_from_polynomials(F0, G0, precision);
  UniPoly<Rational> wr = poly_wronskian(F0, G0);
  UniPoly<Rational> w = wr.scaled(Rational(1) / wr.leading());
  res.n = w.degree();
  res.k = F0.degree();
  if (!is_squarefree(w)) throw GenericityFailure("Wr(F0,G0) is not squarefree");
  if (count_real_roots(w) != res.n) throw GenericityFailure("Wr(F0,G0) has non-real roots");
  PrecisionScope scope(precision);
  res.points = real_roots(w, precision);

  res.rational_points = true;
  for (const auto& r : res.points) {
    Rational q;
    if (!snap_rational(r, Integer(1000000), pow2(-static_cast<long>(precision / 2), precision), q) || !is_zero(w(q))) {
      res.rational_points = false;
      break;
    }
    res.exact_points.push_back(q);
  }
  if (!res.rational_points) res.exact_points.clear();

  std::vector<std::vector<PrecFloat>> cands;
  if (res.rational_points) {
    auto m = build_eval_module(res.n, res.exact_points);
    for (const auto& blk : deformed_isotypical_decomposition(m, KMatrix::nilpotent())) {
      if (blk.weight.k() != res.k) continue;
      for (const auto& leaf : eigenleaf_decomposition(blk, precision, seed)) {
        std::vector<PrecFloat> c;
        for (const auto& u : leaf.U) c.push_back(u.trace() / PrecFloat(leaf.weight.d() + 1));
        cands.push_back(std::move(c));
      }
    }
  } else {
    cands = numeric_leaf_scalars(res.n, res.k, res.points, precision, seed);
  }
  res.leaf_count = cands.size();

  const PrecFloat tol = pow2(-static_cast<long>(precision / 3), precision);
  std::vector<PrecFloat> dist;
  for (const auto& c : cands) {
    ScalarOperator s{res.target.W, c};
    dist.push_back(scalar_operator_distance(s, res.target));
  }
  res.best_distance = PrecFloat(-1);
  res.second_distance = PrecFloat(0);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] <= tol) ++res.matches;
    if (sgn(res.best_distance) < 0 || dist[i] < res.best_distance) {
      res.best_distance = dist[i];
      res.matched_index = i;
    }
  }
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (i != res.matched_index && (is_zero(res.second_distance) || dist[i] < res.second_distance))
      res.second_distance = dist[i];
  if (res.matches != 1)
    throw GenericityFailure(std::to_string(res.matches) + " leaves match D_{F0,G0} (expected exactly one)");
  return res;
}

Report singular_spectrum_match(const EvalModule& m, unsigned precision, std::uint64_t seed) {
  Report rep;
  const int n = m.n();
  auto blocks = deformed_isotypical_decomposition(m, KMatrix::nilpotent());
  std::vector<QMatrix> b02;
  for (int j = 1; j <= n; ++j) b02.push_back(bethe_coefficient(m, 2, j, KMatrix::zero()));
  for (const auto& blk : blocks) {
    const std::string tag = blk.weight.str() + ": ";
    const int d = blk.weight.d();
    QMatrix sing = singular_subspace(m.basis(), blk.weight);
    std::vector<QMatrix> s0;
    for (const auto& b : b02) s0.push_back(restrict_to(b, sing));

    Rng rng(seed);
    QMatrix c0(sing.cols(), sing.cols()), c(blk.dim(), blk.dim());
    for (int j = 2; j <= n; ++j) {
      Rational r(rng.uniform(1, 99));
      c0 += s0[static_cast<std::size_t>(j - 1)].scaled(r);
      c += blk.B2[static_cast<std::size_t>(j - 1)].scaled(r);
    }
    UniPoly<Rational> p0 = charpoly(c0);
    rep.add(tag + "simple singular spectrum", is_squarefree(p0));
    UniPoly<Rational> pw(Rational(0), {Rational(1)});
    for (int t = 0; t <= d; ++t) pw = pw * p0;
    rep.add(tag + "block charpoly = singular charpoly^(d+1)", charpoly(c) == pw);

    auto leaves = eigenleaf_decomposition(blk, precision, seed);
    if (n == 1) {
      rep.add(tag + "leaf/singular bijection", leaves.size() == 1 && sing.cols() == 1);
      continue;
    }
    std::vector<QMatrix> sj(s0.begin() + 1, s0.end());
    JointReport jr = joint_generalized_eigenspaces_auto(sj, precision, seed);
    PrecisionScope scope(std::max(jr.precision, leaves.front().precision));
    PrecFloat tol = pow2(-static_cast<long>(precision / 3), precision);
    auto dist = [](const std::vector<PrecFloat>& a, const std::vector<PrecFloat>& b) {
      PrecFloat w(0);
      for (std::size_t i = 0; i < a.size(); ++i) w = max_of(w, abs(a[i] - b[i]) / max_of(PrecFloat(1), abs(b[i])));
      return w;
    };
    bool ok = jr.spaces.size() == leaves.size();
    PrecFloat worst(0);
    PrecFloat margin(-1);
    std::vector<bool> used(jr.spaces.size(), false);
    for (std::size_t a = 0; ok && a < leaves.size(); ++a) {
      std::size_t best = 0;
      PrecFloat bd(-1);
      for (std::size_t b = 0; b < jr.spaces.size(); ++b) {
        PrecFloat x = dist(leaves[a].phi, jr.spaces[b].values);
        if (sgn(bd) < 0 || x < bd) {
          bd = x;
          best = b;
        }
      }
      if (used[best] || bd > tol) ok = false;
      used[best] = true;
      worst = max_of(worst, bd);
      for (std::size_t b = 0; b < leaves.size(); ++b) {
        if (b == a) continue;
        PrecFloat x = dist(leaves[a].phi, leaves[b].phi);
        if (sgn(margin) < 0 || x < margin) margin = x;
      }
    }
    if (sgn(margin) >= 0 && margin <= PrecFloat(1000) * tol) ok = false;
    rep.add(tag + "leaf/singular bijection", ok, worst.str(6),
            std::to_string(leaves.size()) + " leaves, " + std::to_string(jr.spaces.size()) + " singular eigenlines");
  }
  return rep;
}

std::vector<QMatrix> algebra_closure(const std::vector<QMatrix>& gens) {
  if (gens.empty()) throw ShapeError("algebra_closure: no generators");
  const std::size_t n = gens[0].rows();
  IncrementalSpan span(n * n);
  std::vector<QMatrix> basis;
  std::vector<QMatrix> frontier{QMatrix::identity(n)};
  span.add(frontier[0].data());
  basis.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<QMatrix> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        QMatrix p = a * g;
        if (span.add(p.data())) {
          basis.push_back(p);
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return basis;
}

Report block_algebra_check(const EvalModule& m, const IsotypicBlock& block, std::uint64_t seed) {
  Report rep;
  const std::string tag = block.weight.str() + ": ";
  const std::size_t dim = block.dim();
  const auto syt = syt_count(block.weight).get_ui();
  Rng rng(seed);

  auto alg = algebra_closure(block.U);
  rep.add(tag + "block algebra dimension", alg.size() == dim, "0",
          std::to_string(alg.size()) + " vs " + std::to_string(dim));
  rep.add(tag + "block cyclic vector", cyclic_rank(alg, dim, rng) == dim);

  IncrementalSpan ideal(dim * dim);
  for (const auto& a : alg) ideal.add((a * block.U[0]).data());
  rep.add(tag + "codim of (U_1)", alg.size() - ideal.size() == syt, "0",
          std::to_string(alg.size() - ideal.size()) + " vs " + std::to_string(syt));

  QMatrix sing = singular_subspace(m.basis(), block.weight);
  std::vector<QMatrix> gens;
  for (int j = 1; j <= m.n(); ++j) gens.push_back(restrict_to(bethe_coefficient(m, 2, j, KMatrix::zero()), sing));
  auto alg0 = algebra_closure(gens);
  rep.add(tag + "B0 algebra on sing dimension", alg0.size() == syt, "0",
          std::to_string(alg0.size()) + " vs " + std::to_string(syt));
  rep.add(tag + "B0 cyclic vector on sing", cyclic_rank(alg0, sing.cols(), rng) == sing.cols());
  return rep;
}

}  // namespace bethe
