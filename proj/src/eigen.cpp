#include "bethe/eigen.hpp"

#include <algorithm>
#include <numeric>

#include "bethe/random.hpp"

namespace bethe {

QMatrix generalized_eigenspace(const QMatrix& m, const Rational& eigenvalue, std::size_t exponent) {
  if (!m.square()) throw ShapeError("generalized_eigenspace: non-square matrix");
  if (exponent < 1) throw DomainError("generalized_eigenspace: exponent must be >= 1");
  QMatrix a = m;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= eigenvalue;
  // Square until the rank stops dropping; ker a^p = ker a^q for all q >= p then.
  QMatrix p = a;
  std::size_t e = 1;
  std::size_t r = rank(p);
  while (2 * e <= exponent) {
    if (r == 0) break;
    QMatrix p2 = p * p;
    std::size_t r2 = rank(p2);
    p = std::move(p2);
    e *= 2;
    if (r2 == r) break;
    r = r2;
  }
  if (e < exponent && r != 0 && rank(p * a) != r) p = p * matrix_power(a, static_cast<unsigned>(exponent - e));
  return kernel(p);
}

FMatrix spectral_projector(const FMatrix& c, const std::vector<PrecFloat>& roots, const std::vector<int>& mult,
                           std::size_t i) {
  const std::size_t n = c.rows();
  const PrecFloat& th = roots[i];
  const int ei = mult[i];
  FMatrix a = FMatrix::identity(n);
  // Taylor coefficients of g(x) = prod_{j != i} (x + th - th_j)^{e_j} at x = 0, mod x^{ei}.
  std::vector<PrecFloat> g(static_cast<std::size_t>(ei), PrecFloat(0));
  g[0] = PrecFloat(1);
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (j == i) continue;
    FMatrix x = c;
    for (std::size_t k = 0; k < n; ++k) x(k, k) -= roots[j];
    for (int t = 0; t < mult[j]; ++t) a = a * x;
    PrecFloat delta = th - roots[j];
    for (int t = 0; t < mult[j]; ++t) {
      for (int k = ei - 1; k >= 0; --k) {
        PrecFloat v = g[static_cast<std::size_t>(k)] * delta;
        if (k > 0) v += g[static_cast<std::size_t>(k - 1)];
        g[static_cast<std::size_t>(k)] = v;
      }
    }
  }
  std::vector<PrecFloat> h(static_cast<std::size_t>(ei), PrecFloat(0));
  PrecFloat g0inv = PrecFloat(1) / g[0];
  h[0] = g0inv;
  for (int m = 1; m < ei; ++m) {
    PrecFloat acc(0);
    for (int l = 1; l <= m; ++l) acc += g[static_cast<std::size_t>(l)] * h[static_cast<std::size_t>(m - l)];
    h[static_cast<std::size_t>(m)] = -acc * g0inv;
  }
  FMatrix x = c;
  for (std::size_t k = 0; k < n; ++k) x(k, k) -= th;
  FMatrix hx(n, n);
  for (int m = ei - 1; m >= 0; --m) {
    hx = hx * x;
    for (std::size_t k = 0; k < n; ++k) hx(k, k) += h[static_cast<std::size_t>(m)];
  }
  return hx * a;
}

namespace {

PrecFloat rel_scale(const FMatrix& m) {
  PrecFloat s = max_abs(m);
  return s > PrecFloat(1) ? s : PrecFloat(1);
}

}  // namespace

JointReport joint_generalized_eigenspaces(const std::vector<QMatrix>& ms, unsigned precision, const PrecFloat& tol,
                                          std::uint64_t seed) {
  if (ms.empty()) throw ShapeError("joint_generalized_eigenspaces: no matrices");
  const std::size_t n = ms[0].rows();
  for (const auto& m : ms)
    if (!m.square() || m.rows() != n) throw ShapeError("joint_generalized_eigenspaces: sizes differ");
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (!commutator(ms[a], ms[b]).is_zero_matrix())
        throw NotCommutingError("joint_generalized_eigenspaces: matrices " + std::to_string(a) + " and " +
                                std::to_string(b) + " do not commute");
  PrecisionScope scope(precision);
  JointReport rep;
  rep.precision = precision;
  rep.tol = tol;
  if (n == 0) return rep;

  std::vector<FMatrix> mf;
  for (const auto& m : ms) mf.push_back(to_numeric(m, precision));

  for (int attempt = 0; attempt < 6; ++attempt) {
    Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
    QMatrix c(n, n);
    for (const auto& m : ms) c += m.scaled(Rational(ms.size() == 1 ? 1 : rng.uniform(1, 9 + 4 * attempt)));

    std::vector<PrecFloat> roots;
    std::vector<int> mult;
    {
      std::vector<std::pair<PrecFloat, int>> rm;
      for (const auto& [s, e] : squarefree_factorization(charpoly(c))) {
        auto rts = real_roots(s, precision + 16);
        if (static_cast<int>(rts.size()) != s.degree())
          throw DomainError("joint_generalized_eigenspaces: spectrum is not real");
        for (auto& r : rts) rm.emplace_back(PrecFloat(r), e);
      }
      std::sort(rm.begin(), rm.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (auto& [r, e] : rm) {
        roots.push_back(r);
        mult.push_back(e);
      }
    }
    PrecFloat sep(-1);
    for (std::size_t i = 1; i < roots.size(); ++i) {
      PrecFloat g = roots[i] - roots[i - 1];
      if (sgn(sep) < 0 || g < sep) sep = g;
    }
    if (sgn(sep) >= 0 && sep <= tol * PrecFloat(10))
      throw PrecisionInsufficientError("eigenvalue clusters closer than 10*tol");

    FMatrix cf = to_numeric(c, precision);
    std::vector<JointEigenspace> spaces;
    PrecFloat worst(0);
    bool merged = false;
    FMatrix psum(n, n);
    for (std::size_t i = 0; i < roots.size() && !merged; ++i) {
      JointEigenspace sp;
      sp.multiplicity = mult[i];
      sp.projector = spectral_projector(cf, roots, mult, i);
      psum += sp.projector;
      PrecFloat pscale = rel_scale(sp.projector);
      PrecFloat idem = max_abs(sp.projector * sp.projector - sp.projector) / pscale;
      if (idem > worst) worst = idem;
      for (std::size_t j = 0; j < mf.size(); ++j) {
        PrecFloat v = (mf[j] * sp.projector).trace() / PrecFloat(mult[i]);
        FMatrix x = mf[j];
        for (std::size_t k = 0; k < n; ++k) x(k, k) -= v;
        FMatrix y = sp.projector;
        for (int t = 0; t < mult[i]; ++t) y = x * y;
        PrecFloat s = rel_scale(mf[j]);
        PrecFloat denom = pscale;
        for (int t = 0; t < mult[i]; ++t) denom *= s;
        PrecFloat res = max_abs(y) / denom;
        if (res > tol) {
          merged = true;
          break;
        }
        if (res > worst) worst = res;
        sp.values.push_back(v);
      }
      if (merged) break;
      PrecFloat next;
      auto idx = independent_columns(sp.projector, static_cast<std::size_t>(mult[i]), tol * pscale, &next);
      if (next > tol * pscale) throw PrecisionInsufficientError("projector rank exceeds the multiplicity");
      FMatrix b = sp.projector.select_columns(idx);
      sp.basis = orthonormalize(b);
      spaces.push_back(std::move(sp));
    }
    if (merged) continue;
    PrecFloat sumres = max_abs(psum - FMatrix::identity(n));
    if (sumres > worst) worst = sumres;
    if (worst > tol) throw PrecisionInsufficientError("projector residual above tolerance");
    FMatrix all;
    for (const auto& sp : spaces) all = all.hconcat(sp.basis);
    if (rank_numeric(all, tol) != n) throw PrecisionInsufficientError("leaf bases are not independent");
    rep.spaces = std::move(spaces);
    rep.min_separation = sgn(sep) < 0 ? PrecFloat(0) : sep;
    rep.residual = worst;
    return rep;
  }
  throw GenericityFailure("joint_generalized_eigenspaces: random combinations keep merging eigenvalues");
}

JointReport joint_generalized_eigenspaces_auto(const std::vector<QMatrix>& ms, unsigned precision, std::uint64_t seed,
                                               unsigned max_precision) {
  for (unsigned p = precision;; p *= 2) {
    try {
      return joint_generalized_eigenspaces(ms, p, pow2(-static_cast<long>(p / 2), p), seed);
    } catch (const PrecisionInsufficientError&) {
      if (2 * p > max_precision) throw;
    }
  }
}

}  // namespace bethe
