#include "bethe/gl2rep.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace bethe {

std::string to_string(Gen g) {
  switch (g) {
    case Gen::e11: return "e11";
    case Gen::e12: return "e12";
    case Gen::e21: return "e21";
    case Gen::e22: return "e22";
  }
  return "?";
}

int gen_degree(Gen g) {
  switch (g) {
    case Gen::e12: return 1;
    case Gen::e21: return -1;
    default: return 0;
  }
}

WeightLabel WeightLabel::make(int l1, int l2) {
  if (l2 < 0 || l1 < l2)
    throw InvalidWeightError("weight (" + std::to_string(l1) + "," + std::to_string(l2) +
                             ") is not a partition with at most two parts");
  return WeightLabel{l1, l2};
}

WeightLabel WeightLabel::from_nk(int n, int k) { return make(n - k, k); }

std::string WeightLabel::str() const { return "(" + std::to_string(l1) + "," + std::to_string(l2) + ")"; }

std::vector<WeightLabel> weights_of(int n) {
  std::vector<WeightLabel> out;
  for (int k = 0; 2 * k <= n; ++k) out.push_back(WeightLabel::from_nk(n, k));
  return out;
}

Integer syt_count(const WeightLabel& w) {
  const int n = w.n(), k = w.k();
  return binomial(n, k) - (k > 0 ? binomial(n, k - 1) : Integer(0));
}

const QMatrix& IrrepMatrices::gen(Gen g) const {
  switch (g) {
    case Gen::e11: return e11;
    case Gen::e12: return e12;
    case Gen::e21: return e21;
    case Gen::e22: return e22;
  }
  return e11;
}

IrrepMatrices build_irrep(const WeightLabel& w) {
  WeightLabel v = WeightLabel::make(w.l1, w.l2);
  const int D = v.d();
  const auto dim = static_cast<std::size_t>(D + 1);
  IrrepMatrices m{v, QMatrix(dim, dim), QMatrix(dim, dim), QMatrix(dim, dim), QMatrix(dim, dim)};
  for (int i = 0; i <= D; ++i) {
    auto ui = static_cast<std::size_t>(i);
    m.e11(ui, ui) = v.l1 - i;
    m.e22(ui, ui) = v.l2 + i;
    if (i < D) m.e21(ui + 1, ui) = i + 1;
    if (i > 0) m.e12(ui - 1, ui) = D - i + 1;
  }
  return m;
}

SpinBasis::SpinBasis(int n) : n_(n) {
  if (n < 0 || n > 20) throw DomainError("SpinBasis: n out of range");
  const std::uint32_t total = 1u << n;
  masks_.resize(total);
  std::iota(masks_.begin(), masks_.end(), 0u);
  // Lexicographic on (bit 0, bit 1, ...) equals numeric order of the bit-reversed mask.
  auto rev = [n](std::uint32_t m) {
    std::uint32_t r = 0;
    for (int s = 0; s < n; ++s)
      if (m >> s & 1u) r |= 1u << (n - 1 - s);
    return r;
  };
  std::sort(masks_.begin(), masks_.end(), [&](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return rev(a) < rev(b);
  });
  pos_.assign(total, 0);
  for (std::size_t i = 0; i < masks_.size(); ++i) pos_[masks_[i]] = i;
  start_.assign(static_cast<std::size_t>(n) + 2, masks_.size());
  for (std::size_t i = masks_.size(); i-- > 0;) start_[static_cast<std::size_t>(std::popcount(masks_[i]))] = i;
  for (int m = n; m >= 0; --m) {
    auto um = static_cast<std::size_t>(m);
    if (start_[um] > start_[um + 1]) start_[um] = start_[um + 1];
  }
}

int SpinBasis::popcount_at(std::size_t pos) const { return std::popcount(masks_[pos]); }

std::optional<std::uint32_t> act_local(Gen g, int s, std::uint32_t mask) {
  const std::uint32_t bit = 1u << s;
  const bool minus = (mask & bit) != 0;
  switch (g) {
    case Gen::e11: return minus ? std::nullopt : std::optional(mask);
    case Gen::e22: return minus ? std::optional(mask) : std::nullopt;
    case Gen::e21: return minus ? std::nullopt : std::optional(mask | bit);
    case Gen::e12: return minus ? std::optional(mask & ~bit) : std::nullopt;
  }
  return std::nullopt;
}

namespace {

template <class T>
bool points_equal(const T& a, const T& b) {
  return a == b;
}

}  // namespace

template <class T>
EvalModuleT<T>::EvalModuleT(int n, std::vector<T> points) : n_(n), points_(std::move(points)), basis_(n) {
  if (static_cast<int>(points_.size()) != n)
    throw ShapeError("EvalModule: expected " + std::to_string(n) + " points, got " + std::to_string(points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_equal(points_[i], points_[j]))
        throw RepeatedPointError("EvalModule: points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " coincide");
}

template <class T>
Matrix<T> EvalModuleT<T>::local(Gen g, int s) const {
  Matrix<T> m(dim(), dim());
  for (std::size_t c = 0; c < dim(); ++c)
    if (auto img = act_local(g, s, basis_.mask(c))) m(basis_.position(*img), c) = T(1);
  return m;
}

template <class T>
T EvalModuleT<T>::power_sum(int r) const {
  T acc(0);
  for (const auto& b : points_) {
    T p(1);
    for (int i = 0; i < r; ++i) p *= b;
    acc += p;
  }
  return acc;
}

template <class T>
Matrix<T> EvalModuleT<T>::current(Gen g, int r) const {
  Matrix<T> m(dim(), dim());
  for (int s = 0; s < n_; ++s) {
    T w(1);
    for (int i = 0; i < r; ++i) w *= points_[static_cast<std::size_t>(s)];
    if (is_zero(w)) continue;
    for (std::size_t c = 0; c < dim(); ++c)
      if (auto img = act_local(g, s, basis_.mask(c))) m(basis_.position(*img), c) += w;
  }
  return m;
}

template class EvalModuleT<Rational>;
template class EvalModuleT<PrecFloat>;

EvalModule build_eval_module(int n, const std::vector<Rational>& points) { return EvalModule(n, points); }

QMatrix weight_space(const SpinBasis& basis, int m) {
  if (m < 0 || m > basis.n()) return QMatrix(basis.size(), 0);
  const std::size_t b = basis.weight_begin(m), e = basis.weight_end(m);
  QMatrix out(basis.size(), e - b);
  for (std::size_t i = b; i < e; ++i) out(i, i - b) = 1;
  return out;
}

QMatrix singular_subspace(const SpinBasis& basis, const WeightLabel& w) {
  const int n = basis.n();
  if (w.n() != n) return QMatrix(basis.size(), 0);
  const int m = w.k();
  const std::size_t b = basis.weight_begin(m), e = basis.weight_end(m);
  // e12 maps weight m into weight m-1.
  const std::size_t tb = m > 0 ? basis.weight_begin(m - 1) : 0, te = m > 0 ? basis.weight_end(m - 1) : 0;
  QMatrix raise(te - tb, e - b);
  for (std::size_t c = b; c < e; ++c)
    for (int s = 0; s < n; ++s)
      if (auto img = act_local(Gen::e12, s, basis.mask(c))) raise(basis.position(*img) - tb, c - b) += 1;
  QMatrix ker = raise.rows() == 0 ? QMatrix::identity(e - b) : kernel(raise);
  QMatrix out(basis.size(), ker.cols());
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) out(b + i, j) = ker(i, j);
  return out;
}

// ---- symbolic module ----

SymbolicVector SymbolicVector::basis_vector(int n, int max_zdeg, std::uint32_t mask, Monomial z) {
  SymbolicVector v(n, max_zdeg);
  if (z.empty()) z.assign(static_cast<std::size_t>(n), 0);
  v.add_term(mask, z, Rational(1));
  return v;
}

void SymbolicVector::add_term(std::uint32_t mask, const Monomial& z, const Rational& c) {
  if (static_cast<int>(z.size()) != n_) throw ShapeError("SymbolicVector: monomial has the wrong length");
  if (std::accumulate(z.begin(), z.end(), 0) > max_)
    throw BoundExceededError("SymbolicVector: z-degree exceeds the bound " + std::to_string(max_));
  if (bethe::is_zero(c)) return;
  auto [it, inserted] = t_.try_emplace(Key{mask, z}, c);
  if (!inserted) {
    it->second += c;
    if (bethe::is_zero(it->second)) t_.erase(it);
  }
}

SymbolicVector& SymbolicVector::operator+=(const SymbolicVector& o) {
  if (n_ != o.n_) throw RingMismatchError("SymbolicVector: different n");
  max_ = std::max(max_, o.max_);
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

SymbolicVector& SymbolicVector::operator-=(const SymbolicVector& o) {
  if (n_ != o.n_) throw RingMismatchError("SymbolicVector: different n");
  max_ = std::max(max_, o.max_);
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
  return *this;
}

SymbolicVector SymbolicVector::scaled(const Rational& s) const {
  SymbolicVector r(n_, max_);
  if (bethe::is_zero(s)) return r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
  return r;
}

bool SymbolicVector::homogeneous(int& deg) const {
  bool first = true;
  for (const auto& [k, c] : t_) {
    int dd = std::accumulate(k.second.begin(), k.second.end(), 0) - std::popcount(k.first);
    if (first) {
      deg = dd;
      first = false;
    } else if (dd != deg) {
      return false;
    }
  }
  return true;
}

SymbolicVector SymbolicVector::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ShapeError("SymbolicVector::permuted: wrong permutation length");
  SymbolicVector r(n_, max_);
  for (const auto& [k, c] : t_) {
    std::uint32_t m = 0;
    Monomial z(static_cast<std::size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
      auto to = static_cast<std::size_t>(perm[static_cast<std::size_t>(s)]);
      if (k.first >> s & 1u) m |= 1u << to;
      z[to] = k.second[static_cast<std::size_t>(s)];
    }
    r.add_term(m, z, c);
  }
  return r;
}

SymbolicVector symbolic_action(Gen g, int r, const SymbolicVector& v) {
  if (r < 0) throw DomainError("symbolic_action: r must be nonnegative");
  SymbolicVector out(v.n(), v.max_zdeg());
  for (const auto& [k, c] : v.terms()) {
    for (int s = 0; s < v.n(); ++s) {
      auto img = act_local(g, s, k.first);
      if (!img) continue;
      auto z = k.second;
      z[static_cast<std::size_t>(s)] += r;
      out.add_term(*img, z, c);
    }
  }
  return out;
}

SymbolicVector multiply_power_sum(int r, const SymbolicVector& v) {
  SymbolicVector out(v.n(), v.max_zdeg());
  for (const auto& [k, c] : v.terms())
    for (int s = 0; s < v.n(); ++s) {
      auto z = k.second;
      z[static_cast<std::size_t>(s)] += r;
      out.add_term(k.first, z, c);
    }
  return out;
}

SymbolicVector symmetrize(const SymbolicVector& v) {
  std::vector<int> perm(static_cast<std::size_t>(v.n()));
  std::iota(perm.begin(), perm.end(), 0);
  SymbolicVector acc(v.n(), v.max_zdeg());
  Integer count = 0;
  do {
    acc += v.permuted(perm);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc.scaled(Rational(1) / Rational(count));
}

// ---- Molien counting ----

namespace {

void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// Size of the centralizer of a permutation with the given cycle type.
Integer z_mu(const std::vector<int>& mu) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int l : mu) ++mult[l];
  for (auto [l, m] : mult) {
    for (int i = 0; i < m; ++i) z *= l;
    z *= factorial(m);
  }
  return z;
}

// Coefficients of prod_l (1 + x^l) (fixed masks by popcount).
std::vector<Integer> fixed_masks(const std::vector<int>& mu, int n) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int l : mu)
    for (int e = n; e >= l; --e) p[static_cast<std::size_t>(e)] += p[static_cast<std::size_t>(e - l)];
  return p;
}

// Coefficients of prod_l 1/(1 - q^l) through q^order (trace on Q[z]_j).
std::vector<Integer> fixed_monomials(const std::vector<int>& mu, int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, 0);
  c[0] = 1;
  for (int l : mu)
    for (int e = l; e <= order; ++e) c[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e - l)];
  return c;
}

std::vector<Integer> molien_row(int n, int m, int order) {
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1, Rational(0));
  if (m >= 0 && m <= n && order >= 0) {
    for (const auto& mu : partitions(n)) {
      Integer fm = fixed_masks(mu, n)[static_cast<std::size_t>(m)];
      if (fm == 0) continue;
      auto fz = fixed_monomials(mu, order);
      Rational w = Rational(fm) / Rational(z_mu(mu));
      for (int j = 0; j <= order; ++j) acc[static_cast<std::size_t>(j)] += w * Rational(fz[static_cast<std::size_t>(j)]);
    }
  }
  std::vector<Integer> out;
  for (auto& a : acc) {
    if (a.get_den() != 1) throw TheoremViolation("Molien average is not an integer");
    out.push_back(a.get_num());
  }
  return out;
}

void monomials_rec(int n, int deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(n, deg - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Integer molien_graded_weight_dimension(int n, int m, int j) {
  if (n < 0 || m < 0 || m > n || j < 0) return 0;
  return molien_row(n, m, j)[static_cast<std::size_t>(j)];
}

std::size_t symmetrizer_rank(int n, int m, int j) {
  if (n <= 0 || m < 0 || m > n || j < 0) return n == 0 && m == 0 && j == 0 ? 1 : 0;
  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  monomials_rec(n, j, cur, monos);
  std::vector<SymbolicVector> images;
  std::map<SymbolicVector::Key, std::size_t> index;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    for (const auto& z : monos) {
      images.push_back(symmetrize(SymbolicVector::basis_vector(n, j, mask, z)));
      for (const auto& [k, c] : images.back().terms()) index.try_emplace(k, index.size());
    }
  }
  QMatrix a(index.size(), images.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [k, c] : images[col].terms()) a(index.at(k), col) = c;
  return rank(a);
}

QSeries molien_series(int n, int m, int order) {
  std::vector<Rational> c;
  for (const auto& x : molien_row(n, m, std::max(order, 0))) c.emplace_back(x);
  return QSeries(0, order, c);
}

QSeries brute_singular_character(int n, int k, int order) {
  if (k < 0 || 2 * k > n) throw InvalidWeightError("brute character needs 0 <= 2k <= n");
  // In total degree (z-degree minus popcount): ch_k = q^{-k} A, ch_{k-1} = q^{-k+1} B.
  // e12 has degree +1 and maps weight k onto weight k-1, so
  // sing_delta = dim(wt k)_delta - dim(wt k-1)_{delta+1}.
  const int zorder = order + k;
  QSeries a = molien_series(n, k, zorder).shifted(-k);
  if (k == 0) return a.truncated(order);
  QSeries b = molien_series(n, k - 1, zorder).shifted(-k);
  return (a - b).truncated(order);
}

QSeries brute_isotypical_character(int n, int k, int order) {
  const int d = n - 2 * k;
  QSeries sing = brute_singular_character(n, k, order + d);
  std::vector<Rational> string(static_cast<std::size_t>(d) + 1, Rational(1));
  QSeries weights = QSeries::polynomial(-d, string, order + 2 * d + 1);
  return (sing * weights).truncated(order);
}

}  // namespace bethe
