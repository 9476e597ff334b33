#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bethe/linalg.hpp"
#include "bethe/qseries.hpp"

namespace bethe {

// Generators e_ab of gl_2.
enum class Gen { e11, e12, e21, e22 };
inline constexpr Gen kAllGens[] = {Gen::e11, Gen::e12, Gen::e21, Gen::e22};
std::string to_string(Gen g);
// deg(e_ab ⊗ t^r) = r + b - a.
int gen_degree(Gen g);

// lambda = (l1, l2) = (n-k, k).
struct WeightLabel {
  int l1 = 0;
  int l2 = 0;

  static WeightLabel make(int l1, int l2);  // throws InvalidWeightError
  static WeightLabel from_nk(int n, int k);
  int n() const { return l1 + l2; }
  int k() const { return l2; }
  int d() const { return l1 - l2; }
  std::string str() const;
  friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
  friend auto operator<=>(const WeightLabel&, const WeightLabel&) = default;
};

// All (n-k, k) with 2k <= n, highest (k = 0) first.
std::vector<WeightLabel> weights_of(int n);

// Number of standard Young tableaux of shape (n-k, k): C(n,k) - C(n,k-1).
Integer syt_count(const WeightLabel& w);

struct IrrepMatrices {
  WeightLabel weight;
  QMatrix e11, e12, e21, e22;
  std::size_t dim() const { return e11.rows(); }
  const QMatrix& gen(Gen g) const;
};

// Weight basis u_0 (highest) ... u_D with e21 u_i = (i+1) u_{i+1},
// e12 u_i = (D-i+1) u_{i-1}, e11 = l1 - i, e22 = l2 + i.
IrrepMatrices build_irrep(const WeightLabel& w);

// Basis of V^{⊗n}: bit s of a mask is 0 for v+ and 1 for v- in factor s.
// Ordered by popcount (higher gl_2 weight first), then lexicographically in
// the factor word (factor 1 first, v+ before v-).
class SpinBasis {
 public:
  explicit SpinBasis(int n);
  int n() const { return n_; }
  std::size_t size() const { return masks_.size(); }
  std::uint32_t mask(std::size_t pos) const { return masks_[pos]; }
  std::size_t position(std::uint32_t mask) const { return pos_[mask]; }
  // Positions [begin(m), begin(m+1)) carry weight (n-m, m).
  std::size_t weight_begin(int m) const { return start_[static_cast<std::size_t>(m)]; }
  std::size_t weight_end(int m) const { return start_[static_cast<std::size_t>(m) + 1]; }
  int popcount_at(std::size_t pos) const;

 private:
  int n_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> start_;
};

// e_ab in factor s applied to a basis mask: the image mask (coefficient 1),
// or nothing when the vector is killed.
std::optional<std::uint32_t> act_local(Gen g, int s, std::uint32_t mask);

// The tensor product of evaluation modules V(b_1) ⊗ ... ⊗ V(b_n) at pairwise
// distinct points. T is Rational, or PrecFloat for irrational points.
// Matrices are produced on demand; the object itself is immutable.
template <class T>
class EvalModuleT {
 public:
  EvalModuleT(int n, std::vector<T> points);

  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<T>& points() const { return points_; }
  const SpinBasis& basis() const { return basis_; }

  // g acting in factor s only.
  Matrix<T> local(Gen g, int s) const;
  // g ⊗ t^r = sum_s b_s^r g^(s).
  Matrix<T> current(Gen g, int r) const;
  // sum_s b_s^r.
  T power_sum(int r) const;

 private:
  int n_;
  std::vector<T> points_;
  SpinBasis basis_;
};

using EvalModule = EvalModuleT<Rational>;

EvalModule build_eval_module(int n, const std::vector<Rational>& points);

// Exact basis (columns) of the weight-lambda singular vectors.
QMatrix singular_subspace(const SpinBasis& basis, const WeightLabel& w);
// Coordinate projector basis onto the weight (n-m, m) space, as columns.
QMatrix weight_space(const SpinBasis& basis, int m);

// Element of V^{⊗n} ⊗ Q[z_1..z_n] with z-degree at most max_zdeg.
class SymbolicVector {
 public:
  using Monomial = std::vector<int>;
  using Key = std::pair<std::uint32_t, Monomial>;

  SymbolicVector(int n, int max_zdeg) : n_(n), max_(max_zdeg) {}
  static SymbolicVector basis_vector(int n, int max_zdeg, std::uint32_t mask, Monomial z = {});

  int n() const { return n_; }
  int max_zdeg() const { return max_; }
  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(std::uint32_t mask, const Monomial& z, const Rational& c);
  SymbolicVector& operator+=(const SymbolicVector& o);
  SymbolicVector& operator-=(const SymbolicVector& o);
  friend SymbolicVector operator+(SymbolicVector a, const SymbolicVector& b) { return a += b; }
  friend SymbolicVector operator-(SymbolicVector a, const SymbolicVector& b) { return a -= b; }
  SymbolicVector scaled(const Rational& s) const;
  friend bool operator==(const SymbolicVector& a, const SymbolicVector& b) { return a.t_ == b.t_; }

  // Degree = z-degree - popcount. True when every term has the same degree.
  bool homogeneous(int& deg) const;
  // Simultaneous permutation of tensor factors and variables: factor s and
  // z_s move to position perm[s].
  SymbolicVector permuted(const std::vector<int>& perm) const;

 private:
  int n_;
  int max_;
  std::map<Key, Rational> t_;
};

// (g ⊗ t^r) v = sum_s z_s^r g^(s) v. Throws BoundExceededError when a term
// would exceed the vector's z-degree bound.
SymbolicVector symbolic_action(Gen g, int r, const SymbolicVector& v);
// (e11 + e22) ⊗ t^r acts as multiplication by sum_s z_s^r.
SymbolicVector multiply_power_sum(int r, const SymbolicVector& v);
// Average over S_n of permuted().
SymbolicVector symmetrize(const SymbolicVector& v);

// dim of the S_n-invariants in V^{⊗n}[n-m, m] ⊗ Q[z]_j, by averaging
// permutation characters over cycle types.
Integer molien_graded_weight_dimension(int n, int m, int j);
// Same count as a rank of symmetrized basis vectors (slow; small n only).
std::size_t symmetrizer_rank(int n, int m, int j);
// sum_j molien(n, m, j) q^j through q^order (z-degree only, no weight shift).
QSeries molien_series(int n, int m, int order);

// Graded character of the lambda-isotypical component of V^S, from Molien
// counts: singular part ch_{wt k} - q^{-1} ch_{wt k-1}, times the weight
// string sum_{i=0}^{d} q^{-i}. Valid through q^order.
QSeries brute_isotypical_character(int n, int k, int order);
// Just the singular part (graded character of sing V^S of weight lambda).
QSeries brute_singular_character(int n, int k, int order);

}  // namespace bethe
