#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bethe/matrix.hpp"
#include "bethe/precfloat.hpp"
#include "bethe/rational.hpp"
#include "bethe/unipoly.hpp"

namespace bethe {

using QMatrix = Matrix<Rational>;
using FMatrix = Matrix<PrecFloat>;

// ---- exact ----

struct RowEchelon {
  QMatrix r;                         // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
// Basis of the null space as columns, in reduced column echelon form.
QMatrix kernel(const QMatrix& m);
// Reduced column echelon form of the column span (zero columns dropped).
QMatrix column_echelon(const QMatrix& cols);
// Some X with A X = B, or nullopt when inconsistent.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);
QMatrix inverse(const QMatrix& a);
// R with M * basis = basis * R, for an M-invariant column space. Throws
// TheoremViolation when the span is not invariant.
QMatrix restrict_to(const QMatrix& m, const QMatrix& basis);
// Coordinates of v (columns) in the basis given by the columns of basis.
QMatrix coordinates(const QMatrix& basis, const QMatrix& v);

UniPoly<Rational> charpoly(const QMatrix& m);
// Monic polynomial of least degree annihilating m.
UniPoly<Rational> minimal_polynomial(const QMatrix& m);
template <class T>
Matrix<T> poly_eval(const UniPoly<Rational>& p, const Matrix<T>& m);

std::pair<UniPoly<Rational>, UniPoly<Rational>> poly_divmod(const UniPoly<Rational>& a, const UniPoly<Rational>& b);
UniPoly<Rational> poly_gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b);  // monic
UniPoly<Rational> make_monic(const UniPoly<Rational>& p);
// Yun: p = c * prod_m s_m^m with s_m squarefree and pairwise coprime.
std::vector<std::pair<UniPoly<Rational>, int>> squarefree_factorization(const UniPoly<Rational>& p);
bool is_squarefree(const UniPoly<Rational>& p);

// All real roots of a squarefree rational polynomial, increasing, to the given
// number of bits. Returns how many real roots exist via the Sturm count.
std::vector<PrecFloat> real_roots(const UniPoly<Rational>& p, unsigned bits);
int count_real_roots(const UniPoly<Rational>& p);

// ---- numeric ----

FMatrix to_numeric(const QMatrix& m, unsigned bits);
PrecFloat max_abs(const FMatrix& m);
PrecFloat frobenius(const FMatrix& m);

struct NumericEchelon {
  FMatrix r;
  std::vector<std::size_t> pivots;
};
// Gauss-Jordan with partial pivoting; entries below tol count as zero.
NumericEchelon rref_numeric(const FMatrix& m, const PrecFloat& tol);
std::size_t rank_numeric(const FMatrix& m, const PrecFloat& tol);
// Columns chosen greedily by largest residual norm (pivoted Gram-Schmidt).
std::vector<std::size_t> independent_columns(const FMatrix& m, std::size_t want, const PrecFloat& tol,
                                             PrecFloat* next_residual = nullptr);
FMatrix solve_numeric(const FMatrix& a, const FMatrix& b);
// Minimizes |A x - b| through the normal equations.
std::vector<PrecFloat> least_squares(const FMatrix& a, const std::vector<PrecFloat>& b);
// Orthonormal basis for the column span (modified Gram-Schmidt, two passes).
FMatrix orthonormalize(const FMatrix& cols);
// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, increasing.
std::vector<PrecFloat> symmetric_eigenvalues(const FMatrix& s, const PrecFloat& tol);

// Row echelon form of a growing set of vectors.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t len) : len_(len) {}
  // Adds v if it is independent of what is stored; returns whether it was added.
  bool add(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[piv_[r]];
      if (is_zero(c)) continue;
      Rational f = c;
      for (std::size_t j = 0; j < len_; ++j)
        if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
    }
    std::size_t p = 0;
    while (p < len_ && is_zero(v[p])) ++p;
    if (p == len_) return false;
    Rational inv = Rational(1) / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      Rational f = row[p];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < len_; ++j)
        if (!is_zero(v[j])) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t len_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> piv_;
};

template <class T>
Matrix<T> poly_eval(const UniPoly<Rational>& p, const Matrix<T>& m) {
  Matrix<T> acc(m.rows(), m.cols());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t j = 0; j < m.rows(); ++j) acc(j, j) += T(p.coeffs()[i]);
  }
  return acc;
}

}  // namespace bethe
