#pragma once

#include <vector>

#include "bethe/gl2rep.hpp"
#include "bethe/report.hpp"
#include "bethe/unipoly.hpp"

namespace bethe {

// The twist K in B_2^K(u). Only the zero matrix and [[0,0],[-1,0]] exist.
class KMatrix {
 public:
  static KMatrix zero() { return KMatrix(false); }
  static KMatrix nilpotent() { return KMatrix(true); }
  bool is_nilpotent() const { return nilp_; }
  // Entry K_ij, 1-based.
  Rational operator()(int i, int j) const { return (nilp_ && i == 2 && j == 1) ? Rational(-1) : Rational(0); }
  const char* name() const { return nilp_ ? "nilpotent" : "zero"; }

 private:
  explicit KMatrix(bool nilp) : nilp_(nilp) {}
  bool nilp_;
};

// B_2(u) on an evaluation module as sum_s R_s/(u - b_s) + sum_s D_s/(u - b_s)^2.
// The double-pole part D_s is kept so that its vanishing can be asserted.
template <class T>
struct OperatorSeries {
  std::vector<T> poles;
  std::vector<Matrix<T>> simple;
  std::vector<Matrix<T>> double_pole;

  // Coefficient of u^{-j} in the expansion at infinity.
  Matrix<T> coefficient(int j) const;
  // Value at a point u distinct from every pole.
  Matrix<T> evaluate(const T& u) const;
};

// D = ∂² - (W'/W) ∂ + U(u)/W(u) with U(u) = sum_{i=1}^n U_i u^{n-i}.
// C is a matrix type for module operators and a scalar ring for leaves.
template <class C, class S>
struct UniversalOperator {
  UniPoly<S> W;
  std::vector<C> U;  // U[0] = U_1
};

template <class T>
using ModuleOperator = UniversalOperator<Matrix<T>, T>;

// Throws TheoremViolation if a double-pole residue is nonzero.
template <class T>
OperatorSeries<T> bethe_b2_series(const EvalModuleT<T>& m, const KMatrix& k);

// The same coefficient computed from the series e_ab(u) = sum_r e_ab ⊗ t^r u^{-r-1}:
// B_2j = sum_{r+p=j-2} (E11_r E22_p - E21_r E12_p) + (j-1) E22_{j-2} + [K nilpotent] E21_{j-1}.
template <class T>
Matrix<T> b2_coefficient_from_currents(const EvalModuleT<T>& m, const KMatrix& k, int j);

// W(u) = prod (u - b_s); U_i = sum_s (-1)^{i-1} e_{i-1}(b without b_s) R_s.
template <class T>
ModuleOperator<T> universal_operator(const EvalModuleT<T>& m, const KMatrix& k);

// Coefficient of u^{-j} in B_i^K(u) on the module, i in {1, 2}.
// B_1(u) = -e11(u) - e22(u), so B_1j = -(sum_s b_s^{j-1}) I for j >= 1.
template <class T>
Matrix<T> bethe_coefficient(const EvalModuleT<T>& m, int i, int j, const KMatrix& k);

// Elementary symmetric polynomials e_0..e_n of the given values.
template <class T>
std::vector<T> elementary_symmetric(const std::vector<T>& x);

// [B_2i, B_2j] = 0 for 1 <= i < j <= jmax; for K = 0 also [B0_2j, e_ab ⊗ 1] = 0.
Report commutativity_check(const EvalModule& m, const KMatrix& k, int jmax);
// B_2j - B0_2j = e21 ⊗ t^{j-1}, strictly weight-lowering in the weight-major order.
Report nilp_formula_check(const EvalModule& m, int jmax);
// sum_i U_i u^{n-i} = W(u) B_2(u) at 2n+1 sample points, and the partial-fraction
// coefficients agree with the current-series formula for j <= n+3.
Report reconstruction_check(const EvalModule& m, const KMatrix& k);

// Minimal polynomial of e21 on L_lambda; throws TheoremViolation unless it is t^{d+1}.
UniPoly<Rational> irrep_bethe_image(const WeightLabel& w);

// Same applied to symbolic vectors: B_1j v = -(sum z^{j-1}) v, B_2j via the current formula.
SymbolicVector symbolic_bethe(int i, int j, const KMatrix& k, const SymbolicVector& v);

}  // namespace bethe
