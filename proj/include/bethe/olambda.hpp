#pragma once

#include <string>
#include <vector>

#include "bethe/linalg.hpp"
#include "bethe/multipoly.hpp"
#include "bethe/nilpotent.hpp"
#include "bethe/qseries.hpp"
#include "bethe/report.hpp"
#include "bethe/unipoly.hpp"

namespace bethe {

// Elements of A_d ⊗ Q[vars]: b-expansion with polynomial coefficients.
using OElement = NilpotentElement<MultiPoly>;

// Variables f_i (i<k), g_i (i<k), g_i (k<i<=k+d), optionally followed by the
// unknowns ft_{k+i}, gt_{k+d+1+i} (i=1..d).
struct FGRing {
  int k = 0;
  int d = 0;
  bool with_unknowns = false;
  std::vector<std::string> names;
  std::vector<int> degrees;  // deg f_i = k-i, deg g_i = k+d+1-i, unknowns 0

  static FGRing make(int k, int d, bool with_unknowns);
  std::size_t nvars() const { return names.size(); }
  std::size_t f(int i) const;
  std::size_t g(int i) const;
  std::size_t ft(int i) const;  // i = 1..d
  std::size_t gt(int i) const;

  OElement zero() const { return OElement(d, MultiPoly(nvars())); }
  OElement constant(const Rational& c) const { return OElement::scalar(d, MultiPoly(nvars(), c)); }
  OElement var(std::size_t v) const { return OElement::scalar(d, MultiPoly::var(nvars(), v)); }
  OElement b() const { return OElement::monomial(d, MultiPoly(nvars(), Rational(1)), 1); }
  // Drop the unknowns (they must not occur).
  OElement restrict_element(const OElement& x, const FGRing& small) const;
};

struct FGAnsatz {
  FGRing ring;
  UniPoly<OElement> f;
  UniPoly<OElement> g;
};

struct WronskiSystem {
  std::vector<OElement> U;          // Wr(f,g) = sum U_j u^j
  std::vector<OElement> V;          // Wr(f',g') = sum V_j u^j
  std::vector<OElement> equations;  // U_{2k+d+1}, V_{2k+d-1} - U_{2k+d} b, then U_{2k+d+i}, V_{2k+d-2+i}
  std::vector<QMatrix> stage_matrix;  // linear part of stage i in (ft_{k+i} b^i, gt_{k+d+1+i} b^i), read off the equations
};

// ft b^i and gt b^i in the ansatz; the x, y values may be anything in A_d ⊗ Q[vars].
FGAnsatz make_ansatz(const FGRing& ring, const std::vector<OElement>& x, const std::vector<OElement>& y);
// U_j, V_j and the 2d equations for a given ansatz.
WronskiSystem wronski_system(const FGAnsatz& a);

// Symbolic system. Throws TheoremViolation when U_i or V_{i-2} survive for
// i > 2k+2d, when a stage matrix differs from the closed form below, or
// when a stage determinant vanishes.
std::pair<FGAnsatz, WronskiSystem> build_system(int k, int d);

// [[d+1-i, d+1+i], [(d+1-i)(k+i)(k+d+1), (d+1+i)k(k+d+1+i)]]
QMatrix stage_matrix_closed_form(int k, int d, int i);

struct EliminationStage {
  int i = 0;
  QMatrix matrix;
  Rational det;
  Rational c_f;  // b^i coefficient of phi_{k+i}
  Rational c_g;  // b^i coefficient of psi_{k+d+1+i}
};

struct EliminationResult {
  int k = 0;
  int d = 0;
  FGRing ring;  // without unknowns
  std::vector<OElement> phi;  // phi[i-1] = value of ft_{k+i} b^i
  std::vector<OElement> psi;  // psi[i-1] = value of gt_{k+d+1+i} b^i
  std::vector<EliminationStage> stages;
  int passes = 0;
};

// Staged solve: at each stage the 2x2 system in the leading unknowns, then
// back-substitution passes until nothing changes. Throws TheoremViolation
// on a singular stage, on non-termination, or when substitution does not
// give zero.
EliminationResult eliminate(int k, int d);

// Substituting the solution into every equation gives zero; b-degree bounds; grading.
Report elimination_check(const EliminationResult& r);

// Weighted homogeneity of an element of A_d ⊗ Q[vars], deg b = -1.
bool o_homogeneous(const OElement& x, const std::vector<int>& degrees, int& deg);

struct OperatorO {
  int k = 0;
  int d = 0;
  int J = 0;
  FGRing ring;
  UniPoly<OElement> f, g;   // {f}(u), {g}(u)
  UniPoly<OElement> wr;     // Wr({f},{g})
  UniPoly<OElement> wr1;    // Wr({f}',{g}')
  std::vector<OElement> F1;  // F1[j-1] = F_{1j}
  std::vector<OElement> F2;
};

// D = ∂² - F_1(u) ∂ + F_2(u) with F_1 = Wr'/Wr and F_2 = Wr(f',g')/Wr expanded
// at infinity through u^{-J}. J = 0 picks 2(k+d)+4.
OperatorO universal_operator_O(int k, int d, int J = 0);
OperatorO universal_operator_O(const EliminationResult& e, int J = 0);

// F_11 = 2k+d, F_21 = {b}, Wronskian degrees, residue at infinity,
// series times Wr gives back the numerators, D{f} = D{g} = 0, homogeneity.
Report operator_O_check(const OperatorO& op);

struct WronskiMap {
  int n = 0;
  std::vector<OElement> W;      // Wr = sum_j (-1)^j W_j u^{n-j}
  std::vector<OElement> sigma;  // sigma[s-1] = W_s / W_0
};

// Throws TheoremViolation unless W_0 = d+1 + (multiple of b).
WronskiMap wronski_map(const OperatorO& op);
Report wronski_map_check(const OperatorO& op, const WronskiMap& w);

struct OCharacters {
  QSeries ch_O;
  QSeries ch_O0;
  Report report;
};

// Closed forms; the report certifies ch_O = ch_{A_d} ch_O0, the monomial
// count of A_d ⊗ Q[{f,g}] under the grading, and agreement with the
// closed form of the isotypical character at n = 2k+d.
OCharacters character_O(int k, int d, int order);
// (1-q^{n-2k+1})^2/(1-q) q^{2k-n}/((q)_{n-k+1}(q)_k)
QSeries isotypical_character_closed(int n, int k, int order);
// (1-q^{n-2k+1})/((q)_{n-k+1}(q)_k) q^{2k-n}, as printed for the B0 quotient.
QSeries b0_character_closed(int n, int k, int order);
// Sum over degrees of the number of b^j m with m a monomial in the f, g variables.
QSeries monomial_count_character(int k, int d, int order);

// Monomials in the F_sj (j <= J) span every graded piece of A_d ⊗ Q[{f,g}]
// of degree in [-D, D].
Report generator_span_check(const OperatorO& op, int D);

}  // namespace bethe
