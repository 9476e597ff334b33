#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bethe/betheop.hpp"
#include "bethe/eigen.hpp"
#include "bethe/nilpotent.hpp"
#include "bethe/report.hpp"

namespace bethe {

// Generalized B_22-eigenspace with eigenvalue k(n-k+1), over Q.
struct IsotypicBlock {
  WeightLabel weight;
  Rational eigenvalue;
  QMatrix basis;            // columns in the ambient 2^n space
  std::vector<QMatrix> U;   // U_i restricted to the block, i = 1..n
  std::vector<QMatrix> B2;  // B_2j restricted to the block, j = 1..n
  std::size_t dim() const { return basis.cols(); }
};

// One block per lambda, highest weight first. Throws TheoremViolation when a
// dimension differs from (n-2k+1) #SYT(lambda) or the blocks do not fill 2^n.
std::vector<IsotypicBlock> deformed_isotypical_decomposition(const EvalModule& m, const KMatrix& k);

struct TriangularBasis {
  QMatrix w;        // block vectors w_i, ambient coordinates
  QMatrix leading;  // weight-homogeneous isotypical vectors v_i with w_i - v_i strictly lower
  std::vector<int> weight_of;  // popcount of v_i
};

// Basis w_i = v_i + (strictly lower weight) of the block, with v_i a
// weight-adapted basis of the honest isotypical component. Throws
// TheoremViolation when no such basis exists.
TriangularBasis triangular_block_basis(const EvalModule& m, const IsotypicBlock& block);

struct EigenLeaf {
  WeightLabel weight;
  std::vector<PrecFloat> phi;  // eigenvalues of B_2j, j = 2..n
  FMatrix basis;               // orthonormal columns, block coordinates
  FMatrix projector;           // spectral projector, block coordinates
  FMatrix N;                   // B_21 on the leaf (leaf coordinates)
  std::vector<FMatrix> U;      // U_i on the leaf, i = 1..n
  unsigned precision = 0;
  PrecFloat residual;          // worst invariance / projector residual, relative
};

// Joint generalized eigenspaces of {B_2j | block : j = 2..n}. Throws
// TheoremViolation when the leaf count is not #SYT or a leaf has the wrong dimension.
std::vector<EigenLeaf> eigenleaf_decomposition(const IsotypicBlock& block, unsigned precision = 128,
                                               std::uint64_t seed = 1);

// U_i on a leaf as sum_j c_ij N^j.
struct LeafOperator {
  int n = 0;
  int d = 0;
  std::vector<NilpotentElement<PrecFloat>> U;              // U[i-1] = sum_j c_ij b^j
  std::vector<std::vector<std::optional<Rational>>> exact;  // snapped c_ij where available
  PrecFloat residual;                                       // worst fit residual, relative
};

// Fits the c_ij and asserts U_1 -> b and c_20 = k(n-k+1) after snapping.
// Throws PrecisionInsufficientError when N^0..N^d do not fit the U_i.
LeafOperator leaf_operator(const EigenLeaf& leaf);

// D_0 = ∂² - (W'/W)∂ + (sum_{i=2}^n c_i0 u^{n-i})/W.
struct ScalarOperator {
  UniPoly<PrecFloat> W;
  std::vector<PrecFloat> c0;  // c0[i-1] = c_i0, i = 1..n (c_10 = 0)
};

ScalarOperator scalar_operator(const LeafOperator& op, const UniPoly<PrecFloat>& W);
// D_{F0,G0}: W = Wr(F0,G0)/lc, numerator Wr(F0',G0')/lc, lc the leading coefficient.
ScalarOperator scalar_operator_from_polynomials(const UniPoly<Rational>& F0, const UniPoly<Rational>& G0,
                                                unsigned precision);
// max_i |a_i - b_i| / max(1, |b_i|) over W and c0 coefficients.
PrecFloat scalar_operator_distance(const ScalarOperator& a, const ScalarOperator& b);

struct RoundtripResult {
  int n = 0;
  int k = 0;
  bool rational_points = false;
  std::vector<PrecFloat> points;   // roots of the normalized Wronskian, increasing
  std::vector<Rational> exact_points;
  std::size_t leaf_count = 0;
  std::size_t matches = 0;
  std::size_t matched_index = 0;
  PrecFloat best_distance;
  PrecFloat second_distance;       // distance to the nearest other leaf (0 if none)
  ScalarOperator target;
};

// Finds the unique leaf of M_a (a from the normalized Wr(F0,G0)) in the
// (n-k,k) block whose scalar operator equals D_{F0,G0}. Throws
// GenericityFailure when Wr is not squarefree with all roots real, or when the
// match is not unique.
RoundtripResult leaf_from_polynomials(const UniPoly<Rational>& F0, const UniPoly<Rational>& G0,
                                      unsigned precision = 128, std::uint64_t seed = 1);

// (a) a random B0 combination on sing M_a[lambda] has squarefree charpoly;
// (b) leaf eigenvalue vectors match B0 eigenvalue vectors on sing with margin;
// (c) charpoly of the combination on the block is the singular one to the power d+1.
Report singular_spectrum_match(const EvalModule& m, unsigned precision = 128, std::uint64_t seed = 1);

// Dimension of the unital algebra generated by the matrices, and a basis of it.
std::vector<QMatrix> algebra_closure(const std::vector<QMatrix>& gens);
// Regular-representation consequences on one block: algebra dimension = dim,
// cyclic vector, codim of the ideal (U_1) = #SYT, and the B0 algebra on sing.
Report block_algebra_check(const EvalModule& m, const IsotypicBlock& block, std::uint64_t seed = 1);

}  // namespace bethe
