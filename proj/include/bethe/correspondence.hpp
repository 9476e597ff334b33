#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bethe/olambda.hpp"
#include "bethe/spectral.hpp"

namespace bethe {

template <class T>
using AdPoly = UniPoly<NilpotentElement<T>>;

// Kernel basis of D = ∂² - (W'/W)∂ + U/W over A_d, in the normalized shapes:
// F = u^k + lower + sum_{i>=1} (b^{>=i}) u^{k+i}, G = u^{k+d+1} + lower + tail,
// neither with a u^k term beyond F's leading one.
template <class T>
struct SolutionPair {
  int k = 0;
  int d = 0;
  AdPoly<T> F;
  AdPoly<T> G;
  T residual;   // worst |W D y| coefficient, relative; zero over Q
  Report report;
};

// U[i-1] is the coefficient of u^{n-i} (n = 2k+d) with U_1 = b. tol is
// ignored over Q. Throws IndicialError unless chi(a) = (a-k)(a-k-d-1),
// TheoremViolation (exact) or PrecisionInsufficientError (numeric) when a
// level system has no solution.
template <class T>
SolutionPair<T> construct_solutions(const UniPoly<T>& W, const std::vector<NilpotentElement<T>>& U, int k, int d,
                                    const T& tol);

// eta: O_lambda -> A_d, given by the images of the f, g variables.
template <class T>
struct SpecialHom {
  int k = 0;
  int d = 0;
  std::vector<NilpotentElement<T>> values;  // images of the FGRing variables (no unknowns)
  std::vector<NilpotentElement<T>> phi;     // ft_{k+i} b^i -> Ft_{k+i} b^i
  std::vector<NilpotentElement<T>> psi;
  NilpotentElement<T> wr_unit;              // Wr(F,G) = wr_unit * W
};

// Name of the report entry asserting eta(Wr) in C[u].
inline constexpr const char* kSpecialCheck = "eta(Wr) has no b-components";

template <class T>
NilpotentElement<T> eta_apply(const SpecialHom<T>& h, const OElement& x);

// Reads eta off the solutions and checks that it kills every relation, that
// eta({f}) = F and eta({g}) = G, that Wr(F,G) = c W with c = d+1 mod b, and
// (kSpecialCheck) that c has no b-components. The last one fails as soon as
// eta(W_0) picks up b-terms, e.g. k = 0, d = 2.
template <class T>
std::pair<SpecialHom<T>, Report> special_hom_from_solutions(const SolutionPair<T>& sol, const OperatorO& op,
                                                            const UniPoly<T>& W, const T& tol);

// Coefficients of u^{-1..-J} of num/den at infinity, deg num < deg den.
template <class T>
std::vector<NilpotentElement<T>> series_at_infinity(const AdPoly<T>& num, const AdPoly<T>& den, int J);

// eta(F_sj) equals the leaf's coefficients for j <= J, eta(pi(sigma_s)) = e_s(points),
// eta(Wr) has no b-components. Exact when the leaf coefficients snap to Q.
Report eta_matches_leaf(const EigenLeaf& leaf, const std::vector<Rational>& points, int J);

// (d+1) #SYT = block dimension and #SYT = leaf count for every lambda.
Report dimension_identity_check(int n, std::uint64_t seed = 1, unsigned precision = 128);

// On one block: leaf eigenvalues match B0 on sing, B_2j|leaf - phi_j is a
// polynomial in N without constant term, and the block algebra is free over
// A_d with basis N^j m_alpha of size (d+1) #SYT.
Report nu_consistency_check(const EvalModule& m, const WeightLabel& w, unsigned precision = 128, std::uint64_t seed = 1);

// Points with integer coordinates in [-5, 5] (distinct) from a seed.
std::vector<Rational> seeded_points(int n, std::uint64_t seed);

}  // namespace bethe
