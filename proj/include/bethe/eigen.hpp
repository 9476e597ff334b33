#pragma once

#include <cstdint>
#include <vector>

#include "bethe/linalg.hpp"

namespace bethe {

// Basis (columns, reduced column echelon form) of ker (m - eigenvalue)^exponent.
QMatrix generalized_eigenspace(const QMatrix& m, const Rational& eigenvalue, std::size_t exponent);

struct JointEigenspace {
  std::vector<PrecFloat> values;  // one eigenvalue per input matrix
  int multiplicity = 0;
  FMatrix basis;                  // columns
  FMatrix projector;              // spectral projector onto the subspace
};

struct JointReport {
  std::vector<JointEigenspace> spaces;
  unsigned precision = 0;     // precision actually used
  PrecFloat tol;
  PrecFloat min_separation;   // smallest gap between distinct eigenvalues of the probe
  PrecFloat residual;         // worst projector / nilpotency residual, relative
};

// Joint generalized eigenspaces of exactly commuting rational matrices with
// real spectra. The eigenvalues of a seeded random combination come from its
// exact characteristic polynomial (squarefree parts, Sturm isolation); the
// subspaces come from numeric spectral projectors at `precision` bits.
JointReport joint_generalized_eigenspaces(const std::vector<QMatrix>& ms, unsigned precision, const PrecFloat& tol,
                                          std::uint64_t seed = 1);

// Same, with the default tolerance 2^{-precision/2} and precision doubling up
// to max_precision on PrecisionInsufficientError.
JointReport joint_generalized_eigenspaces_auto(const std::vector<QMatrix>& ms, unsigned precision = 128,
                                               std::uint64_t seed = 1, unsigned max_precision = 1024);

// Spectral projector onto the generalized eigenspace of c for roots[i], given
// the full list of distinct eigenvalues with their algebraic multiplicities.
FMatrix spectral_projector(const FMatrix& c, const std::vector<PrecFloat>& roots, const std::vector<int>& mult,
                           std::size_t i);

}  // namespace bethe
