#pragma once

#include <vector>

#include "stickylab/chain.hpp"

namespace stickylab {

struct SpectrumReport {
  std::vector<double> eigenvalues;      // sorted descending
  double second_largest_magnitude = 0.0;
  double predicted = 0.0;               // delta
  double residual = 0.0;                // |second_largest_magnitude - predicted|
  double solver_disagreement = 0.0;     // max closed-form vs Jacobi eigenvalue gap
  bool witness_verified = false;        // e_0 - (1/p) 1 maps to delta times itself
};

// Spectrum of a constant-diagonal, constant-off-diagonal stochastic matrix:
// {a + (p-1) b} followed by p-1 copies of a - b.
std::vector<double> sticky_spectrum_closed_form(const StochasticMatrix& matrix);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// descending. Throws on non-symmetric input.
std::vector<double> jacobi_eigenvalues(const StochasticMatrix& matrix);

// Full report for a symmetric stochastic matrix: closed form (when the matrix
// is sticky) cross-checked against Jacobi, predicted second eigenvalue taken
// from the off-diagonal structure.
SpectrumReport spectrum(const StochasticMatrix& matrix);

// Spectrum of the walk's transition matrix plus the witness-eigenvector check:
// (e_0 - (1/p) 1) must map to delta times itself within 1e-10.
SpectrumReport verify_expander(const WalkParams& params);

}  // namespace stickylab
