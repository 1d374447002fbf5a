#pragma once

// The fixed 4x4 Dirac algebra (Dirac-Pauli representation) and the dense
// Hermitian matrix-function kernel (exp, principal square root, sign) used
// by every transform.

#include <array>

#include "fwlab/eigh.hpp"
#include "fwlab/matrix.hpp"
#include "fwlab/tolerances.hpp"

namespace fwlab {

struct DiracMatrixSet {
  Matrix beta;                       // diag(1, 1, -1, -1)
  Matrix alpha_x, alpha_y, alpha_z;  // off-diagonal sigma blocks
  std::array<Matrix, 3> alpha;       // same three, indexable
  std::array<Matrix, 3> sigma_big;   // Sigma = diag(sigma, sigma)
  std::array<Matrix, 3> pi_big;      // Pi = beta * Sigma
  Matrix gamma5;                     // off-diagonal identity blocks
  Matrix j_matrix;                   // J = i gamma5 beta, Hermitian, J^2 = 1

  std::array<Matrix, 3> gamma;  // gamma^k = beta * alpha_k
  std::array<Matrix, 3> pauli;  // 2x2 Pauli matrices
};

// The constant set; built once, returned by reference.
const DiracMatrixSet &dirac_matrices();

// exp(iG) for Hermitian G. Rejects non-Hermitian input.
Matrix mat_exp(const Matrix &g, double tol_herm = 1e-10);

// Principal square root of a Hermitian positive-definite matrix. Any
// eigenvalue below gap_min raises SpectralGapError.
Matrix mat_sqrt_psd(const Matrix &h, double gap_min = 1e-8);

// Inverse and inverse square root under the same gap policy (eigenvalues
// must stay away from zero in magnitude for inv, above gap_min for the
// positive-definite variants).
Matrix mat_inv_sqrt_psd(const Matrix &h, double gap_min = 1e-8);
Matrix mat_inv_herm(const Matrix &h, double gap_min = 1e-8);

// lambda = H (H^2)^{-1/2} via the eigendecomposition; Hermitian involution
// whose +/-1 eigenspaces are the positive/negative-energy subspaces.
Matrix sign_operator(const Matrix &h, double gap_min = 1e-8);
Matrix sign_operator(const EighResult &es, double gap_min = 1e-8);

}  // namespace fwlab
