#pragma once

// Hermitian eigendecomposition (LAPACK zheevd) and the spectral-function
// machinery built on it. All matrix functions in this project take the
// principal branch through a full eigendecomposition; at the dimensions
// involved (<= 4096) this is exact to roundoff and branch-unambiguous.

#include <functional>
#include <vector>

#include "fwlab/matrix.hpp"

namespace fwlab {

struct EighResult {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns are orthonormal eigenvectors
};

// Eigendecomposition of a Hermitian matrix. The strictly lower triangle is
// taken as authoritative; callers are responsible for Hermiticity checks.
EighResult eigh(const Matrix &h);

// f applied to the spectrum: V diag(f(w)) V^dag.
Matrix spectral_apply(const EighResult &es,
                      const std::function<cplx(double)> &f);
Matrix herm_fun(const Matrix &h, const std::function<cplx(double)> &f);

// Largest singular value (via eigh of A^dag A).
double spectral_norm(const Matrix &a);

}  // namespace fwlab
