#include "fwlab/eigh.hpp"

#include <cmath>
#include <string>

#include <lapacke.h>

#include "fwlab/errors.hpp"

namespace fwlab {

EighResult eigh(const Matrix &h) {
  if (!h.square()) throw NumericalError("eigh: matrix is not square");
  const int n = h.rows();
  EighResult r;
  r.values.resize(n);
  r.vectors = h;  // zheevd overwrites with eigenvectors
  int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'V', 'L', n,
      reinterpret_cast<lapack_complex_double *>(r.vectors.data()), n,
      r.values.data());
  if (info != 0)
    throw NumericalError("LAPACKE_zheevd failed, info=" + std::to_string(info));
  return r;
}

Matrix spectral_apply(const EighResult &es,
                      const std::function<cplx(double)> &f) {
  const int n = es.vectors.rows();
  Matrix scaled = es.vectors;
  for (int j = 0; j < n; ++j)
    kernels::scale(static_cast<std::size_t>(n), f(es.values[j]),
                   scaled.col(j));
  return scaled * es.vectors.adjoint();
}

Matrix herm_fun(const Matrix &h, const std::function<cplx(double)> &f) {
  return spectral_apply(eigh(h), f);
}

double spectral_norm(const Matrix &a) {
  if (a.size() == 0) return 0.0;
  EighResult es = eigh(a.adjoint() * a);
  double top = es.values.back();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace fwlab
