#include "fwlab/kernels.hpp"

namespace fwlab::kernels {

namespace {

void axpy_scalar(std::size_t n, cplx a, const cplx *x, cplx *y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sumabs2_scalar(std::size_t n, const cplx *x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return acc;
}

void addsub_scalar(std::size_t n, const cplx *x, const cplx *y, double s,
                   cplx *z) {
  for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + s * y[i];
}

void scale_scalar(std::size_t n, cplx a, cplx *x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

}  // namespace

const KernelTable scalar_table = {"scalar", axpy_scalar, sumabs2_scalar,
                                  addsub_scalar, scale_scalar};

}  // namespace fwlab::kernels
