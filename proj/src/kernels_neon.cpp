#include "fwlab/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace fwlab::kernels {

namespace {

// One complex<double> per 128-bit vector: [re, im].
// (ar + i*ai)(re + i*im) = (ar*re - ai*im) + i(ar*im + ai*re)
void axpy_neon(std::size_t n, cplx a, const cplx *x, cplx *y) {
  const double *xp = reinterpret_cast<const double *>(x);
  double *yp = reinterpret_cast<double *>(y);
  const float64x2_t signs = {-1.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t xv = vld1q_f64(xp + 2 * i);
    float64x2_t yv = vld1q_f64(yp + 2 * i);
    float64x2_t xs = vextq_f64(xv, xv, 1);  // [im, re]
    float64x2_t t1 = vmulq_n_f64(xv, a.real());
    float64x2_t t2 = vmulq_n_f64(xs, a.imag());
    float64x2_t prod = vfmaq_f64(t1, t2, signs);
    vst1q_f64(yp + 2 * i, vaddq_f64(yv, prod));
  }
}

double sumabs2_neon(std::size_t n, const cplx *x) {
  const double *xp = reinterpret_cast<const double *>(x);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t xv = vld1q_f64(xp + 2 * i);
    acc = vfmaq_f64(acc, xv, xv);
  }
  return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

void addsub_neon(std::size_t n, const cplx *x, const cplx *y, double s,
                 cplx *z) {
  const double *xp = reinterpret_cast<const double *>(x);
  const double *yp = reinterpret_cast<const double *>(y);
  double *zp = reinterpret_cast<double *>(z);
  const float64x2_t sv = vdupq_n_f64(s);
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t xv = vld1q_f64(xp + 2 * i);
    float64x2_t yv = vld1q_f64(yp + 2 * i);
    vst1q_f64(zp + 2 * i, vfmaq_f64(xv, sv, yv));
  }
}

void scale_neon(std::size_t n, cplx a, cplx *x) {
  double *xp = reinterpret_cast<double *>(x);
  const float64x2_t signs = {-1.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    float64x2_t xv = vld1q_f64(xp + 2 * i);
    float64x2_t xs = vextq_f64(xv, xv, 1);
    float64x2_t t1 = vmulq_n_f64(xv, a.real());
    float64x2_t t2 = vmulq_n_f64(xs, a.imag());
    vst1q_f64(xp + 2 * i, vfmaq_f64(t1, t2, signs));
  }
}

}  // namespace

const KernelTable neon_table = {"neon", axpy_neon, sumabs2_neon, addsub_neon,
                                scale_neon};

}  // namespace fwlab::kernels

#endif  // aarch64
