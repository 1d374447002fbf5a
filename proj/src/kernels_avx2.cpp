#include "fwlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace fwlab::kernels {

namespace {

// Two interleaved complex<double> per 256-bit vector: [re0, im0, re1, im1].
// Complex multiply by a fixed scalar a uses the fmaddsub trick:
//   even lanes:  ar*re - ai*im
//   odd  lanes:  ar*im + ai*re
void axpy_avx2(std::size_t n, cplx a, const cplx *x, cplx *y) {
  const double *xp = reinterpret_cast<const double *>(x);
  double *yp = reinterpret_cast<double *>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d xs = _mm256_permute_pd(xv, 0x5);  // [im0, re0, im1, re1]
    __m256d t = _mm256_mul_pd(ai, xs);
    __m256d prod = _mm256_fmaddsub_pd(ar, xv, t);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, prod));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double sumabs2_avx2(std::size_t n, const cplx *x) {
  const double *xp = reinterpret_cast<const double *>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i)
    total += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return total;
}

void addsub_avx2(std::size_t n, const cplx *x, const cplx *y, double s,
                 cplx *z) {
  const double *xp = reinterpret_cast<const double *>(x);
  const double *yp = reinterpret_cast<const double *>(y);
  double *zp = reinterpret_cast<double *>(z);
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(zp + 2 * i, _mm256_fmadd_pd(sv, yv, xv));
  }
  for (; i < n; ++i) z[i] = x[i] + s * y[i];
}

void scale_avx2(std::size_t n, cplx a, cplx *x) {
  double *xp = reinterpret_cast<double *>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d xs = _mm256_permute_pd(xv, 0x5);
    __m256d t = _mm256_mul_pd(ai, xs);
    _mm256_storeu_pd(xp + 2 * i, _mm256_fmaddsub_pd(ar, xv, t));
  }
  for (; i < n; ++i) x[i] *= a;
}

}  // namespace

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const KernelTable avx2_table = {"avx2", axpy_avx2, sumabs2_avx2, addsub_avx2,
                                scale_avx2};

}  // namespace fwlab::kernels

#endif  // x86-64
