#pragma once

// Low-level dense complex kernels. Scalar reference implementations plus
// SIMD variants (AVX2/FMA on x86-64, NEON on aarch64) selected at runtime.
// All higher-level matrix arithmetic funnels through this table, so the
// scalar and vector paths can be equivalence-tested against each other.

#include <complex>
#include <cstddef>
#include <string>

namespace fwlab::kernels {

using cplx = std::complex<double>;

// y[i] += a * x[i]
using axpy_fn = void (*)(std::size_t n, cplx a, const cplx *x, cplx *y);
// sum over |x[i]|^2
using sumabs2_fn = double (*)(std::size_t n, const cplx *x);
// z[i] = x[i] + s * y[i]  (s = +1/-1 covers add/sub)
using addsub_fn = void (*)(std::size_t n, const cplx *x, const cplx *y,
                           double s, cplx *z);
// x[i] *= a
using scale_fn = void (*)(std::size_t n, cplx a, cplx *x);

struct KernelTable {
  const char *name;
  axpy_fn axpy;
  sumabs2_fn sumabs2;
  addsub_fn addsub;
  scale_fn scale;
};

// Reference implementations (always available).
extern const KernelTable scalar_table;

#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_table;  // valid only if cpu_has_avx2()
bool cpu_has_avx2();
#endif
#if defined(__aarch64__)
extern const KernelTable neon_table;
#endif

// Active table. Chosen once at startup: best available SIMD unless the
// FWLAB_KERNEL environment variable ("scalar", "avx2", "neon") overrides.
const KernelTable &active();

// Force a specific table (used by the equivalence tests). Returns false if
// the requested backend is not available on this machine.
bool select(const std::string &name);

inline void axpy(std::size_t n, cplx a, const cplx *x, cplx *y) {
  active().axpy(n, a, x, y);
}
inline double sumabs2(std::size_t n, const cplx *x) {
  return active().sumabs2(n, x);
}
inline void addsub(std::size_t n, const cplx *x, const cplx *y, double s,
                   cplx *z) {
  active().addsub(n, x, y, s, z);
}
inline void scale(std::size_t n, cplx a, cplx *x) { active().scale(n, a, x); }

inline std::string backend_name() { return active().name; }

}  // namespace fwlab::kernels
