// Equivalence of the SIMD kernel variants against the scalar reference,
// over random data including odd tail lengths.

#include <doctest.h>

#include <random>
#include <vector>

#include "fwlab/kernels.hpp"
#include "fwlab/matrix.hpp"

using fwlab::Matrix;
using fwlab::cplx;
namespace kern = fwlab::kernels;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937 &rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto &z : v) z = cplx(d(rng), d(rng));
  return v;
}

struct BackendGuard {
  BackendGuard() : saved(kern::backend_name()) {}
  ~BackendGuard() { kern::select(saved); }
  std::string saved;
};

std::vector<std::string> simd_backends() {
  std::vector<std::string> out;
#if defined(__x86_64__) || defined(_M_X64)
  if (kern::cpu_has_avx2()) out.push_back("avx2");
#endif
#if defined(__aarch64__)
  out.push_back("neon");
#endif
  return out;
}

}  // namespace

TEST_CASE("scalar backend is always selectable") {
  BackendGuard guard;
  CHECK(kern::select("scalar"));
  CHECK(kern::backend_name() == "scalar");
  CHECK_FALSE(kern::select("no-such-backend"));
}

TEST_CASE("simd kernels match the scalar reference") {
  BackendGuard guard;
  std::mt19937 rng(12345);
  for (const std::string &backend : simd_backends()) {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                          std::size_t{7}, std::size_t{64}, std::size_t{257}}) {
      auto x = random_vec(n, rng);
      auto y0 = random_vec(n, rng);
      const cplx a(0.37, -1.21);

      auto y_ref = y0;
      REQUIRE(kern::select("scalar"));
      kern::axpy(n, a, x.data(), y_ref.data());
      const double s_ref = kern::sumabs2(n, x.data());
      std::vector<cplx> z_ref(n);
      kern::addsub(n, x.data(), y0.data(), -1.0, z_ref.data());
      auto w_ref = x;
      kern::scale(n, a, w_ref.data());

      auto y_simd = y0;
      REQUIRE(kern::select(backend));
      kern::axpy(n, a, x.data(), y_simd.data());
      const double s_simd = kern::sumabs2(n, x.data());
      std::vector<cplx> z_simd(n);
      kern::addsub(n, x.data(), y0.data(), -1.0, z_simd.data());
      auto w_simd = x;
      kern::scale(n, a, w_simd.data());

      for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(y_ref[i] - y_simd[i]) < 1e-13);
        CHECK(std::abs(z_ref[i] - z_simd[i]) < 1e-13);
        CHECK(std::abs(w_ref[i] - w_simd[i]) < 1e-13);
      }
      CHECK(std::abs(s_ref - s_simd) < 1e-12 * (1.0 + s_ref));
    }
  }
}

TEST_CASE("matmul agrees between backends") {
  BackendGuard guard;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const int n = 33;
  Matrix a(n, n), b(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      a(i, j) = cplx(d(rng), d(rng));
      b(i, j) = cplx(d(rng), d(rng));
    }

  REQUIRE(kern::select("scalar"));
  Matrix c_ref = a * b;
  for (const std::string &backend : simd_backends()) {
    REQUIRE(kern::select(backend));
    Matrix c = a * b;
    CHECK((c - c_ref).max_abs() < 1e-12);
  }
}

TEST_CASE("matmul matches a hand-written triple loop") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const int m = 5, k = 4, n = 3;
  Matrix a(m, k), b(k, n);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i) a(i, j) = cplx(d(rng), d(rng));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < k; ++i) b(i, j) = cplx(d(rng), d(rng));

  Matrix c = a * b;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      cplx acc = 0.0;
      for (int l = 0; l < k; ++l) acc += a(i, l) * b(l, j);
      CHECK(std::abs(c(i, j) - acc) < 1e-14);
    }
}
