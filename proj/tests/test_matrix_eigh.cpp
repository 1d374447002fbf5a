#include <doctest.h>

#include <cmath>
#include <random>

#include "fwlab/eigh.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/matrix.hpp"
#include "fwlab/spinor_algebra.hpp"

using namespace fwlab;

namespace {

Matrix random_hermitian(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Matrix a(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = cplx(d(rng), d(rng));
  Matrix h = a + a.adjoint();
  h *= 0.5;
  return h;
}

}  // namespace

TEST_CASE("adjoint and norms") {
  Matrix a(2, 3);
  a(0, 0) = cplx(1, 2);
  a(1, 2) = cplx(0, -3);
  Matrix ad = a.adjoint();
  CHECK(ad.rows() == 3);
  CHECK(ad(0, 0) == cplx(1, -2));
  CHECK(ad(2, 1) == cplx(0, 3));
  CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(1 + 4 + 9)));
  CHECK(a.max_abs() == doctest::Approx(3.0));
}

TEST_CASE("eigh reconstructs a random Hermitian matrix") {
  const int n = 24;
  Matrix h = random_hermitian(n, 2024);
  EighResult es = eigh(h);

  // ascending eigenvalues, orthonormal vectors
  for (std::size_t i = 1; i < es.values.size(); ++i)
    CHECK(es.values[i] >= es.values[i - 1]);
  Matrix g = es.vectors.adjoint() * es.vectors;
  CHECK((g - Matrix::identity(n)).max_abs() < 1e-12);

  Matrix rebuilt = spectral_apply(es, [](double w) { return w; });
  CHECK((rebuilt - h).max_abs() < 1e-12);
}

TEST_CASE("spectral norm of a known matrix") {
  Matrix a(2, 2);
  a(0, 0) = 3.0;  // singular values 3 and 2
  a(1, 1) = cplx(0.0, 2.0);
  CHECK(spectral_norm(a) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("mat_exp identities") {
  // exp(i*0) = 1
  Matrix zero(4, 4);
  CHECK((mat_exp(zero) - Matrix::identity(4)).max_abs() < 1e-15);

  // G = (pi/2) sigma_x block: eigenphases +/- pi/2, checked against the
  // eigendecomposition of the result.
  Matrix g(4, 4);
  g(0, 1) = M_PI_2;
  g(1, 0) = M_PI_2;
  Matrix u = mat_exp(g);
  Matrix gram = u.adjoint() * u;
  CHECK((gram - Matrix::identity(4)).max_abs() < 1e-12);
  // phases of the eigenvalues of u on the sigma_x block
  EighResult es = eigh(g);
  for (double w : es.values)
    CHECK((std::abs(std::abs(w) - M_PI_2) < 1e-12 || std::abs(w) < 1e-12));

  // inverse pairing
  Matrix h = random_hermitian(6, 7);
  CHECK((mat_exp(h) * mat_exp(cplx(-1.0) * h) - Matrix::identity(6)).max_abs()
        < 1e-12);
  // adjoint pairing: exp(iG)^dag = exp(-iG)
  CHECK((mat_exp(h).adjoint() - mat_exp(cplx(-1.0) * h)).max_abs() < 1e-12);

  // non-Hermitian rejection carries the residual
  Matrix bad(3, 3);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(mat_exp(bad), PreconditionError);
}

TEST_CASE("mat_sqrt_psd") {
  CHECK((mat_sqrt_psd(Matrix::identity(5)) - Matrix::identity(5)).max_abs() <
        1e-14);

  Matrix d(4, 4);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  d(2, 2) = 1.0;
  d(3, 3) = 25.0;
  Matrix r = mat_sqrt_psd(d);
  CHECK(r(0, 0).real() == doctest::Approx(2.0));
  CHECK(r(1, 1).real() == doctest::Approx(3.0));
  CHECK(r(2, 2).real() == doctest::Approx(1.0));
  CHECK(r(3, 3).real() == doctest::Approx(5.0));

  // squaring oracle on a random PSD matrix
  Matrix a = random_hermitian(16, 3);
  Matrix psd = a * a.adjoint() + Matrix::identity(16);
  Matrix s = mat_sqrt_psd(psd);
  CHECK((s * s - psd).frobenius_norm() < 1e-11 * psd.frobenius_norm());
  // result is Hermitian and commutes with the input
  CHECK(hermiticity_residual(s) < 1e-11);
  CHECK(commutator(s, psd).frobenius_norm() <
        1e-10 * psd.frobenius_norm());

  // spectral gap violation carries the offending eigenvalue
  Matrix sing(2, 2);
  sing(0, 0) = 1.0;  // second eigenvalue 0
  try {
    mat_sqrt_psd(sing);
    FAIL("expected SpectralGapError");
  } catch (const SpectralGapError &e) {
    CHECK(std::abs(e.offending_eigenvalue) < 1e-12);
  }
}

TEST_CASE("sign_operator basics") {
  const DiracMatrixSet &d = dirac_matrices();

  // free particle at p = 0: lambda = beta
  Matrix h = 1.0 * d.beta;
  CHECK((sign_operator(h) - d.beta).max_abs() < 1e-14);

  // free momentum mode: lambda = (beta m + alpha.p)/E
  const double m = 1.0, p = 0.75;
  Matrix hp = m * d.beta + p * d.alpha_z;
  const double e = std::hypot(m, p);
  Matrix expected = (1.0 / e) * hp;
  Matrix lam = sign_operator(hp);
  CHECK((lam - expected).max_abs() < 1e-13);

  // involution, Hermitian, commutes with H, spectrum exactly +/-1
  Matrix h2 = random_hermitian(12, 11) + 3.0 * Matrix::identity(12);
  Matrix h3 = random_hermitian(12, 13);
  Matrix mixed = h3 * h3.adjoint() - 2.0 * Matrix::identity(12) +
                 random_hermitian(12, 17);
  Matrix lam2 = sign_operator(mixed);
  CHECK((lam2 * lam2 - Matrix::identity(12)).max_abs() < 1e-12);
  CHECK(hermiticity_residual(lam2) < 1e-12);
  CHECK(commutator(lam2, mixed).frobenius_norm() <
        1e-10 * mixed.frobenius_norm());
  EighResult esl = eigh(lam2);
  for (double w : esl.values) CHECK(std::abs(std::abs(w) - 1.0) < 1e-12);

  // the paired identities: [beta lambda, lambda beta] = 0 and
  // beta lambda + lambda beta is even
  Matrix bl = d.beta * lam;
  Matrix lb = lam * d.beta;
  CHECK(commutator(bl, lb).max_abs() < 1e-13);
  CHECK(commutator(d.beta, bl + lb).max_abs() < 1e-13);

  // near-zero eigenvalue refused
  Matrix tiny(2, 2);
  tiny(0, 0) = 1e-12;
  tiny(1, 1) = 1.0;
  CHECK_THROWS_AS(sign_operator(tiny), SpectralGapError);
}
