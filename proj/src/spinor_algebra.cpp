#include "fwlab/spinor_algebra.hpp"

#include <cmath>
#include <string>

#include "fwlab/errors.hpp"

namespace fwlab {

namespace {

const cplx I(0.0, 1.0);

Matrix pauli_matrix(int k) {
  Matrix s(2, 2);
  switch (k) {
    case 0:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 1:
      s(0, 1) = -I;
      s(1, 0) = I;
      break;
    default:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
  }
  return s;
}

// Place a 2x2 block at block position (bi, bj) of a 4x4 matrix.
void put_block(Matrix &m, int bi, int bj, const Matrix &b, cplx factor = 1.0) {
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) m(2 * bi + i, 2 * bj + j) += factor * b(i, j);
}

DiracMatrixSet build() {
  DiracMatrixSet d;
  Matrix i2 = Matrix::identity(2);

  d.beta = Matrix(4, 4);
  put_block(d.beta, 0, 0, i2);
  put_block(d.beta, 1, 1, i2, -1.0);

  for (int k = 0; k < 3; ++k) {
    Matrix s = pauli_matrix(k);
    d.pauli[k] = s;

    Matrix a(4, 4);
    put_block(a, 0, 1, s);
    put_block(a, 1, 0, s);
    d.alpha[k] = a;

    Matrix sb(4, 4);
    put_block(sb, 0, 0, s);
    put_block(sb, 1, 1, s);
    d.sigma_big[k] = sb;

    d.pi_big[k] = d.beta * sb;
    d.gamma[k] = d.beta * a;
  }
  d.alpha_x = d.alpha[0];
  d.alpha_y = d.alpha[1];
  d.alpha_z = d.alpha[2];

  d.gamma5 = Matrix(4, 4);
  put_block(d.gamma5, 0, 1, i2);
  put_block(d.gamma5, 1, 0, i2);

  d.j_matrix = I * (d.gamma5 * d.beta);
  return d;
}

}  // namespace

const DiracMatrixSet &dirac_matrices() {
  static const DiracMatrixSet d = build();
  return d;
}

Matrix mat_exp(const Matrix &g, double tol_herm) {
  const double hres = hermiticity_residual(g);
  const double scale = std::max(1.0, g.frobenius_norm());
  if (hres > tol_herm * scale)
    throw PreconditionError(
        "mat_exp: generator is not Hermitian (residual " +
            std::to_string(hres) + ")",
        hres);
  Matrix u = herm_fun(g, [](double w) { return std::exp(cplx(0.0, w)); });
  u.set_role(Role::unitary);
  return u;
}

namespace {

void require_gap(const EighResult &es, double gap_min, bool positive,
                 const char *what) {
  for (double w : es.values) {
    const double dist = positive ? w : std::abs(w);
    if (dist < gap_min)
      throw SpectralGapError(std::string(what) +
                                 ": spectral gap violation at eigenvalue " +
                                 std::to_string(w),
                             w);
  }
}

}  // namespace

Matrix mat_sqrt_psd(const Matrix &h, double gap_min) {
  EighResult es = eigh(h);
  require_gap(es, gap_min, true, "mat_sqrt_psd");
  return spectral_apply(es, [](double w) { return std::sqrt(w); });
}

Matrix mat_inv_sqrt_psd(const Matrix &h, double gap_min) {
  EighResult es = eigh(h);
  require_gap(es, gap_min, true, "mat_inv_sqrt_psd");
  return spectral_apply(es, [](double w) { return 1.0 / std::sqrt(w); });
}

Matrix mat_inv_herm(const Matrix &h, double gap_min) {
  EighResult es = eigh(h);
  require_gap(es, gap_min, false, "mat_inv_herm");
  return spectral_apply(es, [](double w) { return 1.0 / w; });
}

Matrix sign_operator(const EighResult &es, double gap_min) {
  require_gap(es, gap_min, false, "sign_operator");
  Matrix s = spectral_apply(
      es, [](double w) { return w >= 0.0 ? 1.0 : -1.0; });
  s.set_role(Role::sign);
  return s;
}

Matrix sign_operator(const Matrix &h, double gap_min) {
  return sign_operator(eigh(h), gap_min);
}

}  // namespace fwlab
