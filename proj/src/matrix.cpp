#include "fwlab/matrix.hpp"

#include <cassert>
#include <cmath>

namespace fwlab {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conj() const {
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
  return r;
}

Matrix &Matrix::operator+=(const Matrix &rhs) {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  kernels::addsub(a_.size(), a_.data(), rhs.a_.data(), 1.0, a_.data());
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &rhs) {
  assert(rows_ == rhs.rows_ && cols_ == rhs.cols_);
  kernels::addsub(a_.size(), a_.data(), rhs.a_.data(), -1.0, a_.data());
  return *this;
}

Matrix &Matrix::operator*=(cplx s) {
  kernels::scale(a_.size(), s, a_.data());
  return *this;
}

double Matrix::frobenius_norm() const {
  return std::sqrt(kernels::sumabs2(a_.size(), a_.data()));
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const cplx &z : a_) m = std::max(m, std::abs(z));
  return m;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
  Matrix r = a;
  r += b;
  return r;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  Matrix r = a;
  r -= b;
  return r;
}

Matrix operator*(cplx s, const Matrix &a) {
  Matrix r = a;
  r *= s;
  return r;
}

void matmul_into(const Matrix &a, const Matrix &b, Matrix &c) {
  assert(a.cols() == b.rows());
  assert(c.rows() == a.rows() && c.cols() == b.cols());
  const int m = a.rows(), k = a.cols(), n = b.cols();
  // Column-major saxpy form: c[:,j] += b(l,j) * a[:,l]; the axpy runs down
  // a contiguous column, which is where the SIMD kernels earn their keep.
  for (int j = 0; j < n; ++j) {
    cplx *cj = c.col(j);
    for (int i = 0; i < m; ++i) cj[i] = 0.0;
    for (int l = 0; l < k; ++l) {
      const cplx blj = b(l, j);
      if (blj == cplx(0.0)) continue;
      kernels::axpy(static_cast<std::size_t>(m), blj, a.col(l), cj);
    }
  }
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  Matrix c(a.rows(), b.cols());
  matmul_into(a, b, c);
  return c;
}

std::vector<cplx> operator*(const Matrix &a, const std::vector<cplx> &x) {
  assert(a.cols() == static_cast<int>(x.size()));
  std::vector<cplx> y(a.rows(), cplx(0.0));
  for (int l = 0; l < a.cols(); ++l)
    kernels::axpy(static_cast<std::size_t>(a.rows()), x[l], a.col(l),
                  y.data());
  return y;
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

Matrix anticommutator(const Matrix &a, const Matrix &b) {
  return a * b + b * a;
}

double hermiticity_residual(const Matrix &a) {
  return (a - a.adjoint()).frobenius_norm();
}

Matrix kron_spinor(const Matrix &d, const Matrix &m) {
  const int ds = d.rows(), n = m.rows();
  assert(d.square() && m.square());
  Matrix r(ds * n, ds * n);
  for (int t = 0; t < ds; ++t)
    for (int s = 0; s < ds; ++s) {
      const cplx dst = d(s, t);
      if (dst == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) {
        const cplx *mj = m.col(j);
        cplx *rj = r.col(t * n + j) + s * n;
        kernels::axpy(static_cast<std::size_t>(n), dst, mj, rj);
      }
    }
  return r;
}

double vec_norm(const std::vector<cplx> &x) {
  return std::sqrt(kernels::sumabs2(x.size(), x.data()));
}

}  // namespace fwlab
