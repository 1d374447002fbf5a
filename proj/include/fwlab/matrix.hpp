#pragma once

// Dense complex matrices, column-major, with the arithmetic routed through
// the runtime-dispatched kernels.

#include <complex>
#include <cstddef>
#include <vector>

#include "fwlab/kernels.hpp"

namespace fwlab {

using cplx = std::complex<double>;

// Tag describing what an operator is supposed to be; validated by the
// checkers in verify.hpp, not enforced by the type itself.
enum class Role {
  general,
  hamiltonian,         // Hermitian
  unitary,             // U^dag U = 1
  sign,                // Hermitian involution
  normalization,       // even, positive definite
  exponent_generator,  // Hermitian G with U = exp(iG)
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, Role role = Role::general)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols),
        role_(role) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Role role() const { return role_; }
  void set_role(Role r) { role_ = r; }

  cplx &operator()(int i, int j) { return a_[idx(i, j)]; }
  const cplx &operator()(int i, int j) const { return a_[idx(i, j)]; }

  cplx *data() { return a_.data(); }
  const cplx *data() const { return a_.data(); }
  cplx *col(int j) { return a_.data() + static_cast<std::size_t>(j) * rows_; }
  const cplx *col(int j) const {
    return a_.data() + static_cast<std::size_t>(j) * rows_;
  }
  std::size_t size() const { return a_.size(); }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;

  Matrix &operator+=(const Matrix &rhs);
  Matrix &operator-=(const Matrix &rhs);
  Matrix &operator*=(cplx s);

  double frobenius_norm() const;
  double max_abs() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(j) * rows_ + i;
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
  Role role_ = Role::general;
};

Matrix operator+(const Matrix &a, const Matrix &b);
Matrix operator-(const Matrix &a, const Matrix &b);
Matrix operator*(cplx s, const Matrix &a);
Matrix operator*(const Matrix &a, const Matrix &b);  // matmul
std::vector<cplx> operator*(const Matrix &a, const std::vector<cplx> &x);

// c = a*b without reallocating c (shapes must already match).
void matmul_into(const Matrix &a, const Matrix &b, Matrix &c);

Matrix commutator(const Matrix &a, const Matrix &b);      // ab - ba
Matrix anticommutator(const Matrix &a, const Matrix &b);  // ab + ba

// || a - a^dag ||_F
double hermiticity_residual(const Matrix &a);

// Kronecker product with the spinor index outermost: entry
// ((s,i),(t,j)) = d(s,t) * m(i,j), giving 4N x 4N operators whose
// upper/lower 2N blocks follow beta's block structure.
Matrix kron_spinor(const Matrix &d, const Matrix &m);

// Vector helpers (complex column vectors as std::vector<cplx>).
double vec_norm(const std::vector<cplx> &x);

}  // namespace fwlab
