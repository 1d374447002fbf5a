#include "fwlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fwlab/eigh.hpp"
#include "fwlab/errors.hpp"
#include "fwlab/hamiltonians.hpp"
#include "fwlab/spinor_algebra.hpp"
#include "fwlab/transforms.hpp"

namespace fwlab {

double SpinorField::norm() const { return vec_norm(entries); }

double SpinorField::upper_norm() const {
  return std::sqrt(kernels::sumabs2(entries.size() / 2, entries.data()));
}

double SpinorField::lower_norm() const {
  return std::sqrt(kernels::sumabs2(entries.size() / 2,
                                    entries.data() + entries.size() / 2));
}

SpinorField EnergySplitEigensystem::state(int index) const {
  SpinorField s;
  const int n = vectors.rows();
  s.entries.assign(vectors.col(index), vectors.col(index) + n);
  return s;
}

EnergySplitEigensystem split_eigensystem(const Matrix &h, double gap_min,
                                         double tol_degen) {
  EighResult es = eigh(h);
  EnergySplitEigensystem out;
  out.values = std::move(es.values);
  out.vectors = std::move(es.vectors);

  const int n = static_cast<int>(out.values.size());
  for (int i = 0; i < n; ++i) {
    const double w = out.values[i];
    if (std::abs(w) < gap_min)
      throw SpectralGapError(
          "split_eigensystem: eigenvalue inside the gap: " + std::to_string(w),
          w);
    (w > 0.0 ? out.positive : out.negative).push_back(i);
  }

  for (int i = 0; i < n;) {
    std::vector<int> group{i};
    int j = i + 1;
    while (j < n && std::abs(out.values[j] - out.values[j - 1]) <=
                        tol_degen * std::max(1.0, std::abs(out.values[j]))) {
      group.push_back(j);
      ++j;
    }
    out.degeneracy_groups.push_back(std::move(group));
    i = j;
  }
  return out;
}

UnitarityResidual check_unitary(const Matrix &u) {
  Matrix g = u.adjoint() * u;
  for (int i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  UnitarityResidual r;
  r.spectral = spectral_norm(g);
  r.frobenius = g.frobenius_norm();
  return r;
}

BlockDiagResidual check_block_diagonal(const Matrix &h) {
  const int dim = h.rows();
  const Matrix beta = lift_spinor(dirac_matrices().beta, dim / 4);
  BlockDiagResidual r;
  const double hn = spectral_norm(h);
  r.relative_commutator =
      hn > 0.0 ? spectral_norm(commutator(beta, h)) / hn : 0.0;

  const int half = dim / 2;
  Matrix off(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i)
      if ((i < half) != (j < half)) off(i, j) = h(i, j);
  r.off_block_norm = spectral_norm(off);
  return r;
}

namespace {

// Spectral norm of the dim x k slab (largest singular value).
double slab_norm(const Matrix &slab) {
  if (slab.cols() == 0) return 0.0;
  EighResult es = eigh(slab.adjoint() * slab);
  return std::sqrt(std::max(0.0, es.values.back()));
}

Matrix take_columns(const Matrix &m, const std::vector<int> &idx) {
  Matrix out(m.rows(), static_cast<int>(idx.size()));
  for (int j = 0; j < out.cols(); ++j)
    std::copy(m.col(idx[j]), m.col(idx[j]) + m.rows(), out.col(j));
  return out;
}

}  // namespace

ReductionVerdict check_reduction(const Matrix &u, const Matrix &h,
                                 double tol_reduction, double gap_min,
                                 double tol_degen, const Matrix *oracle_u) {
  const UnitarityResidual ur = check_unitary(u);
  if (ur.spectral > 1e-2)
    throw PreconditionError(
        "check_reduction: candidate operator is badly non-unitary "
        "(residual " + std::to_string(ur.spectral) + ")",
        ur.spectral);

  EnergySplitEigensystem es = split_eigensystem(h, gap_min, tol_degen);
  const int dim = h.rows();
  const int half = dim / 2;

  Matrix oracle;
  if (oracle_u) {
    oracle = *oracle_u;
  } else {
    oracle = eriksen(h, gap_min).u;
  }

  ReductionVerdict v;
  v.threshold = tol_reduction;

  Matrix transformed = u * es.vectors;
  Matrix oracle_transformed = oracle * es.vectors;

  // Per-state wrong-spinor norms for the report table.
  for (int i = 0; i < dim; ++i) {
    ReductionStateDetail d;
    d.index = i;
    d.eigenvalue = es.values[i];
    d.sign = es.values[i] > 0.0 ? 1 : -1;
    const cplx *col = transformed.col(i);
    const cplx *wrong = d.sign > 0 ? col + half : col;
    d.nullity_residual =
        std::sqrt(kernels::sumabs2(static_cast<std::size_t>(half), wrong));
    v.states.push_back(d);
  }

  // Per degeneracy group: operator-norm versions of the same residuals,
  // which are invariant under the eigensolver's arbitrary basis within the
  // group, plus the mismatch against the Eriksen oracle.
  for (std::size_t g = 0; g < es.degeneracy_groups.size(); ++g) {
    const std::vector<int> &idx = es.degeneracy_groups[g];
    for (int i : idx) v.states[i].group = static_cast<int>(g);

    Matrix ug = take_columns(transformed, idx);
    Matrix og = take_columns(oracle_transformed, idx);

    const bool positive = es.values[idx.front()] > 0.0;
    Matrix wrong(half, ug.cols());
    for (int j = 0; j < ug.cols(); ++j)
      std::copy(ug.col(j) + (positive ? half : 0),
                ug.col(j) + (positive ? dim : half), wrong.col(j));
    const double nullity = slab_norm(wrong);
    if (positive)
      v.max_lower_residual = std::max(v.max_lower_residual, nullity);
    else
      v.max_upper_residual = std::max(v.max_upper_residual, nullity);

    const double mismatch = slab_norm(ug - og);
    v.group_mismatch.push_back(mismatch);
    v.max_oracle_mismatch = std::max(v.max_oracle_mismatch, mismatch);
  }

  v.passed = v.max_lower_residual < tol_reduction &&
             v.max_upper_residual < tol_reduction &&
             v.max_oracle_mismatch < tol_reduction;
  return v;
}

double check_spectrum_preserved(const Matrix &h_in, const Matrix &h_out) {
  if (h_in.rows() != h_out.rows())
    throw ConfigError("check_spectrum_preserved: dimension mismatch");
  EighResult a = eigh(h_in);
  EighResult b = eigh(h_out);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

BchResidual bch_residual(const Matrix &s1, const Matrix &s2) {
  BchResidual r;
  Matrix lhs = mat_exp(s1) * mat_exp(s2);
  Matrix rhs = mat_exp(s1 + s2);
  r.raw = spectral_norm(lhs - rhs);
  r.commutator_norm = 0.5 * spectral_norm(commutator(s1, s2));
  return r;
}

double order_scaling_fit(
    const std::vector<std::pair<double, double>> &samples) {
  if (samples.size() < 3)
    throw ConfigError("order_scaling_fit needs at least 3 samples");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto &[param, residual] : samples) {
    if (!(param > 0.0) || !(residual > 0.0))
      throw ConfigError("order_scaling_fit needs strictly positive values");
    const double x = std::log(param);
    const double y = std::log(residual);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(samples.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace fwlab
