#pragma once

// Verification battery: unitarity, block-diagonality, spectrum preservation,
// the wave-function reduction checker (with the exact Eriksen operator as
// oracle), BCH residuals and power-law scaling fits.

#include <span>
#include <utility>
#include <vector>

#include "fwlab/matrix.hpp"
#include "fwlab/tolerances.hpp"

namespace fwlab {

// 4N-component state with upper/lower 2N-spinor views following beta's
// block convention (upper = first half).
struct SpinorField {
  std::vector<cplx> entries;

  int dim() const { return static_cast<int>(entries.size()); }
  std::span<const cplx> upper() const {
    return {entries.data(), entries.size() / 2};
  }
  std::span<const cplx> lower() const {
    return {entries.data() + entries.size() / 2, entries.size() / 2};
  }
  double norm() const;
  double upper_norm() const;
  double lower_norm() const;
};

// Complete orthonormal eigensystem partitioned by energy sign, with
// degeneracy groups clustered at relative tolerance tol_degen.
struct EnergySplitEigensystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns, orthonormal
  std::vector<int> positive;   // indices with E > 0
  std::vector<int> negative;   // indices with E < 0
  std::vector<std::vector<int>> degeneracy_groups;

  SpinorField state(int index) const;
};

EnergySplitEigensystem split_eigensystem(const Matrix &h,
                                         double gap_min = 1e-8,
                                         double tol_degen = 1e-9);

struct UnitarityResidual {
  double spectral = 0.0;   // ||U^dag U - 1||_2
  double frobenius = 0.0;  // ||U^dag U - 1||_F
};
UnitarityResidual check_unitary(const Matrix &u);

struct BlockDiagResidual {
  double relative_commutator = 0.0;  // ||[beta, H]|| / ||H||
  double off_block_norm = 0.0;       // ||(1 - P) H P|| + transpose block
};
BlockDiagResidual check_block_diagonal(const Matrix &h);

struct ReductionStateDetail {
  int index = 0;
  double eigenvalue = 0.0;
  int sign = 0;                    // +1 / -1
  double nullity_residual = 0.0;   // wrong-spinor norm of U psi
  int group = 0;
};

// Wave-function reduction verdict. A transformation passes when it
// nullifies the wrong spinor of every energy eigenstate AND acts on each
// degenerate eigenspace the way the Eriksen oracle does (operator-norm
// mismatch per group, which is free of eigensolver phase and basis
// arbitrariness).
struct ReductionVerdict {
  bool passed = false;
  double max_lower_residual = 0.0;   // positive-energy states
  double max_upper_residual = 0.0;   // negative-energy states
  double max_oracle_mismatch = 0.0;  // per-group ||(U - U_E) P_g||
  double threshold = 0.0;
  std::vector<ReductionStateDetail> states;
  std::vector<double> group_mismatch;
};

ReductionVerdict check_reduction(const Matrix &u, const Matrix &h,
                                 double tol_reduction, double gap_min = 1e-8,
                                 double tol_degen = 1e-9,
                                 const Matrix *oracle_u = nullptr);

// Max absolute difference of the sorted spectra.
double check_spectrum_preserved(const Matrix &h_in, const Matrix &h_out);

struct BchResidual {
  double raw = 0.0;              // ||exp(iS1) exp(iS2) - exp(i(S1+S2))||_2
  double commutator_norm = 0.0;  // (1/2) ||[S1, S2]||_2
};
BchResidual bch_residual(const Matrix &s1, const Matrix &s2);

// Least-squares slope of log(residual) against log(parameter).
double order_scaling_fit(
    const std::vector<std::pair<double, double>> &samples);

}  // namespace fwlab
