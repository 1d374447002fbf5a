#pragma once

namespace fwlab {

// Numerical thresholds, in natural units. The tight values apply to single
// 4x4 momentum modes; lattice-sized problems get one order of slack for
// eigensolver conditioning.
struct Tolerances {
  double gap_min = 1e-8;        // forbidden band around zero energy
  double herm = 1e-10;          // Hermiticity residual
  double unitary = 1e-10;       // ||U^dag U - 1||
  double blockdiag = 1e-10;     // ||[beta, H]|| / ||H||
  double reduction = 1e-10;     // reduction-condition residuals
  double degen = 1e-9;          // relative eigenvalue clustering
  double commute_scale = 1e-10; // scale factor for the [E,O] precondition

  static Tolerances for_dim(int dim) {
    Tolerances t;
    if (dim > 4) {
      t.herm = 1e-8;
      t.unitary = 1e-8;
      t.blockdiag = 1e-8;
      t.reduction = 1e-8;
    }
    return t;
  }
};

}  // namespace fwlab
