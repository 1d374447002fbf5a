#pragma once

// Every representation-changing unitary treated by the verification battery:
// the free closed form, the commuting-case closed form, the exact Eriksen
// operator, step-by-step removal of odd operators, the perturbative
// truncations for electrostatic and weak gravitational fields, the SU(2)
// supersymmetric rotation, the Eriksen-Kolsrud two-stage operator, the
// generalized Melosh pair, and the Heidenreich variant. Static fields only:
// the transformed Hamiltonian is always the plain unitary conjugation for
// exact methods, and the printed truncation for perturbative ones.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fwlab/hamiltonians.hpp"
#include "fwlab/matrix.hpp"
#include "fwlab/tolerances.hpp"

namespace fwlab {

enum class Method {
  u0_free,
  fw_commuting,
  eriksen,
  stepwise,
  perturbative_electrostatic,
  perturbative_gravity,
  su2_susy,
  ek,
  ek_to_fw,
  melosh,
  melosh_to_fw,
  heidenreich,
};

std::string to_string(Method m);

enum class Su2Sign { plus, minus };

struct Metadata {
  std::map<std::string, double> values;
  std::map<std::string, std::string> notes;
};

struct TransformResult {
  Matrix u;
  Matrix h_transformed;
  Method method = Method::eriksen;
  Metadata metadata;
};

struct StepwiseSchedule {
  int max_steps = 0;
  std::vector<Matrix> generators;  // Hermitian S_1, S_2, ...
};

struct StepwiseBuild {
  TransformResult result;
  StepwiseSchedule schedule;
};

// Free-particle closed form: U0 with H -> beta E, E = sqrt(m^2 + p^2).
TransformResult u0_free(const SplitHamiltonian &split);
TransformResult u0_free(double mass, const std::array<double, 3> &p);

// Exact closed form for commuting even/odd parts. Raises PreconditionError
// when ||[E, O]|| exceeds the scaled tolerance.
TransformResult fw_commuting(const SplitHamiltonian &split,
                             const Tolerances &tol = {});

// Exact one-step operator built from the sign operator of H.
TransformResult eriksen(const Matrix &h, double gap_min = 1e-8);
TransformResult eriksen(const SplitHamiltonian &split, double gap_min = 1e-8);

// A+ = [1/2 + (beta lambda + lambda beta)/4]^{1/2}; even, positive definite.
Matrix normalization_operator(const Matrix &h, double gap_min = 1e-8);

// Iterated odd-part removal, S_k = -i beta O_{k-1} / (2m), depth 1..3.
StepwiseBuild stepwise_fw(const SplitHamiltonian &split, int depth,
                          const Tolerances &tol = {});

// Printed truncations (linear in the coupling / the potentials, quadratic
// in p/m). Neither U nor H is exact; the truncation order is in metadata.
TransformResult perturbative_electrostatic(const ScenarioSpec &spec);
TransformResult perturbative_gravity(const ScenarioSpec &spec);

// SU(2) rotation built on the supercharges. sign = plus is the corrected
// operator satisfying the reduction condition; minus reproduces the
// original-sign operator for violation demonstrations.
TransformResult su2_susy(const SusyTriple &triple, Su2Sign sign,
                         const Tolerances &tol = {});

// Eriksen-Kolsrud two-stage operator U1 U2 with J = i gamma5 beta. Defined
// for Hamiltonians anticommuting with J (free, gravity).
TransformResult ek(const Matrix &h, double gap_min = 1e-8);
TransformResult ek(const SplitHamiltonian &split, double gap_min = 1e-8);

// The extra rotation taking the EK picture to the FW one (free modes).
Matrix ek_to_fw_correction(double mass, const std::array<double, 3> &p);

struct MeloshPieces {
  Matrix u1, u2;
  Matrix h1;  // intermediate beta(eps + gamma_z p_z), not block-diagonal
  double epsilon = 0.0;
  double energy = 0.0;
};

// Generalized Melosh transformation (transverse stage then longitudinal).
TransformResult melosh(double mass, const std::array<double, 3> &p,
                       MeloshPieces *pieces = nullptr);

enum class MeloshDirection { to_fw, to_melosh };

// Connection between the Melosh and FW pictures; undefined at zero
// transverse momentum.
Matrix melosh_to_fw_correction(double mass, const std::array<double, 3> &p,
                               MeloshDirection dir = MeloshDirection::to_fw,
                               double gap_min = 1e-8);

// EK-type closed transformation for the static-metric Hamiltonian.
TransformResult heidenreich(const SplitHamiltonian &gravity_split,
                            double gap_min = 1e-8);

}  // namespace fwlab
