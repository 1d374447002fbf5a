#pragma once

// Scenario Hamiltonians H = beta m + E + O on either backend (single 4x4
// momentum mode or a 4N lattice), with the even/odd split and, for the
// supersymmetric fields, the supercharge structure.

#include <array>
#include <map>
#include <optional>
#include <string>

#include "fwlab/lattice.hpp"
#include "fwlab/matrix.hpp"
#include "fwlab/spinor_algebra.hpp"

namespace fwlab {

enum class ScenarioKind { free, electrostatic, susy_fields, gravity };
enum class BackendKind { momentum_mode, lattice };

std::string to_string(ScenarioKind k);
std::string to_string(BackendKind b);
ScenarioKind scenario_from_string(const std::string &s);
BackendKind backend_from_string(const std::string &s);

// Declarative description of one physical setup.
// Field names: A0 (electrostatic), Ax / eps_x / A5 / eps5 (susy fields),
// V / F (gravity metric functions).
struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::free;
  BackendKind backend = BackendKind::momentum_mode;
  double mass = 1.0;
  double coupling = 0.1;
  std::array<double, 3> momentum{0.0, 0.0, 0.0};
  std::map<std::string, FieldProfile> profiles;
  std::optional<Lattice1D> lattice;
  std::string preset;   // "dirac-oscillator" fills eps_x = m w x (periodized)
  double omega = 0.1;   // oscillator frequency for the preset
};

// H = beta m + E + O with beta E = E beta and beta O = -O beta, all parts
// individually Hermitian and summing to h_full exactly.
struct SplitHamiltonian {
  Matrix h_full;
  Matrix even_part;
  Matrix odd_part;
  Matrix mass_term;
  double mass = 0.0;
  BackendKind backend = BackendKind::momentum_mode;
  std::optional<Lattice1D> lattice;

  int dim() const { return h_full.rows(); }
  int n_modes() const { return dim() / 4; }
};

// Nilpotent supercharges with H = Lambda + Q + Q^dag, Lambda = beta m.
struct SusyTriple {
  Matrix q;            // strictly lower-block
  Matrix q_dag;        // strictly upper-block
  Matrix lambda_even;  // beta m
  Matrix m_block;      // 2N x 2N operator M
};

struct SusyBuild {
  SplitHamiltonian split;
  SusyTriple triple;
};

SplitHamiltonian build_free(const ScenarioSpec &spec);
SplitHamiltonian build_electrostatic(const ScenarioSpec &spec);
SusyBuild build_susy(const ScenarioSpec &spec);
SplitHamiltonian build_gravity(const ScenarioSpec &spec);

struct ScenarioBuild {
  SplitHamiltonian split;
  std::optional<SusyTriple> triple;
};

ScenarioBuild build_scenario(const ScenarioSpec &spec);

// kron with the identity on n lattice points (n == 1 returns d4 itself).
Matrix lift_spinor(const Matrix &d4, int n);

}  // namespace fwlab
