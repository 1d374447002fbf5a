#include "fwlab/hamiltonians.hpp"

#include <cmath>
#include <numbers>

#include "fwlab/errors.hpp"

namespace fwlab {

namespace {

const cplx I(0.0, 1.0);

const Lattice1D &require_lattice(const ScenarioSpec &spec, const char *who) {
  if (spec.backend != BackendKind::lattice || !spec.lattice)
    throw ConfigError(std::string(who) + " requires the lattice backend");
  return *spec.lattice;
}

const FieldProfile &require_profile(const ScenarioSpec &spec,
                                    const std::string &name) {
  auto it = spec.profiles.find(name);
  if (it == spec.profiles.end())
    throw ConfigError("scenario is missing the '" + name + "' field profile");
  return it->second;
}

FieldProfile profile_or_zero(const ScenarioSpec &spec,
                             const std::string &name) {
  auto it = spec.profiles.find(name);
  if (it != spec.profiles.end()) return it->second;
  return FieldProfile{};  // constant zero
}

void require_positive_mass(const ScenarioSpec &spec) {
  if (!(spec.mass > 0.0)) throw ConfigError("mass must be positive");
}

}  // namespace

std::string to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::free: return "free";
    case ScenarioKind::electrostatic: return "electrostatic";
    case ScenarioKind::susy_fields: return "susy-fields";
    case ScenarioKind::gravity: return "gravity";
  }
  return "?";
}

std::string to_string(BackendKind b) {
  return b == BackendKind::momentum_mode ? "momentum-mode" : "lattice";
}

ScenarioKind scenario_from_string(const std::string &s) {
  if (s == "free") return ScenarioKind::free;
  if (s == "electrostatic") return ScenarioKind::electrostatic;
  if (s == "susy-fields") return ScenarioKind::susy_fields;
  if (s == "gravity") return ScenarioKind::gravity;
  throw ConfigError("unknown scenario kind '" + s + "'");
}

BackendKind backend_from_string(const std::string &s) {
  if (s == "momentum-mode") return BackendKind::momentum_mode;
  if (s == "lattice") return BackendKind::lattice;
  throw ConfigError("unknown backend '" + s + "'");
}

Matrix lift_spinor(const Matrix &d4, int n) {
  if (n <= 1) return d4;
  return kron_spinor(d4, Matrix::identity(n));
}

SplitHamiltonian build_free(const ScenarioSpec &spec) {
  require_positive_mass(spec);
  const DiracMatrixSet &d = dirac_matrices();
  SplitHamiltonian s;
  s.mass = spec.mass;
  s.backend = spec.backend;

  if (spec.backend == BackendKind::momentum_mode) {
    s.mass_term = spec.mass * d.beta;
    s.odd_part = Matrix(4, 4);
    for (int k = 0; k < 3; ++k) s.odd_part += spec.momentum[k] * d.alpha[k];
    s.even_part = Matrix(4, 4);
  } else {
    const Lattice1D &lat = require_lattice(spec, "free lattice scenario");
    s.lattice = lat;
    const int n = lat.n_points;
    Matrix p = momentum_operator(lat);
    s.mass_term = spec.mass * lift_spinor(d.beta, n);
    s.odd_part = kron_spinor(d.alpha_x, p);
    s.even_part = Matrix(4 * n, 4 * n);
  }
  s.h_full = s.mass_term + s.even_part + s.odd_part;
  s.h_full.set_role(Role::hamiltonian);
  return s;
}

SplitHamiltonian build_electrostatic(const ScenarioSpec &spec) {
  require_positive_mass(spec);
  const Lattice1D &lat = require_lattice(spec, "electrostatic scenario");
  const FieldProfile &a0 = require_profile(spec, "A0");
  const DiracMatrixSet &d = dirac_matrices();
  const int n = lat.n_points;

  SplitHamiltonian s;
  s.mass = spec.mass;
  s.backend = BackendKind::lattice;
  s.lattice = lat;
  s.mass_term = spec.mass * lift_spinor(d.beta, n);
  s.odd_part = kron_spinor(d.alpha_x, momentum_operator(lat));
  s.even_part = spec.coupling *
                kron_spinor(Matrix::identity(4), position_multiplier(lat, a0));
  s.h_full = s.mass_term + s.even_part + s.odd_part;
  s.h_full.set_role(Role::hamiltonian);
  return s;
}

SusyBuild build_susy(const ScenarioSpec &spec) {
  require_positive_mass(spec);
  const Lattice1D &lat = require_lattice(spec, "susy-fields scenario");
  const DiracMatrixSet &d = dirac_matrices();
  const int n = lat.n_points;

  FieldProfile ax = profile_or_zero(spec, "Ax");
  FieldProfile a5 = profile_or_zero(spec, "A5");
  FieldProfile eps5 = profile_or_zero(spec, "eps5");

  Matrix eps_x_mult(n, n);
  if (spec.preset == "dirac-oscillator") {
    // eps_x = m w x, periodized as the smooth odd function
    // (L / 2 pi) sin(2 pi x / L) which reduces to x near the origin.
    std::vector<double> v(n);
    const double k = 2.0 * std::numbers::pi / lat.length;
    for (int j = 0; j < n; ++j)
      v[j] = spec.mass * spec.omega * std::sin(k * lat.x(j)) / k;
    eps_x_mult = diagonal_multiplier(v);
  } else if (!spec.preset.empty()) {
    throw ConfigError("unknown susy preset '" + spec.preset + "'");
  } else {
    eps_x_mult = position_multiplier(lat, profile_or_zero(spec, "eps_x"));
  }

  // M = sigma_x (p + Ax - i eps_x) - i (A5 - i eps5), on 2N components.
  Matrix p = momentum_operator(lat);
  Matrix sx = d.pauli[0];
  Matrix i2 = Matrix::identity(2);
  Matrix m_block = kron_spinor(sx, p + position_multiplier(lat, ax)) +
                   (-I) * kron_spinor(sx, eps_x_mult) +
                   (-I) * kron_spinor(i2, position_multiplier(lat, a5)) +
                   (-1.0) * kron_spinor(i2, position_multiplier(lat, eps5));

  const int half = 2 * n;
  Matrix q(4 * n, 4 * n);
  for (int j = 0; j < half; ++j)
    for (int i = 0; i < half; ++i) q(half + i, j) = m_block(i, j);
  Matrix q_dag = q.adjoint();

  SusyBuild out;
  out.triple.q = q;
  out.triple.q_dag = q_dag;
  out.triple.lambda_even = spec.mass * lift_spinor(d.beta, n);
  out.triple.m_block = m_block;

  SplitHamiltonian &s = out.split;
  s.mass = spec.mass;
  s.backend = BackendKind::lattice;
  s.lattice = lat;
  s.mass_term = out.triple.lambda_even;
  s.odd_part = q + q_dag;
  s.even_part = Matrix(4 * n, 4 * n);
  s.h_full = s.mass_term + s.odd_part;
  s.h_full.set_role(Role::hamiltonian);
  return out;
}

SplitHamiltonian build_gravity(const ScenarioSpec &spec) {
  require_positive_mass(spec);
  const Lattice1D &lat = require_lattice(spec, "gravity scenario");
  const FieldProfile &vp = require_profile(spec, "V");
  const FieldProfile &fp = require_profile(spec, "F");
  const DiracMatrixSet &d = dirac_matrices();
  const int n = lat.n_points;

  Matrix vm = position_multiplier(lat, vp);
  Matrix fm = position_multiplier(lat, fp);
  for (int j = 0; j < n; ++j) {
    if (!(vm(j, j).real() > 0.0))
      throw ConfigError("gravity metric function V must be positive on the "
                        "whole grid");
    if (!(fm(j, j).real() > 0.0))
      throw ConfigError("gravity metric function F must be positive on the "
                        "whole grid");
  }

  SplitHamiltonian s;
  s.mass = spec.mass;
  s.backend = BackendKind::lattice;
  s.lattice = lat;
  s.mass_term = spec.mass * lift_spinor(d.beta, n);
  // even part beta m (V - 1): the expansion variable of the weak-field
  // formulas, so the mass term stays exactly beta m.
  Matrix v_minus_1 = vm - Matrix::identity(n);
  s.even_part = spec.mass * kron_spinor(d.beta, v_minus_1);
  Matrix x = kron_spinor(d.alpha_x, momentum_operator(lat));
  Matrix f_lift = kron_spinor(Matrix::identity(4), fm);
  s.odd_part = 0.5 * (x * f_lift + f_lift * x);
  s.h_full = s.mass_term + s.even_part + s.odd_part;
  s.h_full.set_role(Role::hamiltonian);
  return s;
}

ScenarioBuild build_scenario(const ScenarioSpec &spec) {
  ScenarioBuild out;
  switch (spec.kind) {
    case ScenarioKind::free:
      out.split = build_free(spec);
      break;
    case ScenarioKind::electrostatic:
      out.split = build_electrostatic(spec);
      break;
    case ScenarioKind::susy_fields: {
      SusyBuild sb = build_susy(spec);
      out.split = sb.split;
      out.triple = sb.triple;
      break;
    }
    case ScenarioKind::gravity:
      out.split = build_gravity(spec);
      break;
  }
  return out;
}

}  // namespace fwlab
