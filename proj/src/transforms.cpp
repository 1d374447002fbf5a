#include "fwlab/transforms.hpp"

#include <cmath>
#include <string>

#include "fwlab/eigh.hpp"
#include "fwlab/errors.hpp"

namespace fwlab {

namespace {

const cplx I(0.0, 1.0);

Matrix lift_for(const Matrix &d4, int dim) { return lift_spinor(d4, dim / 4); }

// U H U^dag with the roundoff hermitized away.
Matrix conjugate_herm(const Matrix &u, const Matrix &h) {
  Matrix x = u * h * u.adjoint();
  Matrix xa = x.adjoint();
  x += xa;
  x *= 0.5;
  x.set_role(Role::hamiltonian);
  return x;
}

// Symmetrized copy of a product of commuting Hermitian factors.
Matrix hermitized(const Matrix &x) {
  Matrix r = x;
  Matrix ra = x.adjoint();
  r += ra;
  r *= 0.5;
  return r;
}

// Closed form U = sqrt((E+m)/2E)(1 + beta O /(E+m)), E = sqrt(m^2 + O^2).
// Exact whenever the even part commutes with O.
TransformResult closed_form_fw(const SplitHamiltonian &split, Method method) {
  const int dim = split.dim();
  const Matrix beta = lift_for(dirac_matrices().beta, dim);
  const Matrix &o = split.odd_part;
  const double m = split.mass;

  Matrix m2_o2 = o * o;
  for (int i = 0; i < dim; ++i) m2_o2(i, i) += m * m;
  EighResult es = eigh(hermitized(m2_o2));

  Matrix c = spectral_apply(es, [m](double w) {
    const double e = std::sqrt(w);
    return std::sqrt((e + m) / (2.0 * e));
  });
  Matrix ainv = spectral_apply(
      es, [m](double w) { return 1.0 / (std::sqrt(w) + m); });

  Matrix u = Matrix::identity(dim) + beta * (o * ainv);
  u = c * u;
  u.set_role(Role::unitary);

  TransformResult r;
  r.method = method;
  r.u = u;
  r.h_transformed = conjugate_herm(u, split.h_full);
  r.metadata.values["mass"] = m;
  return r;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::u0_free: return "u0-free";
    case Method::fw_commuting: return "fw-commuting";
    case Method::eriksen: return "eriksen";
    case Method::stepwise: return "stepwise";
    case Method::perturbative_electrostatic:
      return "perturbative-electrostatic";
    case Method::perturbative_gravity: return "perturbative-gravity";
    case Method::su2_susy: return "su2-susy";
    case Method::ek: return "ek";
    case Method::ek_to_fw: return "ek-to-fw";
    case Method::melosh: return "melosh";
    case Method::melosh_to_fw: return "melosh-to-fw";
    case Method::heidenreich: return "heidenreich";
  }
  return "?";
}

TransformResult u0_free(const SplitHamiltonian &split) {
  const double even_norm = split.even_part.frobenius_norm();
  if (even_norm > 1e-12 * std::max(1.0, split.h_full.frobenius_norm()))
    throw PreconditionError("u0-free expects a free Hamiltonian (even part "
                            "norm " + std::to_string(even_norm) + ")",
                            even_norm);
  return closed_form_fw(split, Method::u0_free);
}

TransformResult u0_free(double mass, const std::array<double, 3> &p) {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::free;
  spec.backend = BackendKind::momentum_mode;
  spec.mass = mass;
  spec.momentum = p;
  return u0_free(build_free(spec));
}

TransformResult fw_commuting(const SplitHamiltonian &split,
                             const Tolerances &tol) {
  const double comm =
      spectral_norm(commutator(split.even_part, split.odd_part));
  const double scale =
      std::max(1.0, spectral_norm(split.even_part) *
                        spectral_norm(split.odd_part));
  if (comm > tol.commute_scale * scale)
    throw PreconditionError(
        "commuting-case precondition violated: ||[E,O]|| = " +
            std::to_string(comm),
        comm);
  TransformResult r = closed_form_fw(split, Method::fw_commuting);
  r.metadata.values["commutator_norm"] = comm;
  return r;
}

namespace {

TransformResult eriksen_core(const Matrix &h, const Matrix &beta,
                             double gap_min) {
  const int dim = h.rows();
  EighResult es = eigh(h);
  Matrix lambda = sign_operator(es, gap_min);

  Matrix s = beta * lambda + lambda * beta;
  Matrix t = hermitized(s);
  for (int i = 0; i < dim; ++i) t(i, i) += 2.0;

  EighResult est = eigh(t);
  if (est.values.front() < gap_min)
    throw PreconditionError(
        "Eriksen degeneracy: 2 + beta lambda + lambda beta has eigenvalue " +
            std::to_string(est.values.front()),
        est.values.front());
  Matrix inv_sqrt_t =
      spectral_apply(est, [](double w) { return 1.0 / std::sqrt(w); });

  Matrix u = inv_sqrt_t * (Matrix::identity(dim) + beta * lambda);
  u.set_role(Role::unitary);

  TransformResult r;
  r.method = Method::eriksen;
  r.u = u;
  r.h_transformed = conjugate_herm(u, h);
  return r;
}

}  // namespace

TransformResult eriksen(const Matrix &h, double gap_min) {
  return eriksen_core(h, lift_for(dirac_matrices().beta, h.rows()), gap_min);
}

TransformResult eriksen(const SplitHamiltonian &split, double gap_min) {
  return eriksen(split.h_full, gap_min);
}

Matrix normalization_operator(const Matrix &h, double gap_min) {
  const int dim = h.rows();
  const Matrix beta = lift_for(dirac_matrices().beta, dim);
  Matrix lambda = sign_operator(h, gap_min);
  Matrix s = hermitized(beta * lambda + lambda * beta);
  s *= 0.25;
  for (int i = 0; i < dim; ++i) s(i, i) += 0.5;
  Matrix a = mat_sqrt_psd(s, gap_min);
  a.set_role(Role::normalization);
  return a;
}

StepwiseBuild stepwise_fw(const SplitHamiltonian &split, int depth,
                          const Tolerances &tol) {
  if (depth < 1 || depth > 3)
    throw ConfigError("stepwise depth must be 1, 2 or 3");
  const int dim = split.dim();
  const Matrix beta = lift_for(dirac_matrices().beta, dim);
  const double m = split.mass;

  Matrix h = split.h_full;
  Matrix u = Matrix::identity(dim);
  StepwiseBuild out;
  out.schedule.max_steps = depth;

  for (int k = 0; k < depth; ++k) {
    Matrix odd = 0.5 * (h - beta * h * beta);
    Matrix s = (I * (-1.0 / (2.0 * m))) * (beta * odd);
    s = hermitized(s);
    s.set_role(Role::exponent_generator);
    Matrix uk = mat_exp(s, tol.herm);
    h = conjugate_herm(uk, h);
    u = uk * u;
    out.schedule.generators.push_back(s);
    out.result.metadata.values["odd_norm_after_step_" + std::to_string(k + 1)] =
        spectral_norm(0.5 * (h - beta * h * beta));
  }

  u.set_role(Role::unitary);
  out.result.method = Method::stepwise;
  out.result.u = u;
  out.result.h_transformed = h;
  out.result.metadata.values["depth"] = depth;
  out.result.metadata.notes["generator_recipe"] = "S_k = -i beta O_{k-1}/(2m)";
  return out;
}

TransformResult perturbative_electrostatic(const ScenarioSpec &spec) {
  if (spec.kind != ScenarioKind::electrostatic)
    throw ConfigError("perturbative-electrostatic needs an electrostatic "
                      "scenario");
  if (spec.backend != BackendKind::lattice || !spec.lattice)
    throw ConfigError("perturbative-electrostatic needs the lattice backend");
  const Lattice1D &lat = *spec.lattice;
  auto it = spec.profiles.find("A0");
  if (it == spec.profiles.end())
    throw ConfigError("scenario is missing the 'A0' field profile");

  const DiracMatrixSet &d = dirac_matrices();
  const double m = spec.mass;
  const double e = spec.coupling;
  const int n = lat.n_points;
  const int dim = 4 * n;

  Matrix p = momentum_operator(lat);
  Matrix p2 = p * p;
  Matrix a0 = position_multiplier(lat, it->second);
  Matrix da0 = profile_derivative_multiplier(lat, it->second, 1);
  Matrix i4 = Matrix::identity(4);
  Matrix beta_alpha = d.beta * d.alpha_x;

  // U = 1 + beta a.p/2m - p^2/8m^2 - (i e /4m^2) a.A0'
  //       - (i e beta/16m^3) [a.p, a.A0']   with [a.p, a.A0'] = [p, A0'].
  Matrix comm = p * da0 - da0 * p;
  Matrix u = Matrix::identity(dim);
  u += (1.0 / (2.0 * m)) * kron_spinor(beta_alpha, p);
  u -= (1.0 / (8.0 * m * m)) * kron_spinor(i4, p2);
  u -= (I * e / (4.0 * m * m)) * kron_spinor(d.alpha_x, da0);
  u -= (I * e / (16.0 * m * m * m)) * kron_spinor(d.beta, comm);
  u.set_role(Role::unitary);

  // H = beta (m + p^2/2m) + e A0 + (i e / 8 m^2) [p, A0']
  Matrix e_op = (1.0 / (2.0 * m)) * p2;
  for (int i = 0; i < n; ++i) e_op(i, i) += m;
  Matrix h = kron_spinor(d.beta, e_op);
  h += e * kron_spinor(i4, a0);
  h += (I * e / (8.0 * m * m)) * kron_spinor(i4, comm);
  h = hermitized(h);
  h.set_role(Role::hamiltonian);

  TransformResult r;
  r.method = Method::perturbative_electrostatic;
  r.u = u;
  r.h_transformed = h;
  r.metadata.notes["truncation"] = "linear in e, quadratic in p/m";
  r.metadata.notes["h_source"] = "printed truncation, not a conjugation";
  r.metadata.values["coupling"] = e;
  return r;
}

TransformResult perturbative_gravity(const ScenarioSpec &spec) {
  if (spec.kind != ScenarioKind::gravity)
    throw ConfigError("perturbative-gravity needs a gravity scenario");
  if (spec.backend != BackendKind::lattice || !spec.lattice)
    throw ConfigError("perturbative-gravity needs the lattice backend");
  const Lattice1D &lat = *spec.lattice;
  auto vit = spec.profiles.find("V");
  auto fit = spec.profiles.find("F");
  if (vit == spec.profiles.end() || fit == spec.profiles.end())
    throw ConfigError("gravity scenario needs 'V' and 'F' field profiles");

  const DiracMatrixSet &d = dirac_matrices();
  const double m = spec.mass;
  const int n = lat.n_points;
  const int dim = 4 * n;

  Matrix p = momentum_operator(lat);
  Matrix p2 = p * p;
  Matrix vm = position_multiplier(lat, vit->second);
  Matrix fm = position_multiplier(lat, fit->second);
  Matrix id_n = Matrix::identity(n);
  Matrix v1 = vm - id_n;  // V - 1
  Matrix f1 = fm - id_n;  // F - 1
  Matrix g = fm - vm;     // F - V
  Matrix ddv = profile_derivative_multiplier(lat, vit->second, 2);
  Matrix ddf = profile_derivative_multiplier(lat, fit->second, 2);
  Matrix i4 = Matrix::identity(4);
  Matrix beta_alpha = d.beta * d.alpha_x;

  // U = 1 + beta a.p/2m - p^2/8m^2 + (beta/4m){F-V, a.p}
  //       - (1/16m^2)[(F-V)p^2 + 2 a.p (F-V) a.p + p^2 (F-V)]
  Matrix u = Matrix::identity(dim);
  u += (1.0 / (2.0 * m)) * kron_spinor(beta_alpha, p);
  u -= (1.0 / (8.0 * m * m)) * kron_spinor(i4, p2);
  u += (1.0 / (4.0 * m)) * kron_spinor(beta_alpha, g * p + p * g);
  u -= (1.0 / (16.0 * m * m)) *
       kron_spinor(i4, g * p2 + 2.0 * (p * g * p) + p2 * g);
  u.set_role(Role::unitary);

  // H = beta [ m + p^2/2m + m(V-1) - {p^2, V-1}/4m + {p^2, F-1}/2m
  //            - V''/8m + F''/4m ]           (1-D: the Sigma.(grad x p)
  //            terms vanish, divergences become second derivatives)
  Matrix e_op = (1.0 / (2.0 * m)) * p2;
  for (int i = 0; i < n; ++i) e_op(i, i) += m;
  e_op += m * v1;
  e_op -= (1.0 / (4.0 * m)) * (p2 * v1 + v1 * p2);
  e_op += (1.0 / (2.0 * m)) * (p2 * f1 + f1 * p2);
  e_op -= (1.0 / (8.0 * m)) * ddv;
  e_op += (1.0 / (4.0 * m)) * ddf;
  Matrix h = kron_spinor(d.beta, e_op);
  h = hermitized(h);
  h.set_role(Role::hamiltonian);

  TransformResult r;
  r.method = Method::perturbative_gravity;
  r.u = u;
  r.h_transformed = h;
  r.metadata.notes["truncation"] =
      "first order in (V-1), (F-1); quadratic in p/m";
  r.metadata.notes["h_source"] = "printed truncation, not a conjugation";
  return r;
}

TransformResult su2_susy(const SusyTriple &triple, Su2Sign sign,
                         const Tolerances &tol) {
  const int dim = triple.q.rows();
  const double scale = std::max(1.0, triple.q.frobenius_norm());

  const double q2 = (triple.q * triple.q).frobenius_norm();
  const double anti_q =
      anticommutator(triple.q, triple.lambda_even).frobenius_norm();
  const double anti_qd =
      anticommutator(triple.q_dag, triple.lambda_even).frobenius_norm();
  if (q2 > 1e-12 * scale * scale || anti_q > tol.herm * scale ||
      anti_qd > tol.herm * scale)
    throw PreconditionError(
        "SUSY violation: supercharge structure does not close (||Q^2|| = " +
            std::to_string(q2) + ")",
        std::max(q2, std::max(anti_q, anti_qd)));

  Matrix o = triple.q + triple.q_dag;
  Matrix t = hermitized(triple.q * triple.q_dag + triple.q_dag * triple.q);
  Matrix lam2 = hermitized(triple.lambda_even * triple.lambda_even);

  Matrix abs_lam = mat_sqrt_psd(lam2, tol.gap_min);
  Matrix etot = mat_sqrt_psd(t + lam2, tol.gap_min);
  Matrix sgn_lam = sign_operator(triple.lambda_even, tol.gap_min);

  // cos(theta) = |Lambda| / E; the two factors commute.
  Matrix cos_t = hermitized(abs_lam * mat_inv_herm(etot, tol.gap_min));
  Matrix half_one_plus = hermitized(0.5 * (Matrix::identity(dim) + cos_t));
  Matrix p_even = herm_fun(
      half_one_plus, [](double w) { return std::sqrt(std::max(w, 0.0)); });

  // sin(theta/2)/sqrt({Q,Qdag}) in the regular form [2 E (E + |Lambda|)]^{-1/2}.
  Matrix g = mat_inv_sqrt_psd(hermitized(2.0 * (t + lam2 + etot * abs_lam)),
                              tol.gap_min);

  Matrix rot = sgn_lam * (o * g);
  Matrix u = (sign == Su2Sign::plus) ? p_even + rot : p_even - rot;
  u.set_role(Role::unitary);

  Matrix h = triple.lambda_even + o;

  TransformResult r;
  r.method = Method::su2_susy;
  r.u = u;
  r.h_transformed = conjugate_herm(u, h);
  r.metadata.notes["sign"] = sign == Su2Sign::plus ? "plus" : "minus";
  EighResult esc = eigh(cos_t);
  r.metadata.values["theta_min"] = std::acos(std::min(1.0, esc.values.back()));
  r.metadata.values["theta_max"] =
      std::acos(std::max(-1.0, esc.values.front()));
  return r;
}

namespace {

TransformResult ek_core(const Matrix &h, double gap_min) {
  const int dim = h.rows();
  const DiracMatrixSet &d = dirac_matrices();
  const Matrix beta = lift_for(d.beta, dim);
  const Matrix j = lift_for(d.j_matrix, dim);

  Matrix lambda = sign_operator(h, gap_min);
  const double anti = anticommutator(j, lambda).frobenius_norm();
  if (anti > 1e-8 * std::sqrt(static_cast<double>(dim)))
    throw PreconditionError(
        "EK operator requires {J, lambda} = 0; residual " +
            std::to_string(anti),
        anti);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix u1 = inv_sqrt2 * (Matrix::identity(dim) + j * lambda);
  Matrix u2 = inv_sqrt2 * (Matrix::identity(dim) + beta * j);
  Matrix u = u1 * u2;
  u.set_role(Role::unitary);

  TransformResult r;
  r.method = Method::ek;
  r.u = u;
  r.h_transformed = conjugate_herm(u, h);
  return r;
}

}  // namespace

TransformResult ek(const Matrix &h, double gap_min) {
  return ek_core(h, gap_min);
}

TransformResult ek(const SplitHamiltonian &split, double gap_min) {
  return ek_core(split.h_full, gap_min);
}

Matrix ek_to_fw_correction(double mass, const std::array<double, 3> &p) {
  const DiracMatrixSet &d = dirac_matrices();
  const double p2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const double e = std::sqrt(mass * mass + p2);
  const double c = std::sqrt((e + mass) / (2.0 * e));

  Matrix sigma_p(4, 4);
  for (int k = 0; k < 3; ++k) sigma_p += p[k] * d.sigma_big[k];
  Matrix u = Matrix::identity(4);
  u -= (I / (e + mass)) * (d.beta * sigma_p);
  u = cplx(c) * u;
  u.set_role(Role::unitary);
  return u;
}

TransformResult melosh(double mass, const std::array<double, 3> &p,
                       MeloshPieces *pieces) {
  const DiracMatrixSet &d = dirac_matrices();
  const double pperp2 = p[0] * p[0] + p[1] * p[1];
  const double eps = std::sqrt(mass * mass + pperp2);
  const double e = std::sqrt(eps * eps + p[2] * p[2]);

  Matrix gp = p[0] * d.gamma[0] + p[1] * d.gamma[1];
  Matrix u1 = Matrix::identity(4);
  for (int i = 0; i < 4; ++i) u1(i, i) = eps + mass;
  u1 += gp;
  u1 *= 1.0 / std::sqrt(2.0 * eps * (eps + mass));

  Matrix u2 = Matrix(4, 4);
  for (int i = 0; i < 4; ++i) u2(i, i) = e + eps;
  u2 += p[2] * d.gamma[2];
  u2 *= 1.0 / std::sqrt(2.0 * e * (e + eps));

  Matrix u = u2 * u1;
  u.set_role(Role::unitary);

  ScenarioSpec spec;
  spec.kind = ScenarioKind::free;
  spec.backend = BackendKind::momentum_mode;
  spec.mass = mass;
  spec.momentum = p;
  Matrix h_d = build_free(spec).h_full;

  if (pieces) {
    pieces->u1 = u1;
    pieces->u2 = u2;
    pieces->h1 = conjugate_herm(u1, h_d);
    pieces->epsilon = eps;
    pieces->energy = e;
  }

  TransformResult r;
  r.method = Method::melosh;
  r.u = u;
  r.h_transformed = conjugate_herm(u, h_d);
  r.metadata.values["epsilon"] = eps;
  r.metadata.values["energy"] = e;
  return r;
}

Matrix melosh_to_fw_correction(double mass, const std::array<double, 3> &p,
                               MeloshDirection dir, double gap_min) {
  const DiracMatrixSet &d = dirac_matrices();
  const double pperp = std::hypot(p[0], p[1]);
  if (pperp < gap_min)
    throw PreconditionError(
        "transverse momentum degenerate: R is undefined at |p_perp| = " +
            std::to_string(pperp),
        pperp);
  const double eps = std::sqrt(mass * mass + pperp * pperp);
  const double e = std::sqrt(eps * eps + p[2] * p[2]);

  Matrix r_op = (1.0 / pperp) *
                (p[0] * d.sigma_big[1] - p[1] * d.sigma_big[0]);
  const double c1 = std::sqrt(std::max(0.0, (e + eps) * (eps + mass)));
  const double c2 = std::sqrt(std::max(0.0, (e - eps) * (eps - mass)));
  const double den = std::sqrt(2.0 * eps * (e + mass));

  const cplx phase = dir == MeloshDirection::to_fw ? I : -I;
  Matrix u = Matrix::identity(4);
  u *= cplx(c1 / den);
  u += (phase * (c2 / den)) * r_op;
  u.set_role(Role::unitary);
  return u;
}

TransformResult heidenreich(const SplitHamiltonian &gravity_split,
                            double gap_min) {
  const int dim = gravity_split.dim();
  const DiracMatrixSet &d = dirac_matrices();
  const Matrix beta = lift_for(d.beta, dim);
  const Matrix j = lift_for(d.j_matrix, dim);
  const Matrix gamma5 = lift_for(d.gamma5, dim);

  // Q = (1/2){a.p, F} + i gamma5 beta m V; the odd part of the Hamiltonian
  // is the anticommutator term and beta m V = mass + even part.
  Matrix mv = beta * (gravity_split.mass_term + gravity_split.even_part);
  Matrix q = gravity_split.odd_part + j * mv;
  q = hermitized(q);

  EighResult esq = eigh(q);
  for (double w : esq.values)
    if (w * w < gap_min)
      throw SpectralGapError(
          "heidenreich: Q^2 not positive definite above the gap", w);
  Matrix sgn_q = sign_operator(esq, 0.0);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix ua = inv_sqrt2 * (Matrix::identity(dim) + beta * sgn_q);
  Matrix ub = inv_sqrt2 * (Matrix::identity(dim) - I * gamma5);
  Matrix u = ua * ub;
  u.set_role(Role::unitary);

  TransformResult r;
  r.method = Method::heidenreich;
  r.u = u;
  r.h_transformed = conjugate_herm(u, gravity_split.h_full);
  return r;
}

}  // namespace fwlab
