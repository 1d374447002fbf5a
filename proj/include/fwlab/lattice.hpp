#pragma once

// 1-D periodic position grid with a spectral (DFT-based) momentum operator
// and diagonal multiplication operators for smooth periodic field profiles.
// Natural units: hbar = c = 1.

#include <vector>

#include "fwlab/matrix.hpp"

namespace fwlab {

struct Lattice1D {
  int n_points = 0;              // even, >= 8
  double length = 0.0;           // L > 0
  double spacing = 0.0;          // L / N
  std::vector<double> momenta;   // 2 pi k / L, k = -N/2 .. N/2-1

  double x(int j) const { return spacing * j; }
};

Lattice1D make_lattice(int n_points, double length);

enum class ProfileKind { constant, cosine, gaussian_periodic };

// Smooth L-periodic scalar profile. cosine uses an integer number of
// periods; the gaussian is periodized by summing images.
struct FieldProfile {
  ProfileKind kind = ProfileKind::constant;
  double amplitude = 0.0;
  double wavenumber = 1.0;  // cosine: integer harmonic index; gaussian: width
  double offset = 0.0;

  double evaluate(double x, const Lattice1D &lat) const;
};

// N x N Hermitian momentum operator, diagonal in the discrete Fourier basis
// with the lattice momenta as eigenvalues (p = -i d/dx).
Matrix momentum_operator(const Lattice1D &lat);

// Real diagonal N x N matrix with f(x_j) on the diagonal.
Matrix position_multiplier(const Lattice1D &lat, const FieldProfile &f);
Matrix diagonal_multiplier(const std::vector<double> &values);

// Pointwise derivative of the profile on the grid, evaluated spectrally
// (exact for band-limited profiles). Returned as a diagonal multiplier.
Matrix profile_derivative_multiplier(const Lattice1D &lat,
                                     const FieldProfile &f, int order = 1);

}  // namespace fwlab
