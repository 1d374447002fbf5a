#include "fwlab/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fwlab/errors.hpp"

namespace fwlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int cosine_harmonic(const FieldProfile &f) {
  const double n = f.wavenumber;
  const double rounded = std::round(n);
  if (std::abs(n - rounded) > 1e-9)
    throw ConfigError("cosine profile wavenumber must be an integer harmonic "
                      "index, got " + std::to_string(n));
  return static_cast<int>(rounded);
}

int gaussian_images(double width, double length) {
  // Images beyond ~9 widths contribute below double precision.
  return 2 + static_cast<int>(std::ceil(10.0 * width / length));
}

}  // namespace

Lattice1D make_lattice(int n_points, double length) {
  if (n_points < 8 || n_points % 2 != 0)
    throw ConfigError("lattice n_points must be even and >= 8, got " +
                      std::to_string(n_points));
  if (!(length > 0.0))
    throw ConfigError("lattice length must be positive");
  Lattice1D lat;
  lat.n_points = n_points;
  lat.length = length;
  lat.spacing = length / n_points;
  lat.momenta.resize(n_points);
  for (int a = 0; a < n_points; ++a) {
    const int k = a - n_points / 2;
    lat.momenta[a] = kTwoPi * k / length;
  }
  return lat;
}

double FieldProfile::evaluate(double x, const Lattice1D &lat) const {
  switch (kind) {
    case ProfileKind::constant:
      return amplitude + offset;
    case ProfileKind::cosine: {
      const int n = cosine_harmonic(*this);
      return amplitude * std::cos(kTwoPi * n * x / lat.length) + offset;
    }
    case ProfileKind::gaussian_periodic: {
      const double w = wavenumber;
      if (!(w > 0.0))
        throw ConfigError("gaussian profile needs a positive width");
      const int kmax = gaussian_images(w, lat.length);
      double acc = 0.0;
      for (int n = -kmax; n <= kmax; ++n) {
        const double u = x - 0.5 * lat.length - n * lat.length;
        acc += std::exp(-u * u / (2.0 * w * w));
      }
      return amplitude * acc + offset;
    }
  }
  return 0.0;
}

Matrix momentum_operator(const Lattice1D &lat) {
  const int n = lat.n_points;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix f(n, n);
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a) {
      const double phase = -lat.momenta[a] * lat.x(j);
      f(a, j) = inv_sqrt_n * std::exp(cplx(0.0, phase));
    }
  // diag(momenta) * f, scaling rows
  Matrix df = f;
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a) df(a, j) *= lat.momenta[a];
  Matrix p = f.adjoint() * df;
  // Hermitize away roundoff in the double products.
  Matrix pa = p.adjoint();
  p += pa;
  p *= 0.5;
  return p;
}

Matrix diagonal_multiplier(const std::vector<double> &values) {
  const int n = static_cast<int>(values.size());
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) m(j, j) = values[j];
  return m;
}

Matrix position_multiplier(const Lattice1D &lat, const FieldProfile &f) {
  std::vector<double> v(lat.n_points);
  for (int j = 0; j < lat.n_points; ++j) v[j] = f.evaluate(lat.x(j), lat);
  return diagonal_multiplier(v);
}

Matrix profile_derivative_multiplier(const Lattice1D &lat,
                                     const FieldProfile &f, int order) {
  std::vector<double> v(lat.n_points, 0.0);
  switch (f.kind) {
    case ProfileKind::constant:
      break;
    case ProfileKind::cosine: {
      const int n = cosine_harmonic(f);
      const double k = kTwoPi * n / lat.length;
      for (int j = 0; j < lat.n_points; ++j) {
        const double arg = k * lat.x(j);
        v[j] = (order == 1) ? -f.amplitude * k * std::sin(arg)
                            : -f.amplitude * k * k * std::cos(arg);
      }
      break;
    }
    case ProfileKind::gaussian_periodic: {
      const double w = f.wavenumber;
      const int kmax = gaussian_images(w, lat.length);
      for (int j = 0; j < lat.n_points; ++j) {
        double acc = 0.0;
        for (int n = -kmax; n <= kmax; ++n) {
          const double u = lat.x(j) - 0.5 * lat.length - n * lat.length;
          const double g = std::exp(-u * u / (2.0 * w * w));
          acc += (order == 1) ? -u / (w * w) * g
                              : (u * u / (w * w * w * w) - 1.0 / (w * w)) * g;
        }
        v[j] = f.amplitude * acc;
      }
      break;
    }
  }
  return diagonal_multiplier(v);
}

}  // namespace fwlab
