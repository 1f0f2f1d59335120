#pragma once

// Closed-form evolution of a Gaussian probe component in a linear transverse
// potential U(x) = offset + slope * x. With force F = -slope the solution is a
// freely spreading Gaussian riding a ballistic center,
//
//   E(x, t) = (pi b^2)^{-1/4} (b^2 / w)^{1/2} exp(-(x - x_c)^2 / (2 w))
//             * exp(i [F t x - F^2 t^3 / (6m) - offset t]),
//   w = b^2 + i t/m,   x_c = a + F t^2 / (2m).
//
// The z-dependence exp(-(z - ct)^2 / 2b^2) is pure advection and is carried
// only as z_center.

#include <sglight/derived.hpp>
#include <sglight/effective_hamiltonian.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

namespace sglight {

struct GaussianPacketState {
  int component = 1;
  double center = 0.0;
  cplx complex_width{1.0, 0.0};  // b^2 + i t/m
  double phase_linear = 0.0;     // coefficient of x in the phase
  double phase_const = 0.0;
  double z_center = 0.0;
  double initial_width = 1.0;    // b

  /// 1/e half-width of |E|^2: w^2 = (b^4 m^2 + t^2) / (b^2 m^2).
  double intensity_width() const { return std::abs(complex_width) / initial_width; }

  /// Standard deviation of |E|^2 (what the spectral observables report).
  double rms_width() const { return intensity_width() / std::numbers::sqrt2; }

  double peak_intensity() const {
    return initial_width / (std::sqrt(std::numbers::pi) * std::abs(complex_width));
  }

  cplx amplitude(double x) const {
    const double b2 = initial_width * initial_width;
    const cplx pref = std::pow(std::numbers::pi * b2, -0.25) * std::sqrt(b2 / complex_width);
    const double dx = x - center;
    const cplx envelope = std::exp(-dx * dx / (2.0 * complex_width));
    return pref * envelope * std::polar(1.0, phase_linear * x + phase_const);
  }
};

inline GaussianPacketState evolve_linear_potential(int j, double offset, double slope,
                                                   const Scenario& s, double t) {
  const double m = s.k_probe / s.c_light;
  const double b = s.probe_b;
  const double force = -slope;
  GaussianPacketState g;
  g.component = j;
  g.initial_width = b;
  g.center = s.probe_a + force * t * t / (2.0 * m);
  g.complex_width = {b * b, t / m};
  g.phase_linear = force * t;
  g.phase_const = -force * force * t * t * t / (6.0 * m) - offset * t;
  g.z_center = s.c_light * t;
  return g;
}

/// Evolves component j under the linearized potential of `pot`.
inline GaussianPacketState evolve_linearized(const PotentialPair& pot, int j, double t) {
  return evolve_linear_potential(j, pot.lin_offset[j - 1], pot.lin_slope[j - 1], pot.scenario(), t);
}

/// Transverse displacement of each component at the cell exit z = L, in a
/// linear magnetic field: chi_j B1 |g|^2 N L^2 / (2 Omega0^2 k c). Equals the
/// exit center for a probe entering at x = 0.
inline std::pair<double, double> exit_centers_magnetic(const Scenario& s, const DerivedParams& p) {
  const double scale = s.b1 * s.coupling_strength() * s.medium_length * s.medium_length /
                       (2.0 * s.omega0 * s.omega0 * s.k_probe * s.c_light);
  return {p.chi[0] * scale, p.chi[1] * scale};
}

/// Exit centers behind a Gaussian control beam:
///   a + a chi_j B e^{a^2/sigma^2} |g|^2 N L^2 / (Omega0^2 sigma^2 k c).
/// Off two-photon resonance chi_j B is replaced by the full detuning mismatch
/// delta_j - delta_c.
inline std::pair<double, double> exit_centers_optical(const Scenario& s, const DerivedParams& p) {
  const double a = s.probe_a;
  const double s2 = s.sigma_ctrl * s.sigma_ctrl;
  const double scale = a * std::exp(a * a / s2) * s.coupling_strength() * s.medium_length *
                       s.medium_length / (s.omega0 * s.omega0 * s2 * s.k_probe * s.c_light);
  std::array<double, 2> x{};
  for (int j = 0; j < 2; ++j) {
    const double mismatch = p.chi[j] * s.b0 + s.bare_detunings[j] - s.bare_detunings[2];
    x[j] = a + mismatch * scale;
  }
  return {x[0], x[1]};
}

}  // namespace sglight
