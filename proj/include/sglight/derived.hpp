#pragma once

#include <sglight/atomic_response.hpp>
#include <sglight/scenario.hpp>

#include <array>
#include <cmath>

namespace sglight {

/// Quantities every propagation model derives from a Scenario.
struct DerivedParams {
  double tan2_theta = 0.0;           // |g|^2 N / Omega0^2 (on the control axis)
  double eff_mass = 1.0;             // k / c
  std::array<double, 2> chi{};       // mu_j - mu_4
  double zeta = 0.0;                 // B1 tan^2(theta)
  double b0_eff = 0.0;               // B0 tan^2(theta)
  std::array<double, 2> eta0{};      // optical linearized potential U_j(a)
  std::array<double, 2> eta1{};      // optical linearized slope U_j'(a)
  double v_group = 1.0;              // c cos^2(theta)
  Scenario source;

  Detunings detunings(double x) const { return detunings_at(source, x); }

  bool operator==(const DerivedParams&) const = default;
};

inline DerivedParams derive(const Scenario& s) {
  DerivedParams p;
  p.source = s;
  p.tan2_theta = s.coupling_strength() / (s.omega0 * s.omega0);
  p.eff_mass = s.k_probe / s.c_light;
  p.chi = {s.mu[0] - s.mu[3], s.mu[1] - s.mu[3]};
  p.zeta = s.mode == Mode::MagneticGradient ? s.b1 * p.tan2_theta : 0.0;
  p.b0_eff = s.b0 * p.tan2_theta;
  p.v_group = s.c_light / (1.0 + p.tan2_theta);
  if (s.mode == Mode::OpticalGradient) {
    // U_j(x) = tan^2(theta0) e^{x^2/sigma^2} (delta_c - delta_j); the bracket is
    // -chi_j B at resonance.
    const double a = s.probe_a;
    const double s2 = s.sigma_ctrl * s.sigma_ctrl;
    const double growth = std::exp(a * a / s2);
    for (int j = 0; j < 2; ++j) {
      const double mismatch = s.bare_detunings[2] - s.bare_detunings[j] - p.chi[j] * s.b0;
      p.eta0[j] = p.tan2_theta * mismatch * growth;
      p.eta1[j] = p.eta0[j] * 2.0 * a / s2;
    }
  }
  return p;
}

}  // namespace sglight
