#pragma once

// Transverse potentials of the two-component paraxial equation
//   i dE_j/dt = [ -i c d/dz - (1/2m) d^2/dx^2 + U_j(x) ] E_j,
//   U_j(x) = |g|^2 N (delta_c(x) - delta_j(x)) / |Omega(x)|^2,
// split as U_j = V -/+ (mu_e B_e)/2 into a shared scalar part and a
// polarization-dependent part.

#include <sglight/derived.hpp>
#include <sglight/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace sglight {

class PotentialPair {
 public:
  PotentialPair(const Scenario& s, const DerivedParams& p) : s_(s), p_(p) {}

  std::array<double, 2> lin_offset{};
  std::array<double, 2> lin_slope{};

  /// |Omega(x)|: Gaussian profile in OpticalGradient mode, omega0 otherwise.
  double omega_at(double x) const {
    if (s_.mode != Mode::OpticalGradient) return s_.omega0;
    return s_.omega0 * std::exp(-x * x / (2.0 * s_.sigma_ctrl * s_.sigma_ctrl));
  }

  /// |g|^2 N / |Omega(x)|^2, evaluated without forming the underflowing square.
  double tan2_theta_at(double x) const {
    if (s_.mode != Mode::OpticalGradient) return p_.tan2_theta;
    return p_.tan2_theta * std::exp(x * x / (s_.sigma_ctrl * s_.sigma_ctrl));
  }

  double exact_u(double x, int j) const {
    const auto d = p_.detunings(x);
    return tan2_theta_at(x) * (d.dc - (j == 1 ? d.d1 : d.d2));
  }

  /// dU_j/dx of the exact potential.
  double exact_du(double x, int j) const {
    const auto d = p_.detunings(x);
    const double mismatch = d.dc - (j == 1 ? d.d1 : d.d2);
    const double dmismatch = s_.mode == Mode::MagneticGradient ? -p_.chi[j - 1] * s_.b1 : 0.0;
    double dtan2 = 0.0;
    if (s_.mode == Mode::OpticalGradient)
      dtan2 = tan2_theta_at(x) * 2.0 * x / (s_.sigma_ctrl * s_.sigma_ctrl);
    return dtan2 * mismatch + tan2_theta_at(x) * dmismatch;
  }

  double linear_u(double x, int j) const { return lin_offset[j - 1] + lin_slope[j - 1] * x; }

  /// Spin-independent part V(x).
  double scalar_v_at(double x) const {
    const auto d = p_.detunings(x);
    return (d.dc - 0.5 * (d.d1 + d.d2)) * tan2_theta_at(x);
  }

  /// Spin coupling mu_e B_e(x); only the product is defined.
  double spin_coupling_at(double x) const {
    const auto d = p_.detunings(x);
    return (d.d1 - d.d2) * tan2_theta_at(x);
  }

  const Scenario& scenario() const { return s_; }
  const DerivedParams& params() const { return p_; }

 private:
  Scenario s_;
  DerivedParams p_;
};

/// Builds exact and linearized potentials. In OpticalGradient mode the
/// linearization is the first-order Taylor expansion about the probe entry
/// point a: U(a) + U'(a)(x - a). If `domain_half_width` is given it must stay
/// within 4 sigma of the control axis, where the exact potential is trusted.
inline PotentialPair build_potentials(const Scenario& s, const DerivedParams& p,
                                      std::optional<double> domain_half_width = std::nullopt) {
  PotentialPair pot(s, p);
  if (s.mode == Mode::OpticalGradient) {
    if (domain_half_width) {
      const double hw = *domain_half_width;
      if (hw > 4.0 * s.sigma_ctrl || pot.omega_at(hw) == 0.0)
        throw ControlFieldUnderflow(
            "ControlFieldUnderflow: grid half-width exceeds 4*sigma_ctrl; the control field "
            "vanishes and the potential diverges");
    }
    const double a = s.probe_a;
    for (int j = 1; j <= 2; ++j) {
      const double u = pot.exact_u(a, j);
      const double du = pot.exact_du(a, j);
      pot.lin_slope[j - 1] = du;
      pot.lin_offset[j - 1] = u - du * a;
    }
  } else {
    // U is already linear in x (constant for Uniform).
    for (int j = 1; j <= 2; ++j) {
      pot.lin_offset[j - 1] = pot.exact_u(0.0, j);
      pot.lin_slope[j - 1] = s.mode == Mode::MagneticGradient ? -p.chi[j - 1] * p.zeta : 0.0;
    }
  }
  return pot;
}

struct KineticParams {
  double mass = 1.0;       // transverse effective mass k/c
  double advection = 1.0;  // longitudinal speed c
};

inline KineticParams kinetic_params(const DerivedParams& p) {
  return {p.source.k_probe / p.source.c_light, p.source.c_light};
}

/// Largest pointwise relative gap |U_exact - U_lin| / |U_exact| over the
/// packet support [a - 3b, a + 3b], both components.
inline double linearization_discrepancy(const PotentialPair& pot, int samples = 601) {
  const auto& s = pot.scenario();
  const double lo = s.probe_a - 3.0 * s.probe_b;
  const double hi = s.probe_a + 3.0 * s.probe_b;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * i / (samples - 1);
    for (int j = 1; j <= 2; ++j) {
      const double exact = pot.exact_u(x, j);
      const double gap = std::abs(exact - pot.linear_u(x, j));
      worst = std::max(worst, exact != 0.0 ? gap / std::abs(exact) : gap);
    }
  }
  return worst;
}

}  // namespace sglight
