#pragma once

// Linear atomic response of the tripod medium: Zeeman-shifted detunings, the
// adiabatic steady-state coherences, and a direct RK4 integration of the
// first-order coherence equations used to check them.

#include <sglight/error.hpp>
#include <sglight/scenario.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace sglight {

using cplx = std::complex<double>;

struct Detunings {
  double d1 = 0.0;  // probe sigma+ (level 1 -> 3)
  double d2 = 0.0;  // probe sigma- (level 2 -> 3)
  double dc = 0.0;  // control (level 4 -> 3)

  double two_photon(int j) const { return (j == 1 ? d1 : d2) - dc; }
  bool operator==(const Detunings&) const = default;
};

struct CoherenceState {
  cplx s13{}, s14{}, s23{}, s24{}, s34{};
  double t = 0.0;

  bool operator==(const CoherenceState&) const = default;
};

inline double zeeman_shift(double mu_i, double field_b) { return mu_i * field_b; }

/// B(x): linear in x for MagneticGradient, B0 everywhere otherwise.
inline double magnetic_field_at(const Scenario& s, double x) {
  return s.mode == Mode::MagneticGradient ? s.b0 + s.b1 * x : s.b0;
}

inline Detunings detunings_at(const Scenario& s, double x) {
  const double b = magnetic_field_at(s, x);
  return {s.bare_detunings[0] + zeeman_shift(s.mu[0], b),
          s.bare_detunings[1] + zeeman_shift(s.mu[1], b),
          s.bare_detunings[2] + zeeman_shift(s.mu[3], b)};
}

/// Adiabatic first-order coherence sigma_j3 = g E_j (delta_j - delta_c) / (2|Omega|^2).
/// Leading order in the two-photon detuning; exact only at two-photon resonance.
inline cplx steady_state_coherence(int j, const Detunings& det, cplx omega, double g, cplx e_field) {
  const double omega2 = std::norm(omega);
  if (omega2 == 0.0) throw ZeroControlField();
  return g * e_field * det.two_photon(j) / (2.0 * omega2);
}

/// Exact fixed point of the first-order equations for component j. Reduces to
/// steady_state_coherence when |delta_j - delta_c| * |delta_j + i Gamma| << |Omega|^2.
inline cplx first_order_fixed_point(int j, const Detunings& det, cplx omega, double g, cplx e_field,
                                    double gamma_excited, double gamma_ground) {
  if (std::norm(omega) == 0.0) throw ZeroControlField();
  const cplx i{0.0, 1.0};
  const double dj = j == 1 ? det.d1 : det.d2;
  const cplx a = i * dj - gamma_excited;
  const cplx d = i * det.two_photon(j) - gamma_ground;
  // a s3 + i Omega s4 = -i g E / 2 ;  i Omega* s3 + d s4 = 0
  const cplx denom = a * d + omega * std::conj(omega);
  return -0.5 * i * g * e_field * d / denom;
}

namespace detail {

inline std::array<cplx, 5> first_order_rhs(const std::array<cplx, 5>& y, const Detunings& det,
                                           cplx omega, double g, cplx e1, cplx e2, double gam,
                                           double gam_g) {
  const cplx i{0.0, 1.0};
  const cplx om_c = std::conj(omega);
  // The drive carries 1/2: zeroth-order populations sigma11 = sigma22 = 1/2.
  return {
      (i * det.d1 - gam) * y[0] + 0.5 * i * g * e1 + i * omega * y[1],
      (i * (det.d1 - det.dc) - gam_g) * y[1] + i * om_c * y[0],
      (i * det.d2 - gam) * y[2] + 0.5 * i * g * e2 + i * omega * y[3],
      (i * (det.d2 - det.dc) - gam_g) * y[3] + i * om_c * y[2],
      // first-order sigma33 - sigma44 vanishes, so sigma34 only decays
      -(i * det.dc + gam) * y[4],
  };
}

}  // namespace detail

/// Fixed-step RK4 over the five first-order coherence equations with the probe
/// amplitudes frozen. The last step is shortened so the state lands on t_final.
inline CoherenceState integrate_first_order(const CoherenceState& init, const Scenario& s,
                                            const Detunings& det, cplx omega, cplx e1, cplx e2,
                                            double dt, double t_final) {
  if (!(dt > 0.0) || !(t_final >= 0.0)) throw StepTooLarge("integrate_first_order: need dt > 0, t_final >= 0");
  const double dmax = std::max({std::abs(det.d1), std::abs(det.d2), std::abs(det.dc)});
  if (dt * (dmax + s.gamma_excited + std::abs(omega)) > 0.1)
    throw StepTooLarge("StepTooLarge: dt*(|delta|max + Gamma + |Omega|) exceeds 0.1");

  std::array<cplx, 5> y{init.s13, init.s14, init.s23, init.s24, init.s34};
  const double g = s.coupling_g;
  const auto rhs = [&](const std::array<cplx, 5>& v) {
    return detail::first_order_rhs(v, det, omega, g, e1, e2, s.gamma_excited, s.gamma_ground);
  };
  const auto axpy = [](const std::array<cplx, 5>& v, double h, const std::array<cplx, 5>& k) {
    std::array<cplx, 5> r;
    for (std::size_t n = 0; n < 5; ++n) r[n] = v[n] + h * k[n];
    return r;
  };

  const auto steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
  const double h = steps > 0 ? t_final / static_cast<double>(steps) : 0.0;
  for (long n = 0; n < steps; ++n) {
    const auto k1 = rhs(y);
    const auto k2 = rhs(axpy(y, 0.5 * h, k1));
    const auto k3 = rhs(axpy(y, 0.5 * h, k2));
    const auto k4 = rhs(axpy(y, h, k3));
    for (std::size_t m = 0; m < 5; ++m) y[m] += h / 6.0 * (k1[m] + 2.0 * k2[m] + 2.0 * k3[m] + k4[m]);
  }
  return {y[0], y[1], y[2], y[3], y[4], init.t + t_final};
}

/// Same, with the on-axis control amplitude omega0 of the scenario.
inline CoherenceState integrate_first_order(const CoherenceState& init, const Scenario& s,
                                            const Detunings& det, cplx e1, cplx e2, double dt,
                                            double t_final) {
  return integrate_first_order(init, s, det, cplx{s.omega0, 0.0}, e1, e2, dt, t_final);
}

}  // namespace sglight
