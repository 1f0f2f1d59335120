#pragma once

// Dark/bright polariton picture: a rotation by the mixing angle theta mixes
// each probe component with its collective spin coherence,
//   Psi_j = E_j cos(theta) - 2 sqrt(N) sigma_j4 sin(theta)
//   Phi_j = E_j sin(theta) + 2 sqrt(N) sigma_j4 cos(theta).
// Dark polaritons travel at v_g = c cos^2(theta) with mass m_B = k / v_g.

#include <sglight/derived.hpp>
#include <sglight/error.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace sglight {

/// theta = arctan(sqrt(|g|^2 N) / |Omega|), in [0, pi/2).
inline double mixing_angle(double g, double n_atoms, double omega) {
  if (omega == 0.0) throw ZeroControlField();
  return std::atan(std::sqrt(g * g * n_atoms) / std::abs(omega));
}

struct PolaritonPair {
  std::vector<cplx> dark;
  std::vector<cplx> bright;
};

struct FieldAndCoherence {
  std::vector<cplx> e;
  std::vector<cplx> sigma_j4;
};

inline PolaritonPair to_polaritons(std::span<const cplx> e, std::span<const cplx> sigma_j4, double theta,
                                   double n_atoms) {
  if (e.size() != sigma_j4.size()) throw Error("to_polaritons: arrays differ in length");
  const double c = std::cos(theta), s = std::sin(theta), rn = 2.0 * std::sqrt(n_atoms);
  PolaritonPair p;
  p.dark.resize(e.size());
  p.bright.resize(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const cplx atom = rn * sigma_j4[i];
    p.dark[i] = e[i] * c - atom * s;
    p.bright[i] = e[i] * s + atom * c;
  }
  return p;
}

inline FieldAndCoherence from_polaritons(const PolaritonPair& pair, double theta, double n_atoms) {
  if (pair.dark.size() != pair.bright.size()) throw Error("from_polaritons: arrays differ in length");
  const double c = std::cos(theta), s = std::sin(theta), rn = 2.0 * std::sqrt(n_atoms);
  FieldAndCoherence out;
  out.e.resize(pair.dark.size());
  out.sigma_j4.resize(pair.dark.size());
  for (std::size_t i = 0; i < pair.dark.size(); ++i) {
    out.e[i] = pair.dark[i] * c + pair.bright[i] * s;
    out.sigma_j4[i] = (pair.bright[i] * c - pair.dark[i] * s) / rn;
  }
  return out;
}

/// sigma_j4 = -g E_j / (2 Omega): the spin coherence slaved to the probe in the
/// adiabatic EIT limit, for which the bright polariton vanishes.
inline std::vector<cplx> adiabatic_spin_coherence(std::span<const cplx> e, double g, double omega) {
  if (omega == 0.0) throw ZeroControlField();
  std::vector<cplx> out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = -g * e[i] / (2.0 * omega);
  return out;
}

struct DspKinematics {
  double mass_b = 0.0;
  double v_group = 0.0;
  std::array<double, 2> v_transverse{};
  std::array<double, 2> deflection{};
  std::array<double, 2> exit_centers{};  // chi_j B1 L^2 sin^2(theta) / (2 k v_g)
};

inline DspKinematics dsp_kinematics(const Scenario& s, const DerivedParams& p) {
  if (s.mode != Mode::MagneticGradient)
    throw WrongMode("dsp_kinematics: requires MagneticGradient mode");
  const double theta = mixing_angle(s.coupling_g, s.atom_number, s.omega0);
  const double sin2 = std::pow(std::sin(theta), 2);
  const double cos2 = std::pow(std::cos(theta), 2);
  const double L = s.medium_length;
  DspKinematics k;
  k.v_group = s.c_light * cos2;
  k.mass_b = s.k_probe / k.v_group;
  for (int j = 0; j < 2; ++j) {
    const double force = p.chi[j] * s.b1 * sin2;
    const double transit = L / k.v_group;
    k.v_transverse[j] = force * transit / k.mass_b;
    k.deflection[j] = p.chi[j] * s.b1 * L * p.tan2_theta / (s.k_probe * s.c_light);
    k.exit_centers[j] = p.chi[j] * s.b1 * L * L * sin2 / (2.0 * s.k_probe * k.v_group);
  }
  return k;
}

}  // namespace sglight
