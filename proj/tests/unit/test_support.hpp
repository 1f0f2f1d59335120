#pragma once

#include <sglight/scenario.hpp>

#include <random>
#include <string>

namespace sglight::testing {

inline constexpr const char* kMinimalMagnetic = R"(# minimal magnetic scenario
mode = MagneticGradient
coupling_g = 1
atom_number = 4
omega0 = 2
mu = -1, 1, 0, 0
b1 = 0.1
k_probe = 10
probe_b = 1
medium_length = 2
)";

inline std::string with_line(std::string text, const std::string& line) { return text + line + "\n"; }

/// Random valid scenario for property tests.
inline Scenario random_scenario(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0), pos(0.1, 5.0);
  std::uniform_int_distribution<int> mode(0, 2);
  Scenario s;
  s.mode = static_cast<Mode>(mode(rng));
  s.coupling_g = pos(rng);
  s.atom_number = pos(rng);
  s.gamma_excited = pos(rng);
  s.gamma_ground = 0.0;
  s.mu = {u(rng), u(rng), u(rng), u(rng)};
  s.b0 = u(rng);
  s.b1 = s.mode == Mode::MagneticGradient ? u(rng) : 0.0;
  s.omega0 = pos(rng);
  s.sigma_ctrl = pos(rng) + 3.0;
  s.k_probe = pos(rng) * 4.0;
  s.c_light = pos(rng);
  s.probe_a = u(rng);
  s.probe_b = pos(rng) / 5.0;
  s.medium_length = pos(rng);
  s.bare_detunings = {u(rng) * 0.1, u(rng) * 0.1, u(rng) * 0.1};
  return s;
}

}  // namespace sglight::testing
