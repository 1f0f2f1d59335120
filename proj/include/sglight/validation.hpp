#pragma once

// Cross-model checks behind `validate`: each pits one model against an
// independent route to the same quantity and reports error vs tolerance.

#include <sglight/app.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

namespace sglight {

struct CheckResult {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass() const { return error < tolerance; }
};

/// Symmetric magnetic split: m = 10, b = 1, chi = (-1, 1), zeta = 0.1.
inline constexpr const char* kLinearScenario = R"(mode = MagneticGradient
coupling_g = 1
atom_number = 1
omega0 = 1
mu = -1, 1, 0, 0
b1 = 0.1
k_probe = 10
probe_b = 1
medium_length = 2
)";

/// Gaussian control beam with probe width sigma/8 entering at sigma/2.
inline constexpr const char* kOpticalScenario = R"(mode = OpticalGradient
coupling_g = 1
atom_number = 1
omega0 = 1
sigma_ctrl = 8
mu = -1, 1, 0, 0
b0 = 0.5
k_probe = 20
probe_a = 4
probe_b = 1
medium_length = 4
)";

inline std::vector<CheckResult> validate_response() {
  std::vector<CheckResult> out;
  Scenario s;
  s.coupling_g = 1.0;
  s.omega0 = 2.0;
  s.gamma_excited = 1.0;
  s.gamma_ground = 0.0;
  const cplx omega{2.0, 0.0};

  const Detunings det{0.3, -0.2, 0.0};
  const auto ode = integrate_first_order({}, s, det, omega, 1.0, 1.0, 0.01, 200.0);
  for (int j = 1; j <= 2; ++j) {
    const cplx fixed = first_order_fixed_point(j, det, omega, 1.0, 1.0, 1.0, 0.0);
    const cplx num = j == 1 ? ode.s13 : ode.s23;
    out.push_back({"response.ode_vs_fixed_point_" + std::to_string(j), std::abs(num - fixed) / std::abs(fixed), 1e-6});

    // Adiabatic formula: relative error governed by (delta_j - delta_c)(delta_j + i Gamma)/|Omega|^2.
    const cplx steady = steady_state_coherence(j, det, omega, 1.0, 1.0);
    const double dj = j == 1 ? det.d1 : det.d2;
    const double small = std::abs(det.two_photon(j) * cplx(dj, 1.0)) / std::norm(omega);
    const double rel = std::abs(num - steady) / std::abs(steady);
    out.push_back({"response.adiabatic_leading_order_" + std::to_string(j), rel, 1.5 * small});
  }

  const Detunings dark{0.4, 0.4, 0.4};
  const auto res = integrate_first_order({}, s, dark, omega, 1.0, 1.0, 0.01, 200.0);
  out.push_back({"response.dark_resonance", std::abs(res.s13) + std::abs(res.s23), 1e-10});
  return out;
}

inline std::vector<CheckResult> validate_linear() {
  std::vector<CheckResult> out;
  const auto s = load_scenario(kLinearScenario);
  const auto p = derive(s);
  const auto pot = build_potentials(s, p);
  const auto grid = Grid1D::make(2048, 8.0);
  const auto init = init_gaussian(grid, s.probe_a, s.probe_b);
  const std::vector<double> times{0.5, 1.0, 2.0};
  const auto res = propagate(init, s, s.transit_time(), 1e-3, {0.5, 1.0});
  std::vector<FieldState> states = res.snapshots;
  states.push_back(res.final_state);
  for (std::size_t k = 0; k < times.size(); ++k) {
    double worst = 0.0;
    for (int j = 1; j <= 2; ++j) {
      const auto exact = sample(grid, evolve_linearized(pot, j, times[k]));
      worst = std::max(worst, l2_distance(states[k].component(j), exact, grid.dx()));
    }
    out.push_back({"linear.l2_spectral_vs_analytic_t" + fmt12(times[k]), worst, 1e-6});
  }
  const auto obs = observables(res.final_state);
  const auto [x1, x2] = exit_centers_magnetic(s, p);
  out.push_back({"linear.exit_centers_vs_closed_form",
                 std::max(std::abs(*obs[0].center - x1), std::abs(*obs[1].center - x2)), 1e-6});
  return out;
}

inline std::vector<CheckResult> validate_optical() {
  std::vector<CheckResult> out;
  const auto base = load_scenario(kOpticalScenario);
  const auto shifts = [](const Scenario& s) {
    const auto rep = simulate(s, RunOptions{}, false);
    const auto p = derive(s);
    const auto [x1, x2] = exit_centers_optical(s, p);
    return std::array<std::array<double, 2>, 2>{
        {{rep.exit_centers_numeric[0] - s.probe_a, rep.exit_centers_numeric[1] - s.probe_a},
         {x1 - s.probe_a, x2 - s.probe_a}}};
  };

  const auto pot = build_potentials(base, derive(base));
  const double bound = std::min(linearization_discrepancy(pot), 0.05);
  const auto plus = shifts(base);
  double rel = 0.0;
  for (int j = 0; j < 2; ++j) rel = std::max(rel, std::abs(plus[0][j] - plus[1][j]) / std::abs(plus[1][j]));
  out.push_back({"optical.shift_vs_linearized_prediction", rel, bound});

  auto centered = base;
  centered.probe_a = 0.0;
  const auto zero = shifts(centered);
  out.push_back({"optical.no_shift_on_axis", std::max(std::abs(zero[0][0]), std::abs(zero[0][1])), 1e-9});

  auto mirrored = base;
  mirrored.probe_a = -base.probe_a;
  const auto minus = shifts(mirrored);
  out.push_back({"optical.mirror_a_to_minus_a",
                 std::max(std::abs(minus[0][0] + plus[0][0]), std::abs(minus[0][1] + plus[0][1])), 1e-8});
  // Component 1 entering at -a behaves like component 2 entering at +a.
  out.push_back({"optical.role_exchange", std::abs(minus[0][0] - plus[0][1]) / std::abs(plus[0][1]), bound});
  return out;
}

inline std::vector<CheckResult> validate_polariton() {
  std::vector<CheckResult> out;
  auto s = load_scenario(kLinearScenario);
  const auto p = derive(s);
  const auto k = dsp_kinematics(s, p);
  const auto [x1, x2] = exit_centers_magnetic(s, p);
  out.push_back({"polariton.dsp_centers_vs_field_picture",
                 std::max(std::abs(k.exit_centers[0] - x1) / std::abs(x1), std::abs(k.exit_centers[1] - x2) / std::abs(x2)),
                 1e-12});

  const double L = s.medium_length, h = 1e-3 * L;
  auto lo = s, hi = s;
  lo.medium_length = L - h;
  hi.medium_length = L + h;
  const auto [lo1, lo2] = exit_centers_magnetic(lo, derive(lo));
  const auto [hi1, hi2] = exit_centers_magnetic(hi, derive(hi));
  const double d1 = (hi1 - lo1) / (2.0 * h), d2 = (hi2 - lo2) / (2.0 * h);
  out.push_back({"polariton.deflection_vs_dxdL",
                 std::max(std::abs(k.deflection[0] - d1) / std::abs(d1), std::abs(k.deflection[1] - d2) / std::abs(d2)),
                 1e-10});

  const auto grid = Grid1D::make(256, 8.0);
  const auto st = init_gaussian(grid, 0.3, 1.0);
  std::vector<cplx> sigma(grid.n_points);
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = cplx(std::sin(0.7 * i), std::cos(1.3 * i)) * 0.1;
  const double theta = mixing_angle(s.coupling_g, s.atom_number, s.omega0);
  const auto back = from_polaritons(to_polaritons(st.e1, sigma, theta, s.atom_number), theta, s.atom_number);
  double rt = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    rt = std::max({rt, std::abs(back.e[i] - st.e1[i]), std::abs(back.sigma_j4[i] - sigma[i])});
  out.push_back({"polariton.transform_round_trip", rt, 1e-14});
  out.push_back({"polariton.theta_quarter_pi", std::abs(mixing_angle(1.0, 4.0, 2.0) - std::numbers::pi / 4), 1e-15});
  return out;
}

inline std::vector<CheckResult> run_validation(const std::string& suite) {
  std::vector<CheckResult> all;
  const auto add = [&](std::vector<CheckResult> v) { all.insert(all.end(), v.begin(), v.end()); };
  const bool every = suite == "all";
  if (every || suite == "response") add(validate_response());
  if (every || suite == "linear") add(validate_linear());
  if (every || suite == "optical") add(validate_optical());
  if (every || suite == "polariton") add(validate_polariton());
  if (all.empty()) throw Error("validate: unknown suite '" + suite + "'");
  return all;
}

/// Prints one PASS/FAIL line per check and a summary naming the worst check
/// (largest error/tolerance ratio). Returns the process exit status.
inline int cmd_validate(const std::string& suite, std::ostream& os) {
  const auto checks = run_validation(suite);
  const CheckResult* worst = nullptr;
  bool ok = true;
  for (const auto& c : checks) {
    os << (c.pass() ? "PASS " : "FAIL ") << c.name << " error=" << fmt12(c.error)
       << " tol=" << fmt12(c.tolerance) << '\n';
    ok = ok && c.pass();
    if (!worst || c.error / c.tolerance > worst->error / worst->tolerance) worst = &c;
  }
  os << (ok ? "ALL PASS" : "FAILED") << " checks=" << checks.size() << " worst=" << worst->name
     << " ratio=" << fmt12(worst->error / worst->tolerance) << '\n';
  return ok ? 0 : 1;
}

}  // namespace sglight
