#pragma once

// Orchestration behind the command-line tool: end-to-end runs, parameter
// sweeps, the cross-model validation suites, and the CSV/report writers.

#include <sglight/analytic_propagator.hpp>
#include <sglight/atomic_response.hpp>
#include <sglight/derived.hpp>
#include <sglight/effective_hamiltonian.hpp>
#include <sglight/format.hpp>
#include <sglight/polariton.hpp>
#include <sglight/scenario.hpp>
#include <sglight/spectral_propagator.hpp>
#include <sglight/split_classifier.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace sglight {

namespace fs = std::filesystem;

struct RunOptions {
  KeyValues overrides;
  double dt = 1e-3;
  std::size_t grid_n = 2048;
  std::optional<double> grid_halfwidth;
  /// Defaults to {0, 1, 2, 3} within [0, L/c], plus L/c.
  std::optional<std::vector<double>> snapshot_times;
  std::size_t trajectory_rows = 200;
};

struct TrajectoryRow {
  double t;
  std::array<double, 2> center, width, norm;
};

struct RunReport {
  Scenario scenario_echo;
  SplitVerdict verdict;
  std::array<double, 2> exit_centers_analytic{};
  std::array<double, 2> exit_centers_numeric{};
  double max_center_discrepancy = 0.0;
  std::array<double, 2> norms{};
  std::optional<double> linearization_discrepancy;  // OpticalGradient only
  std::vector<std::string> warnings;
  std::vector<fs::path> artifacts;

  // in-memory results, written out by cmd_run
  std::vector<TrajectoryRow> trajectory;
  std::vector<FieldState> snapshots;
};

inline std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(ConfigError::Kind::Syntax, path.string(), "cannot open scenario file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes via a temporary sibling and renames, so readers never see a
/// partially written file.
inline void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

/// Analytic exit centers: linear-field ballistics for MagneticGradient, the
/// linearized control-beam result for OpticalGradient, no motion otherwise.
inline std::array<double, 2> analytic_exit_centers(const Scenario& s, const DerivedParams& p) {
  switch (s.mode) {
    case Mode::MagneticGradient: {
      const auto [x1, x2] = exit_centers_magnetic(s, p);
      return {s.probe_a + x1, s.probe_a + x2};
    }
    case Mode::OpticalGradient: {
      const auto [x1, x2] = exit_centers_optical(s, p);
      return {x1, x2};
    }
    case Mode::Uniform: break;
  }
  return {s.probe_a, s.probe_a};
}

inline std::vector<double> default_snapshot_times(double t_final) {
  std::vector<double> times;
  for (double t : {0.0, 1.0, 2.0, 3.0})
    if (t < t_final) times.push_back(t);
  times.push_back(t_final);
  return times;
}

/// Spectral propagation to the cell exit plus analytic predictions; no I/O.
inline RunReport simulate(const Scenario& s, const RunOptions& opt, bool keep_snapshots = true) {
  RunReport rep;
  rep.scenario_echo = s;
  rep.warnings = validity_warnings(s);
  const auto p = derive(s);
  const double t_final = s.transit_time();

  const auto grid = default_grid(s, t_final, opt.grid_n, opt.grid_halfwidth);
  const auto pot = build_potentials(
      s, p, s.mode == Mode::OpticalGradient ? std::optional<double>(grid.half_width) : std::nullopt);
  check_resolution(grid, pot, t_final);
  if (s.mode == Mode::OpticalGradient) rep.linearization_discrepancy = linearization_discrepancy(pot);

  const double amp = 1.0;  // each polarization unit-normalized
  const auto init = init_gaussian(grid, s.probe_a, s.probe_b, {cplx{amp}, cplx{amp}});

  const auto row_of = [](const FieldState& st) {
    const auto obs = observables(st);
    TrajectoryRow r{st.t, {}, {}, {}};
    for (int j = 0; j < 2; ++j) {
      r.center[j] = obs[j].center.value_or(std::numeric_limits<double>::quiet_NaN());
      r.width[j] = obs[j].width.value_or(std::numeric_limits<double>::quiet_NaN());
      r.norm[j] = obs[j].norm;
    }
    return r;
  };

  const auto total_steps = static_cast<std::size_t>(std::ceil(t_final / opt.dt - 1e-9));
  const std::size_t stride = std::max<std::size_t>(1, total_steps / std::max<std::size_t>(1, opt.trajectory_rows));
  std::size_t counter = 0;
  rep.trajectory.push_back(row_of(init));

  PropagateOptions popt;
  popt.on_step = [&](const FieldState& st) {
    if (++counter % stride == 0) rep.trajectory.push_back(row_of(st));
  };
  const auto times = opt.snapshot_times ? *opt.snapshot_times : default_snapshot_times(t_final);
  auto result = propagate(init, s, t_final, opt.dt, keep_snapshots ? times : std::vector<double>{}, popt);
  rep.warnings.insert(rep.warnings.end(), result.warnings.begin(), result.warnings.end());

  const auto last = row_of(result.final_state);
  if (std::abs(rep.trajectory.back().t - last.t) > 1e-12) rep.trajectory.push_back(last);
  else rep.trajectory.back() = last;

  rep.exit_centers_numeric = last.center;
  rep.norms = last.norm;
  rep.exit_centers_analytic = analytic_exit_centers(s, p);
  rep.max_center_discrepancy = std::max(std::abs(rep.exit_centers_analytic[0] - rep.exit_centers_numeric[0]),
                                        std::abs(rep.exit_centers_analytic[1] - rep.exit_centers_numeric[1]));
  rep.verdict = classify_scenario(s, p);
  rep.snapshots = std::move(result.snapshots);
  if (keep_snapshots && (rep.snapshots.empty() || rep.snapshots.back().t != result.final_state.t))
    rep.snapshots.push_back(result.final_state);
  return rep;
}

inline std::string snapshot_csv(const FieldState& st) {
  std::string out = "x,re_e1,im_e1,re_e2,im_e2,abs2_e1,abs2_e2\n";
  for (std::size_t i = 0; i < st.grid.n_points; ++i) {
    const auto& a = st.e1[i];
    const auto& b = st.e2[i];
    out += fmt12(st.grid.x(i)) + ',' + fmt12(a.real()) + ',' + fmt12(a.imag()) + ',' + fmt12(b.real()) + ',' +
           fmt12(b.imag()) + ',' + fmt12(std::norm(a)) + ',' + fmt12(std::norm(b)) + '\n';
  }
  return out;
}

inline std::string trajectory_csv(const std::vector<TrajectoryRow>& rows) {
  std::string out = "t,center1,center2,width1,width2,norm1,norm2\n";
  for (const auto& r : rows)
    out += fmt12(r.t) + ',' + fmt12(r.center[0]) + ',' + fmt12(r.center[1]) + ',' + fmt12(r.width[0]) + ',' +
           fmt12(r.width[1]) + ',' + fmt12(r.norm[0]) + ',' + fmt12(r.norm[1]) + '\n';
  return out;
}

inline std::string report_text(const RunReport& r) {
  std::string out;
  const auto kv = [&](const std::string& k, const std::string& v) { out += k + " = " + v + '\n'; };
  kv("mode", std::string(to_string(r.scenario_echo.mode)));
  kv("t_final", fmt12(r.scenario_echo.transit_time()));
  kv("verdict", format_verdict(r.verdict));
  kv("x1_analytic", fmt12(r.exit_centers_analytic[0]));
  kv("x2_analytic", fmt12(r.exit_centers_analytic[1]));
  kv("x1_numeric", fmt12(r.exit_centers_numeric[0]));
  kv("x2_numeric", fmt12(r.exit_centers_numeric[1]));
  kv("max_center_discrepancy", fmt12(r.max_center_discrepancy));
  if (r.linearization_discrepancy) kv("linearization_discrepancy", fmt12(*r.linearization_discrepancy));
  kv("norm1", fmt12(r.norms[0]));
  kv("norm2", fmt12(r.norms[1]));
  for (const auto& w : r.warnings) kv("warning", w);
  return out;
}

/// Time label used in snapshot file names, e.g. snap_t1.5.csv.
inline std::string snapshot_name(double t) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "snap_t%.12g.csv", t);
  return buf;
}

inline RunReport cmd_run(const fs::path& scenario_path, const fs::path& out_dir, const RunOptions& opt = {}) {
  const auto s = load_scenario(read_text_file(scenario_path), opt.overrides);
  auto rep = simulate(s, opt);

  // Everything is computed before the first byte is written.
  std::vector<std::pair<fs::path, std::string>> files;
  files.emplace_back(out_dir / "trajectory.csv", trajectory_csv(rep.trajectory));
  for (const auto& snap : rep.snapshots) files.emplace_back(out_dir / snapshot_name(snap.t), snapshot_csv(snap));
  for (const auto& f : files) rep.artifacts.push_back(f.first);
  rep.artifacts.push_back(out_dir / "report.txt");
  std::string report = report_text(rep);
  for (const auto& a : rep.artifacts) report += "artifact = " + a.string() + '\n';
  files.emplace_back(out_dir / "report.txt", report);

  fs::create_directories(out_dir);
  for (const auto& [path, content] : files) write_file_atomic(path, content);
  return rep;
}

struct SweepRow {
  double value;
  std::array<double, 2> analytic, numeric;
  SplitVerdict verdict;
};

/// One simulation per value, run concurrently; rows keep input order.
inline std::vector<SweepRow> sweep(const std::string& base_text, const std::string& key,
                                   const std::vector<double>& values, const RunOptions& opt) {
  if (!is_scalar_key(key)) throw BadSweepKey(key);
  const auto run_one = [&](double v) {
    KeyValues ov = opt.overrides;
    ov.emplace_back(key, fmt_exact(v));
    const auto s = load_scenario(base_text, ov);
    const auto rep = simulate(s, opt, false);
    return SweepRow{v, rep.exit_centers_analytic, rep.exit_centers_numeric, rep.verdict};
  };

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < values.size(); start += workers) {
    std::vector<std::future<SweepRow>> batch;
    for (std::size_t i = start; i < std::min(values.size(), start + workers); ++i)
      batch.push_back(std::async(std::launch::async, run_one, values[i]));
    for (auto& f : batch) rows.push_back(f.get());
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "value,x1_analytic,x2_analytic,x1_numeric,x2_numeric,verdict\n";
  for (const auto& r : rows)
    out += fmt12(r.value) + ',' + fmt12(r.analytic[0]) + ',' + fmt12(r.analytic[1]) + ',' + fmt12(r.numeric[0]) +
           ',' + fmt12(r.numeric[1]) + ',' + to_string(r.verdict.category) + '\n';
  return out;
}

inline void cmd_sweep(const fs::path& scenario_path, const std::string& key, const std::vector<double>& values,
                      const fs::path& out_csv, const RunOptions& opt = {}) {
  const auto text = read_text_file(scenario_path);
  // validate the base scenario even when there is nothing to sweep
  (void)load_scenario(text, opt.overrides);
  const auto rows = sweep(text, key, values, opt);
  if (out_csv.has_parent_path()) fs::create_directories(out_csv.parent_path());
  write_file_atomic(out_csv, sweep_csv(rows));
}

// ---------------------------------------------------------------------------
// Single-purpose dumps

/// Rows of delta_j, delta_c, re_steady, im_steady, re_ode, im_ode, abs_err for
/// j = 1, 2 at each position, with unit probe amplitude.
inline std::string response_csv(const Scenario& s, const std::vector<double>& positions) {
  if (!(s.gamma_excited > 0.0)) throw Error("response: gamma_excited must be > 0 for the ODE to settle");
  const auto p = derive(s);
  const auto pot = build_potentials(s, p);
  std::string out = "delta_j,delta_c,re_steady,im_steady,re_ode,im_ode,abs_err\n";
  for (double x : positions) {
    const auto det = detunings_at(s, x);
    const cplx omega{pot.omega_at(x), 0.0};
    const double dmax = std::max({std::abs(det.d1), std::abs(det.d2), std::abs(det.dc)});
    const double dt = 0.05 / (dmax + s.gamma_excited + std::abs(omega));
    const auto ode = integrate_first_order({}, s, det, omega, 1.0, 1.0, dt, 200.0 / s.gamma_excited);
    for (int j = 1; j <= 2; ++j) {
      const cplx steady = steady_state_coherence(j, det, omega, s.coupling_g, 1.0);
      const cplx num = j == 1 ? ode.s13 : ode.s23;
      out += fmt12(j == 1 ? det.d1 : det.d2) + ',' + fmt12(det.dc) + ',' + fmt12(steady.real()) + ',' +
             fmt12(steady.imag()) + ',' + fmt12(num.real()) + ',' + fmt12(num.imag()) + ',' +
             fmt12(std::abs(num - steady)) + '\n';
    }
  }
  return out;
}

inline std::string potentials_csv(const Scenario& s, const Grid1D& grid) {
  const auto pot = build_potentials(
      s, derive(s), s.mode == Mode::OpticalGradient ? std::optional<double>(grid.half_width) : std::nullopt);
  std::string out = "x,U1,U2,V,muB\n";
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double x = grid.x(i);
    out += fmt12(x) + ',' + fmt12(pot.exact_u(x, 1)) + ',' + fmt12(pot.exact_u(x, 2)) + ',' +
           fmt12(pot.scalar_v_at(x)) + ',' + fmt12(pot.spin_coupling_at(x)) + '\n';
  }
  return out;
}

/// Closed-form packets under the linearized potentials, `steps` intervals
/// from 0 to L/c. Widths are rms widths of |E|^2; peaks are peak intensities.
inline std::string analytic_csv(const Scenario& s, std::size_t steps) {
  const auto pot = build_potentials(s, derive(s));
  const double t_final = s.transit_time();
  std::string out = "t,center_1,center_2,width_1,width_2,peak_1,peak_2\n";
  steps = std::max<std::size_t>(1, steps);
  for (std::size_t n = 0; n <= steps; ++n) {
    const double t = t_final * static_cast<double>(n) / static_cast<double>(steps);
    const auto g1 = evolve_linearized(pot, 1, t);
    const auto g2 = evolve_linearized(pot, 2, t);
    out += fmt12(t) + ',' + fmt12(g1.center) + ',' + fmt12(g2.center) + ',' + fmt12(g1.rms_width()) + ',' +
           fmt12(g2.rms_width()) + ',' + fmt12(g1.peak_intensity()) + ',' + fmt12(g2.peak_intensity()) + '\n';
  }
  return out;
}

inline std::string polariton_text(const Scenario& s) {
  const auto p = derive(s);
  const auto k = dsp_kinematics(s, p);
  std::string out;
  const auto kv = [&](const char* key, double v) { out += std::string(key) + " = " + fmt12(v) + '\n'; };
  kv("theta", mixing_angle(s.coupling_g, s.atom_number, s.omega0));
  kv("v_group", k.v_group);
  kv("mass_b", k.mass_b);
  kv("v_x_1", k.v_transverse[0]);
  kv("v_x_2", k.v_transverse[1]);
  kv("alpha_1", k.deflection[0]);
  kv("alpha_2", k.deflection[1]);
  kv("x_exit_1", k.exit_centers[0]);
  kv("x_exit_2", k.exit_centers[1]);
  return out;
}

/// Dark/bright profiles of the entering probe with the adiabatic spin coherence.
inline std::string polariton_profiles_csv(const Scenario& s, const Grid1D& grid) {
  const double theta = mixing_angle(s.coupling_g, s.atom_number, s.omega0);
  const auto st = init_gaussian(grid, s.probe_a, s.probe_b);
  std::array<PolaritonPair, 2> pairs;
  for (int j = 1; j <= 2; ++j) {
    const auto sigma = adiabatic_spin_coherence(st.component(j), s.coupling_g, s.omega0);
    pairs[j - 1] = to_polaritons(st.component(j), sigma, theta, s.atom_number);
  }
  std::string out = "x,re_psi1,im_psi1,re_phi1,im_phi1,re_psi2,im_psi2,re_phi2,im_phi2\n";
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    out += fmt12(grid.x(i));
    for (const auto& pr : pairs)
      out += ',' + fmt12(pr.dark[i].real()) + ',' + fmt12(pr.dark[i].imag()) + ',' + fmt12(pr.bright[i].real()) +
             ',' + fmt12(pr.bright[i].imag());
    out += '\n';
  }
  return out;
}

}  // namespace sglight

namespace sglight {

/// Derived parameters as `key = value` lines (golden-file friendly), followed
/// by any validity warnings.
inline std::string derived_text(const Scenario& s) {
  const auto p = derive(s);
  std::string out;
  const auto kv = [&](const std::string& k, double v) { out += k + " = " + fmt12(v) + '\n'; };
  out += "mode = " + std::string(to_string(s.mode)) + '\n';
  kv("tan2_theta", p.tan2_theta);
  kv("eff_mass", p.eff_mass);
  kv("chi_1", p.chi[0]);
  kv("chi_2", p.chi[1]);
  kv("zeta", p.zeta);
  kv("b0_eff", p.b0_eff);
  kv("eta0_1", p.eta0[0]);
  kv("eta0_2", p.eta0[1]);
  kv("eta1_1", p.eta1[0]);
  kv("eta1_2", p.eta1[1]);
  kv("v_group", p.v_group);
  const auto d = p.detunings(s.probe_a);
  kv("delta_1_at_a", d.d1);
  kv("delta_2_at_a", d.d2);
  kv("delta_c_at_a", d.dc);
  for (const auto& w : validity_warnings(s)) out += "warning = " + w + '\n';
  return out;
}

}  // namespace sglight
