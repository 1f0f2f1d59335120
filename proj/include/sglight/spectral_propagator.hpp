#pragma once

// Strang-split spectral solver for the two-component transverse equation
//   i dE_j/dt = [ -(1/2m) d^2/dx^2 + U_j(x) ] E_j
// on a periodic grid. The two polarizations never couple, so each component
// is stepped independently with its own potential phase.

#include <sglight/analytic_propagator.hpp>
#include <sglight/effective_hamiltonian.hpp>
#include <sglight/error.hpp>
#include <sglight/fft.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sglight {

struct Grid1D {
  std::size_t n_points = 2048;
  double half_width = 8.0;

  double dx() const { return 2.0 * half_width / static_cast<double>(n_points); }
  double x(std::size_t i) const { return -half_width + static_cast<double>(i) * dx(); }

  /// Angular wavenumber of FFT bin i (standard FFT ordering).
  double wavenumber(std::size_t i) const {
    const auto n = static_cast<long>(n_points);
    const auto ii = static_cast<long>(i);
    const long shifted = ii < n / 2 ? ii : ii - n;
    return 2.0 * std::numbers::pi * static_cast<double>(shifted) / (2.0 * half_width);
  }

  double nyquist() const { return std::numbers::pi / dx(); }

  static Grid1D make(std::size_t n_points, double half_width) {
    if (n_points < 64 || !std::has_single_bit(n_points))
      throw GridError("grid: n_points must be a power of two >= 64");
    if (!(half_width > 0.0)) throw GridError("grid: half_width must be > 0");
    return {n_points, half_width};
  }

  bool operator==(const Grid1D&) const = default;
};

struct FieldState {
  Grid1D grid;
  std::vector<cplx> e1, e2;
  double t = 0.0;
  double z_offset = 0.0;

  std::vector<cplx>& component(int j) { return j == 1 ? e1 : e2; }
  const std::vector<cplx>& component(int j) const { return j == 1 ? e1 : e2; }
};

enum class PotentialForm { Exact, Linearized };

struct ComponentObservables {
  double norm = 0.0;
  std::optional<double> center;  // absent when the component is empty
  std::optional<double> width;   // sqrt(<x^2> - <x>^2)
  std::optional<double> peak_position;
};

inline FieldState init_gaussian(const Grid1D& grid, double a, double b,
                                std::array<cplx, 2> amplitudes = {cplx{1.0}, cplx{1.0}}) {
  if (!(std::abs(a) + 4.0 * b < grid.half_width))
    throw PacketOutsideGrid("PacketOutsideGrid: |a| + 4b must be < grid half-width");
  FieldState st;
  st.grid = grid;
  st.e1.resize(grid.n_points);
  st.e2.resize(grid.n_points);
  const double norm = std::pow(std::numbers::pi * b * b, -0.25);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double u = grid.x(i) - a;
    const double g = norm * std::exp(-u * u / (2.0 * b * b));
    st.e1[i] = amplitudes[0] * g;
    st.e2[i] = amplitudes[1] * g;
  }
  return st;
}

inline ComponentObservables component_observables(const Grid1D& grid, std::span<const cplx> e) {
  ComponentObservables o;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, peak = -1.0;
  std::size_t ipeak = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double rho = std::norm(e[i]);
    const double x = grid.x(i);
    s0 += rho;
    s1 += rho * x;
    s2 += rho * x * x;
    if (rho > peak) {
      peak = rho;
      ipeak = i;
    }
  }
  o.norm = s0 * grid.dx();
  if (!(o.norm > 1e-300)) return o;
  const double mean = s1 / s0;
  o.center = mean;
  o.width = std::sqrt(std::max(0.0, s2 / s0 - mean * mean));
  o.peak_position = grid.x(ipeak);
  return o;
}

inline std::array<ComponentObservables, 2> observables(const FieldState& st) {
  return {component_observables(st.grid, st.e1), component_observables(st.grid, st.e2)};
}

/// sqrt(sum |a - b|^2 dx)
inline double l2_distance(std::span<const cplx> a, std::span<const cplx> b, double dx) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc * dx);
}

inline std::vector<cplx> sample(const Grid1D& grid, const GaussianPacketState& packet) {
  std::vector<cplx> out(grid.n_points);
  for (std::size_t i = 0; i < grid.n_points; ++i) out[i] = packet.amplitude(grid.x(i));
  return out;
}

/// Throws GuardFailure when either component has intensity above 1e-8 of
/// its peak in the outer 2% of the grid on either side.
inline void check_boundary(const FieldState& st) {
  const std::size_t n = st.grid.n_points;
  const std::size_t edge = std::max<std::size_t>(1, n / 50);
  for (int j = 1; j <= 2; ++j) {
    const auto& e = st.component(j);
    double peak = 0.0, rim = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double rho = std::norm(e[i]);
      peak = std::max(peak, rho);
      if (i < edge || i >= n - edge) rim = std::max(rim, rho);
    }
    if (peak > 0.0 && rim > 1e-8 * peak)
      throw GuardFailure("GuardFailure: component " + std::to_string(j) +
                         " reached the periodic boundary at t=" + std::to_string(st.t));
  }
}

/// Precomputed phase factors for one step size. Owns its FFT plan, so one
/// stepper must not be shared between threads.
class SplitStepper {
 public:
  SplitStepper(const Grid1D& grid, const PotentialPair& pot, PotentialForm form, double dt)
      : grid_(grid), dt_(dt), fft_(grid.n_points) {
    if (!(dt > 0.0)) throw Error("step: dt must be > 0");
    const double m = kinetic_params(pot.params()).mass;
    const auto n = grid.n_points;
    const double inv_n = 1.0 / static_cast<double>(n);
    half_kinetic_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double k = grid.wavenumber(i);
      half_kinetic_[i] = std::polar(inv_n, -k * k * dt / (4.0 * m));
    }
    for (int j = 1; j <= 2; ++j) {
      auto& ph = potential_[j - 1];
      auto& u = u_[j - 1];
      ph.resize(n);
      u.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double x = grid.x(i);
        u[i] = form == PotentialForm::Exact ? pot.exact_u(x, j) : pot.linear_u(x, j);
        ph[i] = std::polar(1.0, -u[i] * dt);
      }
    }
    advection_ = pot.scenario().c_light;
  }

  double dt() const { return dt_; }

  /// One Strang step: half kinetic, full potential, half kinetic.
  void advance(FieldState& st) {
    auto buf = fft_.data();
    for (int j = 1; j <= 2; ++j) {
      auto& e = st.component(j);
      const auto& ph = potential_[j - 1];
      std::copy(e.begin(), e.end(), buf.begin());
      fft_.forward();
      for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= half_kinetic_[i];
      fft_.backward();
      for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= ph[i];
      fft_.forward();
      for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= half_kinetic_[i];
      fft_.backward();
      std::copy(buf.begin(), buf.end(), e.begin());
    }
    st.t += dt_;
    st.z_offset += advection_ * dt_;
  }

  /// dt * max|U| over the region the state actually occupies (|E|^2 above
  /// 1e-12 of peak); the diverging optical potential far outside the packet
  /// multiplies zero and does not count.
  double phase_per_step(const FieldState& st) const {
    double worst = 0.0;
    for (int j = 1; j <= 2; ++j) {
      const auto& e = st.component(j);
      double peak = 0.0;
      for (const auto& v : e) peak = std::max(peak, std::norm(v));
      for (std::size_t i = 0; i < e.size(); ++i)
        if (std::norm(e[i]) > 1e-12 * peak) worst = std::max(worst, std::abs(u_[j - 1][i]));
    }
    return worst * dt_;
  }

 private:
  Grid1D grid_;
  double dt_;
  double advection_ = 1.0;
  FftPlan fft_;
  std::vector<cplx> half_kinetic_;
  std::array<std::vector<cplx>, 2> potential_;
  std::array<std::vector<double>, 2> u_;
};

inline std::optional<std::string> accuracy_warning(const SplitStepper& stepper, const FieldState& st) {
  const double phase = stepper.phase_per_step(st);
  if (phase < 0.5) return std::nullopt;
  return "AccuracyWarning: dt*max|U| = " + std::to_string(phase) + " >= 0.5 over the packet";
}

/// Single Strang step as a pure function.
inline FieldState step(const FieldState& state, const PotentialPair& pot, PotentialForm form, double dt,
                       std::vector<std::string>* warnings = nullptr) {
  SplitStepper stepper(state.grid, pot, form, dt);
  if (warnings)
    if (auto w = accuracy_warning(stepper, state)) warnings->push_back(*w);
  FieldState next = state;
  stepper.advance(next);
  return next;
}

/// Default grid: half-width max(8b, |a| + 6b, predicted reach of either
/// component), capped at 4 sigma in OpticalGradient mode.
inline Grid1D default_grid(const Scenario& s, double t_final, std::size_t n_points = 2048,
                           std::optional<double> half_width = std::nullopt) {
  if (half_width) return Grid1D::make(n_points, *half_width);
  const auto pot = build_potentials(s, derive(s));
  double hw = std::max(8.0 * s.probe_b, std::abs(s.probe_a) + 6.0 * s.probe_b);
  for (int j = 1; j <= 2; ++j) {
    const auto g = evolve_linearized(pot, j, t_final);
    hw = std::max(hw, std::abs(g.center) + 6.0 * g.intensity_width());
  }
  if (s.mode == Mode::OpticalGradient) hw = std::min(hw, 4.0 * s.sigma_ctrl);
  return Grid1D::make(n_points, hw);
}

/// Resolution requirements: dx <= b/8 and the Nyquist wavenumber covers the
/// momentum each component accumulates over t_final plus the packet's own
/// spectral width.
inline void check_resolution(const Grid1D& grid, const PotentialPair& pot, double t_final) {
  const auto& s = pot.scenario();
  if (grid.dx() > s.probe_b / 8.0)
    throw GridError("grid: dx = " + std::to_string(grid.dx()) + " exceeds probe_b/8");
  for (int j = 1; j <= 2; ++j) {
    const double kick = std::abs(pot.lin_slope[j - 1]) * t_final;
    if (kick + 8.0 / s.probe_b > grid.nyquist())
      throw GridError("grid: Nyquist wavenumber too small for accumulated momentum of component " +
                      std::to_string(j));
  }
}

struct PropagateOptions {
  PotentialForm form = PotentialForm::Exact;
  bool boundary_guard = true;
  /// Called after every step.
  std::function<void(const FieldState&)> on_step;
};

struct PropagationResult {
  FieldState final_state;
  std::vector<FieldState> snapshots;
  std::vector<std::string> warnings;
};

/// Propagates to t_final. The step size is adjusted per segment so every
/// snapshot time is hit exactly (at most dt).
inline PropagationResult propagate(const FieldState& state, const Scenario& s, double t_final, double dt,
                                   const std::vector<double>& snapshot_times = {},
                                   const PropagateOptions& opts = {}) {
  if (!(dt > 0.0)) throw Error("propagate: dt must be > 0");
  if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end()))
    throw Error("propagate: snapshot times must be sorted");
  const double t0 = state.t;
  for (double ts : snapshot_times)
    if (ts < 0.0 || ts > t_final + 1e-12) throw Error("propagate: snapshot time outside [0, t_final]");

  const auto pot = build_potentials(s, derive(s),
                                    s.mode == Mode::OpticalGradient
                                        ? std::optional<double>(state.grid.half_width)
                                        : std::nullopt);
  PropagationResult r;
  r.final_state = state;
  FieldState& cur = r.final_state;

  std::vector<double> targets(snapshot_times.begin(), snapshot_times.end());
  targets.push_back(t_final);

  std::optional<SplitStepper> stepper;
  bool warned = false;
  double reached = 0.0;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const double span = targets[k] - reached;
    if (span > 1e-14) {
      const auto steps = static_cast<long>(std::ceil(span / dt - 1e-9));
      const double h = span / static_cast<double>(steps);
      if (!stepper || std::abs(stepper->dt() - h) > 1e-15 * h)
        stepper.emplace(cur.grid, pot, opts.form, h);
      if (!warned) {
        if (auto w = accuracy_warning(*stepper, cur)) r.warnings.push_back(*w);
        warned = true;
      }
      for (long n = 0; n < steps; ++n) {
        stepper->advance(cur);
        if (opts.on_step) opts.on_step(cur);
      }
      // land exactly on the target time
      cur.t = t0 + targets[k];
      cur.z_offset = s.c_light * cur.t;
      reached = targets[k];
    }
    if (opts.boundary_guard) check_boundary(cur);
    if (k + 1 < targets.size()) r.snapshots.push_back(cur);
  }
  return r;
}

}  // namespace sglight
