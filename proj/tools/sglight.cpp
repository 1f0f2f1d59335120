// Command-line front end: sglight <subcommand> [options]
//
// Exit status: 0 success, 1 configuration error, 2 propagation guard failure.

#include <sglight/app.hpp>
#include <sglight/validation.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace sglight;

struct Globals {
  std::string out_dir = "out";
  std::vector<std::string> sets;
  double dt = 1e-3;
  std::size_t grid_n = 2048;
  double grid_halfwidth = 0.0;  // 0 = automatic

  RunOptions run_options() const {
    RunOptions o;
    for (const auto& s : sets) o.overrides.push_back(parse_override(s));
    o.dt = dt;
    o.grid_n = grid_n;
    if (grid_halfwidth > 0.0) o.grid_halfwidth = grid_halfwidth;
    return o;
  }
};

Scenario load(const std::string& path, const Globals& g) {
  return load_scenario(read_text_file(path), g.run_options().overrides);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file_atomic(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polarization-resolved beam splitting of slow light in a tripod EIT medium"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--out", g.out_dir, "Output directory (run) or file (dumps; '-' = stdout)");
  app.add_option("--set", g.sets, "Scenario override key=value (repeatable, last wins)");
  app.add_option("--dt", g.dt, "Propagation time step")->check(CLI::PositiveNumber);
  app.add_option("--grid-n", g.grid_n, "Transverse grid points (power of two)");
  app.add_option("--grid-halfwidth", g.grid_halfwidth, "Transverse half-width (default: automatic)");

  std::string scenario_path;

  auto* run = app.add_subcommand("run", "Propagate to the cell exit and write trajectory, snapshots, report");
  run->add_option("scenario", scenario_path)->required();
  std::vector<double> snapshots;
  run->add_option("--snapshots", snapshots, "Snapshot times")->delimiter(',');

  auto* sweep_cmd = app.add_subcommand("sweep", "Exit centers and verdict over a list of parameter values");
  sweep_cmd->add_option("scenario", scenario_path)->required();
  std::string sweep_key;
  std::vector<double> sweep_values;
  sweep_cmd->add_option("--key", sweep_key, "Scalar scenario key to vary")->required();
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")->delimiter(',');

  auto* classify_cmd = app.add_subcommand("classify", "Split taxonomy verdict for a scenario or (chi1, chi2, sign)");
  classify_cmd->add_option("scenario", scenario_path);
  double chi1 = 0.0, chi2 = 0.0;
  std::string sign = "+";
  auto* chi1_opt = classify_cmd->add_option("--chi1", chi1);
  classify_cmd->add_option("--chi2", chi2);
  classify_cmd->add_option("--sign", sign)->check(CLI::IsMember({"+", "-", "0"}));

  auto* validate_cmd = app.add_subcommand("validate", "Cross-model oracle suites, or derived parameters of a scenario");
  std::string suite = "all";
  validate_cmd->add_option("suite", suite)->check(CLI::IsMember({"response", "linear", "optical", "polariton", "all"}));
  std::string validate_scenario;
  validate_cmd->add_option("--scenario", validate_scenario, "Print derived parameters of this scenario instead");

  auto* response_cmd = app.add_subcommand("response", "Adiabatic vs integrated first-order coherences (CSV)");
  response_cmd->add_option("scenario", scenario_path)->required();
  std::vector<double> positions;
  response_cmd->add_option("--x", positions, "Transverse positions (default: probe_a)")->delimiter(',');

  auto* potentials_cmd = app.add_subcommand("potentials", "Dump x, U1, U2, V, muB (CSV)");
  potentials_cmd->add_option("scenario", scenario_path)->required();

  auto* analytic_cmd = app.add_subcommand("analytic", "Closed-form packet trajectory (CSV)");
  analytic_cmd->add_option("scenario", scenario_path)->required();
  std::size_t steps = 100;
  analytic_cmd->add_option("--steps", steps, "Number of time intervals");

  auto* polariton_cmd = app.add_subcommand("polariton", "Dark-state polariton kinematics");
  polariton_cmd->add_option("scenario", scenario_path)->required();
  std::string profiles_path;
  polariton_cmd->add_option("--profiles", profiles_path, "Also write dark/bright profiles CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; any other command-line mistake is a configuration error
    return app.exit(e) == 0 ? 0 : 1;
  }

  // dumps write to --out only when it was given explicitly
  const std::string dump_path = app.count("--out") ? g.out_dir : "-";

  try {
    if (*run) {
      auto opt = g.run_options();
      if (!snapshots.empty()) opt.snapshot_times = snapshots;
      const auto rep = cmd_run(scenario_path, g.out_dir, opt);
      std::cout << report_text(rep);
      for (const auto& a : rep.artifacts) std::cout << "artifact = " << a.string() << '\n';
      return 0;
    }
    if (*sweep_cmd) {
      const std::string csv = app.count("--out") ? g.out_dir : "sweep.csv";
      cmd_sweep(scenario_path, sweep_key, sweep_values, csv, g.run_options());
      std::cout << "wrote " << csv << '\n';
      return 0;
    }
    if (*classify_cmd) {
      SplitVerdict v;
      if (!scenario_path.empty()) {
        const auto s = load(scenario_path, g);
        v = classify_scenario(s, derive(s));
      } else if (chi1_opt->count()) {
        v = classify(chi1, chi2, sign == "+" ? 1 : (sign == "-" ? -1 : 0));
      } else {
        std::cerr << "classify: give a scenario file or --chi1/--chi2/--sign\n";
        return 1;
      }
      std::cout << format_verdict(v) << '\n';
      return 0;
    }
    if (*validate_cmd) {
      if (!validate_scenario.empty()) {
        std::cout << derived_text(load(validate_scenario, g));
        return 0;
      }
      return cmd_validate(suite, std::cout);
    }
    if (*response_cmd) {
      const auto s = load(scenario_path, g);
      if (positions.empty()) positions.push_back(s.probe_a);
      emit(response_csv(s, positions), dump_path);
      return 0;
    }
    if (*potentials_cmd) {
      const auto s = load(scenario_path, g);
      const auto opt = g.run_options();
      const auto grid = default_grid(s, s.transit_time(), opt.grid_n, opt.grid_halfwidth);
      emit(potentials_csv(s, grid), dump_path);
      return 0;
    }
    if (*analytic_cmd) {
      emit(analytic_csv(load(scenario_path, g), steps), dump_path);
      return 0;
    }
    if (*polariton_cmd) {
      const auto s = load(scenario_path, g);
      emit(polariton_text(s), dump_path);
      if (!profiles_path.empty()) {
        const auto opt = g.run_options();
        const auto grid = default_grid(s, s.transit_time(), opt.grid_n, opt.grid_halfwidth);
        write_file_atomic(profiles_path, polariton_profiles_csv(s, grid));
      }
      return 0;
    }
  } catch (const GuardFailure& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const PacketOutsideGrid& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
