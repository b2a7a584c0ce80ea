// saiqh: simulate, analyze, compare and sweep the discrete SAIQH model.
//
// Exit codes: 0 success, 1 validation/usage, 2 runtime or numerical, 3 I/O.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "saiqh/saiqh.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitIo = 3;

using saiqh::format_double;

struct SimulateOptions {
  std::string config;
  std::string scheme;
  double h = 0.0;
  long long steps = 0;
  std::string out;
  std::vector<std::string> overrides;
};

struct AnalyzeOptions {
  std::string config;
  std::vector<std::string> overrides;
  std::string traj;
  std::string report = "stability_report.json";
};

struct CompareOptions {
  std::string traj;
  std::string observed;
  std::string mapping = "I";
  std::string out = "fit_report.json";
};

struct SweepOptions {
  std::string config;
  std::vector<std::string> overrides;
  std::string h_list;
  std::string scheme = "nsfd";
  std::string out;
};

saiqh::Trajectory run_scheme(const saiqh::Scenario& s, saiqh::Scheme scheme) {
  if (scheme == saiqh::Scheme::nsfd) {
    return saiqh::simulate(s.params, s.init, {s.h, 1e-12}, s.n_steps, s.t0);
  }
  return saiqh::rk4_integrate(s.params, s.init, s.h, s.n_steps, {}, s.t0);
}

void print_state(const char* label, const saiqh::State& s) {
  std::printf("%-10s S=%s A=%s I=%s Q=%s H=%s Hbar=%s\n", label, format_double(s.S).c_str(),
              format_double(s.A).c_str(), format_double(s.I).c_str(), format_double(s.Q).c_str(),
              format_double(s.H).c_str(), format_double(s.Hbar).c_str());
}

int cmd_simulate(const SimulateOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> overrides = o.overrides;
  if (!o.scheme.empty()) overrides.push_back("scheme=" + o.scheme);
  if (o.h > 0.0) overrides.push_back("h=" + format_double(o.h));
  if (o.steps > 0) overrides.push_back("n_steps=" + std::to_string(o.steps));
  const saiqh::Scenario s = saiqh::load_scenario(o.config, overrides);

  const saiqh::Trajectory traj = run_scheme(s, s.scheme);
  saiqh::write_trajectory(traj, o.out);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::printf("scheme     %s  h=%s  steps=%zu\n", saiqh::to_string(s.scheme).c_str(),
              format_double(s.h).c_str(), traj.steps());
  std::printf("R0         %.6f\n", saiqh::reproduction_number(s.params));
  print_state("final", traj.back());
  std::printf("deaths     %s\n", format_double(traj.back().D).c_str());
  std::printf("wrote      %s (%zu rows)\n", o.out.c_str(), traj.states.size());
  std::printf("wall time  %.3f s\n", elapsed);
  return 0;
}

int cmd_analyze(const AnalyzeOptions& o) {
  const saiqh::Scenario s = saiqh::load_scenario(o.config, o.overrides);
  const saiqh::Parameters& p = s.params;
  const auto forms = saiqh::reproduction_number_forms(p);
  const double r0 = saiqh::reproduction_number(p);
  const auto classification = saiqh::classify(p);
  const double grid[] = {0.1, 1.0, 10.0};

  std::printf("R0 (N/D)            %.15g\n", r0);
  std::printf("R0 (expanded form)  %.15g\n", forms.expanded);
  std::printf("R0 (factored form)  %.15g\n", forms.factored);
  std::printf("classification      %s\n", saiqh::to_string(classification).c_str());

  const auto e0 = saiqh::dfe(p);
  print_state("DFE", e0.state);
  for (double h : grid) {
    std::printf("  residual h=%-5s %.3e\n", format_double(h).c_str(),
                saiqh::fixed_point_residual(p, e0.state, {h, 1e-12}));
  }

  try {
    const auto lambda = saiqh::endemic_lambda(p);
    std::printf("lambda*             %.15g%s\n", lambda.value,
                lambda.subcritical ? " (subcritical)" : "");
  } catch (const saiqh::domain_error& e) {
    std::printf("lambda*             undefined: %s\n", e.what());
  }
  try {
    const auto ee = saiqh::endemic_equilibrium(p);
    print_state("EE", ee.state);
    for (double h : grid) {
      std::printf("  residual h=%-5s %.3e\n", format_double(h).c_str(),
                  saiqh::fixed_point_residual(p, ee.state, {h, 1e-12}));
    }
  } catch (const saiqh::no_endemic_equilibrium&) {
    std::printf("EE                  none: R0 <= 1\n");
  } catch (const saiqh::domain_error& e) {
    std::printf("EE                  undefined: %s\n", e.what());
  }

  if (!o.traj.empty()) {
    const saiqh::Trajectory traj = saiqh::read_trajectory(o.traj);
    const saiqh::StabilityReport report = saiqh::verify_descent(p, traj);
    saiqh::write_report(report, o.report);
    std::size_t defined_from = report.lyapunov_series.size();
    for (std::size_t n = 0; n < report.lyapunov_series.size(); ++n) {
      if (report.lyapunov_series[n]) {
        defined_from = n;
        break;
      }
    }
    std::printf("lyapunov defined    from step %zu\n", defined_from);
    std::printf("descent violations  %zu\n", report.descent_violations);
    std::printf("final distance      %s\n",
                format_double(report.distance_to_target.back()).c_str());
    std::printf("verified            %s\n", report.verified ? "yes" : "no");
    if (report.params_mismatch) std::printf("warning: trajectory does not match these parameters\n");
    std::printf("wrote               %s\n", o.report.c_str());
  }
  return 0;
}

int cmd_compare(const CompareOptions& o) {
  const saiqh::Trajectory traj = saiqh::read_trajectory(o.traj);
  const saiqh::ObservedSeries obs = saiqh::load_observed(o.observed);
  const saiqh::FitReport report = saiqh::compare(traj, obs, saiqh::parse_mapping(o.mapping));
  saiqh::write_report(report, o.out);
  std::printf("mapping        %s\n", saiqh::to_string(report.mapping).c_str());
  std::printf("n_points       %zu\n", report.n_points);
  std::printf("rmse           %.6g\n", report.rmse);
  std::printf("mae            %.6g\n", report.mae);
  std::printf("max_abs_error  %.6g\n", report.max_abs_error);
  std::printf("wrote          %s\n", o.out.c_str());
  return 0;
}

struct SweepRow {
  std::string scheme;
  double h = 0.0;
  std::size_t steps = 0;
  double min_component = 0.0;
  double max_population = 0.0;
  std::size_t violations = 0;
  std::string note;
};

std::vector<double> parse_h_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto value = saiqh::parse_double(item);
    if (!value || !std::isfinite(*value) || !(*value > 0.0)) {
      throw saiqh::validation_error("--h-list entries must be numbers > 0 (got '" + item + "')");
    }
    out.push_back(*value);
  }
  if (out.empty()) throw saiqh::validation_error("--h-list is empty");
  return out;
}

SweepRow sweep_one(const saiqh::Scenario& s, saiqh::Scheme scheme, double h) {
  const double horizon = s.h * static_cast<double>(s.n_steps);
  SweepRow row;
  row.scheme = saiqh::to_string(scheme);
  row.h = h;
  row.steps = static_cast<std::size_t>(std::max(1.0, std::ceil(horizon / h - 1e-9)));
  const double capacity = s.params.Lambda / s.params.mu;
  const double bound = std::max(capacity, s.init.total()) * (1.0 + 1e-12);

  saiqh::Trajectory traj;
  try {
    if (scheme == saiqh::Scheme::nsfd) {
      traj = saiqh::simulate(s.params, s.init, {h, 1e-12}, row.steps, s.t0);
    } else {
      saiqh::Rk4Options opts;
      opts.enforce_positivity = false;
      traj = saiqh::rk4_integrate(s.params, s.init, h, row.steps, opts, s.t0);
    }
  } catch (const saiqh::step_error& e) {
    row.violations = 1;
    row.note = e.what();
    row.min_component = std::numeric_limits<double>::quiet_NaN();
    row.max_population = std::numeric_limits<double>::quiet_NaN();
    return row;
  }
  row.min_component = std::numeric_limits<double>::infinity();
  for (const auto& state : traj.states) {
    double lowest = std::numeric_limits<double>::infinity();
    for (double v : state.compartments()) lowest = std::min(lowest, v);
    const double n = state.total();
    row.min_component = std::min(row.min_component, lowest);
    row.max_population = std::max(row.max_population, n);
    if (lowest < 0.0 || n > bound) ++row.violations;
  }
  return row;
}

int cmd_sweep(const SweepOptions& o) {
  const saiqh::Scenario s = saiqh::load_scenario(o.config, o.overrides);
  const std::vector<double> hs = parse_h_list(o.h_list);
  std::vector<saiqh::Scheme> schemes;
  if (o.scheme == "nsfd" || o.scheme == "both") schemes.push_back(saiqh::Scheme::nsfd);
  if (o.scheme == "rk4" || o.scheme == "both") schemes.push_back(saiqh::Scheme::rk4);

  std::vector<std::future<SweepRow>> jobs;
  for (auto scheme : schemes) {
    for (double h : hs) jobs.push_back(std::async(std::launch::async, sweep_one, s, scheme, h));
  }
  std::vector<SweepRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());

  std::ostringstream table;
  table << "scheme,h,steps,min_component,max_N,capacity,violations\n";
  const double capacity = s.params.Lambda / s.params.mu;
  std::size_t total = 0;
  for (const auto& r : rows) {
    table << r.scheme << ',' << format_double(r.h) << ',' << r.steps << ','
          << format_double(r.min_component) << ',' << format_double(r.max_population) << ','
          << format_double(capacity) << ',' << r.violations << '\n';
    total += r.violations;
  }
  std::cout << table.str();
  for (const auto& r : rows) {
    if (!r.note.empty()) std::cout << "# " << r.scheme << " h=" << format_double(r.h) << ": " << r.note << '\n';
  }
  if (!o.out.empty()) {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw saiqh::io_error("cannot write sweep table '" + o.out + "'");
    out << table.str();
  }
  return total == 0 ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time SAIQH epidemic model: simulation and analysis"};
  app.require_subcommand(1);
  // -h is free for the step size.
  app.set_help_flag("--help", "Print this help message and exit");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Integrate a scenario and write a trajectory CSV");
  simulate->add_option("--config", sim.config, "Scenario file")->required();
  simulate->add_option("--scheme", sim.scheme, "nsfd or rk4 (overrides the scenario)")
      ->check(CLI::IsMember({"nsfd", "rk4"}));
  simulate->add_option("--h", sim.h, "Step size in days")->check(CLI::PositiveNumber);
  simulate->add_option("--steps", sim.steps, "Number of steps")->check(CLI::PositiveNumber);
  simulate->add_option("--out", sim.out, "Trajectory CSV to write")->required();
  simulate->add_option("--set", sim.overrides, "Scenario override key=value (repeatable)");

  AnalyzeOptions ana;
  auto* analyze = app.add_subcommand("analyze", "R0, equilibria, residuals and classification");
  analyze->add_option("--config", ana.config, "Scenario file")->required();
  analyze->add_option("--set", ana.overrides, "Scenario override key=value (repeatable)");
  analyze->add_option("--traj", ana.traj, "Trajectory CSV to check for Lyapunov descent");
  analyze->add_option("--report", ana.report, "Stability report JSON (with --traj)");

  CompareOptions cmp;
  auto* compare = app.add_subcommand("compare", "Score a trajectory against observed case data");
  compare->add_option("--traj", cmp.traj, "Trajectory CSV")->required();
  compare->add_option("--observed", cmp.observed, "Observed CSV (date,active_cases)")->required();
  compare->add_option("--mapping", cmp.mapping, "I or IHH")->check(CLI::IsMember({"I", "IHH"}));
  compare->add_option("--out", cmp.out, "Fit report JSON");

  SweepOptions swp;
  auto* sweep = app.add_subcommand("sweep", "Positivity and boundedness across step sizes");
  sweep->add_option("--config", swp.config, "Scenario file")->required();
  sweep->add_option("--set", swp.overrides, "Scenario override key=value (repeatable)");
  sweep->add_option("--h-list", swp.h_list, "Comma-separated step sizes")->required();
  sweep->add_option("--scheme", swp.scheme, "nsfd, rk4 or both")
      ->check(CLI::IsMember({"nsfd", "rk4", "both"}));
  sweep->add_option("--out", swp.out, "Also write the table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*simulate) return cmd_simulate(sim);
    if (*analyze) return cmd_analyze(ana);
    if (*compare) return cmd_compare(cmp);
    if (*sweep) return cmd_sweep(swp);
  } catch (const saiqh::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const saiqh::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitValidation;
}
