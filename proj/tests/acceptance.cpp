// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "saiqh/saiqh.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace saiqh;
using testing::ModelGenerator;
using testing::relative_difference;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double max_relative_gap(const State& a, const State& b) {
  const Compartments x = a.compartments();
  const Compartments y = b.compartments();
  double worst = 0.0;
  for (std::size_t i = 0; i < kCompartments; ++i) worst = std::max(worst, relative_difference(x[i], y[i]));
  return worst;
}

Scenario portugal() { return load_scenario(testing::kPortugalConfig); }

Outcome r0_reproduction() {
  const Scenario s = portugal();
  const auto start = std::chrono::steady_clock::now();
  const double r0 = reproduction_number(s.params);
  const double us =
      std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  const bool ok = std::abs(r0 - 0.95) <= 0.01 && us < 1000.0;
  return {ok, "R0 = " + fmt(r0) + " (target 0.95 +/- 0.01), " + fmt(us) + " us"};
}

Outcome dual_forms() {
  ModelGenerator gen(20240601);
  double worst_forms = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const auto f = reproduction_number_forms(gen.parameters());
    worst_forms = std::max(worst_forms, relative_difference(f.expanded, f.factored));
  }
  double worst_ngm = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Parameters p = gen.parameters();
    const double rho = testing::next_generation_spectral_radius(p);
    const auto f = reproduction_number_forms(p);
    worst_ngm = std::max({worst_ngm, relative_difference(f.expanded, rho),
                          relative_difference(f.factored, rho)});
  }
  return {worst_forms < 1e-12 && worst_ngm < 1e-9,
          "forms " + fmt(worst_forms) + " (< 1e-12), spectral radius " + fmt(worst_ngm) + " (< 1e-9)"};
}

Outcome fixed_points() {
  const Scenario s = portugal();
  Parameters endemic = s.params;
  endemic.beta = 3.86;
  const State e0 = dfe(s.params).state;
  const State ee = endemic_equilibrium(endemic).state;
  double worst_dfe = 0.0;
  double worst_ee = 0.0;
  for (double h : {0.1, 1.0, 10.0}) {
    worst_dfe = std::max(worst_dfe, fixed_point_residual(s.params, e0, {h}));
    worst_ee = std::max(worst_ee, fixed_point_residual(endemic, ee, {h}));
  }
  return {worst_dfe < 1e-12 && worst_ee < 1e-9 && reproduction_number(endemic) > 1.0,
          "DFE residual " + fmt(worst_dfe) + " (< 1e-12), EE residual " + fmt(worst_ee) + " (< 1e-9)"};
}

Outcome dynamical_consistency() {
  ModelGenerator gen(31337);
  std::size_t negatives = 0;
  std::size_t over_capacity = 0;
  double worst_identity = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Parameters p = gen.parameters();
    const State init = gen.state(p);
    const double h = gen.step_size(1e-3, 100.0);
    const double cap = p.Lambda / p.mu;
    const double ps = static_cast<double>(testing::psi_series(p.mu, h));
    const Trajectory traj = simulate(p, init, {h}, 200);
    for (std::size_t n = 0; n < traj.states.size(); ++n) {
      const State& s = traj.states[n];
      for (double v : s.compartments()) negatives += v < 0.0;
      over_capacity += s.total() > cap * (1.0 + 1e-12);
      if (n == 0) continue;
      const State& prev = traj.states[n - 1];
      const double n0 = prev.S + prev.A + prev.I + prev.Q + prev.H + prev.Hbar;
      const double n1 = s.S + s.A + s.I + s.Q + s.H + s.Hbar;
      const double rate = p.Lambda - p.mu * n1 - p.alpha1 * p.f3 * s.H - p.alpha2 * p.kappa * s.Hbar;
      worst_identity = std::max(worst_identity, std::abs((n1 - n0) - ps * rate) / std::max(n0, n1));
    }
  }
  return {negatives == 0 && over_capacity == 0 && worst_identity < 1e-10,
          std::to_string(negatives) + " negative components, " + std::to_string(over_capacity) +
              " states above capacity, population identity " + fmt(worst_identity) + " (< 1e-10)"};
}

Outcome lyapunov_descent() {
  const Scenario s = portugal();
  const Trajectory traj = simulate(s.params, s.init, {1.0}, 2000);
  const StabilityReport report = verify_descent(s.params, traj);
  bool defined = true;
  for (std::size_t n = 1; n < report.lyapunov_series.size(); ++n) defined &= report.lyapunov_series[n].has_value();
  const State e0 = dfe(s.params).state;
  const State& last = traj.back();
  const double s_gap = relative_difference(last.S, e0.S);
  const double q_gap = relative_difference(last.Q, e0.Q);
  const double infected = std::max({last.A, last.I, last.H, last.Hbar});
  const bool ok = defined && report.descent_violations == 0 && s_gap < 1e-3 && q_gap < 1e-3 &&
                  infected < 1e-3;
  return {ok, std::string(defined ? "L defined from step 1" : "L undefined after step 0") + ", " +
                  std::to_string(report.descent_violations) + " violations; final S gap " + fmt(s_gap) +
                  ", Q gap " + fmt(q_gap) + " (< 1e-3), max infected " + fmt(infected) + " (< 1e-3)"};
}

Outcome scheme_consistency() {
  const Scenario s = portugal();
  const Trajectory nsfd = simulate(s.params, s.init, {0.01}, 3000);
  const Trajectory rk4 = rk4_integrate(s.params, s.init, 0.01, 3000);
  double gap = 0.0;
  for (std::size_t day = 1; day <= 30; ++day) {
    gap = std::max(gap, max_relative_gap(nsfd.states[day * 100], rk4.states[day * 100]));
  }
  const State ref = rk4_integrate(s.params, s.init, 0.001, 30000).back();
  const double e_coarse = max_relative_gap(simulate(s.params, s.init, {0.2}, 150).back(), ref);
  const double e_fine = max_relative_gap(simulate(s.params, s.init, {0.1}, 300).back(), ref);
  const double ratio = e_coarse / e_fine;
  const bool ok = gap < 5e-3 && std::abs(ratio - 2.0) <= 0.5;
  return {ok, "gap at h=0.01 " + fmt(gap) + " (< 5e-3), error ratio 0.2->0.1 " + fmt(ratio) +
                  " (2 +/- 0.5)"};
}

Outcome oracle_equivalence() {
  ModelGenerator gen(4711);
  double worst = 0.0;
  long iterations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Parameters p = gen.parameters();
    const State x = gen.state(p);
    const double h = gen.step_size(1e-3, 100.0);
    const State next = nsfd_step(p, x, {h});
    const auto oracle = testing::gauss_seidel_step(p, x, h);
    iterations += oracle.iterations;
    worst = std::max(worst, max_relative_gap(next, oracle.state));
  }
  return {worst < 1e-12, "max relative gap " + fmt(worst) + " (< 1e-12), " +
                              std::to_string(iterations / 1000) + " sweeps on average"};
}

Outcome observed_fit() {
  const Scenario s = portugal();
  const ObservedSeries obs = load_observed(testing::kPortugalObserved);
  const std::size_t steps = 6300;  // 63 days at h = 0.01
  const Trajectory nsfd = simulate(s.params, s.init, {0.01}, steps, s.t0);
  const Trajectory rk4 = rk4_integrate(s.params, s.init, 0.01, steps, {}, s.t0);
  const FitReport a = compare(nsfd, obs, Mapping::I_only);
  const FitReport b = compare(rk4, obs, Mapping::I_only);
  return {a.n_points == obs.size() && a.rmse <= 1.01 * b.rmse,
          "rmse nsfd " + fmt(a.rmse) + " vs rk4 " + fmt(b.rmse) + " over " +
              std::to_string(a.n_points) + " days (nsfd <= 1.01 x rk4)"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"R0 reproduction", 1.0, r0_reproduction},
      {"Dual-form agreement", 10.0, dual_forms},
      {"Fixed points", 1.0, fixed_points},
      {"Dynamical consistency", 120.0, dynamical_consistency},
      {"Lyapunov descent", 1.0, lyapunov_descent},
      {"Scheme consistency", 30.0, scheme_consistency},
      {"Oracle equivalence", 5.0, oracle_equivalence},
      {"Observed-data fit", 60.0, observed_fit},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      out.pass = false;
      out.detail += "; over time budget of " + fmt(c.budget_seconds) + " s";
    }
    failures += !out.pass;
    std::printf("%s  %-22s %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", c.name.c_str(),
                out.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
