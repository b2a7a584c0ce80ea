#ifndef SAIQH_NSFD_HPP
#define SAIQH_NSFD_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "saiqh/errors.hpp"
#include "saiqh/linalg.hpp"
#include "saiqh/model.hpp"
#include "saiqh/trajectory.hpp"
#include "saiqh/types.hpp"

namespace saiqh {

/// Denominator function psi(h) = (exp(mu h) - 1) / mu, always > h for mu, h > 0.
inline double psi(const Parameters& params, double h) {
  return std::expm1(params.mu * h) / params.mu;
}

struct StepConfig {
  double h = 1.0;
  /// Solver outputs in [-tol N, 0) are clamped to zero; anything below is an error.
  double positivity_tolerance = 1e-12;
};

inline void validate(const StepConfig& cfg) {
  if (!(std::isfinite(cfg.h) && cfg.h > 0.0)) {
    throw validation_error("step size h must be > 0 (got " + std::to_string(cfg.h) + ")");
  }
  if (!(cfg.positivity_tolerance >= 0.0)) {
    throw validation_error("positivity_tolerance must be >= 0");
  }
}

/// The implicit update written as (I + psi B) x_{n+1} = x_n + psi (Lambda, 0, ..., 0).
///
/// B holds the loss rates on its diagonal and the transfer rates, negated, off it.
/// Its columns sum to the non-negative per-capita death rates, so I + psi B is a
/// nonsingular M-matrix and the solution is non-negative.
struct StepSystem {
  linalg::Matrix<kCompartments> matrix{};
  linalg::Vector<kCompartments> rhs{};
  double lambda = 0.0;
  double psi = 0.0;
};

inline StepSystem assemble_step_system(const Parameters& params, const State& state, double h) {
  const Parameters& pr = params;
  StepSystem sys;
  sys.lambda = force_of_infection(params, state);
  sys.psi = psi(params, h);
  const double infection = sys.lambda * (1.0 - pr.p);
  const double qnu = pr.q * pr.nu;
  const double to_q_from_h = pr.delta2 * (1.0 - pr.f2 - pr.f3);
  const double h_exit = to_q_from_h + pr.delta2 * pr.f2 + pr.alpha1 * pr.f3 + pr.mu;
  const double eta_k = pr.eta * (1.0 - pr.kappa);
  const double hbar_exit = eta_k + pr.alpha2 * pr.kappa + pr.mu;

  enum { S, A, I, Q, H, Hb };
  linalg::Matrix<kCompartments> b{};
  b[S][S] = infection + pr.phi * pr.p + pr.mu;
  b[S][Q] = -pr.omega * pr.m;
  b[A][S] = -infection;
  b[A][A] = qnu + pr.mu;
  b[I][A] = -qnu;
  b[I][I] = pr.delta1 + pr.mu;
  b[Q][S] = -pr.phi * pr.p;
  b[Q][I] = -pr.delta1 * pr.f1;
  b[Q][H] = -to_q_from_h;
  b[Q][Q] = pr.omega * pr.m + pr.mu;
  b[H][I] = -pr.delta1 * (1.0 - pr.f1);
  b[H][Hb] = -eta_k;
  b[H][H] = h_exit;
  b[Hb][H] = -pr.delta2 * pr.f2;
  b[Hb][Hb] = hbar_exit;

  for (std::size_t i = 0; i < kCompartments; ++i) {
    for (std::size_t j = 0; j < kCompartments; ++j) {
      sys.matrix[i][j] = (i == j ? 1.0 : 0.0) + sys.psi * b[i][j];
    }
  }
  sys.rhs = state.compartments();
  sys.rhs[S] += sys.psi * pr.Lambda;
  return sys;
}

struct StepOutcome {
  State state;
  StepDiagnostics diagnostics;
};

/// One NSFD step with its diagnostics. Parameters are assumed already validated.
inline StepOutcome nsfd_step_detailed(const Parameters& params, const State& state,
                                      const StepConfig& cfg) {
  const StepSystem sys = assemble_step_system(params, state, cfg.h);
  linalg::Vector<kCompartments> x = linalg::solve(sys.matrix, sys.rhs);

  StepOutcome out;
  out.diagnostics.residual = linalg::relative_residual(sys.matrix, x, sys.rhs);

  const double floor = -cfg.positivity_tolerance * state.total();
  for (std::size_t i = 0; i < kCompartments; ++i) {
    if (!std::isfinite(x[i])) {
      throw numerical_error(std::string("non-finite ") + kCompartmentNames[i] + " after step");
    }
    if (x[i] < 0.0) {
      if (x[i] < floor) {
        throw numerical_error(std::string("positivity violated: ") + kCompartmentNames[i] +
                              " = " + std::to_string(x[i]));
      }
      x[i] = 0.0;
      ++out.diagnostics.clamped;
    }
  }
  const double deaths =
      state.D + sys.psi * (params.alpha1 * params.f3 * x[4] + params.alpha2 * params.kappa * x[5]);
  out.state = State::from_compartments(x, deaths);
  out.diagnostics.population = out.state.total();
  out.diagnostics.lambda = force_of_infection(params, out.state);
  return out;
}

/// Exact solution of the six coupled update equations, with lambda taken from the input state.
inline State nsfd_step(const Parameters& params, const State& state, const StepConfig& cfg) {
  validate(params);
  validate(cfg);
  validate(state);
  return nsfd_step_detailed(params, state, cfg).state;
}

inline Trajectory simulate(const Parameters& params, const State& init, const StepConfig& cfg,
                           std::size_t n_steps, Date t0 = default_start_date()) {
  validate(params);
  validate(cfg);
  validate(init);
  if (n_steps < 1) throw validation_error("n_steps must be >= 1");

  Trajectory traj;
  traj.scheme = Scheme::nsfd;
  traj.h = cfg.h;
  traj.t0 = t0;
  traj.states.reserve(n_steps + 1);
  traj.diagnostics.reserve(n_steps + 1);
  traj.states.push_back(init);
  traj.diagnostics.push_back({init.total(), force_of_infection(params, init), 0.0, 0});

  State current = init;
  for (std::size_t n = 1; n <= n_steps; ++n) {
    StepOutcome next;
    try {
      next = nsfd_step_detailed(params, current, cfg);
    } catch (const std::exception& e) {
      throw step_error(n, e.what());
    }
    current = next.state;
    traj.states.push_back(current);
    traj.diagnostics.push_back(next.diagnostics);
  }
  return traj;
}

/// ||step(point) - point||_inf / max(1, ||point||_inf) over the six compartments.
inline double fixed_point_residual(const Parameters& params, const State& point,
                                   const StepConfig& cfg) {
  const State next = nsfd_step(params, point, cfg);
  const Compartments a = point.compartments();
  const Compartments b = next.compartments();
  double diff = 0.0;
  double scale = 1.0;
  for (std::size_t i = 0; i < kCompartments; ++i) {
    diff = std::max(diff, std::abs(b[i] - a[i]));
    scale = std::max(scale, std::abs(a[i]));
  }
  return diff / scale;
}

}  // namespace saiqh

#endif  // SAIQH_NSFD_HPP
