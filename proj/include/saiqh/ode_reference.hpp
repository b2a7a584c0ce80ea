#ifndef SAIQH_ODE_REFERENCE_HPP
#define SAIQH_ODE_REFERENCE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "saiqh/errors.hpp"
#include "saiqh/model.hpp"
#include "saiqh/trajectory.hpp"
#include "saiqh/types.hpp"

namespace saiqh {

struct DerivativeVector {
  double dS = 0.0;
  double dA = 0.0;
  double dI = 0.0;
  double dQ = 0.0;
  double dH = 0.0;
  double dHbar = 0.0;
  double dD = 0.0;

  double compartment_sum() const noexcept { return dS + dA + dI + dQ + dH + dHbar; }
};

/// Right-hand side of the continuous SAIQH system, plus dD.
inline DerivativeVector rhs(const Parameters& params, const State& x) {
  const Parameters& pr = params;
  const double lambda = force_of_infection(params, x);
  const double infection = lambda * (1.0 - pr.p) * x.S;
  const double qnu = pr.q * pr.nu;
  const double h_to_q = pr.delta2 * (1.0 - pr.f2 - pr.f3);
  const double h_exit = h_to_q + pr.delta2 * pr.f2 + pr.alpha1 * pr.f3 + pr.mu;
  const double eta_k = pr.eta * (1.0 - pr.kappa);
  DerivativeVector d;
  d.dS = pr.Lambda + pr.omega * pr.m * x.Q - (pr.phi * pr.p + pr.mu) * x.S - infection;
  d.dA = infection - (qnu + pr.mu) * x.A;
  d.dI = qnu * x.A - (pr.delta1 + pr.mu) * x.I;
  d.dQ = pr.phi * pr.p * x.S + pr.delta1 * pr.f1 * x.I + h_to_q * x.H - (pr.omega * pr.m + pr.mu) * x.Q;
  d.dH = pr.delta1 * (1.0 - pr.f1) * x.I + eta_k * x.Hbar - h_exit * x.H;
  d.dHbar = pr.delta2 * pr.f2 * x.H - (eta_k + pr.alpha2 * pr.kappa + pr.mu) * x.Hbar;
  d.dD = pr.alpha1 * pr.f3 * x.H + pr.alpha2 * pr.kappa * x.Hbar;
  return d;
}

struct Rk4Options {
  double positivity_tolerance = 1e-12;
  /// Retries of a step that leaves the non-negative orthant, each halving the substep.
  int max_halvings = 4;
  /// When false, negative components are recorded as-is (no clamping, no retries), so
  /// callers can detect the integrator leaving the feasible region.
  bool enforce_positivity = true;
};

namespace detail {

using Vec7 = std::array<double, 7>;

inline Vec7 to_vec(const State& s) { return {s.S, s.A, s.I, s.Q, s.H, s.Hbar, s.D}; }
inline State from_vec(const Vec7& v) { return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]}; }

inline Vec7 derivative(const Parameters& params, const Vec7& v) {
  const DerivativeVector d = rhs(params, from_vec(v));
  return {d.dS, d.dA, d.dI, d.dQ, d.dH, d.dHbar, d.dD};
}

inline Vec7 rk4_substep(const Parameters& params, const Vec7& x, double h) {
  auto axpy = [](const Vec7& base, const Vec7& k, double a) {
    Vec7 out;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = base[i] + a * k[i];
    return out;
  };
  const Vec7 k1 = derivative(params, x);
  const Vec7 k2 = derivative(params, axpy(x, k1, 0.5 * h));
  const Vec7 k3 = derivative(params, axpy(x, k2, 0.5 * h));
  const Vec7 k4 = derivative(params, axpy(x, k3, h));
  Vec7 out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
  }
  return out;
}

inline Vec7 rk4_span(const Parameters& params, const Vec7& x, double h, int substeps) {
  Vec7 y = x;
  const double dt = h / substeps;
  for (int i = 0; i < substeps; ++i) y = rk4_substep(params, y, dt);
  return y;
}

}  // namespace detail

/// Classical fixed-step RK4 on the continuous model, recorded on the grid t_n = n h.
inline Trajectory rk4_integrate(const Parameters& params, const State& init, double h,
                                std::size_t n_steps, const Rk4Options& opts = {},
                                Date t0 = default_start_date()) {
  validate(params);
  validate(init);
  if (!(std::isfinite(h) && h > 0.0)) throw validation_error("step size h must be > 0");
  if (n_steps < 1) throw validation_error("n_steps must be >= 1");

  Trajectory traj;
  traj.scheme = Scheme::rk4;
  traj.h = h;
  traj.t0 = t0;
  traj.states.reserve(n_steps + 1);
  traj.diagnostics.reserve(n_steps + 1);
  traj.states.push_back(init);
  traj.diagnostics.push_back({init.total(), force_of_infection(params, init), 0.0, 0});

  detail::Vec7 x = detail::to_vec(init);
  for (std::size_t n = 1; n <= n_steps; ++n) {
    const double floor = -opts.positivity_tolerance * detail::from_vec(x).total();
    auto feasible = [&](const detail::Vec7& v) {
      for (std::size_t i = 0; i < kCompartments; ++i) {
        if (v[i] < floor) return false;
      }
      return true;
    };
    detail::Vec7 y;
    int clamped = 0;
    bool accepted = false;
    const int attempts = opts.enforce_positivity ? opts.max_halvings + 1 : 1;
    for (int attempt = 0; attempt < attempts && !accepted; ++attempt) {
      try {
        y = detail::rk4_span(params, x, h, 1 << attempt);
      } catch (const domain_error& e) {
        throw step_error(n, e.what());
      }
      for (double v : y) {
        if (!std::isfinite(v)) throw step_error(n, "non-finite value in RK4 step");
      }
      accepted = !opts.enforce_positivity || feasible(y);
    }
    if (!accepted) {
      throw step_error(n, "positivity violated after " + std::to_string(opts.max_halvings) +
                              " step halvings");
    }
    if (opts.enforce_positivity) {
      for (std::size_t i = 0; i < kCompartments; ++i) {
        if (y[i] < 0.0) {
          y[i] = 0.0;
          ++clamped;
        }
      }
    }
    x = y;
    const State s = detail::from_vec(x);
    double lambda = 0.0;
    try {
      lambda = force_of_infection(params, s);
    } catch (const domain_error& e) {
      throw step_error(n, e.what());
    }
    traj.states.push_back(s);
    traj.diagnostics.push_back({s.total(), lambda, 0.0, clamped});
  }
  return traj;
}

}  // namespace saiqh

#endif  // SAIQH_ODE_REFERENCE_HPP
