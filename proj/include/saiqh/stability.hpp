#ifndef SAIQH_STABILITY_HPP
#define SAIQH_STABILITY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "saiqh/model.hpp"
#include "saiqh/nsfd.hpp"
#include "saiqh/trajectory.hpp"
#include "saiqh/types.hpp"

namespace saiqh {

inline constexpr double kDescentTolerance = 1e-10;
inline constexpr double kThresholdBand = 1e-12;
inline constexpr double kLambdaMismatchTolerance = 1e-9;

enum class Classification { dfe_globally_stable, threshold, endemic_exists };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::dfe_globally_stable:
      return "dfe_globally_stable";
    case Classification::threshold:
      return "threshold";
    case Classification::endemic_exists:
      return "endemic_exists";
  }
  return "unknown";
}

inline Classification classify_r0(double r0) {
  if (std::abs(r0 - 1.0) <= kThresholdBand) return Classification::threshold;
  return r0 < 1.0 ? Classification::dfe_globally_stable : Classification::endemic_exists;
}

inline Classification classify(const Parameters& params) {
  return classify_r0(reproduction_number(params));
}

namespace detail {

/// x0 G(x / x0) with G(y) = y - ln y - 1. For x0 = 0 the term degenerates to its limit x.
/// Written as x0 (d - log1p(d)), d = x / x0 - 1, so it stays accurate near x = x0.
inline double weighted_g(double x, double x0) {
  if (x0 == 0.0) return x;
  const double d = (x - x0) / x0;
  return x0 * (d - std::log1p(d));
}

}  // namespace detail

/// Discrete Lyapunov function centred on the DFE, scaled by 1 / psi(h).
///
/// Undefined (nullopt) where a logarithm argument is not positive: S <= 0, or
/// Q <= 0 while the DFE has Q0 > 0.
inline std::optional<double> lyapunov(const Parameters& params, const State& state, double h) {
  const State e0 = dfe(params).state;
  if (!(state.S > 0.0)) return std::nullopt;
  if (e0.Q > 0.0 && !(state.Q > 0.0)) return std::nullopt;
  const double sum = detail::weighted_g(state.S, e0.S) + state.A + state.I +
                     detail::weighted_g(state.Q, e0.Q) + state.H + state.Hbar;
  return sum / psi(params, h);
}

struct StabilityReport {
  double r0 = 0.0;
  Classification classification = Classification::dfe_globally_stable;
  std::vector<std::optional<double>> lyapunov_series;
  std::size_t descent_violations = 0;
  /// Sup-norm distance of each state to the DFE (R0 <= 1) or the EE (R0 > 1).
  std::vector<double> distance_to_target;
  /// R0 < 1, L defined somewhere, no descent violation and no parameter mismatch.
  bool verified = false;
  /// Recomputed lambda disagrees with the trajectory's recorded diagnostics.
  bool params_mismatch = false;
};

inline double sup_distance(const State& a, const State& b) {
  const Compartments x = a.compartments();
  const Compartments y = b.compartments();
  double d = 0.0;
  for (std::size_t i = 0; i < kCompartments; ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

inline StabilityReport verify_descent(const Parameters& params, const Trajectory& traj) {
  StabilityReport report;
  report.r0 = reproduction_number(params);
  report.classification = classify_r0(report.r0);

  const State target = report.classification == Classification::endemic_exists
                           ? endemic_equilibrium(params).state
                           : dfe(params).state;

  report.lyapunov_series.reserve(traj.states.size());
  report.distance_to_target.reserve(traj.states.size());
  std::optional<double> previous;
  bool any_defined = false;
  for (std::size_t n = 0; n < traj.states.size(); ++n) {
    const State& s = traj.states[n];
    const std::optional<double> value = lyapunov(params, s, traj.h);
    report.lyapunov_series.push_back(value);
    report.distance_to_target.push_back(sup_distance(s, target));
    if (value) {
      any_defined = true;
      if (previous && *value - *previous > kDescentTolerance * std::max(1.0, *previous)) {
        ++report.descent_violations;
      }
    }
    previous = value;

    if (n < traj.diagnostics.size() && s.total() > 0.0) {
      const double recorded = traj.diagnostics[n].lambda;
      const double recomputed = force_of_infection(params, s);
      if (std::abs(recorded - recomputed) >
          kLambdaMismatchTolerance * std::max(1.0, std::abs(recomputed))) {
        report.params_mismatch = true;
      }
    }
  }
  report.verified = report.classification == Classification::dfe_globally_stable &&
                    any_defined && report.descent_violations == 0 && !report.params_mismatch;
  return report;
}

}  // namespace saiqh

#endif  // SAIQH_STABILITY_HPP
