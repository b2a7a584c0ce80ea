#ifndef SAIQH_TRAJECTORY_HPP
#define SAIQH_TRAJECTORY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "saiqh/dates.hpp"
#include "saiqh/errors.hpp"
#include "saiqh/types.hpp"

namespace saiqh {

enum class Scheme { nsfd, rk4 };

inline std::string to_string(Scheme scheme) { return scheme == Scheme::nsfd ? "nsfd" : "rk4"; }

inline Scheme parse_scheme(std::string_view text) {
  if (text == "nsfd") return Scheme::nsfd;
  if (text == "rk4") return Scheme::rk4;
  throw validation_error("scheme must be nsfd or rk4 (got '" + std::string(text) + "')");
}

/// Per-state bookkeeping recorded alongside a trajectory.
struct StepDiagnostics {
  double population = 0.0;  // N_n
  double lambda = 0.0;      // force of infection at state n
  /// Relative residual of the linear solve that produced state n (0 for the initial state
  /// and for explicit schemes).
  double residual = 0.0;
  /// Components clamped from round-off negatives to zero while producing state n.
  int clamped = 0;
};

/// States at t_n = n h, n = 0..steps(). states and diagnostics always have equal length.
struct Trajectory {
  Scheme scheme = Scheme::nsfd;
  double h = 1.0;
  Date t0 = default_start_date();
  std::vector<State> states;
  std::vector<StepDiagnostics> diagnostics;

  std::size_t steps() const noexcept { return states.empty() ? 0 : states.size() - 1; }
  double time(std::size_t n) const noexcept { return static_cast<double>(n) * h; }
  const State& back() const { return states.back(); }
};

}  // namespace saiqh

#endif  // SAIQH_TRAJECTORY_HPP
