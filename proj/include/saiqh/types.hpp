#ifndef SAIQH_TYPES_HPP
#define SAIQH_TYPES_HPP

#include <array>
#include <cmath>
#include <string>

#include "saiqh/errors.hpp"

namespace saiqh {

/// Rates are per day, Lambda is persons per day, the rest are dimensionless fractions.
struct Parameters {
  double Lambda = 0.0;  // recruitment
  double mu = 0.0;      // natural death
  double beta = 0.0;    // transmission
  double lA = 0.0;      // relative transmissibility of A
  double lH = 0.0;      // relative transmissibility of H
  double phi = 0.0;     // S -> Q
  double nu = 0.0;      // A -> I
  double delta1 = 0.0;  // I -> Q/H
  double delta2 = 0.0;  // H -> Q/Hbar
  double eta = 0.0;     // Hbar -> H
  double omega = 0.0;   // Q -> S
  double alpha1 = 0.0;  // disease death in H
  double alpha2 = 0.0;  // disease death in Hbar
  double p = 0.0;
  double q = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  double kappa = 0.0;
  double m = 0.0;

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

inline constexpr std::size_t kCompartments = 6;
using Compartments = std::array<double, kCompartments>;

/// One point of the SAIQH system plus the cumulative death tally D.
struct State {
  double S = 0.0;
  double A = 0.0;
  double I = 0.0;
  double Q = 0.0;
  double H = 0.0;
  double Hbar = 0.0;
  double D = 0.0;

  /// Living population N = S + A + I + Q + H + Hbar.
  double total() const noexcept { return S + A + I + Q + H + Hbar; }

  Compartments compartments() const noexcept { return {S, A, I, Q, H, Hbar}; }

  static State from_compartments(const Compartments& x, double deaths = 0.0) noexcept {
    return {x[0], x[1], x[2], x[3], x[4], x[5], deaths};
  }

  friend bool operator==(const State&, const State&) = default;
};

inline constexpr std::array<const char*, kCompartments> kCompartmentNames = {"S", "A", "I",
                                                                             "Q", "H", "Hbar"};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw validation_error(message);
}

inline void require_rate(double value, const char* name) {
  require(std::isfinite(value) && value >= 0.0,
          std::string(name) + " must be a finite rate >= 0 (got " + std::to_string(value) + ")");
}

inline void require_fraction(double value, const char* name) {
  require(std::isfinite(value) && value >= 0.0 && value <= 1.0,
          std::string(name) + " must lie in [0, 1] (got " + std::to_string(value) + ")");
}

}  // namespace detail

/// Throws validation_error naming the first violated bound.
inline void validate(const Parameters& params) {
  using detail::require;
  require(std::isfinite(params.Lambda) && params.Lambda > 0.0, "Lambda must be > 0");
  require(std::isfinite(params.mu) && params.mu > 0.0, "mu must be > 0");
  detail::require_rate(params.beta, "beta");
  detail::require_rate(params.lA, "lA");
  detail::require_rate(params.lH, "lH");
  detail::require_rate(params.phi, "phi");
  detail::require_rate(params.nu, "nu");
  detail::require_rate(params.delta1, "delta1");
  detail::require_rate(params.delta2, "delta2");
  detail::require_rate(params.eta, "eta");
  detail::require_rate(params.omega, "omega");
  detail::require_rate(params.alpha1, "alpha1");
  detail::require_rate(params.alpha2, "alpha2");
  detail::require_fraction(params.p, "p");
  detail::require_fraction(params.q, "q");
  detail::require_fraction(params.f1, "f1");
  detail::require_fraction(params.f2, "f2");
  detail::require_fraction(params.f3, "f3");
  detail::require_fraction(params.kappa, "kappa");
  detail::require_fraction(params.m, "m");
  require(params.f2 + params.f3 <= 1.0,
          "f2 + f3 must be <= 1 (got " + std::to_string(params.f2 + params.f3) + ")");
}

inline void validate(const State& state) {
  const std::array<double, 7> values = {state.S, state.A, state.I,   state.Q,
                                        state.H, state.Hbar, state.D};
  const std::array<const char*, 7> names = {"S", "A", "I", "Q", "H", "Hbar", "D"};
  for (std::size_t i = 0; i < values.size(); ++i) {
    detail::require(std::isfinite(values[i]) && values[i] >= 0.0,
                    std::string(names[i]) + " must be finite and >= 0");
  }
}

}  // namespace saiqh

#endif  // SAIQH_TYPES_HPP
