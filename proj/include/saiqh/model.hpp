#ifndef SAIQH_MODEL_HPP
#define SAIQH_MODEL_HPP

#include <cmath>

#include "saiqh/errors.hpp"
#include "saiqh/types.hpp"

namespace saiqh {

/// Composite rates shared by the reproduction number and the equilibria.
///
/// calN / calD is the basic reproduction number. Every field is a plain
/// function of Parameters and can be recomputed independently.
struct DerivedConstants {
  double a0 = 0.0;  // q nu + mu
  double a1 = 0.0;  // delta1 + mu
  double a2 = 0.0;  // m omega + mu
  double a3 = 0.0;  // total exit rate of H
  double a4 = 0.0;  // delta2 (1 - f2 - f3), H -> Q
  double a5 = 0.0;  // p phi + mu
  double a6 = 0.0;  // delta1 (1 - f1), I -> H
  double a7 = 0.0;  // total exit rate of Hbar
  double eta_k = 0.0;
  double chi = 0.0;  // a3 a7 - delta2 eta_k f2
  double calN = 0.0;
  double calD = 0.0;
};

inline DerivedConstants derived_constants(const Parameters& params) {
  validate(params);
  const Parameters& pr = params;
  const double qnu = pr.q * pr.nu;
  DerivedConstants c;
  c.a0 = qnu + pr.mu;
  c.a1 = pr.delta1 + pr.mu;
  c.a2 = pr.m * pr.omega + pr.mu;
  c.a4 = pr.delta2 * (1.0 - pr.f2 - pr.f3);
  c.a3 = c.a4 + pr.delta2 * pr.f2 + pr.alpha1 * pr.f3 + pr.mu;
  c.a5 = pr.p * pr.phi + pr.mu;
  c.a6 = pr.delta1 * (1.0 - pr.f1);
  c.eta_k = pr.eta * (1.0 - pr.kappa);
  c.a7 = pr.alpha2 * pr.kappa + c.eta_k + pr.mu;
  // a3 a7 - delta2 eta_k f2 with the eta_k delta2 f2 product cancelled symbolically.
  c.chi = (c.a4 + pr.alpha1 * pr.f3 + pr.mu) * c.a7 + pr.delta2 * pr.f2 * (pr.alpha2 * pr.kappa + pr.mu);
  c.calN = pr.beta * c.a2 * (1.0 - pr.p) *
           (pr.lH * c.a6 * c.a7 * qnu + (pr.lA * c.a1 + qnu) * c.chi);
  c.calD = c.a0 * c.a1 * c.chi * (pr.p * pr.phi + c.a2);
  return c;
}

/// lambda = beta (lA A + I + lH H) / N. Hbar does not transmit.
inline double force_of_infection(const Parameters& params, const State& state) {
  const double n = state.total();
  if (!(n > 0.0)) throw domain_error("force of infection undefined for N = 0");
  return params.beta * (params.lA * state.A + state.I + params.lH * state.H) / n;
}

inline double reproduction_number(const Parameters& params) {
  const DerivedConstants c = derived_constants(params);
  return c.calN / c.calD;
}

/// The two closed forms of R0 evaluated separately, for cross-checking.
struct ReproductionNumberForms {
  /// Numerator expanded over a3 a7 and delta2 eta_k f2, without chi.
  double expanded = 0.0;
  /// Numerator factored through chi, with a1 + q nu written as a0 + delta1.
  double factored = 0.0;
};

inline ReproductionNumberForms reproduction_number_forms(const Parameters& params) {
  const DerivedConstants c = derived_constants(params);
  const Parameters& pr = params;
  const double qnu = pr.q * pr.nu;
  const double lead = pr.beta * c.a2 * (1.0 - pr.p);
  const double expanded =
      lead * ((pr.lH * c.a6 * qnu + (pr.lA * c.a1 + qnu) * c.a3) * c.a7 -
              pr.delta2 * c.eta_k * pr.f2 * (qnu + pr.lA * c.a1));
  const double factored =
      lead * (pr.lH * c.a6 * c.a7 * qnu + (pr.lA * (c.a0 + pr.delta1) + (1.0 - pr.lA) * qnu) * c.chi);
  return {expanded / c.calD, factored / c.calD};
}

/// Transmission rate at which R0 = 1, all other parameters fixed.
inline double critical_beta(const Parameters& params) {
  Parameters unit = params;
  unit.beta = 1.0;
  const double r0_per_beta = reproduction_number(unit);
  if (!(r0_per_beta > 0.0)) {
    throw domain_error("R0 is identically zero for these parameters; no critical beta");
  }
  return 1.0 / r0_per_beta;
}

enum class EquilibriumKind { dfe, endemic };

/// An equilibrium of the step map. D is cumulative and carried as 0 by convention.
struct EquilibriumPoint {
  EquilibriumKind kind = EquilibriumKind::dfe;
  State state;
  double lambda_star = 0.0;
};

inline EquilibriumPoint dfe(const Parameters& params) {
  validate(params);
  const double a2 = params.m * params.omega + params.mu;
  const double pphi = params.p * params.phi;
  const double denom = params.mu * (pphi + a2);
  EquilibriumPoint point;
  point.kind = EquilibriumKind::dfe;
  point.state.S = params.Lambda * a2 / denom;
  point.state.Q = params.Lambda * pphi / denom;
  return point;
}

struct EndemicLambda {
  double value = 0.0;
  /// R0 < 1: value is negative and has no epidemiological meaning.
  bool subcritical = false;
};

/// Force of infection at the endemic equilibrium.
///
/// lambda* = calD (R0 - 1) / ((1 - p) K) where
/// K = a2 (a1 + q nu) chi + q nu (a2 a6 (a7 + delta2 f2) + chi f1 delta1 + a4 a6 a7).
/// K is what remains of N* after the infected coordinates are divided by
/// lambda* (1 - p), so the result is exactly self-consistent with
/// force_of_infection at the returned point.
inline EndemicLambda endemic_lambda(const Parameters& params) {
  const DerivedConstants c = derived_constants(params);
  const Parameters& pr = params;
  if (pr.p >= 1.0) throw domain_error("endemic force of infection undefined for p = 1");
  const double qnu = pr.q * pr.nu;
  const double k = c.a2 * (c.a1 + qnu) * c.chi +
                   qnu * (c.a2 * c.a6 * (c.a7 + pr.delta2 * pr.f2) + c.chi * pr.f1 * pr.delta1 +
                          c.a4 * c.a6 * c.a7);
  const double value = (c.calN - c.calD) / ((1.0 - pr.p) * k);
  return {value, c.calN < c.calD};
}

/// The endemic point, coordinates over the shared denominator D_A. Requires R0 > 1.
inline EquilibriumPoint endemic_equilibrium(const Parameters& params) {
  const DerivedConstants c = derived_constants(params);
  const double r0 = c.calN / c.calD;
  if (!(r0 > 1.0)) throw no_endemic_equilibrium(r0);
  const Parameters& pr = params;
  const double lambda_star = endemic_lambda(params).value;
  const double qnu = pr.q * pr.nu;
  const double wm = pr.omega * pr.m;
  const double ell = lambda_star * (1.0 - pr.p);
  const double lam = pr.Lambda;
  const double d_a = pr.mu * c.calD +
                     ell * (c.chi * (c.a2 * c.a1 * c.a0 - pr.f1 * pr.delta1 * wm * qnu) -
                            c.a4 * c.a6 * c.a7 * qnu * wm);
  EquilibriumPoint point;
  point.kind = EquilibriumKind::endemic;
  point.lambda_star = lambda_star;
  State& s = point.state;
  s.S = c.a0 * c.a1 * c.a2 * lam * c.chi / d_a;
  s.A = c.a1 * c.a2 * lam * c.chi * ell / d_a;
  s.I = c.a2 * qnu * lam * c.chi * ell / d_a;
  s.Q = lam * (c.a0 * c.a1 * pr.p * pr.phi * c.chi + ell * qnu * (c.chi * pr.f1 * pr.delta1 + c.a4 * c.a6 * c.a7)) / d_a;
  s.H = c.a2 * c.a6 * c.a7 * qnu * lam * ell / d_a;
  s.Hbar = c.a2 * c.a6 * pr.delta2 * pr.f2 * qnu * lam * ell / d_a;
  return point;
}

}  // namespace saiqh

#endif  // SAIQH_MODEL_HPP
