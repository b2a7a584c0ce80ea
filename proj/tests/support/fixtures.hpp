#ifndef SAIQH_TESTS_SUPPORT_FIXTURES_HPP
#define SAIQH_TESTS_SUPPORT_FIXTURES_HPP

#include <cmath>
#include <random>
#include <string>

#include "saiqh/types.hpp"

namespace saiqh::testing {

inline const std::string kDataDir = SAIQH_DATA_DIR;
inline const std::string kPortugalConfig = kDataDir + "/portugal_2020.cfg";
inline const std::string kPortugalObserved = kDataDir + "/portugal_active_2020-03-02_2020-05-04.csv";

inline constexpr double kPortugalN0 = 10286300.0;

/// Parameter values for Portugal, typed in independently of the bundled scenario file.
inline Parameters table2_parameters() {
  Parameters p;
  p.Lambda = (86579.0 + 26080.0) / 365.0;
  p.mu = 111793.0 / (365.0 * kPortugalN0);
  p.beta = 1.93;
  p.lA = 1.0;
  p.lH = 0.1;
  p.phi = 1.0 / 12.0;
  p.nu = 1.0 / 5.0;
  p.delta1 = 1.0 / 3.0;
  p.delta2 = 1.0 / 3.0;
  p.eta = 1.0 / 7.0;
  p.omega = 1.0 / 31.0;
  p.alpha1 = 1.0 / 7.0;
  p.alpha2 = 1.0 / 15.0;
  p.p = 0.674;
  p.q = 0.15;
  p.f1 = 0.96;
  p.f2 = 0.21;
  p.f3 = 0.03;
  p.kappa = 0.03;
  p.m = 0.075;
  return p;
}

inline State table2_initial_state() { return {10286285.0, 13.0, 2.0, 0.0, 0.0, 0.0, 0.0}; }

inline Parameters endemic_parameters() {
  Parameters p = table2_parameters();
  p.beta = 3.86;
  return p;
}

/// Random valid parameters spanning several orders of magnitude per rate.
class ModelGenerator {
 public:
  explicit ModelGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo_exp, double hi_exp) { return std::pow(10.0, uniform(lo_exp, hi_exp)); }

  Parameters parameters() {
    Parameters p;
    p.Lambda = log_uniform(0.0, 4.0);
    p.mu = log_uniform(-5.0, -1.0);
    p.beta = log_uniform(-2.0, 1.0);
    p.lA = uniform(0.0, 1.5);
    p.lH = uniform(0.0, 1.5);
    p.phi = log_uniform(-2.0, 0.0);
    p.nu = log_uniform(-2.0, 0.0);
    p.delta1 = log_uniform(-2.0, 0.0);
    p.delta2 = log_uniform(-2.0, 0.0);
    p.eta = log_uniform(-2.0, 0.0);
    p.omega = log_uniform(-2.0, 0.0);
    p.alpha1 = log_uniform(-2.0, 0.0);
    p.alpha2 = log_uniform(-2.0, 0.0);
    p.p = uniform(0.0, 1.0);
    p.q = uniform(0.0, 1.0);
    p.f1 = uniform(0.0, 1.0);
    p.f2 = uniform(0.0, 1.0);
    p.f3 = uniform(0.0, 1.0) * (1.0 - p.f2);
    p.kappa = uniform(0.0, 1.0);
    p.m = uniform(0.0, 1.0);
    return p;
  }

  /// Non-negative state with N = fraction * Lambda / mu, fraction in (0, 1].
  /// Each compartment is zero with probability 1/6.
  State state(const Parameters& p, double min_fraction = 0.01) {
    State s;
    double* slots[] = {&s.S, &s.A, &s.I, &s.Q, &s.H, &s.Hbar};
    double sum = 0.0;
    for (double* slot : slots) {
      *slot = uniform(0.0, 1.0) < 1.0 / 6.0 ? 0.0 : uniform(0.0, 1.0);
      sum += *slot;
    }
    if (sum == 0.0) {
      s.S = 1.0;
      sum = 1.0;
    }
    const double target = uniform(min_fraction, 1.0) * p.Lambda / p.mu;
    for (double* slot : slots) *slot *= target / sum;
    return s;
  }

  double step_size(double lo = 1e-3, double hi = 100.0) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace saiqh::testing

#endif  // SAIQH_TESTS_SUPPORT_FIXTURES_HPP
