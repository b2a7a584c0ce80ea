#ifndef SAIQH_ERRORS_HPP
#define SAIQH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace saiqh {

/// Parameter, state or configuration outside its admissible range.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed scenario or data file. Carries the offending line and key when known.
class parse_error : public validation_error {
 public:
  parse_error(const std::string& what, std::size_t line, std::string key = {})
      : validation_error(what), line_(line), key_(std::move(key)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  std::size_t line_;
  std::string key_;
};

/// A formula evaluated outside its mathematical domain (N = 0, p = 1, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class no_endemic_equilibrium : public domain_error {
 public:
  explicit no_endemic_equilibrium(double r0)
      : domain_error("no endemic equilibrium: R0 = " + std::to_string(r0) + " <= 1"),
        r0_(r0) {}

  double r0() const noexcept { return r0_; }

 private:
  double r0_;
};

class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure inside a time-stepping loop; `step()` is the index of the step being computed.
class step_error : public numerical_error {
 public:
  step_error(std::size_t step, const std::string& what)
      : numerical_error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace saiqh

#endif  // SAIQH_ERRORS_HPP
