#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kidnap {

// Parameter validation failure. Collects every violated constraint so a
// caller can report them all at once.
class ConstraintViolation : public std::invalid_argument {
 public:
  explicit ConstraintViolation(std::vector<std::string> violations)
      : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& violations) {
    std::string msg = "invalid model parameters:";
    for (const auto& v : violations) {
      msg += "\n  - " + v;
    }
    return msg;
  }

  std::vector<std::string> violations_;
};

// An offer/demand pair outside the model's domain (demand <= 0, offer < 0,
// offer > demand, or a non-finite input).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Extended non-rational model requested on params without beta.
class MissingBeta : public std::logic_error {
 public:
  MissingBeta() : std::logic_error("extended alpha model requires beta") {}
};

// The closed-form equilibrium pipeline does not cover this parameter regime
// (rational execution intrudes); use the discretized oracle instead.
class ClosedFormInapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite-difference step that pushes the parameters outside their
// constraints.
class StepTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// compare() called on a closed-form solution that is not applicable.
class IncomparableRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kidnap
