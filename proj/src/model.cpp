#include "kidnap/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kidnap {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void check_offer_demand(double offer, double demand) {
  if (!(demand > 0.0)) {
    throw DomainError("demand must be positive (got " + num(demand) + ")");
  }
  if (!(offer >= 0.0 && offer <= demand)) {
    throw DomainError("offer must lie in [0, demand] (offer=" + num(offer) +
                      ", demand=" + num(demand) + ")");
  }
}

}  // namespace

std::vector<std::string> check_params(const ModelParams& raw) {
  std::vector<std::string> violations;
  if (!(raw.a > 0.0 && raw.a < 1.0)) {
    violations.push_back("0 < a < 1 violated (a=" + num(raw.a) + ")");
  }
  if (!(raw.q0 > 0.0 && raw.q0 < 1.0)) {
    violations.push_back("0 < q0 < 1 violated (q0=" + num(raw.q0) + ")");
  }
  if (!(raw.q1 > 0.0 && raw.q1 < 1.0)) {
    violations.push_back("0 < q1 < 1 violated (q1=" + num(raw.q1) + ")");
  }
  if (!positive_finite(raw.w1)) {
    violations.push_back("w1 > 0 violated (w1=" + num(raw.w1) + ")");
  }
  if (!positive_finite(raw.w2)) {
    violations.push_back("w2 > 0 violated (w2=" + num(raw.w2) + ")");
  }
  if (!positive_finite(raw.x)) {
    violations.push_back("x > 0 violated (x=" + num(raw.x) + ")");
  }
  if (!positive_finite(raw.y)) {
    violations.push_back("y > 0 violated (y=" + num(raw.y) + ")");
  }
  if (!positive_finite(raw.z)) {
    violations.push_back("z > 0 violated (z=" + num(raw.z) + ")");
  }
  // Comparable disutilities only make sense when both are positive numbers.
  if (positive_finite(raw.x) && positive_finite(raw.z) && raw.z < raw.x) {
    violations.push_back("z >= x violated (z=" + num(raw.z) + ", x=" + num(raw.x) + ")");
  }
  if (raw.beta && !(std::isfinite(*raw.beta) && *raw.beta >= 0.0)) {
    violations.push_back("beta >= 0 violated (beta=" + num(*raw.beta) + ")");
  }
  return violations;
}

ModelParams validate_params(const ModelParams& raw) {
  auto violations = check_params(raw);
  if (!violations.empty()) {
    throw ConstraintViolation(std::move(violations));
  }
  return raw;
}

PayoffPair payoff(const ModelParams& p, const Outcome& o) {
  switch (o.tag) {
    case OutcomeTag::NoKidnap:
      return {0.0, 0.0};
    case OutcomeTag::ReleasedNotCaught:
      if (!(o.ransom >= 0.0)) {
        throw DomainError("ransom must be nonnegative (got " + std::to_string(o.ransom) + ")");
      }
      return {o.ransom, -o.ransom};
    case OutcomeTag::ReleasedCaught:
      return {-p.x, 0.0};
    case OutcomeTag::ExecutedNotCaught:
      return {-p.y, -p.w1};
    case OutcomeTag::ExecutedCaught:
      return {-p.z, -p.w2};
  }
  throw DomainError("unknown outcome tag");
}

double alpha(const ModelParams& p, double offer, double demand) {
  check_offer_demand(offer, demand);
  return p.a * (1.0 - offer / demand);
}

double alpha_extended(const ModelParams& p, double offer, double demand) {
  if (!p.beta) {
    throw MissingBeta();
  }
  check_offer_demand(offer, demand);
  // The raw form can exceed 1 for large a*(1+beta); clamp since it is a
  // probability.
  return std::min(1.0, p.a * (1.0 - offer / demand + *p.beta));
}

double alpha_for_model(const ModelParams& p, double offer, double demand, AlphaModel model) {
  return model == AlphaModel::Standard ? alpha(p, offer, demand)
                                       : alpha_extended(p, offer, demand);
}

double release_value(const ModelParams& p, double offer) {
  if (!(offer >= 0.0)) {
    throw DomainError("offer must be nonnegative (got " + num(offer) + ")");
  }
  return (1.0 - p.q0) * offer - p.q0 * p.x;
}

double execute_value(const ModelParams& p) {
  return -(1.0 - p.q1) * p.y - p.q1 * p.z;
}

double expected_execution_disutility(const ModelParams& p) {
  return (1.0 - p.q1) * p.w1 + p.q1 * p.w2;
}

double family_utility(const ModelParams& p, double offer, double demand) {
  const double al = alpha(p, offer, demand);
  return (1.0 - al) * (1.0 - p.q0) * (-offer) + al * (-expected_execution_disutility(p));
}

double family_utility_slope(const ModelParams& p, double offer, double demand) {
  check_offer_demand(offer, demand);
  return -p.a * (1.0 - p.q0) * 2.0 * offer / demand +
         expected_execution_disutility(p) * p.a / demand - (1.0 - p.a) * (1.0 - p.q0);
}

double kidnapper_value_given_offer(const ModelParams& p, double offer, double demand) {
  const double al = alpha(p, offer, demand);
  const double v0 = release_value(p, offer);
  const double v1 = execute_value(p);
  return (1.0 - al) * std::max(v0, v1) + al * v1;
}

}  // namespace kidnap
