#include "kidnap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kidnap {

namespace {

// The equilibrium-path gate: the equilibrium offer equals the lower critical
// demand, so the point formulas hold iff release is rational there.
void require_release_at_equilibrium_offer(const ModelParams& p) {
  const double d1 = critical_demands(p).d1;
  if (optimal_execution_choice(p, d1) == 1) {
    throw ClosedFormInapplicable(
        "rational execution preferred at the equilibrium offer " + std::to_string(d1) +
        "; use the discretized oracle");
  }
}

double entry_value_formula(const ModelParams& p) {
  return p.a * expected_execution_disutility(p) / (1.0 + p.a) - p.q0 * p.x;
}

}  // namespace

double OfferPolicy::offer(double demand) const {
  if (!(demand > 0.0)) {
    throw DomainError("demand must be positive");
  }
  if (demand <= d1) {
    return demand;
  }
  if (demand <= d2) {
    // Interior peak; clamping only absorbs rounding at the branch edges.
    return std::clamp(unconstrained_offer_peak(params, demand), 0.0, demand);
  }
  return 0.0;
}

int optimal_execution_choice(const ModelParams& p, double offer) {
  return release_value(p, offer) >= execute_value(p) ? 0 : 1;
}

std::optional<double> execution_threshold(const ModelParams& p) {
  const double c = (p.q0 * p.x - (1.0 - p.q1) * p.y - p.q1 * p.z) / (1.0 - p.q0);
  if (c > 0.0) {
    return c;
  }
  return std::nullopt;
}

OfferPolicy critical_demands(const ModelParams& p) {
  const double m = expected_execution_disutility(p);
  OfferPolicy policy;
  policy.d1 = p.a / (1.0 + p.a) * m / (1.0 - p.q0);
  policy.d2 = p.a / (1.0 - p.a) * m / (1.0 - p.q0);
  policy.params = p;
  return policy;
}

double unconstrained_offer_peak(const ModelParams& p, double demand) {
  if (!(demand > 0.0)) {
    throw DomainError("demand must be positive");
  }
  return expected_execution_disutility(p) / (2.0 * (1.0 - p.q0)) -
         (1.0 - p.a) * demand / (2.0 * p.a);
}

double optimal_offer(const ModelParams& p, double demand) {
  return critical_demands(p).offer(demand);
}

double kidnapper_value_of_demand(const ModelParams& p, double demand) {
  const OfferPolicy policy = critical_demands(p);
  const double offer = policy.offer(demand);
  if (optimal_execution_choice(p, offer) == 1) {
    throw ClosedFormInapplicable(
        "rational execution preferred at the optimal offer for demand " +
        std::to_string(demand) + "; use the discretized oracle");
  }
  if (demand <= policy.d1) {
    return (1.0 - p.q0) * demand - p.q0 * p.x;
  }
  if (demand <= policy.d2) {
    const double alpha_bar = alpha(p, offer, demand);
    const double v0_bar = release_value(p, offer);
    return (1.0 - alpha_bar) * v0_bar + alpha_bar * execute_value(p);
  }
  return p.a * execute_value(p) + (1.0 - p.a) * (-p.q0 * p.x);
}

double optimal_demand(const ModelParams& p) {
  require_release_at_equilibrium_offer(p);
  return critical_demands(p).d1;
}

double equilibrium_entry_value(const ModelParams& p) {
  require_release_at_equilibrium_offer(p);
  return entry_value_formula(p);
}

int optimal_entry(const ModelParams& p) {
  require_release_at_equilibrium_offer(p);
  return p.a * expected_execution_disutility(p) / (1.0 + p.a) > p.q0 * p.x ? 1 : 0;
}

EquilibriumSolution solve(const ModelParams& raw) {
  const ModelParams p = validate_params(raw);
  const OfferPolicy policy = critical_demands(p);

  EquilibriumSolution sol;
  sol.d_star = policy.d1;
  sol.offer_at_d_star = policy.offer(sol.d_star);  // = d_star: the offer fixed point
  // The flag is global: a positive threshold means rational execution
  // intrudes somewhere on the optimal-offer curve (which reaches C = 0), so
  // the piecewise value shape behind the demand argmax is no longer exact
  // even when the equilibrium point itself survives.
  sol.closed_form_applicable = !execution_threshold(p).has_value();
  sol.e = optimal_execution_choice(p, sol.offer_at_d_star);
  sol.alpha_star = alpha(p, sol.offer_at_d_star, sol.d_star);
  sol.v0_bar = release_value(p, sol.offer_at_d_star);
  sol.v1 = execute_value(p);

  if (sol.closed_form_applicable) {
    sol.v_bar = entry_value_formula(p);
    sol.family_value = family_utility(p, sol.offer_at_d_star, sol.d_star);
  } else {
    // Rational-execution-aware stage values at the nominal (d_star, offer);
    // the oracle is the authority on the actual equilibrium here.
    sol.v_bar = kidnapper_value_given_offer(p, sol.offer_at_d_star, sol.d_star);
    sol.family_value = sol.e == 0 ? family_utility(p, sol.offer_at_d_star, sol.d_star)
                                  : -expected_execution_disutility(p);
  }
  sol.b = sol.v_bar > 0.0 ? 1 : 0;
  return sol;
}

ModelParams selten_specialize(double a, double w, double x, double y, double z, double q) {
  ModelParams p;
  p.a = a;
  p.q0 = q;
  p.q1 = q;
  p.w1 = w;
  p.w2 = w;
  p.x = x;
  p.y = y;
  p.z = z;
  return validate_params(p);
}

}  // namespace kidnap
