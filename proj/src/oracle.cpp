#include "kidnap/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace kidnap {

namespace {

void check_grid(const GridSpec& g) {
  if (g.d_max && !(*g.d_max > 0.0)) {
    throw DomainError("d_max must be positive");
  }
  if (g.d_steps < 2 || g.c_steps < 2) {
    throw DomainError("d_steps and c_steps must each be at least 2");
  }
}

}  // namespace

OutcomeDistribution outcome_distribution(const ModelParams& p, int b, double demand,
                                         double offer, int e, AlphaModel model) {
  if (b != 0 && b != 1) {
    throw DomainError("b must be 0 or 1");
  }
  if (e != 0 && e != 1) {
    throw DomainError("e must be 0 or 1");
  }

  OutcomeDistribution dist;
  if (b == 0) {
    dist.prob[static_cast<int>(OutcomeTag::NoKidnap)] = 1.0;
  } else {
    const double al = alpha_for_model(p, offer, demand, model);
    double exec_p;
    double release_p;
    if (e == 1) {
      // Rational execution: the hostage dies on both branches.
      exec_p = 1.0;
      release_p = 0.0;
    } else {
      exec_p = al;
      release_p = 1.0 - al;
    }
    dist.prob[static_cast<int>(OutcomeTag::ReleasedNotCaught)] = release_p * (1.0 - p.q0);
    dist.prob[static_cast<int>(OutcomeTag::ReleasedCaught)] = release_p * p.q0;
    dist.prob[static_cast<int>(OutcomeTag::ExecutedNotCaught)] = exec_p * (1.0 - p.q1);
    dist.prob[static_cast<int>(OutcomeTag::ExecutedCaught)] = exec_p * p.q1;
  }

  const Outcome outcomes[kOutcomeCount] = {
      Outcome::no_kidnap(),
      Outcome::released_not_caught(offer),
      Outcome::released_caught(),
      Outcome::executed_not_caught(),
      Outcome::executed_caught(),
  };
  for (int i = 0; i < kOutcomeCount; ++i) {
    if (dist.prob[i] == 0.0) {
      continue;
    }
    const PayoffPair pay = payoff(p, outcomes[i]);
    dist.expected.k += dist.prob[i] * pay.k;
    dist.expected.f += dist.prob[i] * pay.f;
  }
  return dist;
}

double resolved_d_max(const ModelParams& p, const GridSpec& g) {
  if (g.d_max) {
    return *g.d_max;
  }
  // K's value is constant past the upper critical demand, so 1.5x provably
  // brackets the argmax.
  return 1.5 * critical_demands(p).d2;
}

DiscreteEquilibrium solve_discretized(const ModelParams& raw, const GridSpec& g) {
  const ModelParams p = validate_params(raw);
  check_grid(g);
  if (g.alpha_model == AlphaModel::Extended && !p.beta) {
    throw MissingBeta();
  }

  const double d_max = resolved_d_max(p, g);
  const int n_d = g.d_steps;
  const int n_c = g.c_steps;

  DiscreteEquilibrium best;
  double best_k = -std::numeric_limits<double>::infinity();

  for (int i = 1; i < n_d; ++i) {
    const double demand = d_max * (static_cast<double>(i) / (n_d - 1));

    // F's best reply on the C grid, e resolved per offer from the tree.
    int reply_index = 0;
    int reply_e = 0;
    double reply_offer = 0.0;
    double reply_f = -std::numeric_limits<double>::infinity();
    double reply_k = 0.0;
    for (int j = 0; j < n_c; ++j) {
      const double offer = demand * (static_cast<double>(j) / (n_c - 1));
      const OutcomeDistribution released =
          outcome_distribution(p, 1, demand, offer, 0, g.alpha_model);
      const OutcomeDistribution executed =
          outcome_distribution(p, 1, demand, offer, 1, g.alpha_model);
      const int e = released.expected.k >= executed.expected.k ? 0 : 1;
      const OutcomeDistribution& cell = e == 0 ? released : executed;
      if (cell.expected.f > reply_f) {  // strict: ties keep the smallest offer
        reply_f = cell.expected.f;
        reply_k = cell.expected.k;
        reply_index = j;
        reply_offer = offer;
        reply_e = e;
      }
    }

    if (reply_k > best_k) {  // strict: ties keep the smallest demand
      best_k = reply_k;
      best.d_index = i;
      best.d_value = demand;
      best.c_index = reply_index;
      best.c_value = reply_offer;
      best.e = reply_e;
      best.k_value = reply_k;
      best.f_value = reply_f;
    }
  }

  best.b = best.k_value > 0.0 ? 1 : 0;
  return best;
}

ComparisonReport compare(const ModelParams& p, const EquilibriumSolution& closed,
                         const DiscreteEquilibrium& disc, const GridSpec& g) {
  if (!closed.closed_form_applicable) {
    throw IncomparableRegime(
        "closed form inapplicable for these parameters; oracle result is informational only");
  }
  check_grid(g);

  const double d_max = resolved_d_max(p, g);
  ComparisonReport rep;
  rep.d_step = d_max / (g.d_steps - 1);
  rep.c_step = disc.d_value / (g.c_steps - 1);

  const double scale = std::max(1.0, std::abs(closed.d_star));
  const double slack = 1e-9 * scale;

  rep.d_gap = std::abs(closed.d_star - disc.d_value);
  rep.d_pass = rep.d_gap <= rep.d_step + slack;

  rep.offer_gap = std::abs(optimal_offer(p, disc.d_value) - disc.c_value);
  rep.offer_pass = rep.offer_gap <= rep.c_step + slack;

  rep.b_match = closed.b == disc.b;
  rep.e_match = closed.e == disc.e;

  // K's achieved grid value sits below v_bar by at most the demand-axis
  // Lipschitz term (1-q0)*d_step, and can overshoot by at most the offer-axis
  // slope of K's value times the worst C-step anywhere on the grid.
  const double c_step_max = d_max / (g.c_steps - 1);
  const double v0_at_dmax = release_value(p, d_max);
  const double offer_slope =
      p.a * (v0_at_dmax - closed.v1) / d_max + (1.0 - p.q0);
  rep.v_bound = std::max((1.0 - p.q0) * rep.d_step, offer_slope * c_step_max);
  rep.v_gap = std::abs(closed.v_bar - disc.k_value);
  rep.v_pass = rep.v_gap <= rep.v_bound + slack;

  // Within v_bound of zero the grid cannot resolve the sign of the entry
  // value, so b is compared only outside that band.
  rep.entry_decidable = std::abs(closed.v_bar) > rep.v_bound + slack;

  rep.pass = rep.d_pass && rep.offer_pass && rep.e_match && rep.v_pass &&
             (rep.b_match || !rep.entry_decidable);
  return rep;
}

}  // namespace kidnap
