#pragma once

#include <optional>

#include "kidnap/model.hpp"

// Closed-form backward induction over the four decision stages of the game:
// rational execution (e), the family's offer (C), the kidnapper's demand (D),
// and entry (b).
//
// The closed form assumes release stays rational at every offer the optimal
// policy can produce. Regimes where rational execution intrudes (possible
// when q0 > q1) are flagged rather than solved; the discretized oracle
// handles those numerically.

namespace kidnap {

// F's piecewise optimal-offer policy: pay the demand in full up to d1, taper
// linearly to zero between d1 and d2, offer nothing beyond d2.
// d1 = a/(1+a) * m/(1-q0) and d2 = a/(1-a) * m/(1-q0), where m is the
// expected execution disutility; 0 < d1 < d2 for all valid params.
struct OfferPolicy {
  double d1 = 0.0;
  double d2 = 0.0;
  ModelParams params;

  // The optimal offer against `demand`; continuous, tent-shaped with peak
  // (d1, d1), always in [0, demand].
  double offer(double demand) const;
};

// The full subgame-perfect equilibrium record. When b = 0 the value fields
// describe the counterfactual kidnapping subgame; realized payoffs are
// (0, 0). When closed_form_applicable is false the stage fields are computed
// from the rational-execution-aware definitions and the discretized oracle
// is the authority on the actual equilibrium.
struct EquilibriumSolution {
  int b = 0;                     // entry decision
  double d_star = 0.0;           // optimal demand
  double offer_at_d_star = 0.0;  // F's reply at d_star
  int e = 0;                     // rational execution choice at the equilibrium offer
  double alpha_star = 0.0;       // non-rational execution probability at equilibrium
  double v0_bar = 0.0;           // K's release value at the equilibrium offer
  double v1 = 0.0;               // K's execution value
  double v_bar = 0.0;            // K's value of entering
  double family_value = 0.0;     // F's expected utility at equilibrium
  bool closed_form_applicable = true;
};

// 0 (release) iff V0(offer) >= V1; ties resolve to release.
int optimal_execution_choice(const ModelParams& p, double offer);

// Smallest offer making release weakly optimal,
//   (q0*x - (1-q1)*y - q1*z) / (1-q0),
// when positive; nullopt when release is optimal at every offer.
// optimal_execution_choice(p, c) == 1 exactly for c below the threshold.
std::optional<double> execution_threshold(const ModelParams& p);

OfferPolicy critical_demands(const ModelParams& p);

// Stationary point of family_utility in the offer,
//   m/(2(1-q0)) - (1-a)*demand/(2a);
// may fall outside [0, demand] (optimal_offer clips it).
double unconstrained_offer_peak(const ModelParams& p, double demand);

// C-bar(demand); see OfferPolicy::offer.
double optimal_offer(const ModelParams& p, double demand);

// K's expected value of announcing `demand` with F replying optimally:
//   (1-q0)*demand - q0*x                 for demand <= d1,
//   (1-alpha-bar)*V0-bar + alpha-bar*V1  for d1 < demand <= d2,
//   a*V1 + (1-a)*(-q0*x)                 beyond d2.
// Throws ClosedFormInapplicable when rational execution would be chosen at
// the optimal offer for this demand.
double kidnapper_value_of_demand(const ModelParams& p, double demand);

// The unique maximizer of kidnapper_value_of_demand; equals d1.
double optimal_demand(const ModelParams& p);

// K's value at the optimal demand: a*m/(1+a) - q0*x.
double equilibrium_entry_value(const ModelParams& p);

// 1 iff a*m/(1+a) > q0*x; ties resolve to 0 (no kidnapping).
int optimal_entry(const ModelParams& p);

// Backward-inducts all four stages and fills every field. Validates the
// parameters first.
EquilibriumSolution solve(const ModelParams& p);

// The symmetric special case w1 = w2 = w, q0 = q1 = q. Validates.
ModelParams selten_specialize(double a, double w, double x, double y, double z, double q);

}  // namespace kidnap
