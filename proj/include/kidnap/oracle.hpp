#pragma once

#include <array>
#include <optional>

#include "kidnap/model.hpp"
#include "kidnap/solver.hpp"

// Independent brute-force verifier. Discretizes the (demand, offer) strategy
// spaces, evaluates exact outcome distributions from the game tree, and
// backward-inducts by exhaustive argmax. Expected values come from the
// outcome tree only, never from the closed forms the oracle is checking.

namespace kidnap {

// Discretization of the strategy spaces. The demand axis is the d_steps-node
// linspace on [0, d_max]; the D = 0 node is not a legal demand and is
// skipped, so the step is d_max/(d_steps-1). Offers at demand D are the
// c_steps evenly spaced values spanning [0, D] inclusive.
struct GridSpec {
  std::optional<double> d_max;  // default: 1.5x the upper critical demand, which brackets the argmax
  int d_steps = 601;
  int c_steps = 601;
  AlphaModel alpha_model = AlphaModel::Standard;
};

// Exact distribution over the five terminal outcomes for one strategy
// profile, with the probability-weighted payoffs.
struct OutcomeDistribution {
  std::array<double, kOutcomeCount> prob{};  // indexed by OutcomeTag
  PayoffPair expected{};

  double prob_of(OutcomeTag t) const { return prob[static_cast<int>(t)]; }
};

// Argmax result of the discretized backward induction. d_index is the node
// index on the [0, d_max] linspace (1 <= d_index < d_steps).
struct DiscreteEquilibrium {
  int b = 0;
  int d_index = 0;
  double d_value = 0.0;
  int c_index = 0;
  double c_value = 0.0;  // F's best reply at d_value
  int e = 0;
  double k_value = 0.0;
  double f_value = 0.0;
};

// Closed form vs oracle, gap per field against the grid resolution.
// offer_gap compares the oracle's best reply with the closed-form reply at
// the oracle's own demand node, which a concavity argument bounds by one
// C-step; d_gap is bounded by one D-step. v_bound is the Lipschitz-scaled
// step bound on |v_bar - k_value|. entry_decidable is false when |v_bar| is
// within v_bound of zero, where a grid of this resolution cannot resolve the
// sign of the entry value; b_match is ignored by `pass` in that band.
struct ComparisonReport {
  double d_step = 0.0;
  double c_step = 0.0;
  double d_gap = 0.0;
  bool d_pass = false;
  double offer_gap = 0.0;
  bool offer_pass = false;
  bool b_match = false;
  bool e_match = false;
  bool entry_decidable = true;
  double v_gap = 0.0;
  double v_bound = 0.0;
  bool v_pass = false;
  bool pass = false;
};

// Distribution over the terminal outcomes for the profile (b, D, C, e):
// with probability alpha the hostage is executed non-rationally; otherwise
// execution happens iff e = 1; the release branch splits (1-q0, q0), the
// execution branch (1-q1, q1).
OutcomeDistribution outcome_distribution(const ModelParams& p, int b, double demand,
                                         double offer, int e,
                                         AlphaModel model = AlphaModel::Standard);

// g.d_max when set, otherwise the bracketing default.
double resolved_d_max(const ModelParams& p, const GridSpec& g);

// For each grid demand: resolve e per offer by comparing the tree's expected
// K values, pick F's offer as the expected-utility argmax over the C grid
// (ties keep the smallest offer), then pick K's demand argmax (ties keep the
// smallest demand); b = 1 iff K's value is positive. Deterministic:
// identical inputs give identical results bit for bit.
DiscreteEquilibrium solve_discretized(const ModelParams& p, const GridSpec& g);

// Throws IncomparableRegime when closed.closed_form_applicable is false.
ComparisonReport compare(const ModelParams& p, const EquilibriumSolution& closed,
                         const DiscreteEquilibrium& disc, const GridSpec& g);

}  // namespace kidnap
