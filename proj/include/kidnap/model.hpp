#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kidnap/errors.hpp"

// Core model of the asymmetric kidnapping game: parameters, the terminal
// payoff table, the non-rational execution probability, and the stage
// expected values everything else is built from.
//
// All functions here are pure; values are immutable once validated, so
// concurrent use needs no synchronization.

namespace kidnap {

// Game constants. Monetary fields share one arbitrary money unit; utilities
// are linear in money. The symmetric special case is w1 == w2, q0 == q1.
struct ModelParams {
  double a = 0.0;   // credibility slope of the non-rational execution probability, in (0, 1)
  double q0 = 0.0;  // probability of capture after release, in (0, 1)
  double q1 = 0.0;  // probability of capture after execution, in (0, 1)
  double w1 = 0.0;  // family's disutility: execution, kidnapper at large
  double w2 = 0.0;  // family's disutility: execution, kidnapper caught
  double x = 0.0;   // kidnapper's disutility if caught after release
  double y = 0.0;   // kidnapper's disutility if not caught after execution
  double z = 0.0;   // kidnapper's disutility if caught after execution; z >= x
  std::optional<double> beta;  // nonnegative offset of the extended non-rational model
};

// Every violated constraint of `raw`; empty when the parameters are valid.
std::vector<std::string> check_params(const ModelParams& raw);

// Returns `raw` unchanged iff every invariant holds, otherwise throws
// ConstraintViolation listing each failed inequality.
ModelParams validate_params(const ModelParams& raw);

enum class OutcomeTag : int {
  NoKidnap = 0,
  ReleasedNotCaught = 1,  // ransom paid, kidnapper at large
  ReleasedCaught = 2,     // ransom recovered
  ExecutedNotCaught = 3,
  ExecutedCaught = 4,
};

inline constexpr int kOutcomeCount = 5;

// A terminal node of the game tree. The ransom amount is meaningful only for
// ReleasedNotCaught and must be nonnegative.
struct Outcome {
  OutcomeTag tag = OutcomeTag::NoKidnap;
  double ransom = 0.0;

  static Outcome no_kidnap() { return {OutcomeTag::NoKidnap, 0.0}; }
  static Outcome released_not_caught(double ransom) {
    return {OutcomeTag::ReleasedNotCaught, ransom};
  }
  static Outcome released_caught() { return {OutcomeTag::ReleasedCaught, 0.0}; }
  static Outcome executed_not_caught() { return {OutcomeTag::ExecutedNotCaught, 0.0}; }
  static Outcome executed_caught() { return {OutcomeTag::ExecutedCaught, 0.0}; }
};

struct PayoffPair {
  double k = 0.0;  // kidnapper
  double f = 0.0;  // family
};

// Terminal payoffs, one row per outcome:
//   NoKidnap             -> ( 0,  0)
//   ReleasedNotCaught(C) -> ( C, -C)
//   ReleasedCaught       -> (-x,  0)   (ransom recovered)
//   ExecutedNotCaught    -> (-y, -w1)
//   ExecutedCaught       -> (-z, -w2)
PayoffPair payoff(const ModelParams& p, const Outcome& o);

enum class AlphaModel { Standard, Extended };

// Probability that the kidnapper executes the hostage non-rationally after
// offer C against demand D: a * (1 - C/D). Lies in [0, a]; zero when the
// demand is met in full. Requires D > 0 and 0 <= C <= D.
double alpha(const ModelParams& p, double offer, double demand);

// Extended variant a * (1 - C/D + beta), clamped to 1. Stays positive at
// full payment. Requires p.beta.
double alpha_extended(const ModelParams& p, double offer, double demand);

double alpha_for_model(const ModelParams& p, double offer, double demand, AlphaModel model);

// K's expected payoff from releasing the hostage for ransom C:
// (1-q0)*C - q0*x.
double release_value(const ModelParams& p, double offer);

// K's expected payoff from executing the hostage: -(1-q1)*y - q1*z.
// Always negative.
double execute_value(const ModelParams& p);

// F's expected disutility magnitude once the hostage is executed:
// (1-q1)*w1 + q1*w2.
double expected_execution_disutility(const ModelParams& p);

// F's expected utility of offering C against demand D, release being K's
// rational choice:
//   (1-alpha)*(1-q0)*(-C) + alpha*[(1-q1)*(-w1) + q1*(-w2)].
// Strictly concave quadratic in C.
double family_utility(const ModelParams& p, double offer, double demand);

// dU/dC of family_utility at (C, D).
double family_utility_slope(const ModelParams& p, double offer, double demand);

// K's expected payoff given F's offer, with the rational execution choice
// resolved in K's favor: (1-alpha)*max(V0(C), V1) + alpha*V1.
double kidnapper_value_given_offer(const ModelParams& p, double offer, double demand);

}  // namespace kidnap
