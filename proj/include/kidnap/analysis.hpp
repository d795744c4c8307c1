#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kidnap/model.hpp"
#include "kidnap/solver.hpp"

// Comparative statics: policy sweeps over the capture probabilities,
// offer-vs-demand curve data, and derivative checks of the equilibrium
// quantities.

namespace kidnap {

// One cell of a (q0, q1) sweep. Mirrors solve() on the cell's parameters
// bit for bit; cells that fail validation carry NaN values and
// applicable = false.
struct SweepRecord {
  double q0 = 0.0;
  double q1 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d_star = 0.0;
  double v_bar = 0.0;
  int b = 0;
  int e = 0;
  bool applicable = false;
};

// Offer curves over a shared demand grid: the asymmetric policy for `p` and
// the symmetric reference policy at (reference_q, reference_w).
struct OfferCurve {
  std::vector<double> demand;
  std::vector<double> offer_asym;
  std::vector<double> offer_selten;
};

enum class SensitivityParam { Q0, Q1, A, W1, W2, X };

std::string to_string(SensitivityParam param);

// Central finite differences of d_star and v_bar with respect to one
// parameter, with the analytic derivative where available (q0, q1) and the
// relative error between the two routes.
struct SensitivityReport {
  SensitivityParam param = SensitivityParam::Q0;
  double h = 0.0;
  double fd_d_star = 0.0;
  double fd_v_bar = 0.0;
  std::optional<double> analytic_d_star;
  std::optional<double> analytic_v_bar;
  std::optional<double> rel_err_d_star;
  std::optional<double> rel_err_v_bar;
};

// One record per (q0, q1) pair, row-major with q0 outermost. Validation
// failures are confined to their cell and never abort the sweep.
std::vector<SweepRecord> sweep(const ModelParams& base, std::span<const double> q0_values,
                               std::span<const double> q1_values);

// Both curves over d_grid: optimal offers under `p` and under the symmetric
// specialization (a, reference_w, x, y, z, reference_q). Demands must be
// positive.
OfferCurve figure2_data(const ModelParams& p, double reference_q, double reference_w,
                        std::span<const double> d_grid);

// Throws StepTooLarge when p +/- h leaves the constraint set;
// ClosedFormInapplicable propagates from the closed-form pipeline.
SensitivityReport sensitivity(const ModelParams& p, SensitivityParam param, double h);

}  // namespace kidnap
