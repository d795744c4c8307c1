#include "kidnap/analysis.hpp"

#include <cmath>
#include <limits>

namespace kidnap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SweepRecord invalid_cell(double q0, double q1) {
  SweepRecord rec;
  rec.q0 = q0;
  rec.q1 = q1;
  rec.d1 = kNaN;
  rec.d2 = kNaN;
  rec.d_star = kNaN;
  rec.v_bar = kNaN;
  rec.b = 0;
  rec.e = 0;
  rec.applicable = false;
  return rec;
}

double& field(ModelParams& p, SensitivityParam param) {
  switch (param) {
    case SensitivityParam::Q0:
      return p.q0;
    case SensitivityParam::Q1:
      return p.q1;
    case SensitivityParam::A:
      return p.a;
    case SensitivityParam::W1:
      return p.w1;
    case SensitivityParam::W2:
      return p.w2;
    case SensitivityParam::X:
      return p.x;
  }
  throw DomainError("unknown sensitivity parameter");
}

}  // namespace

std::string to_string(SensitivityParam param) {
  switch (param) {
    case SensitivityParam::Q0:
      return "q0";
    case SensitivityParam::Q1:
      return "q1";
    case SensitivityParam::A:
      return "a";
    case SensitivityParam::W1:
      return "w1";
    case SensitivityParam::W2:
      return "w2";
    case SensitivityParam::X:
      return "x";
  }
  return "?";
}

std::vector<SweepRecord> sweep(const ModelParams& base, std::span<const double> q0_values,
                               std::span<const double> q1_values) {
  std::vector<SweepRecord> records;
  records.reserve(q0_values.size() * q1_values.size());
  for (double q0 : q0_values) {
    for (double q1 : q1_values) {
      ModelParams cell = base;
      cell.q0 = q0;
      cell.q1 = q1;
      try {
        const EquilibriumSolution sol = solve(cell);
        const OfferPolicy policy = critical_demands(cell);
        SweepRecord rec;
        rec.q0 = q0;
        rec.q1 = q1;
        rec.d1 = policy.d1;
        rec.d2 = policy.d2;
        rec.d_star = sol.d_star;
        rec.v_bar = sol.v_bar;
        rec.b = sol.b;
        rec.e = sol.e;
        rec.applicable = sol.closed_form_applicable;
        records.push_back(rec);
      } catch (const ConstraintViolation&) {
        records.push_back(invalid_cell(q0, q1));
      }
    }
  }
  return records;
}

OfferCurve figure2_data(const ModelParams& p, double reference_q, double reference_w,
                        std::span<const double> d_grid) {
  const ModelParams asym = validate_params(p);
  const ModelParams selten =
      selten_specialize(asym.a, reference_w, asym.x, asym.y, asym.z, reference_q);
  const OfferPolicy asym_policy = critical_demands(asym);
  const OfferPolicy selten_policy = critical_demands(selten);

  OfferCurve curve;
  curve.demand.reserve(d_grid.size());
  curve.offer_asym.reserve(d_grid.size());
  curve.offer_selten.reserve(d_grid.size());
  for (double d : d_grid) {
    if (!(d > 0.0)) {
      throw DomainError("figure demand grid values must be positive");
    }
    curve.demand.push_back(d);
    curve.offer_asym.push_back(asym_policy.offer(d));
    curve.offer_selten.push_back(selten_policy.offer(d));
  }
  return curve;
}

SensitivityReport sensitivity(const ModelParams& p, SensitivityParam param, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw StepTooLarge("step must be positive and finite");
  }
  ModelParams lo = validate_params(p);
  ModelParams hi = lo;
  field(lo, param) -= h;
  field(hi, param) += h;
  if (!check_params(lo).empty() || !check_params(hi).empty()) {
    throw StepTooLarge("step " + std::to_string(h) + " pushes " + to_string(param) +
                       " outside its constraints");
  }

  SensitivityReport rep;
  rep.param = param;
  rep.h = h;
  rep.fd_d_star = (optimal_demand(hi) - optimal_demand(lo)) / (2.0 * h);
  rep.fd_v_bar = (equilibrium_entry_value(hi) - equilibrium_entry_value(lo)) / (2.0 * h);

  const double m = expected_execution_disutility(p);
  switch (param) {
    case SensitivityParam::Q0:
      rep.analytic_d_star = p.a / (1.0 + p.a) * m / ((1.0 - p.q0) * (1.0 - p.q0));
      rep.analytic_v_bar = -p.x;
      break;
    case SensitivityParam::Q1:
      rep.analytic_d_star = p.a / (1.0 + p.a) * (p.w2 - p.w1) / (1.0 - p.q0);
      rep.analytic_v_bar = p.a * (p.w2 - p.w1) / (1.0 + p.a);
      break;
    default:
      break;
  }
  if (rep.analytic_d_star) {
    rep.rel_err_d_star = std::abs(rep.fd_d_star - *rep.analytic_d_star) /
                         std::max(std::abs(*rep.analytic_d_star),
                                  std::numeric_limits<double>::min());
  }
  if (rep.analytic_v_bar) {
    rep.rel_err_v_bar = std::abs(rep.fd_v_bar - *rep.analytic_v_bar) /
                        std::max(std::abs(*rep.analytic_v_bar),
                                 std::numeric_limits<double>::min());
  }
  return rep;
}

}  // namespace kidnap
