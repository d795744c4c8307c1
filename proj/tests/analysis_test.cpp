#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "kidnap/analysis.hpp"
#include "test_util.hpp"

using namespace kidnap;
using kidnap::testing::fixture;
using kidnap::testing::sample_applicable;
using kidnap::testing::uniform;

TEST_CASE("singleton sweep reproduces solve bit for bit") {
  const ModelParams p = fixture();
  const std::vector<double> q0s = {0.2};
  const std::vector<double> q1s = {0.6};
  const auto records = sweep(p, q0s, q1s);
  REQUIRE(records.size() == 1);

  const EquilibriumSolution sol = solve(p);
  const OfferPolicy policy = critical_demands(p);
  CHECK(records[0].q0 == 0.2);
  CHECK(records[0].q1 == 0.6);
  CHECK(records[0].d1 == policy.d1);
  CHECK(records[0].d2 == policy.d2);
  CHECK(records[0].d_star == sol.d_star);
  CHECK(records[0].v_bar == sol.v_bar);
  CHECK(records[0].b == sol.b);
  CHECK(records[0].e == sol.e);
  CHECK(records[0].applicable == sol.closed_form_applicable);
}

TEST_CASE("sweep rows are row-major with q0 outermost") {
  const std::vector<double> q0s = {0.1, 0.2};
  const std::vector<double> q1s = {0.5, 0.6, 0.7};
  const auto records = sweep(fixture(), q0s, q1s);
  REQUIRE(records.size() == 6);
  CHECK(records[0].q0 == 0.1);
  CHECK(records[0].q1 == 0.5);
  CHECK(records[2].q0 == 0.1);
  CHECK(records[2].q1 == 0.7);
  CHECK(records[3].q0 == 0.2);
  CHECK(records[3].q1 == 0.5);
}

TEST_CASE("demand falls in q1 when the at-large disutility dominates") {
  const std::vector<double> q0s = {0.2};
  const std::vector<double> q1s = {0.3, 0.6, 0.9};
  const auto records = sweep(fixture(), q0s, q1s);  // w1 = 100 > w2 = 60
  REQUIRE(records.size() == 3);
  CHECK(records[0].d_star > records[1].d_star);
  CHECK(records[1].d_star > records[2].d_star);
}

TEST_CASE("demand rises in q0") {
  const std::vector<double> q0s = {0.1, 0.2, 0.4};
  const std::vector<double> q1s = {0.6};
  const auto records = sweep(fixture(), q0s, q1s);
  REQUIRE(records.size() == 3);
  CHECK(records[0].d_star < records[1].d_star);
  CHECK(records[1].d_star < records[2].d_star);
}

TEST_CASE("sweep confines bad cells without aborting") {
  const std::vector<double> q0s = {0.2, 1.0};  // 1.0 violates 0 < q0 < 1
  const std::vector<double> q1s = {0.6};
  const auto records = sweep(fixture(), q0s, q1s);
  REQUIRE(records.size() == 2);
  CHECK(records[0].applicable);
  CHECK(!records[1].applicable);
  CHECK(std::isnan(records[1].d_star));
  CHECK(records[1].q0 == 1.0);

  // A reversed-probability cell stays in-sweep, merely flagged.
  const std::vector<double> reversed_q0s = {0.9};
  const std::vector<double> reversed_q1s = {0.1};
  const auto flagged = sweep(fixture(), reversed_q0s, reversed_q1s);
  REQUIRE(flagged.size() == 1);
  CHECK(!flagged[0].applicable);
  CHECK(std::isfinite(flagged[0].d_star));
}

TEST_CASE("sweep boundary in b follows the entry condition") {
  // v_bar = a*m/(1+a) - q0*x crosses zero inside the q0 grid.
  const ModelParams p = fixture();
  std::vector<double> q0s;
  for (int i = 1; i <= 40; ++i) {
    q0s.push_back(0.02 * i * 0.8);  // 0.016 .. 0.64, q1 kept at 0.66
  }
  const std::vector<double> q1s = {0.66};
  const auto records = sweep(p, q0s, q1s);
  for (const auto& rec : records) {
    const ModelParams cell = [&] {
      ModelParams c = p;
      c.q0 = rec.q0;
      c.q1 = rec.q1;
      return c;
    }();
    const double lhs = cell.a * expected_execution_disutility(cell) / (1.0 + cell.a);
    CHECK(rec.b == (lhs > cell.q0 * cell.x ? 1 : 0));
  }
}

TEST_CASE("figure2_data worked values") {
  const std::vector<double> grid = {20.0, 60.0, 100.0};
  const OfferCurve curve = figure2_data(fixture(), 0.2, 76.0, grid);
  REQUIRE(curve.demand.size() == 3);
  CHECK(curve.offer_asym[0] == 20.0);
  CHECK(curve.offer_asym[1] == doctest::Approx(17.5).epsilon(1e-12));
  CHECK(curve.offer_asym[2] == 0.0);

  // The symmetric reference at (q=0.2, w=76) peaks at d1 = 95/3 as well.
  const std::vector<double> peak = {95.0 / 3.0};
  const OfferCurve at_peak = figure2_data(fixture(), 0.2, 76.0, peak);
  CHECK(at_peak.offer_selten[0] == doctest::Approx(95.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("figure2 curves coincide when the parameters are already symmetric") {
  std::mt19937 rng(51);
  for (int i = 0; i < 50; ++i) {
    const double q = uniform(rng, 0.05, 0.95);
    const double w = uniform(rng, 1.0, 200.0);
    const ModelParams p = selten_specialize(uniform(rng, 0.05, 0.95), w, 30.0, 10.0, 50.0, q);
    std::vector<double> grid;
    for (int k = 1; k <= 20; ++k) {
      grid.push_back(uniform(rng, 0.5, 3.0) * critical_demands(p).d2);
    }
    const OfferCurve curve = figure2_data(p, q, w, grid);
    for (size_t j = 0; j < grid.size(); ++j) {
      CHECK(curve.offer_asym[j] == curve.offer_selten[j]);
      CHECK(curve.offer_asym[j] >= 0.0);
      CHECK(curve.offer_asym[j] <= curve.demand[j]);
    }
  }
}

TEST_CASE("figure2_data rejects nonpositive demands") {
  const std::vector<double> grid = {20.0, 0.0};
  CHECK_THROWS_AS(figure2_data(fixture(), 0.2, 76.0, grid), DomainError);
  const std::vector<double> neg = {-5.0};
  CHECK_THROWS_AS(figure2_data(fixture(), 0.2, 76.0, neg), DomainError);
}

TEST_CASE("sensitivity to q0 matches the analytic derivative") {
  const SensitivityReport rep = sensitivity(fixture(), SensitivityParam::Q0, 1e-5);
  REQUIRE(rep.analytic_d_star);
  CHECK(*rep.analytic_d_star == doctest::Approx(39.583).epsilon(1e-3));
  CHECK(rep.fd_d_star == doctest::Approx(*rep.analytic_d_star).epsilon(1e-4));
  REQUIRE(rep.rel_err_d_star);
  CHECK(*rep.rel_err_d_star <= 1e-4);
  REQUIRE(rep.analytic_v_bar);
  CHECK(*rep.analytic_v_bar == doctest::Approx(-40.0).epsilon(1e-9));
}

TEST_CASE("sensitivity to q1 matches the analytic derivative") {
  const SensitivityReport rep = sensitivity(fixture(), SensitivityParam::Q1, 1e-5);
  REQUIRE(rep.analytic_d_star);
  CHECK(*rep.analytic_d_star == doctest::Approx(-16.6667).epsilon(1e-4));
  CHECK(rep.fd_d_star == doctest::Approx(*rep.analytic_d_star).epsilon(1e-4));
  REQUIRE(rep.analytic_v_bar);
  CHECK(*rep.analytic_v_bar == doctest::Approx(-13.3333).epsilon(1e-4));
  CHECK(rep.fd_v_bar == doctest::Approx(-13.3333).epsilon(1e-4));
}

TEST_CASE("sensitivity covers the money parameters without analytic routes") {
  const SensitivityReport rep = sensitivity(fixture(), SensitivityParam::W1, 1e-4);
  CHECK(!rep.analytic_d_star);
  // dD1'/dw1 = a/(1+a) * (1-q1)/(1-q0) = (1/3) * 0.5 = 1/6.
  CHECK(rep.fd_d_star == doctest::Approx(1.0 / 6.0).epsilon(1e-6));

  const SensitivityReport rx = sensitivity(fixture(), SensitivityParam::X, 1e-4);
  CHECK(rx.fd_d_star == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(rx.fd_v_bar == doctest::Approx(-0.2).epsilon(1e-6));
}

TEST_CASE("sensitivity rejects steps that leave the constraint set") {
  CHECK_THROWS_AS(sensitivity(fixture(), SensitivityParam::Q0, 0.3), StepTooLarge);
  CHECK_THROWS_AS(sensitivity(fixture(), SensitivityParam::Q1, 0.5), StepTooLarge);
  CHECK_THROWS_AS(sensitivity(fixture(), SensitivityParam::X, 1000.0), StepTooLarge);
  CHECK_THROWS_AS(sensitivity(fixture(), SensitivityParam::Q0, 0.0), StepTooLarge);
}

TEST_CASE("analytic and finite-difference sensitivities agree on random sets") {
  std::mt19937 rng(52);
  int done = 0;
  while (done < 100) {
    const ModelParams p = sample_applicable(rng);
    const double h = 1e-5;
    if (p.q0 - h <= 0.0 || p.q1 + h >= 1.0 || p.q1 - h <= p.q0 + h) {
      continue;
    }
    const SensitivityReport r0 = sensitivity(p, SensitivityParam::Q0, h);
    REQUIRE(r0.rel_err_d_star);
    CHECK(*r0.rel_err_d_star <= 1e-4);
    const SensitivityReport r1 = sensitivity(p, SensitivityParam::Q1, h);
    REQUIRE(r1.analytic_d_star);
    CHECK(std::abs(r1.fd_d_star - *r1.analytic_d_star) <=
          1e-4 * std::max(std::abs(*r1.analytic_d_star), 1e-3));
    ++done;
  }
}
