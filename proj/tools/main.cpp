#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kidnap/run.hpp"

namespace {

struct Overrides {
  std::optional<double> a, q0, q1, w1, w2, x, y, z, beta;
  std::optional<std::string> out;
  std::optional<std::string> format;
  bool strict = false;
};

void apply_override(const std::optional<double>& src, double& dst) {
  if (src) {
    dst = *src;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium toolkit for the asymmetric kidnapping game"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override file values)");

  Overrides ov;
  app.add_option("--a", ov.a, "credibility slope, in (0,1)");
  app.add_option("--q0", ov.q0, "capture probability after release");
  app.add_option("--q1", ov.q1, "capture probability after execution");
  app.add_option("--w1", ov.w1, "family disutility, execution + kidnapper at large");
  app.add_option("--w2", ov.w2, "family disutility, execution + kidnapper caught");
  app.add_option("--x", ov.x, "kidnapper disutility, caught after release");
  app.add_option("--y", ov.y, "kidnapper disutility, not caught after execution");
  app.add_option("--z", ov.z, "kidnapper disutility, caught after execution");
  app.add_option("--beta", ov.beta, "extended alpha offset");
  app.add_flag("--strict", ov.strict, "exit 3 when the closed form is inapplicable");
  app.add_option("--out", ov.out, "output path (default stdout)");
  app.add_option("--format", ov.format, "csv|jsonl|json")
      ->check(CLI::IsMember({"csv", "jsonl", "json"}));

  auto* cmd_solve = app.add_subcommand("solve", "closed-form equilibrium");
  auto* cmd_validate = app.add_subcommand("validate", "check the parameter constraints");

  auto* cmd_figure2 =
      app.add_subcommand("figure2", "offer-vs-demand curves, asymmetric and symmetric reference");
  std::optional<double> ref_q, ref_w;
  std::vector<double> demands;
  std::optional<double> d_from, d_to;
  std::optional<int> d_count;
  cmd_figure2->add_option("--reference-q", ref_q, "capture probability of the reference curve");
  cmd_figure2->add_option("--reference-w", ref_w, "execution disutility of the reference curve");
  cmd_figure2->add_option("--demand", demands, "explicit demand grid value (repeatable)");
  cmd_figure2->add_option("--d-from", d_from, "demand range start");
  cmd_figure2->add_option("--d-to", d_to, "demand range end");
  cmd_figure2->add_option("--d-count", d_count, "demand range sample count");

  auto* cmd_sweep = app.add_subcommand("sweep", "equilibrium sweep over (q0, q1)");
  std::vector<double> q0_values, q1_values;
  std::optional<double> q0_from, q0_to, q1_from, q1_to;
  std::optional<int> q0_count, q1_count;
  cmd_sweep->add_option("--q0-value", q0_values, "explicit q0 grid value (repeatable)");
  cmd_sweep->add_option("--q1-value", q1_values, "explicit q1 grid value (repeatable)");
  cmd_sweep->add_option("--q0-from", q0_from);
  cmd_sweep->add_option("--q0-to", q0_to);
  cmd_sweep->add_option("--q0-count", q0_count);
  cmd_sweep->add_option("--q1-from", q1_from);
  cmd_sweep->add_option("--q1-to", q1_to);
  cmd_sweep->add_option("--q1-count", q1_count);

  auto* cmd_oracle = app.add_subcommand("oracle-check", "closed form vs discretized oracle");
  std::optional<double> o_d_max;
  std::optional<int> o_d_steps, o_c_steps;
  std::optional<std::string> o_model;
  cmd_oracle->add_option("--d-max", o_d_max, "demand grid upper bound");
  cmd_oracle->add_option("--d-steps", o_d_steps, "demand grid node count");
  cmd_oracle->add_option("--c-steps", o_c_steps, "offer grid node count");
  cmd_oracle->add_option("--alpha-model", o_model, "standard|extended")
      ->check(CLI::IsMember({"standard", "extended"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kidnap::kExitOk : kidnap::kExitInvalidInput;
  }

  try {
    kidnap::RunConfig cfg;
    if (!config_path.empty()) {
      kidnap::load_config_file(config_path, cfg);
    }
    apply_override(ov.a, cfg.params.a);
    apply_override(ov.q0, cfg.params.q0);
    apply_override(ov.q1, cfg.params.q1);
    apply_override(ov.w1, cfg.params.w1);
    apply_override(ov.w2, cfg.params.w2);
    apply_override(ov.x, cfg.params.x);
    apply_override(ov.y, cfg.params.y);
    apply_override(ov.z, cfg.params.z);
    if (ov.beta) {
      cfg.params.beta = *ov.beta;
    }
    if (ov.strict) {
      cfg.strict = true;
    }
    if (ov.out) {
      cfg.out_path = *ov.out;
    }
    if (ov.format) {
      cfg.format = kidnap::parse_format(*ov.format);
    }

    kidnap::Command command = kidnap::Command::Solve;
    if (cmd_solve->parsed()) {
      command = kidnap::Command::Solve;
    } else if (cmd_validate->parsed()) {
      command = kidnap::Command::Validate;
    } else if (cmd_figure2->parsed()) {
      command = kidnap::Command::Figure2;
      if (ref_q) {
        cfg.figure2.reference_q = ref_q;
      }
      if (ref_w) {
        cfg.figure2.reference_w = ref_w;
      }
      if (!demands.empty()) {
        cfg.figure2.demands = demands;
      } else if (d_from && d_to && d_count) {
        cfg.figure2.demands = kidnap::linspace(*d_from, *d_to, *d_count);
      }
    } else if (cmd_sweep->parsed()) {
      command = kidnap::Command::Sweep;
      if (!q0_values.empty()) {
        cfg.sweep.q0_values = q0_values;
      } else if (q0_from && q0_to && q0_count) {
        cfg.sweep.q0_values = kidnap::linspace(*q0_from, *q0_to, *q0_count);
      }
      if (!q1_values.empty()) {
        cfg.sweep.q1_values = q1_values;
      } else if (q1_from && q1_to && q1_count) {
        cfg.sweep.q1_values = kidnap::linspace(*q1_from, *q1_to, *q1_count);
      }
    } else if (cmd_oracle->parsed()) {
      command = kidnap::Command::OracleCheck;
      if (o_d_max) {
        cfg.oracle_check.d_max = o_d_max;
      }
      if (o_d_steps) {
        cfg.oracle_check.d_steps = *o_d_steps;
      }
      if (o_c_steps) {
        cfg.oracle_check.c_steps = *o_c_steps;
      }
      if (o_model) {
        cfg.oracle_check.alpha_model =
            *o_model == "extended" ? kidnap::AlphaModel::Extended : kidnap::AlphaModel::Standard;
      }
    }

    if (cfg.out_path.empty()) {
      return kidnap::dispatch(command, cfg, std::cout, std::cerr);
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << cfg.out_path << "\n";
      return kidnap::kExitInvalidInput;
    }
    return kidnap::dispatch(command, cfg, out, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kidnap::kExitInvalidInput;
  }
}
