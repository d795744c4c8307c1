#include "kidnap/run.hpp"

#include <fstream>
#include <ostream>

#include "json.hpp"

namespace kidnap {

namespace {

using nlohmann::json;

void read_if_present(const json& j, const char* key, double& target) {
  if (j.contains(key)) {
    target = j.at(key).get<double>();
  }
}

std::vector<double> parse_grid(const json& j, const std::string& what) {
  if (j.is_array()) {
    auto values = j.get<std::vector<double>>();
    if (values.empty()) {
      throw DomainError(what + " grid must not be empty");
    }
    return values;
  }
  if (j.is_object() && j.contains("from") && j.contains("to") && j.contains("count")) {
    return linspace(j.at("from").get<double>(), j.at("to").get<double>(),
                    j.at("count").get<int>());
  }
  throw DomainError(what + " grid must be an array of values or {from, to, count}");
}

OutputFormat effective_format(const RunConfig& cfg, OutputFormat fallback) {
  return cfg.format.value_or(fallback);
}

}  // namespace

std::vector<double> linspace(double from, double to, int count) {
  if (count < 2) {
    throw DomainError("grid count must be at least 2");
  }
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i) {
    values[i] = from + (to - from) * (static_cast<double>(i) / (count - 1));
  }
  return values;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open config file: " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("config parse error in " + path + ": " + e.what());
  }

  read_if_present(j, "a", cfg.params.a);
  read_if_present(j, "q0", cfg.params.q0);
  read_if_present(j, "q1", cfg.params.q1);
  read_if_present(j, "w1", cfg.params.w1);
  read_if_present(j, "w2", cfg.params.w2);
  read_if_present(j, "x", cfg.params.x);
  read_if_present(j, "y", cfg.params.y);
  read_if_present(j, "z", cfg.params.z);
  if (j.contains("beta")) {
    cfg.params.beta = j.at("beta").get<double>();
  }
  if (j.contains("strict")) {
    cfg.strict = j.at("strict").get<bool>();
  }
  if (j.contains("out")) {
    cfg.out_path = j.at("out").get<std::string>();
  }
  if (j.contains("format")) {
    cfg.format = parse_format(j.at("format").get<std::string>());
  }

  if (j.contains("figure2")) {
    const json& blk = j.at("figure2");
    if (blk.contains("reference_q")) {
      cfg.figure2.reference_q = blk.at("reference_q").get<double>();
    }
    if (blk.contains("reference_w")) {
      cfg.figure2.reference_w = blk.at("reference_w").get<double>();
    }
    if (blk.contains("demands")) {
      cfg.figure2.demands = parse_grid(blk.at("demands"), "figure2 demand");
    }
  }
  if (j.contains("sweep")) {
    const json& blk = j.at("sweep");
    if (blk.contains("q0")) {
      cfg.sweep.q0_values = parse_grid(blk.at("q0"), "sweep q0");
    }
    if (blk.contains("q1")) {
      cfg.sweep.q1_values = parse_grid(blk.at("q1"), "sweep q1");
    }
  }
  if (j.contains("oracle_check")) {
    const json& blk = j.at("oracle_check");
    if (blk.contains("d_max")) {
      cfg.oracle_check.d_max = blk.at("d_max").get<double>();
    }
    if (blk.contains("d_steps")) {
      cfg.oracle_check.d_steps = blk.at("d_steps").get<int>();
    }
    if (blk.contains("c_steps")) {
      cfg.oracle_check.c_steps = blk.at("c_steps").get<int>();
    }
    if (blk.contains("alpha_model")) {
      const auto name = blk.at("alpha_model").get<std::string>();
      if (name == "standard") {
        cfg.oracle_check.alpha_model = AlphaModel::Standard;
      } else if (name == "extended") {
        cfg.oracle_check.alpha_model = AlphaModel::Extended;
      } else {
        throw DomainError("unknown alpha_model: " + name + " (expected standard|extended)");
      }
    }
  }
}

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const EquilibriumSolution sol = solve(cfg.params);
  if (!sol.closed_form_applicable && cfg.strict) {
    err << "closed form inapplicable for these parameters (strict mode)\n";
    return kExitInapplicableStrict;
  }
  emit_solution(out, sol, effective_format(cfg, OutputFormat::Json));
  return kExitOk;
}

int run_figure2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.figure2.reference_q || !cfg.figure2.reference_w) {
    err << "figure2 requires reference_q and reference_w\n";
    return kExitInvalidInput;
  }
  if (cfg.figure2.demands.empty()) {
    err << "figure2 requires a demand grid\n";
    return kExitInvalidInput;
  }
  const OfferCurve curve = figure2_data(cfg.params, *cfg.figure2.reference_q,
                                        *cfg.figure2.reference_w, cfg.figure2.demands);
  emit_offer_curve(out, curve, effective_format(cfg, OutputFormat::Csv));
  return kExitOk;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.sweep.q0_values.empty() || cfg.sweep.q1_values.empty()) {
    err << "sweep requires q0 and q1 grids\n";
    return kExitInvalidInput;
  }
  // The sweep replaces q0/q1 per cell, so only the base's remaining
  // parameters must be valid up front; bad grid values stay in their cell.
  ModelParams probe = cfg.params;
  probe.q0 = 0.5;
  probe.q1 = 0.5;
  validate_params(probe);
  const auto records = sweep(cfg.params, cfg.sweep.q0_values, cfg.sweep.q1_values);
  emit_sweep(out, records, effective_format(cfg, OutputFormat::Csv));
  return kExitOk;
}

int run_oracle_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelParams p = validate_params(cfg.params);
  const EquilibriumSolution closed = solve(p);
  const DiscreteEquilibrium disc = solve_discretized(p, cfg.oracle_check);
  ComparisonReport rep;
  try {
    rep = compare(p, closed, disc, cfg.oracle_check);
  } catch (const IncomparableRegime& e) {
    err << e.what() << "\n";
    if (cfg.strict) {
      return kExitInapplicableStrict;
    }
    // Informational only: the oracle result stands on its own here.
    emit_discrete(out, disc, effective_format(cfg, OutputFormat::Json));
    return kExitOk;
  }
  emit_comparison(out, rep, effective_format(cfg, OutputFormat::Json));
  return rep.pass ? kExitOk : kExitOracleMismatch;
}

int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto violations = check_params(cfg.params);
  if (!violations.empty()) {
    for (const auto& v : violations) {
      err << v << "\n";
    }
    return kExitInvalidInput;
  }
  out << "{\"valid\":true}\n";
  return kExitOk;
}

int dispatch(Command command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (command) {
      case Command::Solve:
        return run_solve(cfg, out, err);
      case Command::Figure2:
        return run_figure2(cfg, out, err);
      case Command::Sweep:
        return run_sweep(cfg, out, err);
      case Command::OracleCheck:
        return run_oracle_check(cfg, out, err);
      case Command::Validate:
        return run_validate(cfg, out, err);
    }
    err << "unknown command\n";
    return kExitInvalidInput;
  } catch (const ConstraintViolation& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace kidnap
