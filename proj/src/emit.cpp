#include "kidnap/emit.hpp"

#include <array>
#include <charconv>

#include "json.hpp"

namespace kidnap {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* bool_str(bool v) { return v ? "true" : "false"; }

ordered_json solution_record(const EquilibriumSolution& sol) {
  ordered_json j;
  j["b"] = sol.b;
  j["d_star"] = sol.d_star;
  j["offer_at_d_star"] = sol.offer_at_d_star;
  j["e"] = sol.e;
  j["alpha_star"] = sol.alpha_star;
  j["v0_bar"] = sol.v0_bar;
  j["v1"] = sol.v1;
  j["v_bar"] = sol.v_bar;
  j["family_value"] = sol.family_value;
  j["applicable"] = sol.closed_form_applicable;
  return j;
}

ordered_json sweep_record(const SweepRecord& rec) {
  ordered_json j;
  j["q0"] = rec.q0;
  j["q1"] = rec.q1;
  j["d1"] = rec.d1;
  j["d2"] = rec.d2;
  j["d_star"] = rec.d_star;
  j["v_bar"] = rec.v_bar;
  j["b"] = rec.b;
  j["e"] = rec.e;
  j["applicable"] = rec.applicable;
  return j;
}

ordered_json curve_record(const OfferCurve& curve, size_t i) {
  ordered_json j;
  j["d"] = curve.demand[i];
  j["offer_asym"] = curve.offer_asym[i];
  j["offer_selten"] = curve.offer_selten[i];
  return j;
}

ordered_json discrete_record(const DiscreteEquilibrium& disc) {
  ordered_json j;
  j["b"] = disc.b;
  j["d_index"] = disc.d_index;
  j["d_value"] = disc.d_value;
  j["c_index"] = disc.c_index;
  j["c_value"] = disc.c_value;
  j["e"] = disc.e;
  j["k_value"] = disc.k_value;
  j["f_value"] = disc.f_value;
  return j;
}

ordered_json comparison_record(const ComparisonReport& rep) {
  ordered_json j;
  j["d_step"] = rep.d_step;
  j["c_step"] = rep.c_step;
  j["d_gap"] = rep.d_gap;
  j["d_pass"] = rep.d_pass;
  j["offer_gap"] = rep.offer_gap;
  j["offer_pass"] = rep.offer_pass;
  j["b_match"] = rep.b_match;
  j["e_match"] = rep.e_match;
  j["entry_decidable"] = rep.entry_decidable;
  j["v_gap"] = rep.v_gap;
  j["v_bound"] = rep.v_bound;
  j["v_pass"] = rep.v_pass;
  j["pass"] = rep.pass;
  return j;
}

void emit_record(std::ostream& out, const ordered_json& j, OutputFormat format) {
  // A single record renders the same for json and jsonl: one object, one line.
  (void)format;
  out << j.dump() << "\n";
}

void emit_table(std::ostream& out, const std::vector<ordered_json>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      arr.push_back(row);
    }
    out << arr.dump() << "\n";
  } else {
    for (const auto& row : rows) {
      out << row.dump() << "\n";
    }
  }
}

// CSV cell for an already-built JSON value; numbers keep their shortest form.
std::string csv_cell(const ordered_json& v) {
  if (v.is_boolean()) {
    return bool_str(v.get<bool>());
  }
  if (v.is_number_float()) {
    return format_double(v.get<double>());
  }
  if (v.is_number_integer()) {
    return std::to_string(v.get<long long>());
  }
  if (v.is_null()) {
    return "nan";
  }
  return v.get<std::string>();
}

void emit_csv(std::ostream& out, const std::vector<ordered_json>& rows) {
  if (rows.empty()) {
    return;
  }
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      out << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    out << "\n";
  }
}

void emit_rows(std::ostream& out, const std::vector<ordered_json>& rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    emit_csv(out, rows);
  } else {
    emit_table(out, rows, format);
  }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") {
    return OutputFormat::Csv;
  }
  if (name == "jsonl") {
    return OutputFormat::JsonLines;
  }
  if (name == "json") {
    return OutputFormat::Json;
  }
  throw DomainError("unknown output format: " + name + " (expected csv|jsonl|json)");
}

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void emit_solution(std::ostream& out, const EquilibriumSolution& sol, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    emit_csv(out, {solution_record(sol)});
  } else {
    emit_record(out, solution_record(sol), format);
  }
}

void emit_offer_curve(std::ostream& out, const OfferCurve& curve, OutputFormat format) {
  std::vector<ordered_json> rows;
  rows.reserve(curve.demand.size());
  for (size_t i = 0; i < curve.demand.size(); ++i) {
    rows.push_back(curve_record(curve, i));
  }
  emit_rows(out, rows, format);
}

void emit_sweep(std::ostream& out, const std::vector<SweepRecord>& records, OutputFormat format) {
  std::vector<ordered_json> rows;
  rows.reserve(records.size());
  for (const auto& rec : records) {
    rows.push_back(sweep_record(rec));
  }
  emit_rows(out, rows, format);
}

void emit_comparison(std::ostream& out, const ComparisonReport& rep, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    emit_csv(out, {comparison_record(rep)});
  } else {
    emit_record(out, comparison_record(rep), format);
  }
}

void emit_discrete(std::ostream& out, const DiscreteEquilibrium& disc, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    emit_csv(out, {discrete_record(disc)});
  } else {
    emit_record(out, discrete_record(disc), format);
  }
}

}  // namespace kidnap
