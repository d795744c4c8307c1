#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kidnap/analysis.hpp"
#include "kidnap/oracle.hpp"
#include "kidnap/solver.hpp"

// Deterministic machine-readable emission. Numbers are printed in the
// shortest form that parses back to the same value; no locale is consulted,
// lines end in LF, CSV headers are mandatory.

namespace kidnap {

enum class OutputFormat { Csv, JsonLines, Json };

// "csv" | "jsonl" | "json"; throws DomainError otherwise.
OutputFormat parse_format(const std::string& name);

// Shortest round-trip decimal representation of v.
std::string format_double(double v);

void emit_solution(std::ostream& out, const EquilibriumSolution& sol, OutputFormat format);
void emit_offer_curve(std::ostream& out, const OfferCurve& curve, OutputFormat format);
void emit_sweep(std::ostream& out, const std::vector<SweepRecord>& records, OutputFormat format);
void emit_comparison(std::ostream& out, const ComparisonReport& rep, OutputFormat format);
void emit_discrete(std::ostream& out, const DiscreteEquilibrium& disc, OutputFormat format);

}  // namespace kidnap
