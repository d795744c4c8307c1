#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kidnap/analysis.hpp"
#include "kidnap/emit.hpp"
#include "kidnap/oracle.hpp"

// Command runners behind the CLI. A run is fully described by a RunConfig,
// assembled from a JSON config file plus flag overrides (flags win); the
// runners write the machine-readable result and return the process exit
// code. No environment variables are consulted.

namespace kidnap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInapplicableStrict = 3;
inline constexpr int kExitOracleMismatch = 4;

enum class Command { Solve, Figure2, Sweep, OracleCheck, Validate };

struct Figure2Config {
  std::optional<double> reference_q;
  std::optional<double> reference_w;
  std::vector<double> demands;
};

struct SweepConfig {
  std::vector<double> q0_values;
  std::vector<double> q1_values;
};

struct RunConfig {
  ModelParams params;
  bool strict = false;
  std::string out_path;  // empty: stdout
  std::optional<OutputFormat> format;
  Figure2Config figure2;
  SweepConfig sweep;
  GridSpec oracle_check;
};

// Merges the JSON config at `path` into cfg. Model parameters are flat
// top-level keys (a, q0, q1, w1, w2, x, y, z, beta) next to strict/out/format
// and the nested command blocks figure2 / sweep / oracle_check. Grids are
// either explicit arrays or {from, to, count} ranges.
void load_config_file(const std::string& path, RunConfig& cfg);

// Expands a parsed-JSON grid (array or {from, to, count}) to explicit values.
std::vector<double> linspace(double from, double to, int count);

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_figure2(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oracle_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Runs `command`, catching validation and domain failures into exit code 2.
int dispatch(Command command, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace kidnap
