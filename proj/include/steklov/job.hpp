#pragma once

#include "steklov/perturbation.hpp"
#include "steklov/steklov_solver.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace steklov {

enum class Command { Wigner, Eval, Triple, Matrix, Perturb, Sweep, Solve, Validate };
enum class OutputFormat { Json, Csv, Svg };

Command parse_command(const std::string& name);
std::string command_name(Command c);
OutputFormat parse_format(const std::string& name);

/// One CLI job. Loaded from a JSON object such as
///   {"rho": [{"p": 2, "q": 0, "A": 1.0}], "k": 1, "eps": 0.001}
/// Optional keys: "k_range": [lo, hi], "eps_grid": [lo, hi] or
/// {"min", "max", "count"}, "modes": [[p, q], ...] for sweeps,
/// "solver": {"l_max", "rule_degree"}, "output", "format".
struct JobConfig {
  Command command = Command::Perturb;
  PerturbationField rho;
  int k_min = 1;
  int k_max = 1;
  double eps = 1e-3;
  std::vector<double> eps_grid;
  std::vector<std::pair<int, int>> modes;
  SolverConfig solver;
  std::optional<std::string> output;
  OutputFormat format = OutputFormat::Json;
};

/// Throws ConfigError on malformed input or an invariant violation.
JobConfig parse_job(const nlohmann::json& j, Command command);
JobConfig load_job(const std::string& path, Command command);

nlohmann::json rho_to_json(const PerturbationField& rho);
/// Accepts [{"p","q","A"}, ...]. Throws ConfigError.
PerturbationField rho_from_json(const nlohmann::json& j);

/// CSV with header p,q,A.
std::string rho_to_csv(const PerturbationField& rho);
PerturbationField rho_from_csv(const std::string& text);

nlohmann::json to_json(const PerturbationResult& r);
nlohmann::json to_json(const SymmetricMatrix& m, int k);
nlohmann::json to_json(const SteklovSpectrum& s);

/// 17 significant digits, shortest round-trip spelling not required.
std::string format_real(double v);

// One branch line of a sweep.
struct SweepRow {
  int p = 0;
  int q = 0;
  int k = 0;
  int branch = 0;
  double slope = 0.0;
  double normalized_slope = 0.0;
};

/// For each mode (p, q) with rho = {(p, q): 1} and each k in the range, one
/// row per branch.
std::vector<SweepRow> run_sweep(const JobConfig& cfg);

/// Header p,q,k,branch,slope,normalized_slope.
std::string sweep_csv(const std::vector<SweepRow>& rows);
/// Rows plus the first-order lines lambda = k + eps*slope on eps_grid.
nlohmann::json sweep_json(const std::vector<SweepRow>& rows, const std::vector<double>& eps_grid);
/// Line fans lambda = k + eps*slope, one panel per mode.
std::string sweep_svg(const std::vector<SweepRow>& rows, const std::vector<double>& eps_grid);

struct ValidateOptions {
  bool with_solver = false;
  std::uint64_t seed = 20210901;
  int random_fields = 100;
  std::optional<PerturbationField> extra_rho;
};

struct SuiteOutcome {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<SuiteOutcome> suites;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Runs the invariant suites: 3-j symmetries, closed form vs quadrature for
/// W, trace-zero scan, stationarity sign scan, and optionally the solver slope
/// comparison.
ValidationReport run_validate(const ValidateOptions& opts);

/// Random field with p <= max_degree (and nonzero A_{0,0} unless zero_mean).
PerturbationField random_field(std::uint64_t seed, int max_degree, bool zero_mean);

}  // namespace steklov
