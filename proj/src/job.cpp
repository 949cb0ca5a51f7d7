#include "steklov/job.hpp"

#include "steklov/errors.hpp"
#include "steklov/exact_wigner.hpp"
#include "steklov/triple_product.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace steklov {

using nlohmann::json;

namespace {

const std::map<std::string, Command> kCommands = {
    {"wigner", Command::Wigner}, {"eval", Command::Eval},   {"triple", Command::Triple},
    {"matrix", Command::Matrix}, {"perturb", Command::Perturb}, {"sweep", Command::Sweep},
    {"solve", Command::Solve},   {"validate", Command::Validate},
};

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ConfigError(std::string("config: '") + what + "' must be an integer");
  return j.get<int>();
}

double require_real(const json& j, const char* what) {
  if (!j.is_number()) throw ConfigError(std::string("config: '") + what + "' must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(std::string("config: '") + what + "' is not finite");
  return v;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  return v;
}

}  // namespace

Command parse_command(const std::string& name) {
  const auto it = kCommands.find(name);
  if (it == kCommands.end()) throw ConfigError("unknown command '" + name + "'");
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [name, cmd] : kCommands)
    if (cmd == c) return name;
  return "?";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "svg") return OutputFormat::Svg;
  throw ConfigError("unknown output format '" + name + "'");
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json rho_to_json(const PerturbationField& rho) {
  json arr = json::array();
  for (const auto& [key, value] : rho.coefficients()) arr.push_back({{"p", key.first}, {"q", key.second}, {"A", value}});
  return arr;
}

PerturbationField rho_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("config: 'rho' must be an array of {p, q, A}");
  PerturbationField rho;
  std::set<std::pair<int, int>> seen;
  for (const json& e : j) {
    if (!e.is_object() || !e.contains("p") || !e.contains("q") || !e.contains("A"))
      throw ConfigError("config: each rho entry needs p, q and A");
    const int p = require_int(e["p"], "p");
    const int q = require_int(e["q"], "q");
    const double a = require_real(e["A"], "A");
    if (!seen.insert({p, q}).second) throw ConfigError("config: duplicate rho entry");
    try {
      rho.set(p, q, a);
    } catch (const DomainError& err) {
      throw ConfigError(std::string("config: ") + err.what());
    }
  }
  return rho;
}

std::string rho_to_csv(const PerturbationField& rho) {
  std::ostringstream os;
  os << "p,q,A\n";
  for (const auto& [key, value] : rho.coefficients()) os << key.first << ',' << key.second << ',' << format_real(value) << '\n';
  return os.str();
}

PerturbationField rho_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "p,q,A") throw ConfigError("rho csv: missing header p,q,A");
  PerturbationField rho;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int p = 0;
    int q = 0;
    double a = 0.0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream row(line);
    if (!(row >> p >> c1 >> q >> c2 >> a) || c1 != ',' || c2 != ',') throw ConfigError("rho csv: bad row '" + line + "'");
    try {
      rho.set(p, q, a);
    } catch (const DomainError& err) {
      throw ConfigError(std::string("rho csv: ") + err.what());
    }
  }
  return rho;
}

JobConfig parse_job(const json& j, Command command) {
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  static const std::set<std::string> known = {"rho", "k", "k_range", "eps", "eps_grid", "modes",
                                              "solver", "output", "format", "command"};
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw ConfigError("config: unknown key '" + key + "'");

  JobConfig cfg;
  cfg.command = command;
  if (j.contains("command") && parse_command(j["command"].get<std::string>()) != command)
    throw ConfigError("config: 'command' does not match the subcommand");
  if (j.contains("rho")) cfg.rho = rho_from_json(j["rho"]);

  if (j.contains("k") && j.contains("k_range")) throw ConfigError("config: give either 'k' or 'k_range'");
  if (j.contains("k")) {
    cfg.k_min = cfg.k_max = require_int(j["k"], "k");
  } else if (j.contains("k_range")) {
    const json& r = j["k_range"];
    if (!r.is_array() || r.size() != 2) throw ConfigError("config: 'k_range' must be [lo, hi]");
    cfg.k_min = require_int(r[0], "k_range");
    cfg.k_max = require_int(r[1], "k_range");
  }
  if (cfg.k_min < 0 || cfg.k_max < cfg.k_min) throw ConfigError("config: need 0 <= k_lo <= k_hi");
  if (command == Command::Matrix && cfg.k_min < 1) throw ConfigError("config: matrix needs k >= 1");

  if (j.contains("eps")) cfg.eps = require_real(j["eps"], "eps");
  cfg.solver.eps = cfg.eps;

  if (j.contains("eps_grid")) {
    const json& g = j["eps_grid"];
    if (g.is_array()) {
      if (g.empty()) throw ConfigError("config: 'eps_grid' is empty");
      for (const json& v : g) cfg.eps_grid.push_back(require_real(v, "eps_grid"));
    } else if (g.is_object()) {
      if (!g.contains("min") || !g.contains("max") || !g.contains("count"))
        throw ConfigError("config: 'eps_grid' object needs min, max, count");
      const int count = require_int(g["count"], "count");
      if (count < 1) throw ConfigError("config: eps_grid count must be >= 1");
      cfg.eps_grid = linspace(require_real(g["min"], "min"), require_real(g["max"], "max"), count);
    } else {
      throw ConfigError("config: 'eps_grid' must be an array or {min, max, count}");
    }
  } else {
    cfg.eps_grid = linspace(-0.1, 0.1, 5);
  }

  if (j.contains("modes")) {
    const json& modes = j["modes"];
    if (!modes.is_array()) throw ConfigError("config: 'modes' must be an array of [p, q]");
    for (const json& m : modes) {
      if (!m.is_array() || m.size() != 2) throw ConfigError("config: each mode is [p, q]");
      const int p = require_int(m[0], "mode p");
      const int q = require_int(m[1], "mode q");
      if (p < 0 || std::abs(q) > p) throw ConfigError("config: mode violates |q| <= p");
      cfg.modes.emplace_back(p, q);
    }
  }
  if (command == Command::Sweep && cfg.modes.empty()) {
    for (const auto& [key, value] : cfg.rho.coefficients()) cfg.modes.push_back(key);
    if (cfg.modes.empty()) throw ConfigError("config: sweep needs 'modes' or 'rho'");
  }

  if (j.contains("solver")) {
    const json& s = j["solver"];
    if (!s.is_object()) throw ConfigError("config: 'solver' must be an object");
    for (const auto& [key, value] : s.items())
      if (key != "l_max" && key != "rule_degree") throw ConfigError("config: unknown solver key '" + key + "'");
    if (s.contains("l_max")) cfg.solver.l_max = require_int(s["l_max"], "l_max");
    if (s.contains("rule_degree")) cfg.solver.rule_degree = require_int(s["rule_degree"], "rule_degree");
  }
  if (command == Command::Solve) {
    try {
      cfg.solver.validate(cfg.rho);
    } catch (const DomainError& err) {
      throw ConfigError(std::string("config: ") + err.what());
    }
  }

  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
  return cfg;
}

JobConfig load_job(const std::string& path, Command command) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config parse error: ") + err.what());
  }
  return parse_job(j, command);
}

json to_json(const PerturbationResult& r) {
  return {{"k", r.k}, {"slopes", r.slopes}, {"vectors", r.vectors}, {"trace", r.trace}};
}

json to_json(const SymmetricMatrix& m, int k) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  std::vector<int> orders;
  for (int o = -k; o <= k; ++o) orders.push_back(o);
  return {{"k", k}, {"dim", m.dim()}, {"orders", orders}, {"rows", rows}, {"trace", m.trace()}};
}

json to_json(const SteklovSpectrum& s) {
  json basis = json::array();
  for (int l = 0; l <= s.l_max; ++l)
    for (int m = -l; m <= l; ++m) basis.push_back({l, m});
  return {{"l_max", s.l_max},           {"eps", s.eps},           {"eigenvalues", s.eigenvalues},
          {"basis", basis},             {"coefficients", s.coefficients}, {"asymmetry", s.asymmetry},
          {"warnings", s.warnings}};
}

std::vector<SweepRow> run_sweep(const JobConfig& cfg) {
  std::vector<SweepRow> rows;
  for (const auto& [p, q] : cfg.modes) {
    PerturbationField rho;
    rho.set(p, q, 1.0);
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
      const PerturbationResult r = eigen_slopes(k, rho);
      for (std::size_t b = 0; b < r.slopes.size(); ++b) {
        const int branch = static_cast<int>(b);
        rows.push_back({p, q, k, branch, r.slopes[b], normalized_slope(k, rho, branch)});
      }
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "p,q,k,branch,slope,normalized_slope\n";
  for (const SweepRow& r : rows)
    os << r.p << ',' << r.q << ',' << r.k << ',' << r.branch << ',' << format_real(r.slope) << ','
       << format_real(r.normalized_slope) << '\n';
  return os.str();
}

json sweep_json(const std::vector<SweepRow>& rows, const std::vector<double>& eps_grid) {
  json out = json::array();
  for (const SweepRow& r : rows) {
    json line = json::array();
    for (double e : eps_grid) line.push_back({e, r.k + e * r.slope});
    out.push_back({{"p", r.p},
                   {"q", r.q},
                   {"k", r.k},
                   {"branch", r.branch},
                   {"slope", r.slope},
                   {"normalized_slope", r.normalized_slope},
                   {"line", line}});
  }
  return {{"eps_grid", eps_grid}, {"rows", out}};
}

std::string sweep_svg(const std::vector<SweepRow>& rows, const std::vector<double>& eps_grid) {
  constexpr double kPanelW = 360.0;
  constexpr double kPanelH = 280.0;
  constexpr double kMargin = 40.0;

  std::vector<std::pair<int, int>> modes;
  for (const SweepRow& r : rows)
    if (std::find(modes.begin(), modes.end(), std::make_pair(r.p, r.q)) == modes.end()) modes.emplace_back(r.p, r.q);

  const auto [emin_it, emax_it] = std::minmax_element(eps_grid.begin(), eps_grid.end());
  const double emin = eps_grid.empty() ? -0.1 : *emin_it;
  const double emax = eps_grid.empty() ? 0.1 : (*emax_it > emin ? *emax_it : emin + 1.0);

  const std::size_t cols = std::min<std::size_t>(2, std::max<std::size_t>(1, modes.size()));
  const std::size_t panel_rows = (modes.size() + cols - 1) / std::max<std::size_t>(cols, 1);
  const double width = cols * kPanelW;
  const double height = std::max<std::size_t>(panel_rows, 1) * kPanelH;

  std::ostringstream os;
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t idx = 0; idx < modes.size(); ++idx) {
    const auto [p, q] = modes[idx];
    const double ox = (idx % cols) * kPanelW;
    const double oy = (idx / cols) * kPanelH;
    double lmin = std::numeric_limits<double>::infinity();
    double lmax = -lmin;
    for (const SweepRow& r : rows) {
      if (r.p != p || r.q != q) continue;
      for (double e : {emin, emax}) {
        lmin = std::min(lmin, r.k + e * r.slope);
        lmax = std::max(lmax, r.k + e * r.slope);
      }
    }
    lmin -= 0.25;
    lmax += 0.25;
    const double pw = kPanelW - 2 * kMargin;
    const double ph = kPanelH - 2 * kMargin;
    const auto sx = [&](double e) { return ox + kMargin + (e - emin) / (emax - emin) * pw; };
    const auto sy = [&](double l) { return oy + kMargin + (lmax - l) / (lmax - lmin) * ph; };

    os << "<g>\n<rect x=\"" << num(ox + kMargin) << "\" y=\"" << num(oy + kMargin) << "\" width=\"" << num(pw)
       << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(ox + kPanelW / 2) << "\" y=\"" << num(oy + kMargin - 12)
       << "\" text-anchor=\"middle\" font-size=\"14\">(p,q) = (" << p << "," << q << ")</text>\n";
    os << "<text x=\"" << num(ox + kPanelW / 2) << "\" y=\"" << num(oy + kPanelH - 10)
       << "\" text-anchor=\"middle\" font-size=\"12\">eps in [" << num(emin) << ", " << num(emax) << "]</text>\n";
    for (const SweepRow& r : rows) {
      if (r.p != p || r.q != q) continue;
      os << "<line x1=\"" << num(sx(emin)) << "\" y1=\"" << num(sy(r.k + emin * r.slope)) << "\" x2=\""
         << num(sx(emax)) << "\" y2=\"" << num(sy(r.k + emax * r.slope)) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

PerturbationField random_field(std::uint64_t seed, int max_degree, bool zero_mean) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  PerturbationField rho;
  for (int p = 0; p <= max_degree; ++p)
    for (int q = -p; q <= p; ++q) {
      const double a = coef(gen);
      if (p == 0 && zero_mean) continue;
      rho.set(p, q, a);
    }
  return rho;
}

bool ValidationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteOutcome& s) { return s.passed; });
}

json ValidationReport::to_json() const {
  json arr = json::array();
  for (const SuiteOutcome& s : suites)
    arr.push_back({{"name", s.name},
                   {"passed", s.passed},
                   {"max_deviation", s.max_deviation},
                   {"tolerance", s.tolerance},
                   {"detail", s.detail}});
  return {{"passed", passed()}, {"suites", arr}};
}

namespace {

SuiteOutcome wigner_suite() {
  constexpr int kMaxL = 4;
  long failures = 0;
  long checked = 0;
  for (int l1 = 0; l1 <= kMaxL; ++l1)
    for (int l2 = 0; l2 <= kMaxL; ++l2)
      for (int l3 = 0; l3 <= kMaxL; ++l3) {
        const bool triangle = l3 >= std::abs(l1 - l2) && l3 <= l1 + l2;
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > l3) continue;
            const SignedSqrtRational w = wigner3j({l1, l2, l3, m1, m2, m3});
            const SignedSqrtRational flipped = wigner3j({l1, l2, l3, -m1, -m2, -m3});
            const int s = ((l1 + l2 + l3) % 2 == 0) ? 1 : -1;
            if (flipped != SignedSqrtRational(s * w.sign(), w.radicand())) ++failures;
            if (wigner3j({l2, l3, l1, m2, m3, m1}) != w) ++failures;
            if (!triangle && !w.is_zero()) ++failures;
            ++checked;
          }
        if (!triangle) continue;
        for (int m3 = -l3; m3 <= l3; ++m3) {
          BigRational total(0);
          for (int m1 = -l1; m1 <= l1; ++m1) {
            const int m2 = -m1 - m3;
            if (std::abs(m2) <= l2) total += wigner3j({l1, l2, l3, m1, m2, m3}).squared();
          }
          if (total != BigRational(1, 2 * l3 + 1)) ++failures;
        }
      }
  SuiteOutcome out{"wigner_symmetry", failures == 0, static_cast<double>(failures), 0.0, ""};
  out.detail = std::to_string(checked) + " symbols with l <= " + std::to_string(kMaxL) + ", exact comparisons";
  return out;
}

SuiteOutcome triple_suite() {
  double worst = 0.0;
  long count = 0;
  for (int p = 0; p <= 6; ++p)
    for (int k = 0; k <= 3; ++k)
      for (int q = -p; q <= p; ++q)
        for (int m = -k; m <= k; ++m)
          for (int n = -k; n <= k; ++n) {
            const TripleProductKey key{p, k, q, m, n};
            worst = std::max(worst, std::abs(triple_real(key) - triple_real_oracle(key)));
            ++count;
          }
  return {"triple_closed_form_vs_oracle", worst < 1e-12, worst, 1e-12,
          std::to_string(count) + " keys, p <= 6, k <= 3"};
}

SuiteOutcome trace_suite(const std::vector<PerturbationField>& zero_mean, const std::vector<PerturbationField>& free) {
  double worst = 0.0;
  for (const PerturbationField& rho : zero_mean)
    for (int k = 1; k <= 4; ++k) {
      const SymmetricMatrix m = assemble_matrix(k, rho);
      const double norm = m.frobenius_norm();
      if (norm > 0.0) worst = std::max(worst, std::abs(m.trace()) / norm);
    }
  double worst_sum = 0.0;
  for (const PerturbationField& rho : free)
    for (int k = 1; k <= 4; ++k) worst_sum = std::max(worst_sum, std::abs(group_sum_check(k, rho)));
  SuiteOutcome out{"trace_zero", worst < 1e-10 && worst_sum < 1e-9, std::max(worst, worst_sum), 1e-10, ""};
  out.detail = "relative trace " + format_real(worst) + " (tol 1e-10); group sum " + format_real(worst_sum) +
               " (tol 1e-9)";
  return out;
}

SuiteOutcome stationarity_suite(const std::vector<PerturbationField>& fields) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const PerturbationField& rho : fields)
    for (int k = 1; k <= 4; ++k) worst = std::max(worst, normalized_slope(k, rho, 0));
  return {"stationarity_sign", worst <= 1e-10, worst, 1e-10, "max normalized slope of branch 0"};
}

SuiteOutcome solver_suite() {
  PerturbationField rho;
  rho.set(2, 0, 1.0);
  SolverConfig cfg;
  const std::vector<double> estimate = slope_estimate(rho, 1, cfg);
  const PerturbationResult predicted = eigen_slopes(1, rho);
  double worst = 0.0;
  for (std::size_t i = 0; i < estimate.size(); ++i)
    worst = std::max(worst, std::abs(estimate[i] - predicted.slopes[i]));
  return {"solver_slopes", worst < 1e-4, worst, 1e-4, "rho = {(2,0): 1}, k = 1, eps = 1e-3, l_max = 10"};
}

}  // namespace

ValidationReport run_validate(const ValidateOptions& opts) {
  std::vector<PerturbationField> zero_mean;
  std::vector<PerturbationField> free;
  for (int i = 0; i < opts.random_fields; ++i) {
    zero_mean.push_back(random_field(opts.seed + 2 * static_cast<std::uint64_t>(i), 6, true));
    free.push_back(random_field(opts.seed + 2 * static_cast<std::uint64_t>(i) + 1, 6, false));
  }
  if (opts.extra_rho) free.push_back(*opts.extra_rho);
  std::vector<PerturbationField> all = zero_mean;
  all.insert(all.end(), free.begin(), free.end());

  ValidationReport report;
  report.suites.push_back(wigner_suite());
  report.suites.push_back(triple_suite());
  report.suites.push_back(trace_suite(zero_mean, free));
  report.suites.push_back(stationarity_suite(all));
  if (opts.with_solver) report.suites.push_back(solver_suite());
  return report;
}

}  // namespace steklov
