// Command-line front end for the nearly-spherical Steklov perturbation library.

#include "steklov/errors.hpp"
#include "steklov/exact_wigner.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/job.hpp"
#include "steklov/perturbation.hpp"
#include "steklov/steklov_solver.hpp"
#include "steklov/triple_product.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

using steklov::format_real;
using nlohmann::json;

void emit(const steklov::JobConfig& job, const std::string& text) {
  if (!job.output) {
    std::cout << text;
    return;
  }
  std::ofstream out(*job.output, std::ios::binary);
  if (!out) throw steklov::ConfigError("cannot write output file '" + *job.output + "'");
  out << text;
  if (!out) throw steklov::ConfigError("write failed for '" + *job.output + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_matrix(const steklov::JobConfig& job) {
  json all = json::array();
  std::string csv;
  for (int k = job.k_min; k <= job.k_max; ++k) {
    const steklov::SymmetricMatrix m = steklov::assemble_matrix(k, job.rho);
    all.push_back(steklov::to_json(m, k));
    for (std::size_t i = 0; i < m.dim(); ++i) {
      csv += std::to_string(k) + "," + std::to_string(static_cast<int>(i) - k);
      for (std::size_t j = 0; j < m.dim(); ++j) csv += "," + format_real(m(i, j));
      csv += "\n";
    }
  }
  if (job.format == steklov::OutputFormat::Csv)
    emit(job, csv);
  else
    emit(job, dump(all.size() == 1 ? all[0] : all));
  return kExitOk;
}

int run_perturb(const steklov::JobConfig& job) {
  json all = json::array();
  for (int k = job.k_min; k <= job.k_max; ++k) all.push_back(steklov::to_json(steklov::eigen_slopes(k, job.rho)));
  emit(job, dump(all.size() == 1 ? all[0] : all));
  return kExitOk;
}

int run_sweep_job(const steklov::JobConfig& job) {
  const std::vector<steklov::SweepRow> rows = steklov::run_sweep(job);
  switch (job.format) {
    case steklov::OutputFormat::Csv:
      emit(job, steklov::sweep_csv(rows));
      break;
    case steklov::OutputFormat::Svg:
      emit(job, steklov::sweep_svg(rows, job.eps_grid));
      break;
    case steklov::OutputFormat::Json:
      emit(job, dump(steklov::sweep_json(rows, job.eps_grid)));
      break;
  }
  return kExitOk;
}

int run_solve(const steklov::JobConfig& job) {
  const steklov::SteklovSpectrum s = steklov::solve(job.rho, job.solver);
  for (const std::string& w : s.warnings) std::cerr << "warning: " << w << "\n";
  emit(job, dump(steklov::to_json(s)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order Steklov eigenvalue asymptotics on nearly-spherical domains"};
  app.require_subcommand(1);

  std::vector<int> wigner_args;
  auto* wigner = app.add_subcommand("wigner", "Exact Wigner 3-j symbol: l1 l2 l3 m1 m2 m3");
  wigner->add_option("args", wigner_args)->expected(6)->required();

  int eval_l = 0;
  int eval_m = 0;
  double eval_theta = 0.0;
  double eval_phi = 0.0;
  auto* eval = app.add_subcommand("eval", "Real spherical harmonic and gradient: l m theta phi");
  eval->add_option("l", eval_l)->required();
  eval->add_option("m", eval_m)->required();
  eval->add_option("theta", eval_theta)->required();
  eval->add_option("phi", eval_phi)->required();

  std::vector<int> triple_args;
  auto* triple = app.add_subcommand("triple", "Triple product W^{p,k}_{q,m,n}: p k q m n");
  triple->add_option("args", triple_args)->expected(5)->required();

  std::string config_path;
  std::string output_path;
  std::string format;
  std::map<std::string, CLI::App*> config_commands;
  for (const char* name : {"matrix", "perturb", "sweep", "solve"}) {
    auto* sub = app.add_subcommand(name, std::string("Run '") + name + "' from a JSON job file");
    sub->add_option("--config", config_path, "JSON job file")->required();
    sub->add_option("-o,--output", output_path, "Output file (default stdout)");
    sub->add_option("--format", format, "json, csv or svg");
    config_commands[name] = sub;
  }

  bool with_solver = false;
  std::string validate_config;
  auto* validate = app.add_subcommand("validate", "Run the invariant suites");
  validate->add_flag("--solver", with_solver, "Include the direct-solver slope comparison");
  validate->add_option("--config", validate_config, "Job file whose rho joins the scans");
  validate->add_option("-o,--output", output_path, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*wigner) {
      const steklov::TripleIndex idx{wigner_args[0], wigner_args[1], wigner_args[2],
                                     wigner_args[3], wigner_args[4], wigner_args[5]};
      const steklov::SignedSqrtRational w = steklov::wigner3j(idx);
      std::cout << "sign " << w.sign() << "\nnumerator " << w.numerator() << "\ndenominator " << w.denominator()
                << "\nvalue " << format_real(w.to_double()) << "\n";
      return kExitOk;
    }
    if (*eval) {
      const steklov::SpherePoint pt(eval_theta, eval_phi);
      const double y = steklov::real_sph({eval_l, eval_m}, pt);
      const steklov::SphGradient g = steklov::real_sph_grad({eval_l, eval_m}, pt);
      std::cout << "value " << format_real(y) << "\ndtheta " << format_real(g.dtheta) << "\ndphi "
                << format_real(g.dphi) << "\n";
      return kExitOk;
    }
    if (*triple) {
      const steklov::TripleProductKey key{triple_args[0], triple_args[1], triple_args[2], triple_args[3],
                                          triple_args[4]};
      const double closed = steklov::triple_real(key);
      const double oracle = steklov::triple_real_oracle(key);
      std::cout << "closed_form " << format_real(closed) << "\nquadrature " << format_real(oracle)
                << "\ndifference " << format_real(closed - oracle) << "\n";
      return kExitOk;
    }
    if (*validate) {
      steklov::ValidateOptions opts;
      opts.with_solver = with_solver;
      if (const char* seed = std::getenv("STEKLOV_SEED")) {
        try {
          opts.seed = std::stoull(seed);
        } catch (const std::exception&) {
          throw steklov::ConfigError("STEKLOV_SEED must be an unsigned integer");
        }
      }
      if (!validate_config.empty())
        opts.extra_rho = steklov::load_job(validate_config, steklov::Command::Validate).rho;
      const steklov::ValidationReport report = steklov::run_validate(opts);
      steklov::JobConfig sink;
      if (!output_path.empty()) sink.output = output_path;
      emit(sink, dump(report.to_json()));
      return report.passed() ? kExitOk : kExitValidation;
    }
    for (const auto& [name, sub] : config_commands) {
      if (!*sub) continue;
      const steklov::Command command = steklov::parse_command(name);
      steklov::JobConfig job = steklov::load_job(config_path, command);
      if (!output_path.empty()) job.output = output_path;
      if (!format.empty()) job.format = steklov::parse_format(format);
      switch (command) {
        case steklov::Command::Matrix:
          return run_matrix(job);
        case steklov::Command::Perturb:
          return run_perturb(job);
        case steklov::Command::Sweep:
          return run_sweep_job(job);
        case steklov::Command::Solve:
          return run_solve(job);
        default:
          break;
      }
    }
  } catch (const steklov::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const steklov::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
