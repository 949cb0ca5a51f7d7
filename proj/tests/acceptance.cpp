// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "steklov/job.hpp"
#include "steklov/perturbation.hpp"
#include "steklov/steklov_solver.hpp"
#include "steklov/triple_product.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace steklov;

namespace {

const double kSqrt4Pi = std::sqrt(4 * std::numbers::pi);
constexpr std::uint64_t kSeed = 20210901;
constexpr int kRandomFields = 200;

struct Outcome {
  bool passed;
  double deviation;
  double tolerance;
  std::string note;
};

PerturbationField single(int p, int q, double a = 1.0) {
  PerturbationField rho;
  rho.set(p, q, a);
  return rho;
}

Outcome ball_spectrum() {
  SolverConfig cfg;
  cfg.l_max = 6;
  cfg.eps = 0.0;
  const SteklovSpectrum s = solve(PerturbationField{}, cfg);
  double dev = 0.0;
  std::size_t i = 0;
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m, ++i) dev = std::max(dev, std::abs(s.eigenvalues[i] - l));
  return {dev <= 1e-10, dev, 1e-10, ""};
}

Outcome constant_shift() {
  double dev = 0.0;
  for (int k = 1; k <= 5; ++k)
    for (double s : eigen_slopes(k, single(0, 0)).slopes) dev = std::max(dev, std::abs(s + k / kSqrt4Pi));
  return {dev <= 1e-12, dev, 1e-12, ""};
}

Outcome closed_form_vs_oracle() {
  double dev = 0.0;
  long count = 0;
  for (int p = 0; p <= 6; ++p)
    for (int k = 0; k <= 3; ++k)
      for (int q = -p; q <= p; ++q)
        for (int m = -k; m <= k; ++m)
          for (int n = -k; n <= k; ++n) {
            const TripleProductKey key{p, k, q, m, n};
            dev = std::max(dev, std::abs(triple_real(key) - triple_real_oracle(key)));
            ++count;
          }
  return {dev <= 1e-12, dev, 1e-12, std::to_string(count) + " keys"};
}

Outcome trace_zero() {
  double dev_trace = 0.0;
  double dev_sum = 0.0;
  for (int i = 0; i < kRandomFields; ++i) {
    const PerturbationField zero_mean = random_field(kSeed + i, 6, true);
    const PerturbationField free = random_field(kSeed + kRandomFields + i, 6, false);
    for (int k = 1; k <= 4; ++k) {
      const SymmetricMatrix m = assemble_matrix(k, zero_mean);
      dev_trace = std::max(dev_trace, std::abs(m.trace()) / m.frobenius_norm());
      dev_sum = std::max(dev_sum, std::abs(group_sum_check(k, free)));
    }
  }
  char note[96];
  std::snprintf(note, sizeof note, "relative trace %.3g < 1e-10, group sum %.3g < 1e-09", dev_trace, dev_sum);
  return {dev_trace < 1e-10 && dev_sum < 1e-9, std::max(dev_trace, dev_sum), 1e-9, note};
}

Outcome stationarity() {
  double worst = -INFINITY;
  for (int i = 0; i < kRandomFields; ++i)
    for (bool zero_mean : {true, false}) {
      const PerturbationField rho = random_field(kSeed + (zero_mean ? 0 : kRandomFields) + i, 6, zero_mean);
      for (int k = 1; k <= 4; ++k) worst = std::max(worst, normalized_slope(k, rho, 0));
    }
  return {worst <= 1e-10, worst, 1e-10, "largest branch-0 normalized slope"};
}

Outcome corollary_screen() {
  double dev = 0.0;
  long count = 0;
  for (int k = 1; k <= 5; ++k)
    for (int p = 0; p <= 12; ++p) {
      if (p % 2 == 0 && p <= 2 * k) continue;
      for (int q = -p; q <= p; ++q) {
        const SymmetricMatrix m = assemble_matrix(k, single(p, q));
        for (std::size_t a = 0; a < m.dim(); ++a)
          for (std::size_t b = 0; b < m.dim(); ++b) dev = std::max(dev, std::abs(m(a, b)));
        ++count;
      }
    }
  return {dev == 0.0, dev, 0.0, std::to_string(count) + " single-coefficient fields"};
}

Outcome figure_case() {
  const PerturbationResult r = eigen_slopes(1, single(2, 0));
  const SymmetricMatrix oracle = assemble_matrix(1, single(2, 0), TripleSource::Quadrature);
  const SymmetricMatrix closed = assemble_matrix(1, single(2, 0));
  double dev = 0.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) dev = std::max(dev, std::abs(closed(a, b) - oracle(a, b)));
  const double expected[3] = {-1.00925, 0.50463, 0.50463};
  bool shape = r.slopes[0] < 0 && std::abs(r.slopes[1] - r.slopes[2]) < 1e-12 && r.slopes[1] > 0 &&
               std::abs(r.slopes[0] + r.slopes[1] + r.slopes[2]) < 1e-12;
  for (int i = 0; i < 3; ++i) shape = shape && std::abs(r.slopes[i] - expected[i]) < 5e-6;
  char note[128];
  std::snprintf(note, sizeof note, "slopes {%.6f, %.6f, %.6f}", r.slopes[0], r.slopes[1], r.slopes[2]);
  return {shape && dev <= 1e-11, dev, 1e-11, note};
}

Outcome finite_eps() {
  const PerturbationField rho = single(2, 0);
  const PerturbationResult r = eigen_slopes(1, rho);
  auto mismatch = [&](double eps) {
    SolverConfig cfg;
    cfg.l_max = 10;
    cfg.eps = eps;
    const std::vector<double> est = slope_estimate(rho, 1, cfg);
    double dev = 0.0;
    for (std::size_t i = 0; i < est.size(); ++i) dev = std::max(dev, std::abs(est[i] - r.slopes[i]));
    return dev;
  };
  const double full = mismatch(1e-3);
  const double half = mismatch(5e-4);
  const double factor = full / half;
  char note[96];
  std::snprintf(note, sizeof note, "halving factor %.3f >= 3", factor);
  return {full <= 1e-4 && factor >= 3.0, full, 1e-4, note};
}

Outcome homothety() {
  double dev = 0.0;
  for (int k = 1; k <= 5; ++k)
    for (int b = 0; b <= 2 * k; ++b) dev = std::max(dev, std::abs(normalized_slope(k, single(0, 0), b)));
  return {dev <= 1e-12, dev, 1e-12, ""};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"ball_spectrum", ball_spectrum},
      {"constant_shift_slopes", constant_shift},
      {"closed_form_vs_quadrature", closed_form_vs_oracle},
      {"trace_zero_and_group_sum", trace_zero},
      {"stationarity_sign", stationarity},
      {"single_coefficient_screen", corollary_screen},
      {"prolate_k1_slopes", figure_case},
      {"finite_eps_richardson", finite_eps},
      {"homothety_invariance", homothety},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, NAN, NAN, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.note = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failures;
    std::printf("[%s] %zu %s (dev=%.3g, tol=%.3g)%s%s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.deviation, o.tolerance, o.note.empty() ? "" : " ", o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
