#include "steklov/errors.hpp"
#include "steklov/perturbation.hpp"
#include "steklov/steklov_solver.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace steklov;

namespace {

const double kSqrt4Pi = std::sqrt(4 * std::numbers::pi);

PerturbationField single(int p, int q, double a = 1.0) {
  PerturbationField rho;
  rho.set(p, q, a);
  return rho;
}

}  // namespace

TEST_CASE("unit ball spectrum") {
  SolverConfig cfg;
  cfg.l_max = 6;
  cfg.eps = 0.0;
  const SteklovSpectrum s = solve(PerturbationField{}, cfg);
  REQUIRE(s.eigenvalues.size() == 49);
  std::size_t i = 0;
  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m, ++i) CHECK(std::abs(s.eigenvalues[i] - l) < 1e-10);
  CHECK(s.warnings.empty());
}

TEST_CASE("constant shift is a ball of radius 1 + eps/sqrt(4 pi)") {
  SolverConfig cfg;
  cfg.l_max = 6;
  cfg.eps = 0.05;
  const SteklovSpectrum s = solve(single(0, 0), cfg);
  const double radius = 1 + cfg.eps / kSqrt4Pi;
  std::size_t i = 0;
  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m, ++i) CHECK(std::abs(s.eigenvalues[i] - l / radius) < 1e-8);
}

TEST_CASE("first-order prediction at eps = 0.01") {
  SolverConfig cfg;
  cfg.eps = 0.01;
  const SteklovSpectrum s = solve(single(2, 0), cfg);
  CHECK(std::abs(s.eigenvalues[0]) < 1e-10);
  for (double v : s.eigenvalues) CHECK(v > -1e-8);
  const std::vector<double> group = eigenvalue_group(s, 1);
  const PerturbationResult r = eigen_slopes(1, single(2, 0));
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(group[i] - (1 + cfg.eps * r.slopes[i])) < 2e-4);
}

TEST_CASE("slope estimates") {
  SolverConfig cfg;
  for (double s : slope_estimate(single(0, 0), 1, cfg)) CHECK(std::abs(s + 1 / kSqrt4Pi) < 1e-5);
  for (double s : slope_estimate(single(3, 1), 1, cfg)) CHECK(std::abs(s) < 1e-5);

  const std::vector<double> est = slope_estimate(single(2, 0), 1, cfg);
  const PerturbationResult r = eigen_slopes(1, single(2, 0));
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(est[i] - r.slopes[i]) < 1e-4);
}

TEST_CASE("group sum of slope estimates") {
  SolverConfig cfg;
  PerturbationField rho;
  rho.set(0, 0, 0.3);
  rho.set(2, 1, 0.5);
  rho.set(2, -2, -0.4);
  rho.set(1, 1, 0.2);
  for (int k = 1; k <= 3; ++k) {
    double sum = 0.0;
    for (double s : slope_estimate(rho, k, cfg)) sum += s;
    CHECK(std::abs(sum + (2 * k + 1) * k * 0.3 / kSqrt4Pi) < 1e-4);
  }
}

TEST_CASE("compare with the perturbation matrix for a mixed field, k = 2") {
  SolverConfig cfg;
  PerturbationField rho;
  rho.set(2, 1, 0.5);
  rho.set(2, -2, -0.4);
  rho.set(4, 3, 0.3);
  const std::vector<double> est = slope_estimate(rho, 2, cfg);
  const PerturbationResult r = eigen_slopes(2, rho);
  for (std::size_t i = 0; i < est.size(); ++i) CHECK(std::abs(est[i] - r.slopes[i]) < 1e-4);
}

TEST_CASE("Richardson error shrinks quadratically") {
  const PerturbationResult r = eigen_slopes(1, single(2, 0));
  double previous = 0.0;
  for (double eps : {4e-3, 2e-3, 1e-3}) {
    SolverConfig cfg;
    cfg.eps = eps;
    const std::vector<double> est = slope_estimate(single(2, 0), 1, cfg);
    double err = 0.0;
    for (std::size_t i = 0; i < 3; ++i) err = std::max(err, std::abs(est[i] - r.slopes[i]));
    if (previous > 0.0) CHECK(previous / err == doctest::Approx(4.0).epsilon(0.1));
    previous = err;
  }
}

TEST_CASE("configuration and domain errors") {
  SolverConfig cfg;
  cfg.rule_degree = 20;
  CHECK_THROWS_AS(solve(single(2, 0), cfg), DomainError);
  SolverConfig big;
  big.eps = -4.0;
  big.l_max = 2;
  CHECK_THROWS_AS(solve(single(0, 0), big), DegenerateDomainError);
  SolverConfig small;
  small.l_max = 3;
  small.rule_degree = 20;
  CHECK_THROWS_AS(slope_estimate(single(2, 0), 2, small), DomainError);
  SolverConfig zero;
  zero.eps = 0.0;
  CHECK_THROWS_AS(slope_estimate(single(2, 0), 1, zero), DomainError);
}
