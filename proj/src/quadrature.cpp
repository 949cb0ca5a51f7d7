#include "steklov/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace steklov {

SphereRule::SphereRule(std::vector<GaussNode> theta_nodes, int phi_count, int degree)
    : theta_nodes_(std::move(theta_nodes)), phi_count_(phi_count), degree_(degree) {
  if (theta_nodes_.empty() || phi_count_ < 1 || degree_ < 0) throw DomainError("SphereRule: empty rule");
}

std::vector<GaussNode> gauss_legendre(int count) {
  if (count < 1) throw DomainError("gauss_legendre: need at least one node");
  constexpr int kMaxIterations = 100;
  constexpr double kTolerance = 1e-15;

  std::vector<GaussNode> nodes(static_cast<std::size_t>(count));
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int n = 2; n <= count; ++n) {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_count(x), p0 = P_{count-1}(x)
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < kTolerance) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int n = 2; n <= count; ++n) {
      const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
      p0 = p1;
      p1 = p2;
    }
    dp = count * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = {x, w};
    nodes[static_cast<std::size_t>(count - 1 - i)] = {-x, w};
  }
  if (count % 2 == 1) nodes[static_cast<std::size_t>(count / 2)].x = 0.0;
  return nodes;
}

SphereRule build_rule(int max_degree) {
  if (max_degree < 0) throw DomainError("build_rule: max_degree must be >= 0");
  const int gauss_count = std::max(1, (max_degree + 2) / 2);
  return SphereRule(gauss_legendre(gauss_count), max_degree + 1, max_degree);
}

}  // namespace steklov
