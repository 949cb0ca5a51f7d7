#pragma once

#include "steklov/errors.hpp"
#include "steklov/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace steklov {

struct GaussNode {
  double x = 0.0;  // cos(theta)
  double weight = 0.0;
};

/// Gauss-Legendre rule in cos(theta) times an equispaced trapezoid in phi.
/// Integrates spherical polynomials of total degree <= degree() exactly.
class SphereRule {
 public:
  SphereRule(std::vector<GaussNode> theta_nodes, int phi_count, int degree);

  std::span<const GaussNode> theta_nodes() const { return theta_nodes_; }
  int phi_count() const { return phi_count_; }
  int degree() const { return degree_; }
  double phi_weight() const { return 2.0 * std::numbers::pi / phi_count_; }
  std::size_t size() const { return theta_nodes_.size() * static_cast<std::size_t>(phi_count_); }

  /// Calls fn(point, weight) for every product node.
  template <class Fn>
  void for_each_node(Fn&& fn) const {
    const double wphi = phi_weight();
    for (const GaussNode& node : theta_nodes_) {
      const double theta = std::acos(node.x);
      for (int j = 0; j < phi_count_; ++j) fn(SpherePoint(theta, j * wphi), node.weight * wphi);
    }
  }

 private:
  std::vector<GaussNode> theta_nodes_;
  int phi_count_;
  int degree_;
};

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
std::vector<GaussNode> gauss_legendre(int count);

/// Rule exact through spherical degree max_degree: ceil((d+1)/2) Gauss nodes
/// in cos(theta) and d+1 points in phi.
SphereRule build_rule(int max_degree);

/// sum_i sum_j w_i (2 pi / N) f(theta_i, phi_j). Throws DomainError if f
/// returns a non-finite value.
template <class Fn>
double integrate(const SphereRule& rule, Fn&& f) {
  double total = 0.0;
  rule.for_each_node([&](const SpherePoint& pt, double w) {
    const double v = f(pt);
    if (!std::isfinite(v)) throw DomainError("integrate: integrand is not finite at a node");
    total += w * v;
  });
  return total;
}

}  // namespace steklov
