#include "steklov/perturbation.hpp"

#include "steklov/errors.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/triple_product.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace steklov {

namespace {

const double kSqrt4Pi = std::sqrt(4.0 * std::numbers::pi);
const double kBallVolume = 4.0 * std::numbers::pi / 3.0;

Vec3 r_hat(const SpherePoint& pt) {
  const double st = std::sin(pt.theta());
  return {st * std::cos(pt.phi()), st * std::sin(pt.phi()), std::cos(pt.theta())};
}

Vec3 theta_hat(const SpherePoint& pt) {
  const double ct = std::cos(pt.theta());
  return {ct * std::cos(pt.phi()), ct * std::sin(pt.phi()), -std::sin(pt.theta())};
}

Vec3 phi_hat(const SpherePoint& pt) { return {-std::sin(pt.phi()), std::cos(pt.phi()), 0.0}; }

void require_group(int k) {
  if (k < 1) throw DomainError("perturbation matrix needs group index k >= 1, got " + std::to_string(k));
}

}  // namespace

void PerturbationField::set(int p, int q, double value) {
  if (p < 0 || std::abs(q) > p)
    throw DomainError("perturbation coefficient (" + std::to_string(p) + ", " + std::to_string(q) +
                      ") violates |q| <= p");
  if (!std::isfinite(value)) throw DomainError("perturbation coefficient is not finite");
  coeffs_[{p, q}] = value;
}

double PerturbationField::get(int p, int q) const {
  const auto it = coeffs_.find({p, q});
  return it == coeffs_.end() ? 0.0 : it->second;
}

int PerturbationField::max_degree() const {
  int d = 0;
  for (const auto& [key, value] : coeffs_) d = std::max(d, key.first);
  return d;
}

bool PerturbationField::has_nonzero_order() const {
  for (const auto& [key, value] : coeffs_)
    if (key.second != 0 && value != 0.0) return true;
  return false;
}

double PerturbationField::evaluate(const SpherePoint& pt) const {
  double s = 0.0;
  for (const auto& [key, value] : coeffs_) s += value * real_sph({key.first, key.second}, pt);
  return s;
}

SphGradient PerturbationField::gradient(const SpherePoint& pt) const {
  SphGradient g;
  for (const auto& [key, value] : coeffs_) {
    const SphGradient y = real_sph_grad({key.first, key.second}, pt);
    g.dtheta += value * y.dtheta;
    g.dphi += value * y.dphi;
  }
  return g;
}

SymmetricMatrix assemble_matrix(int k, const PerturbationField& rho, TripleSource source) {
  require_group(k);
  const std::size_t dim = static_cast<std::size_t>(2 * k + 1);
  SymmetricMatrix m(dim);
  for (const auto& [key, amplitude] : rho.coefficients()) {
    const auto [p, q] = key;
    if (p % 2 != 0 || p > 2 * k || amplitude == 0.0) continue;
    const double weight = -0.5 * amplitude * (p * (p + 1.0) + 2.0 * k);
    for (int a = -k; a <= k; ++a) {
      for (int b = a; b <= k; ++b) {
        const TripleProductKey tk{p, k, q, a, b};
        const double w = source == TripleSource::ClosedForm ? triple_real(tk) : triple_real_oracle(tk);
        if (w != 0.0) m.add(order_slot(k, a), order_slot(k, b), weight * w);
      }
    }
  }
  return m;
}

PerturbationResult eigen_slopes(int k, const PerturbationField& rho) {
  if (k == 0) return {0, {0.0}, {{1.0}}, 0.0};
  const SymmetricMatrix m = assemble_matrix(k, rho);
  const EigenDecomposition eig = sym_eigen(m);
  PerturbationResult result;
  result.k = k;
  result.slopes = eig.values;
  result.trace = m.trace();
  result.vectors.reserve(m.dim());
  for (std::size_t j = 0; j < m.dim(); ++j) result.vectors.push_back(eig.vectors.column(j));
  return result;
}

double zeroth_eigenfunction(const PerturbationResult& result, int branch, const SpherePoint& pt, double r) {
  if (branch < 0 || static_cast<std::size_t>(branch) >= result.vectors.size())
    throw DomainError("zeroth_eigenfunction: branch " + std::to_string(branch) + " out of range");
  const int k = result.k;
  const std::vector<double>& alpha = result.vectors[static_cast<std::size_t>(branch)];
  double s = 0.0;
  for (int m = -k; m <= k; ++m) s += alpha[order_slot(k, m)] * real_sph({k, m}, pt);
  return std::pow(r, k) * s;
}

VolumeExpansion volume_expansion(const PerturbationField& rho, double eps) {
  const SphereRule rule = build_rule(3 * rho.max_degree());
  const double exact = integrate(rule, [&](const SpherePoint& pt) {
    const double radius = 1.0 + eps * rho.evaluate(pt);
    if (radius <= 0.0) throw DegenerateDomainError("volume_expansion: 1 + eps*rho <= 0 on the rule");
    return radius * radius * radius / 3.0;
  });
  return {kBallVolume + eps * kSqrt4Pi * rho.get(0, 0), exact};
}

NormalExpansion normal_expansion(const PerturbationField& rho, const SpherePoint& pt) {
  const double st = std::sin(pt.theta());
  const bool at_pole = pt.theta() == 0.0 || pt.theta() == std::numbers::pi;
  NormalExpansion out;
  out.n0 = r_hat(pt);
  if (at_pole) {
    if (rho.has_nonzero_order()) throw DomainError("normal_expansion: pole with a non-axisymmetric rho");
    // Axisymmetric rho has rho_theta = 0 at the poles.
    return out;
  }
  const SphGradient g = rho.gradient(pt);
  const Vec3 th = theta_hat(pt);
  const Vec3 ph = phi_hat(pt);
  for (std::size_t i = 0; i < 3; ++i) out.n1[i] = -(g.dtheta * th[i] + g.dphi / st * ph[i]);
  return out;
}

double normalized_slope(int k, const PerturbationField& rho, int branch) {
  const PerturbationResult result = eigen_slopes(k, rho);
  if (branch < 0 || static_cast<std::size_t>(branch) >= result.slopes.size())
    throw DomainError("normalized_slope: branch " + std::to_string(branch) + " out of range");
  // d/deps [lambda |Omega|^{1/3}] = |B|^{1/3} lambda' + k (1/3) |B|^{-2/3} d|Omega|/deps
  const double volume_rate = kSqrt4Pi * rho.get(0, 0);
  return std::cbrt(kBallVolume) * result.slopes[static_cast<std::size_t>(branch)] +
         k * volume_rate / (3.0 * std::cbrt(kBallVolume * kBallVolume));
}

double group_sum_check(int k, const PerturbationField& rho) {
  if (k == 0) return 0.0;
  return assemble_matrix(k, rho).trace() + (2.0 * k + 1.0) * k * rho.get(0, 0) / kSqrt4Pi;
}

}  // namespace steklov
