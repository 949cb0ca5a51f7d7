#pragma once

#include "steklov/harmonics.hpp"
#include "steklov/linalg.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace steklov {

/// Sparse real-harmonic coefficients A_{p,q} of the boundary perturbation
/// rho(theta, phi) = sum A_{p,q} Y_{p,q}. Missing keys are zero.
class PerturbationField {
 public:
  using Key = std::pair<int, int>;  // (p, q)

  PerturbationField() = default;

  /// Throws DomainError unless p >= 0, |q| <= p and value is finite.
  void set(int p, int q, double value);
  double get(int p, int q) const;

  const std::map<Key, double>& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  /// Largest p with a stored coefficient; 0 for the empty field.
  int max_degree() const;
  /// True if some stored coefficient has q != 0.
  bool has_nonzero_order() const;

  double evaluate(const SpherePoint& pt) const;
  SphGradient gradient(const SpherePoint& pt) const;

  friend bool operator==(const PerturbationField&, const PerturbationField&) = default;

 private:
  std::map<Key, double> coeffs_;
};

// Triple-product backend used during assembly.
enum class TripleSource { ClosedForm, Quadrature };

struct PerturbationResult {
  int k = 0;
  std::vector<double> slopes;                // ascending, 2k+1 entries
  std::vector<std::vector<double>> vectors;  // vectors[n][m + k]
  double trace = 0.0;
};

using Vec3 = std::array<double, 3>;

struct NormalExpansion {
  Vec3 n0{};
  Vec3 n1{};
};

struct VolumeExpansion {
  double first_order = 0.0;
  double exact = 0.0;
};

/// Position of order m in the (2k+1)-row indexing m = -k..k.
inline std::size_t order_slot(int k, int m) { return static_cast<std::size_t>(m + k); }

/// First-order perturbation matrix for the eigenvalue group k:
///   M_{m,n} = -1/2 sum_{p even, p <= 2k} sum_q A_{p,q} (p(p+1) + 2k) W^{p,k}_{q,m,n}.
/// Coefficients with odd p or p > 2k never enter. Throws DomainError for k < 1.
SymmetricMatrix assemble_matrix(int k, const PerturbationField& rho,
                                TripleSource source = TripleSource::ClosedForm);

/// Diagonalizes the group-k matrix. slopes[0] belongs to lambda_{k^2}. k = 0
/// is accepted and yields the trivial eigenvalue's slope 0 with vector {1}.
PerturbationResult eigen_slopes(int k, const PerturbationField& rho);

/// sum_m (alpha_branch)_m r^k Y_{k,m}(pt).
double zeroth_eigenfunction(const PerturbationResult& result, int branch, const SpherePoint& pt, double r);

/// |Omega_eps| to first order and by quadrature of (1/3)(1 + eps rho)^3.
/// Throws DegenerateDomainError if 1 + eps rho <= 0 at a quadrature node.
VolumeExpansion volume_expansion(const PerturbationField& rho, double eps);

/// Unit outward normal n0 + eps n1 + O(eps^2) at pt. Throws DomainError at a
/// pole when rho has a nonzero order.
NormalExpansion normal_expansion(const PerturbationField& rho, const SpherePoint& pt);

/// d/deps of lambda * |Omega|^{1/3} at eps = 0 for the given branch.
double normalized_slope(int k, const PerturbationField& rho, int branch);

/// trace(M^(k)) + (2k+1) k A_{0,0} / sqrt(4 pi); zero up to rounding.
double group_sum_check(int k, const PerturbationField& rho);

}  // namespace steklov
