#pragma once

#include "steklov/perturbation.hpp"

#include <string>
#include <vector>

namespace steklov {

struct SolverConfig {
  int l_max = 10;        // harmonic polynomial basis degree
  int rule_degree = 40;  // quadrature exactness target
  double eps = 1e-3;

  /// Throws DomainError unless rule_degree >= 2 l_max + 2 deg(rho) + 4.
  void validate(const PerturbationField& rho) const;
};

/// Galerkin spectrum of the Steklov problem on Omega_eps.
struct SteklovSpectrum {
  int l_max = 0;
  double eps = 0.0;
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> coefficients;  // coefficients[i][basis_slot(l,m)]
  double asymmetry = 0.0;                         // max |A - A^T| / ||A||_F before symmetrizing
  std::vector<std::string> warnings;
};

/// Basis position of r^l Y_{l,m}: l^2 + l + m.
inline std::size_t basis_slot(int l, int m) { return static_cast<std::size_t>(l * l + l + m); }

/// Solves the discrete Steklov problem with trial functions r^l Y_{l,m},
/// l <= l_max, on the surface (1 + eps rho) r_hat.
SteklovSpectrum solve(const PerturbationField& rho, const SolverConfig& cfg);

/// The 2k+1 eigenvalues within 0.5 of k, ascending. Throws ConvergenceError
/// when the window does not hold exactly 2k+1 values.
std::vector<double> eigenvalue_group(const SteklovSpectrum& spectrum, int k);

/// Central-difference slopes (lambda(eps) - lambda(-eps)) / (2 eps) of the
/// group k, ascending, with eps = cfg.eps. Branches at +eps and -eps are
/// paired by eigenvector overlap. Needs cfg.l_max >= k + 2.
std::vector<double> slope_estimate(const PerturbationField& rho, int k, const SolverConfig& cfg);

}  // namespace steklov
