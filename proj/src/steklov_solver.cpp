#include "steklov/steklov_solver.hpp"

#include "steklov/errors.hpp"
#include "steklov/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace steklov {

namespace {

constexpr double kAsymmetryWarning = 1e-8;

// Basis values at one surface node: u_i and (grad u_i . n_tilde) / sin(theta).
struct NodeBasis {
  std::vector<double> value;
  std::vector<double> flux;
};

}  // namespace

void SolverConfig::validate(const PerturbationField& rho) const {
  if (l_max < 0) throw DomainError("SolverConfig: l_max must be >= 0");
  if (!std::isfinite(eps)) throw DomainError("SolverConfig: eps is not finite");
  const int needed = 2 * l_max + 2 * rho.max_degree() + 4;
  if (rule_degree < needed) {
    std::ostringstream os;
    os << "SolverConfig: rule_degree " << rule_degree << " < 2*l_max + 2*deg(rho) + 4 = " << needed;
    throw DomainError(os.str());
  }
}

SteklovSpectrum solve(const PerturbationField& rho, const SolverConfig& cfg) {
  cfg.validate(rho);
  const int lmax = cfg.l_max;
  const double eps = cfg.eps;
  const std::size_t dim = basis_slot(lmax, lmax) + 1;

  Matrix a(dim, dim);
  Matrix b(dim, dim);
  NodeBasis basis{std::vector<double>(dim), std::vector<double>(dim)};

  const SphereRule rule = build_rule(cfg.rule_degree);
  rule.for_each_node([&](const SpherePoint& pt, double w) {
    const double st = std::sin(pt.theta());
    const double rho_v = rho.evaluate(pt);
    const SphGradient rho_g = rho.gradient(pt);
    const double r = 1.0 + eps * rho_v;
    if (r <= 0.0) throw DegenerateDomainError("solve: 1 + eps*rho <= 0 on the rule");
    const double rho_phi_s = rho_g.dphi / st;

    // n_tilde / sin(theta) = r (r r_hat - eps rho_theta theta_hat - eps rho_phi/sin phi_hat)
    const double jac = r * std::sqrt(r * r + eps * eps * (rho_g.dtheta * rho_g.dtheta + rho_phi_s * rho_phi_s));

    for (int l = 0; l <= lmax; ++l) {
      const double rl = std::pow(r, l);
      for (int m = -l; m <= l; ++m) {
        const double y = real_sph({l, m}, pt);
        const SphGradient g = real_sph_grad({l, m}, pt);
        // grad u = r^{l-1} (l Y r_hat + Y_theta theta_hat + Y_phi/sin phi_hat)
        const double dot = r * l * y - eps * rho_g.dtheta * g.dtheta - eps * rho_phi_s * (g.dphi / st);
        const std::size_t i = basis_slot(l, m);
        basis.value[i] = rl * y;
        basis.flux[i] = rl * dot;  // r * r^{l-1}
      }
    }
    for (std::size_t i = 0; i < dim; ++i) {
      const double fi = w * basis.flux[i];
      const double vi = w * jac * basis.value[i];
      for (std::size_t j = 0; j < dim; ++j) {
        a(i, j) += fi * basis.value[j];
        b(i, j) += vi * basis.value[j];
      }
    }
  });

  SteklovSpectrum out;
  out.l_max = lmax;
  out.eps = eps;

  double asym = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
  out.asymmetry = asym / a.frobenius_norm();
  if (out.asymmetry > kAsymmetryWarning) {
    std::ostringstream os;
    os << "stiffness asymmetry " << out.asymmetry << " exceeds " << kAsymmetryWarning;
    out.warnings.push_back(os.str());
  }

  SymmetricMatrix as(dim);
  SymmetricMatrix bs(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      as.set(i, j, 0.5 * (a(i, j) + a(j, i)));
      bs.set(i, j, 0.5 * (b(i, j) + b(j, i)));
    }

  const EigenDecomposition eig = gen_sym_eigen(as, bs);
  out.eigenvalues = eig.values;
  out.coefficients.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) out.coefficients.push_back(eig.vectors.column(j));
  return out;
}

namespace {

std::vector<std::size_t> group_indices(const SteklovSpectrum& spectrum, int k) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
    if (std::abs(spectrum.eigenvalues[i] - k) < 0.5) idx.push_back(i);
  if (idx.size() != static_cast<std::size_t>(2 * k + 1)) {
    std::ostringstream os;
    os << "eigenvalue_group: found " << idx.size() << " eigenvalues near " << k << ", expected " << 2 * k + 1;
    throw ConvergenceError(os.str());
  }
  return idx;
}

}  // namespace

std::vector<double> eigenvalue_group(const SteklovSpectrum& spectrum, int k) {
  std::vector<double> group;
  for (std::size_t i : group_indices(spectrum, k)) group.push_back(spectrum.eigenvalues[i]);
  return group;
}

std::vector<double> slope_estimate(const PerturbationField& rho, int k, const SolverConfig& cfg) {
  if (k < 0) throw DomainError("slope_estimate: k must be >= 0");
  if (cfg.l_max < k + 2) throw DomainError("slope_estimate: l_max must be >= k + 2");
  if (!(cfg.eps > 0.0)) throw DomainError("slope_estimate: eps must be positive");

  SolverConfig plus = cfg;
  SolverConfig minus = cfg;
  minus.eps = -cfg.eps;
  const SteklovSpectrum sp = solve(rho, plus);
  const SteklovSpectrum sm = solve(rho, minus);
  const std::vector<std::size_t> up = group_indices(sp, k);
  const std::vector<std::size_t> down = group_indices(sm, k);

  // Branches are matched by overlap of their degree-k components: sorting
  // alone reverses the order of split branches but keeps the order of
  // branches split only at second order.
  const std::size_t n = up.size();
  std::vector<std::vector<double>> overlap(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::vector<double>& u = sp.coefficients[up[i]];
      const std::vector<double>& v = sm.coefficients[down[j]];
      double dot = 0.0, nu = 0.0, nv = 0.0;
      for (int m = -k; m <= k; ++m) {
        const std::size_t s = basis_slot(k, m);
        dot += u[s] * v[s];
        nu += u[s] * u[s];
        nv += v[s] * v[s];
      }
      overlap[i][j] = std::abs(dot) / std::sqrt(nu * nv);
    }
  std::vector<std::size_t> match(n, n);
  std::vector<bool> taken(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    double best = -1.0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (match[i] != n) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!taken[j] && overlap[i][j] > best) {
          best = overlap[i][j];
          bi = i;
          bj = j;
        }
    }
    match[bi] = bj;
    taken[bj] = true;
  }

  std::vector<double> slopes(n);
  for (std::size_t i = 0; i < n; ++i)
    slopes[i] = (sp.eigenvalues[up[i]] - sm.eigenvalues[down[match[i]]]) / (2.0 * cfg.eps);
  std::sort(slopes.begin(), slopes.end());
  return slopes;
}

}  // namespace steklov
