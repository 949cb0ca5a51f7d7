#include "steklov/errors.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace steklov;

namespace {

constexpr double kPi = std::numbers::pi;

// Real harmonic assembled literally from the complex ones.
double real_from_complex(int l, int m, const SpherePoint& pt) {
  constexpr std::complex<double> i(0.0, 1.0);
  const double sign = (std::abs(m) % 2 == 0) ? 1.0 : -1.0;
  std::complex<double> y;
  if (m < 0)
    y = i / std::sqrt(2.0) * (complex_sph({l, m}, pt) - sign * complex_sph({l, -m}, pt));
  else if (m == 0)
    y = complex_sph({l, 0}, pt);
  else
    y = 1.0 / std::sqrt(2.0) * (complex_sph({l, -m}, pt) + sign * complex_sph({l, m}, pt));
  CHECK(std::abs(y.imag()) < 1e-14);
  return y.real();
}

}  // namespace

TEST_CASE("associated Legendre values") {
  CHECK(assoc_legendre(0, 0, 0.3) == 1.0);
  CHECK(assoc_legendre(1, 0, 0.5) == 0.5);
  CHECK(assoc_legendre(2, 1, 0.0) == 0.0);
  CHECK(assoc_legendre(1, 1, 0.0) == -1.0);
  // P_2^2 = 3 (1 - x^2), P_3^1 = -3/2 (5x^2 - 1) sqrt(1 - x^2)
  CHECK(assoc_legendre(2, 2, 0.4) == doctest::Approx(3.0 * (1 - 0.16)).epsilon(1e-15));
  CHECK(assoc_legendre(3, 1, 0.4) == doctest::Approx(-1.5 * (5 * 0.16 - 1) * std::sqrt(1 - 0.16)).epsilon(1e-15));

  CHECK_THROWS_AS(assoc_legendre(2, 3, 0.1), DomainError);
  CHECK_THROWS_AS(assoc_legendre(2, -1, 0.1), DomainError);
  CHECK_THROWS_AS(assoc_legendre(2, 1, 1.5), DomainError);
}

TEST_CASE("real harmonic spot values") {
  const SpherePoint pt(1.1, 2.3);
  CHECK(real_sph({0, 0}, pt) == doctest::Approx(0.28209479177387814).epsilon(1e-16));
  CHECK(real_sph({1, 0}, SpherePoint(0.0, 0.0)) == doctest::Approx(0.4886025119029199).epsilon(1e-16));
  CHECK(real_sph({1, -1}, SpherePoint(0.7, 0.0)) == 0.0);
  CHECK_THROWS_AS(real_sph({1, 2}, pt), DomainError);
  CHECK_THROWS_AS(real_sph_grad({-1, 0}, pt), DomainError);
}

TEST_CASE("real closed form equals the complex combination at random points") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> th(0.0, kPi);
  std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const SpherePoint pt(th(gen), ph(gen));
    for (int l = 0; l <= 6; ++l)
      for (int m = -l; m <= l; ++m) CHECK(real_sph({l, m}, pt) == doctest::Approx(real_from_complex(l, m, pt)).epsilon(1e-13));
  }
}

TEST_CASE("gradient values") {
  const SphGradient g = real_sph_grad({1, 0}, SpherePoint(kPi / 2, 0.4));
  CHECK(g.dtheta == doctest::Approx(-0.4886025119029199).epsilon(1e-15));
  CHECK(g.dphi == 0.0);
  const SphGradient c = real_sph_grad({0, 0}, SpherePoint(0.3, 0.1));
  CHECK(c.dtheta == 0.0);
  CHECK(c.dphi == 0.0);
}

TEST_CASE("gradient agrees with central differences away from the poles") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> th(0.1, kPi - 0.1);
  std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
  constexpr double h = 1e-5;
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const double t = th(gen);
    const double p = ph(gen);
    for (int l = 0; l <= 5; ++l)
      for (int m = -l; m <= l; ++m) {
        const SphGradient g = real_sph_grad({l, m}, SpherePoint(t, p));
        const double fd_t = (real_sph({l, m}, SpherePoint(t + h, p)) - real_sph({l, m}, SpherePoint(t - h, p))) / (2 * h);
        const double fd_p = (real_sph({l, m}, SpherePoint(t, p + h)) - real_sph({l, m}, SpherePoint(t, p - h))) / (2 * h);
        worst = std::max({worst, std::abs(g.dtheta - fd_t), std::abs(g.dphi - fd_p)});
      }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("orthonormality under exact quadrature") {
  constexpr int L = 6;
  const SphereRule rule = build_rule(2 * L);
  double worst = 0.0;
  for (int l = 0; l <= L; ++l)
    for (int m = -l; m <= l; ++m)
      for (int l2 = 0; l2 <= L; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const double v = integrate(rule, [&](const SpherePoint& pt) { return real_sph({l, m}, pt) * real_sph({l2, m2}, pt); });
          worst = std::max(worst, std::abs(v - ((l == l2 && m == m2) ? 1.0 : 0.0)));
        }
  CHECK(worst < 1e-12);
}

TEST_CASE("Dirichlet energy of Y_{k,n} equals k(k+1)") {
  for (int k = 0; k <= 7; ++k) {
    const SphereRule rule = build_rule(2 * k + 2);
    for (int n = -k; n <= k; ++n) {
      const double energy = integrate(rule, [&](const SpherePoint& pt) {
        const SphGradient g = real_sph_grad({k, n}, pt);
        const double s = std::sin(pt.theta());
        return g.dtheta * g.dtheta + (g.dphi / s) * (g.dphi / s);
      });
      CHECK(std::abs(energy - k * (k + 1.0)) < 1e-10);
    }
  }
}

TEST_CASE("pole evaluation with nonzero order gives zero without error") {
  for (int l = 1; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) {
      if (m == 0) continue;
      CHECK(real_sph({l, m}, SpherePoint(0.0, 1.0)) == 0.0);
      CHECK(std::abs(real_sph({l, m}, SpherePoint(kPi, 1.0))) < 1e-15);
    }
}

TEST_CASE("SpherePoint reduces phi and rejects bad theta") {
  CHECK(SpherePoint(1.0, -0.5).phi() == doctest::Approx(2 * kPi - 0.5));
  CHECK(SpherePoint(1.0, 2 * kPi).phi() == 0.0);
  CHECK(SpherePoint(1.0, 7.0).phi() == doctest::Approx(7.0 - 2 * kPi));
  CHECK_THROWS_AS(SpherePoint(-0.1, 0.0), DomainError);
  CHECK_THROWS_AS(SpherePoint(4.0, 0.0), DomainError);
}
