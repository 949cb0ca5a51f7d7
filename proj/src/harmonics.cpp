#include "steklov/harmonics.hpp"

#include "steklov/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

// P_l^m by upward recurrence in l at fixed m >= 0, m <= l.
double legendre_unchecked(int l, int m, double x) {
  const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * s;
  if (l == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pm1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = ((2.0 * ll - 1.0) * x * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pm1;
    pm1 = pll;
  }
  return pll;
}

// d/dtheta P_l^m(cos theta) = (P_l^{m+1} - (l+m)(l-m+1) P_l^{m-1}) / 2 with the
// Condon-Shortley phase; P_l^{l+1} = 0 and P_l^{-1} = -P_l^1 / (l(l+1)).
double legendre_dtheta(int l, int m, double x) {
  if (l == 0) return 0.0;
  const double up = (m + 1 <= l) ? legendre_unchecked(l, m + 1, x) : 0.0;
  if (m == 0) return up;
  const double down = legendre_unchecked(l, m - 1, x);
  return 0.5 * (up - (l + m) * (l - m + 1.0) * down);
}

}  // namespace

void HarmonicIndex::validate() const {
  if (l < 0 || m < -l || m > l)
    throw DomainError("invalid harmonic index (l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
}

SpherePoint::SpherePoint(double theta, double phi) : theta_(theta) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("SpherePoint: theta outside [0, pi]");
  if (!std::isfinite(phi)) throw DomainError("SpherePoint: phi not finite");
  phi_ = std::fmod(phi, 2.0 * kPi);
  if (phi_ < 0.0) phi_ += 2.0 * kPi;
  if (phi_ >= 2.0 * kPi) phi_ = 0.0;
}

double assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) throw DomainError("assoc_legendre: need 0 <= m <= l");
  if (!(std::abs(x) <= 1.0)) throw DomainError("assoc_legendre: |x| > 1");
  return legendre_unchecked(l, m, x);
}

double sph_normalization(int l, int m) {
  // (l-m)!/(l+m)! accumulated as a product to stay in range for l ~ 50.
  double ratio = 1.0;
  for (int i = l - m + 1; i <= l + m; ++i) ratio /= i;
  return std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) * ratio);
}

std::complex<double> complex_sph(HarmonicIndex idx, const SpherePoint& pt) {
  idx.validate();
  const int am = std::abs(idx.m);
  const double x = std::cos(pt.theta());
  // Y_l^{-m} = (-1)^m conj(Y_l^m)
  const double base = sph_normalization(idx.l, am) * legendre_unchecked(idx.l, am, x);
  std::complex<double> y = base * std::polar(1.0, am * pt.phi());
  if (idx.m < 0) y = ((am % 2 == 0) ? 1.0 : -1.0) * std::conj(y);
  return y;
}

double real_sph(HarmonicIndex idx, const SpherePoint& pt) {
  idx.validate();
  const int am = std::abs(idx.m);
  const double x = std::cos(pt.theta());
  // (-1)^m cancels the Condon-Shortley phase in the real combination.
  const double cs = (am % 2 == 0) ? 1.0 : -1.0;
  const double radial = sph_normalization(idx.l, am) * legendre_unchecked(idx.l, am, x);
  if (idx.m == 0) return radial;
  const double angular = idx.m > 0 ? std::cos(am * pt.phi()) : std::sin(am * pt.phi());
  return std::numbers::sqrt2 * cs * radial * angular;
}

SphGradient real_sph_grad(HarmonicIndex idx, const SpherePoint& pt) {
  idx.validate();
  const int am = std::abs(idx.m);
  const double x = std::cos(pt.theta());
  const double norm = sph_normalization(idx.l, am);
  if (idx.m == 0) return {norm * legendre_dtheta(idx.l, 0, x), 0.0};

  const double scale = std::numbers::sqrt2 * ((am % 2 == 0) ? 1.0 : -1.0) * norm;
  const double p = legendre_unchecked(idx.l, am, x);
  const double dp = legendre_dtheta(idx.l, am, x);
  const double c = std::cos(am * pt.phi());
  const double s = std::sin(am * pt.phi());
  if (idx.m > 0) return {scale * dp * c, -scale * p * am * s};
  return {scale * dp * s, scale * p * am * c};
}

}  // namespace steklov
