#pragma once

#include <complex>

namespace steklov {

// Degree/order pair of a spherical harmonic, |m| <= l.
struct HarmonicIndex {
  int l = 0;
  int m = 0;

  /// Throws DomainError unless l >= 0 and |m| <= l.
  void validate() const;
  friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;
};

/// Point on the unit sphere. theta is the inclination in [0, pi]; phi is
/// reduced into [0, 2 pi) on construction.
class SpherePoint {
 public:
  SpherePoint() = default;
  SpherePoint(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

struct SphGradient {
  double dtheta = 0.0;
  double dphi = 0.0;
};

/// Associated Legendre function P_l^m(x) including the Condon-Shortley phase.
/// Requires 0 <= m <= l and |x| <= 1.
double assoc_legendre(int l, int m, double x);

/// Orthonormal complex harmonic Y_l^m(theta, phi), any |m| <= l.
std::complex<double> complex_sph(HarmonicIndex idx, const SpherePoint& pt);

/// Real orthonormal harmonic Y_{l,m}: cos(m phi) branch for m > 0,
/// sin(|m| phi) branch for m < 0.
double real_sph(HarmonicIndex idx, const SpherePoint& pt);

/// (d/dtheta, d/dphi) of real_sph.
SphGradient real_sph_grad(HarmonicIndex idx, const SpherePoint& pt);

/// Last factor of the orthonormal normalization, sqrt((2l+1)/(4pi) (l-m)!/(l+m)!).
double sph_normalization(int l, int m);

}  // namespace steklov
