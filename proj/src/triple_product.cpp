#include "steklov/triple_product.hpp"

#include "steklov/errors.hpp"
#include "steklov/exact_wigner.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <utility>

namespace steklov {

namespace {

double parity(int e) { return (std::abs(e) % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

void TripleProductKey::validate() const {
  if (p < 0 || k < 0 || std::abs(q) > p || std::abs(m) > k || std::abs(n) > k)
    throw DomainError("invalid triple product key (p=" + std::to_string(p) + ", k=" + std::to_string(k) +
                      ", q=" + std::to_string(q) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                      ")");
}

TripleCase classify_triple(int m, int n) {
  if (m < n) std::swap(m, n);
  if (m > 0 && n > 0) return TripleCase::BothPositive;
  if (m == 0 && n == 0) return TripleCase::BothZero;
  if (m < 0 && n < 0) return TripleCase::BothNegative;
  if (m > 0 && n < 0) return TripleCase::MixedSigns;
  if (m > 0) return TripleCase::PositiveZero;
  return TripleCase::ZeroNegative;
}

double triple_complex(int l1, int l2, int l3, int m1, int m2, int m3) {
  const double zero_row = wigner3j_float({l1, l2, l3, 0, 0, 0});
  if (zero_row == 0.0) return 0.0;
  const double row = wigner3j_float({l1, l2, l3, m1, m2, m3});
  if (row == 0.0) return 0.0;
  const double dims = (2.0 * l1 + 1.0) * (2.0 * l2 + 1.0) * (2.0 * l3 + 1.0);
  return std::sqrt(dims / (4.0 * std::numbers::pi)) * zero_row * row;
}

double triple_real(const TripleProductKey& key) {
  key.validate();
  const int p = key.p;
  const int k = key.k;
  const int q = key.q;
  int m = key.m;
  int n = key.n;
  if (m < n) std::swap(m, n);

  // Each branch is sqrt(1/2)^j * (+-1) * triple_complex(p,k,k; ...), where
  // triple_complex already carries C_{p,k} (p k k; 0 0 0).
  const auto tc = [p, k](int a, int b, int c) { return triple_complex(p, k, k, a, b, c); };
  constexpr double kHalfRoot = std::numbers::sqrt2 / 2.0;

  switch (classify_triple(m, n)) {
    case TripleCase::BothPositive:
      if (q < 0) return 0.0;
      if (q == 0) return m == n ? parity(m) * tc(0, m, -m) : 0.0;
      if (q == m + n) return kHalfRoot * parity(q) * tc(-q, m, n);
      if (q == m - n) return kHalfRoot * parity(m) * tc(q, -m, n);
      return 0.0;

    case TripleCase::BothZero:
      return q == 0 ? tc(0, 0, 0) : 0.0;

    case TripleCase::BothNegative:
      if (q < 0) return 0.0;
      if (q == 0) return m == n ? parity(m) * tc(0, m, -m) : 0.0;
      if (q == -m - n) return kHalfRoot * parity(q + 1) * tc(q, m, n);
      if (q == m - n) return kHalfRoot * parity(n) * tc(q, -m, n);
      return 0.0;

    case TripleCase::MixedSigns:
      if (q >= 0) return 0.0;
      if (q == m + n) return kHalfRoot * parity(n) * tc(q, -m, -n);
      if (q == n - m) return kHalfRoot * parity(q) * tc(q, m, -n);
      if (q == -n - m) return kHalfRoot * parity(m + 1) * tc(q, m, n);
      return 0.0;

    case TripleCase::PositiveZero:
      return (q > 0 && q == m) ? parity(q) * tc(m, -m, 0) : 0.0;

    case TripleCase::ZeroNegative:
      return (q < 0 && q == n) ? parity(q) * tc(n, -n, 0) : 0.0;
  }
  return 0.0;
}

double triple_real_oracle(const TripleProductKey& key) {
  key.validate();
  const SphereRule rule = build_rule(key.p + 2 * key.k);
  return integrate(rule, [&](const SpherePoint& pt) {
    return real_sph({key.p, key.q}, pt) * real_sph({key.k, key.m}, pt) * real_sph({key.k, key.n}, pt);
  });
}

}  // namespace steklov
