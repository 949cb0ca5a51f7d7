#pragma once

namespace steklov {

// Key of W^{p,k}_{q,m,n} = integral over S^2 of Y_{p,q} Y_{k,m} Y_{k,n}.
struct TripleProductKey {
  int p = 0, k = 0;
  int q = 0, m = 0, n = 0;

  /// Throws DomainError unless |q| <= p, |m| <= k and |n| <= k.
  void validate() const;
};

// Sign pattern of (m, n) after ordering m >= n; one closed form per pattern.
enum class TripleCase {
  BothPositive = 1,    // m > 0, n > 0
  BothZero = 2,        // m = n = 0
  BothNegative = 3,    // m < 0, n < 0
  MixedSigns = 4,      // m > 0, n < 0
  PositiveZero = 5,    // m > 0, n = 0
  ZeroNegative = 6,    // m = 0, n < 0
};

/// Classifies (m, n) after swapping so that m >= n.
TripleCase classify_triple(int m, int n);

/// W^{p,k}_{q,m,n} from the closed forms in terms of at most two 3-j symbols.
double triple_real(const TripleProductKey& key);

/// W^{p,k}_{q,m,n} by direct quadrature of the real harmonics with a rule of
/// degree p + 2k. Shares no code with triple_real beyond the harmonics.
double triple_real_oracle(const TripleProductKey& key);

/// Integral of three complex harmonics Y_{l1}^{m1} Y_{l2}^{m2} Y_{l3}^{m3}:
/// sqrt((2l1+1)(2l2+1)(2l3+1)/(4 pi)) (l1 l2 l3; 0 0 0) (l1 l2 l3; m1 m2 m3).
double triple_complex(int l1, int l2, int l3, int m1, int m2, int m3);

}  // namespace steklov
