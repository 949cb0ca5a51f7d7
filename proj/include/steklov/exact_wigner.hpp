#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace steklov {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Arguments of a Wigner 3-j symbol (l1 l2 l3; m1 m2 m3). Projections outside
// [-l, l] are accepted and make the symbol vanish.
struct TripleIndex {
  int l1 = 0, l2 = 0, l3 = 0;
  int m1 = 0, m2 = 0, m3 = 0;

  friend bool operator==(const TripleIndex&, const TripleIndex&) = default;
};

/// Exact number of the form sign * sqrt(radicand) with a nonnegative rational
/// radicand kept in lowest terms. Every 3-j symbol has this form.
class SignedSqrtRational {
 public:
  SignedSqrtRational() = default;

  /// Throws DomainError if the radicand is negative, or if exactly one of
  /// sign and radicand is zero.
  SignedSqrtRational(int sign, BigRational radicand);

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  BigInt numerator() const;
  BigInt denominator() const;

  /// value^2 as an exact rational (equals the radicand).
  BigRational squared() const { return radicand_; }

  /// Correctly rounded double for all practical purposes (the square root is
  /// taken in 256-bit binary floating point before the narrowing).
  double to_double() const;

  std::string to_string() const;

  friend bool operator==(const SignedSqrtRational&, const SignedSqrtRational&) = default;

 private:
  int sign_ = 0;
  BigRational radicand_{0};
};

/// Exact Wigner 3-j symbol via the Racah single-sum formula. Total: returns
/// zero whenever a selection rule fails.
SignedSqrtRational wigner3j(const TripleIndex& idx);

/// Floating value of wigner3j(idx). Results are memoized per index.
double wigner3j_float(const TripleIndex& idx);

/// n! from a shared table (eagerly holds 0..64, grows on demand).
const BigInt& factorial(unsigned n);

/// True when every 3-j selection rule holds. A false result implies the
/// symbol is zero; a true result does not imply it is nonzero.
bool selection_rules_hold(const TripleIndex& idx);

}  // namespace steklov
