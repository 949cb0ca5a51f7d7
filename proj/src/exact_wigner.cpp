#include "steklov/exact_wigner.hpp"

#include "steklov/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace steklov {

namespace {

constexpr unsigned kEagerFactorials = 64;

struct FactorialTable {
  std::deque<BigInt> values;
  std::shared_mutex mutex;

  FactorialTable() {
    values.emplace_back(1);
    for (unsigned i = 1; i <= kEagerFactorials; ++i) values.push_back(values.back() * i);
  }
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

int sign_of(const BigRational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

struct TripleIndexHash {
  std::size_t operator()(const TripleIndex& t) const noexcept {
    // Packs six small ints; collisions only cost a bucket probe.
    std::size_t h = 0;
    for (int v : {t.l1, t.l2, t.l3, t.m1, t.m2, t.m3}) h = h * 131 + static_cast<std::size_t>(v + 64);
    return h;
  }
};

}  // namespace

const BigInt& factorial(unsigned n) {
  FactorialTable& table = factorial_table();
  {
    std::shared_lock lock(table.mutex);
    if (n < table.values.size()) return table.values[n];
  }
  std::unique_lock lock(table.mutex);
  while (table.values.size() <= n) {
    const auto next = static_cast<unsigned>(table.values.size());
    table.values.push_back(table.values.back() * next);
  }
  return table.values[n];
}

SignedSqrtRational::SignedSqrtRational(int sign, BigRational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw DomainError("SignedSqrtRational: negative radicand");
  if (sign_ < -1 || sign_ > 1) throw DomainError("SignedSqrtRational: sign must be -1, 0 or +1");
  if ((sign_ == 0) != (radicand_ == 0))
    throw DomainError("SignedSqrtRational: sign is zero iff radicand is zero");
}

BigInt SignedSqrtRational::numerator() const { return boost::multiprecision::numerator(radicand_); }

BigInt SignedSqrtRational::denominator() const {
  return boost::multiprecision::denominator(radicand_);
}

double SignedSqrtRational::to_double() const {
  using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256>>;
  if (sign_ == 0) return 0.0;
  const Float num(numerator());
  const Float den(denominator());
  const Float root = boost::multiprecision::sqrt(num / den);
  return sign_ * root.convert_to<double>();
}

std::string SignedSqrtRational::to_string() const {
  std::ostringstream os;
  if (sign_ == 0) return "0";
  os << (sign_ < 0 ? "-" : "") << "sqrt(" << numerator() << "/" << denominator() << ")";
  return os.str();
}

bool selection_rules_hold(const TripleIndex& t) {
  if (t.l1 < 0 || t.l2 < 0 || t.l3 < 0) return false;
  if (std::abs(t.m1) > t.l1 || std::abs(t.m2) > t.l2 || std::abs(t.m3) > t.l3) return false;
  if (t.m1 + t.m2 + t.m3 != 0) return false;
  if (t.l3 < std::abs(t.l1 - t.l2) || t.l3 > t.l1 + t.l2) return false;
  if (t.m1 == 0 && t.m2 == 0 && t.m3 == 0 && (t.l1 + t.l2 + t.l3) % 2 != 0) return false;
  return true;
}

SignedSqrtRational wigner3j(const TripleIndex& t) {
  if (!selection_rules_hold(t)) return {};

  const auto fact = [](int n) -> const BigInt& { return factorial(static_cast<unsigned>(n)); };

  // Racah: (-1)^(l1-l2-m3) sqrt(Delta * prod (l_i +- m_i)!) * sum_t (-1)^t / D(t)
  const int t_min = std::max({0, t.l2 - t.l3 - t.m1, t.l1 - t.l3 + t.m2});
  const int t_max = std::min({t.l1 + t.l2 - t.l3, t.l1 - t.m1, t.l2 + t.m2});

  BigRational sum(0);
  for (int s = t_min; s <= t_max; ++s) {
    const BigInt denom = fact(s) * fact(t.l3 - t.l2 + s + t.m1) * fact(t.l3 - t.l1 + s - t.m2) *
                         fact(t.l1 + t.l2 - t.l3 - s) * fact(t.l1 - s - t.m1) * fact(t.l2 - s + t.m2);
    const BigRational term(BigInt(1), denom);
    if (s % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum == 0) return {};

  const BigRational triangle(fact(t.l1 + t.l2 - t.l3) * fact(t.l1 - t.l2 + t.l3) * fact(-t.l1 + t.l2 + t.l3),
                             fact(t.l1 + t.l2 + t.l3 + 1));
  const BigInt projections = fact(t.l1 + t.m1) * fact(t.l1 - t.m1) * fact(t.l2 + t.m2) *
                             fact(t.l2 - t.m2) * fact(t.l3 + t.m3) * fact(t.l3 - t.m3);

  const int phase = ((t.l1 - t.l2 - t.m3) % 2 == 0) ? 1 : -1;
  BigRational radicand = sum * sum * triangle * BigRational(projections);
  return {phase * sign_of(sum), std::move(radicand)};
}

double wigner3j_float(const TripleIndex& idx) {
  if (!selection_rules_hold(idx)) return 0.0;

  static std::unordered_map<TripleIndex, double, TripleIndexHash> memo;
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(idx); it != memo.end()) return it->second;
  }
  const double value = wigner3j(idx).to_double();
  std::unique_lock lock(mutex);
  memo.emplace(idx, value);
  return value;
}

}  // namespace steklov
