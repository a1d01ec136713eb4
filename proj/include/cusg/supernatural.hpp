#pragma once

#include <map>
#include <string>

#include "cusg/errors.hpp"
#include "cusg/rational.hpp"

namespace cusg {

/// Supernatural number: a formal product of primes with exponents in
/// N ∪ {∞}. Finite positive integers embed canonically.
class Supernatural {
 public:
  static constexpr int kInf = -1;

  Supernatural() = default;

  static Supernatural from_int(unsigned long long n);

  /// Parses factor lists like "2^inf*3^2", plain integers like "6", or a
  /// mixed form "6^inf" (meaning every prime of 6 with infinite exponent).
  static Supernatural parse(const std::string& text);

  void set_exponent(unsigned long long prime, int exp);  // exp = kInf for infinity

  bool empty() const { return exps_.empty(); }
  bool is_finite() const;

  /// True if the positive integer n divides this supernatural number.
  bool divides_int(unsigned long long n) const;

  /// True if sub divides this supernatural number (prime by prime).
  bool divides(const Supernatural& sub) const;

  /// Product of two supernatural numbers (exponents add, ∞ absorbing).
  friend Supernatural operator*(const Supernatural& a, const Supernatural& b);

  friend bool operator==(const Supernatural& a, const Supernatural& b) {
    return a.exps_ == b.exps_;
  }

  /// Smallest chain of integers n_0 | n_1 | ... cofinal in {n : n | p}:
  /// stage k multiplies each prime in, up to its exponent, k times.
  unsigned long long stage(int k) const;

  std::string str() const;

  const std::map<unsigned long long, int>& exponents() const { return exps_; }

 private:
  std::map<unsigned long long, int> exps_;  // prime -> exponent (kInf = infinity)
};

/// Denominator test for compact values of C_p: den | p in the supernatural sense.
bool denominator_divides(const Rat& q, const Supernatural& p);

}  // namespace cusg
