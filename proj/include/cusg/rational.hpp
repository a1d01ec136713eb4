#pragma once

#include <cstdint>
#include <string>

#include "cusg/errors.hpp"

namespace cusg {

/// Exact rational number over 64-bit integers with 128-bit intermediates.
/// Always stored normalized (gcd 1, positive denominator). Overflow raises
/// CuError(Err::Overflow) instead of wrapping; all magnitudes in this library
/// stay far below the checked bounds.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  /// Scale by integer k, requiring an integral result (used for unit
  /// conversions between scaled semigroups).
  bool times_is_integer(long long k) const;

  std::string str() const;

  /// Parses "a" or "a/b" with optional sign; exact, no floating point.
  static Rat parse(const std::string& text);

  /// Total order suitable for map keys.
  friend bool rat_key_less(const Rat& a, const Rat& b) { return a < b; }

 private:
  long long num_;
  long long den_;
};

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

}  // namespace cusg
