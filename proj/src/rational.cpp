#include "cusg/rational.hpp"

#include <numeric>

namespace cusg {

namespace {

using i128 = __int128;

long long checked_narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) fail(Err::Overflow, "rational arithmetic");
  return static_cast<long long>(v);
}

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) fail(Err::ParseError, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

Rat operator+(const Rat& a, const Rat& b) {
  i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
  i128 d = i128(a.den_) * b.den_;
  // Reduce in 128 bits before narrowing.
  i128 an = n < 0 ? -n : n;
  i128 gg = d;
  while (an != 0) {
    i128 t = gg % an;
    gg = an;
    an = t;
  }
  if (gg > 1) {
    n /= gg;
    d /= gg;
  }
  Rat r;
  r.num_ = checked_narrow(n);
  r.den_ = checked_narrow(d);
  return r;
}

Rat operator-(const Rat& a, const Rat& b) {
  Rat nb = b;
  nb.num_ = -nb.num_;
  return a + nb;
}

Rat operator*(const Rat& a, const Rat& b) {
  long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
  long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
  i128 n = i128(a.num_ / g1) * (b.num_ / g2);
  i128 d = i128(a.den_ / g2) * (b.den_ / g1);
  Rat r;
  r.num_ = checked_narrow(n);
  r.den_ = checked_narrow(d);
  return r;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.num_ == 0) fail(Err::ParseError, "division by zero");
  Rat inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  if (inv.den_ < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return a * inv;
}

bool operator<(const Rat& a, const Rat& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

bool Rat::times_is_integer(long long k) const {
  return (i128(num_) * k) % den_ == 0;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      size_t pos = 0;
      long long n = std::stoll(text, &pos);
      if (pos != text.size()) fail(Err::ParseError, "bad rational: " + text);
      return Rat(n);
    }
    size_t p1 = 0, p2 = 0;
    long long n = std::stoll(text.substr(0, slash), &p1);
    long long d = std::stoll(text.substr(slash + 1), &p2);
    if (p1 != slash || p2 != text.size() - slash - 1)
      fail(Err::ParseError, "bad rational: " + text);
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    fail(Err::ParseError, "bad rational: " + text);
  } catch (const std::out_of_range&) {
    fail(Err::ParseError, "rational out of range: " + text);
  }
}

Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace cusg
