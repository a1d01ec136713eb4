#include "cusg/supernatural.hpp"

#include <sstream>

namespace cusg {

namespace {

std::map<unsigned long long, int> factorize(unsigned long long n) {
  std::map<unsigned long long, int> out;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out[p]++;
      n /= p;
    }
  }
  if (n > 1) out[n]++;
  return out;
}

}  // namespace

Supernatural Supernatural::from_int(unsigned long long n) {
  if (n == 0) fail(Err::InvalidSpec, "supernatural number must be positive");
  Supernatural s;
  s.exps_ = factorize(n);
  if (s.exps_.empty()) s.exps_[2] = 0;  // n == 1: keep a non-empty marker entry
  return s;
}

Supernatural Supernatural::parse(const std::string& text) {
  Supernatural s;
  std::stringstream ss(text);
  std::string factor;
  bool any = false;
  while (std::getline(ss, factor, '*')) {
    if (factor.empty()) fail(Err::ParseError, "bad supernatural: " + text);
    any = true;
    auto caret = factor.find('^');
    std::string base_s = caret == std::string::npos ? factor : factor.substr(0, caret);
    unsigned long long base = 0;
    try {
      size_t pos = 0;
      base = std::stoull(base_s, &pos);
      if (pos != base_s.size()) fail(Err::ParseError, "bad supernatural: " + text);
    } catch (const std::logic_error&) {
      fail(Err::ParseError, "bad supernatural: " + text);
    }
    int exp = 1;
    if (caret != std::string::npos) {
      std::string exp_s = factor.substr(caret + 1);
      if (exp_s == "inf") {
        exp = kInf;
      } else {
        try {
          size_t pos = 0;
          exp = std::stoi(exp_s, &pos);
          if (pos != exp_s.size() || exp < 1) fail(Err::ParseError, "bad exponent: " + text);
        } catch (const std::logic_error&) {
          fail(Err::ParseError, "bad exponent: " + text);
        }
      }
    }
    for (auto& [prime, e] : factorize(base)) {
      if (exp == kInf) {
        s.exps_[prime] = kInf;
      } else if (s.exps_.count(prime) && s.exps_[prime] == kInf) {
        // stays infinite
      } else {
        s.exps_[prime] += e * exp;
      }
    }
    if (base == 1) s.exps_[2] += 0;
  }
  if (!any || s.exps_.empty()) fail(Err::ParseError, "bad supernatural: " + text);
  return s;
}

void Supernatural::set_exponent(unsigned long long prime, int exp) { exps_[prime] = exp; }

bool Supernatural::is_finite() const {
  for (auto& [p, e] : exps_)
    if (e == kInf) return false;
  return true;
}

bool Supernatural::divides_int(unsigned long long n) const {
  for (auto& [prime, e] : factorize(n)) {
    auto it = exps_.find(prime);
    if (it == exps_.end()) return false;
    if (it->second != kInf && it->second < e) return false;
  }
  return true;
}

bool Supernatural::divides(const Supernatural& sub) const {
  for (auto& [prime, e] : sub.exps_) {
    if (e == 0) continue;
    auto it = exps_.find(prime);
    if (it == exps_.end()) return false;
    if (it->second == kInf) continue;
    if (e == kInf || e > it->second) return false;
  }
  return true;
}

Supernatural operator*(const Supernatural& a, const Supernatural& b) {
  constexpr int kInf = Supernatural::kInf;
  Supernatural s = a;
  for (auto& [prime, e] : b.exps_) {
    if (e == kInf || (s.exps_.count(prime) && s.exps_[prime] == kInf)) {
      s.exps_[prime] = kInf;
    } else {
      s.exps_[prime] += e;
    }
  }
  return s;
}

unsigned long long Supernatural::stage(int k) const {
  unsigned long long n = 1;
  for (auto& [prime, e] : exps_) {
    int reps = (e == kInf) ? k : std::min(e, k);
    for (int i = 0; i < reps; ++i) {
      if (n > (1ULL << 62) / prime) fail(Err::Overflow, "supernatural stage");
      n *= prime;
    }
  }
  return n;
}

std::string Supernatural::str() const {
  std::string out;
  for (auto& [prime, e] : exps_) {
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += std::to_string(prime);
    if (e == kInf) {
      out += "^inf";
    } else if (e != 1) {
      out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

bool denominator_divides(const Rat& q, const Supernatural& p) {
  if (q.is_negative()) return false;
  return p.divides_int(static_cast<unsigned long long>(q.den()));
}

const char* err_name(Err e) {
  switch (e) {
    case Err::Overflow: return "Overflow";
    case Err::ParseError: return "ParseError";
    case Err::KindMismatch: return "KindMismatch";
    case Err::ElementNotInSemigroup: return "ElementNotInSemigroup";
    case Err::NotIncreasing: return "NotIncreasing";
    case Err::InvalidForSupernatural: return "InvalidForSupernatural";
    case Err::NotASubsemigroup: return "NotASubsemigroup";
    case Err::EmptyLowers: return "EmptyLowers";
    case Err::SpaceMismatch: return "SpaceMismatch";
    case Err::NotLowerSemicontinuous: return "NotLowerSemicontinuous";
    case Err::BadBreakpoints: return "BadBreakpoints";
    case Err::PointNotInSpace: return "PointNotInSpace";
    case Err::NotClosedSubcomplex: return "NotClosedSubcomplex";
    case Err::GlueOrderViolation: return "GlueOrderViolation";
    case Err::NotOpen: return "NotOpen";
    case Err::MultiplicityExceeded: return "MultiplicityExceeded";
    case Err::PhiNotOrdered: return "PhiNotOrdered";
    case Err::MapNotCellwiseAffine: return "MapNotCellwiseAffine";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::ConstraintViolated: return "ConstraintViolated";
    case Err::DescriptorMismatch: return "DescriptorMismatch";
    case Err::StageMismatch: return "StageMismatch";
    case Err::CannotMatchBase: return "CannotMatchBase";
    case Err::InvalidSpec: return "InvalidSpec";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace cusg
