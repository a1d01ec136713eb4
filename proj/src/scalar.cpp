#include "cusg/scalar.hpp"

#include <sstream>

namespace cusg {

// -- kinds ---------------------------------------------------------------

ScalarKind ScalarKind::scaled(unsigned long long n) {
  if (n == 0) fail(Err::InvalidSpec, "scale must be positive");
  ScalarKind k;
  k.tag = ScalarTag::Scaled;
  k.scale = n;
  return k;
}

ScalarKind ScalarKind::uhf(Supernatural p) {
  if (p.empty()) fail(Err::InvalidSpec, "empty supernatural number");
  ScalarKind k;
  k.tag = ScalarTag::Uhf;
  k.p = std::move(p);
  return k;
}

ScalarKind ScalarKind::product(std::vector<ScalarKind> comps) {
  if (comps.empty()) fail(Err::InvalidSpec, "empty product kind");
  ScalarKind k;
  k.tag = ScalarTag::Product;
  k.components = std::move(comps);
  return k;
}

ScalarKind ScalarKind::power(const ScalarKind& base, int n) {
  if (n == 1) return base;
  return product(std::vector<ScalarKind>(n, base));
}

bool operator==(const ScalarKind& a, const ScalarKind& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case ScalarTag::Nat: return true;
    case ScalarTag::Scaled: return a.scale == b.scale;
    case ScalarTag::Uhf: return a.p == b.p;
    case ScalarTag::Product: return a.components == b.components;
  }
  return false;
}

std::string ScalarKind::str() const {
  switch (tag) {
    case ScalarTag::Nat: return "Nbar";
    case ScalarTag::Scaled: return "(1/" + std::to_string(scale) + ")Nbar";
    case ScalarTag::Uhf: return "C_{" + p.str() + "}";
    case ScalarTag::Product: {
      std::string out = "(";
      for (size_t i = 0; i < components.size(); ++i) {
        if (i) out += " + ";
        out += components[i].str();
      }
      return out + ")";
    }
  }
  return "?";
}

std::string UhfVal::str() const {
  switch (form) {
    case Infinite: return "inf";
    case Compact: return value.str();
    case Soft: return "soft " + value.str();
  }
  return "?";
}

bool operator==(const ScalarValue& a, const ScalarValue& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case ScalarTag::Nat:
    case ScalarTag::Scaled: return a.nat == b.nat;
    case ScalarTag::Uhf: return a.uhf == b.uhf;
    case ScalarTag::Product: return a.comps == b.comps;
  }
  return false;
}

// -- validity ------------------------------------------------------------

bool scalar_valid(const ScalarKind& k, const ScalarValue& v) {
  if (v.tag != k.tag) return false;
  switch (k.tag) {
    case ScalarTag::Nat:
    case ScalarTag::Scaled: return true;
    case ScalarTag::Uhf:
      if (v.uhf.form == UhfVal::Compact)
        return !v.uhf.value.is_negative() && denominator_divides(v.uhf.value, k.p);
      if (v.uhf.form == UhfVal::Soft)
        return !v.uhf.value.is_negative() && !v.uhf.value.is_zero();
      return true;
    case ScalarTag::Product: {
      if (v.comps.size() != k.components.size()) return false;
      for (size_t i = 0; i < v.comps.size(); ++i)
        if (!scalar_valid(k.components[i], v.comps[i])) return false;
      return true;
    }
  }
  return false;
}

void scalar_require_valid(const ScalarKind& k, const ScalarValue& v) {
  if (!scalar_valid(k, v)) {
    if (k.tag == ScalarTag::Uhf && v.tag == ScalarTag::Uhf && v.uhf.form == UhfVal::Compact)
      fail(Err::InvalidForSupernatural,
           "compact denominator of " + v.uhf.value.str() + " does not divide " + k.p.str());
    fail(Err::ElementNotInSemigroup, "value does not match scalar kind " + k.str());
  }
}

ScalarValue scalar_zero(const ScalarKind& k) {
  switch (k.tag) {
    case ScalarTag::Nat: return ScalarValue::of_nat(ExtNat::of(0));
    case ScalarTag::Scaled: return ScalarValue::of_scaled(ExtNat::of(0));
    case ScalarTag::Uhf: return ScalarValue::of_uhf(UhfVal::compact(Rat(0)));
    case ScalarTag::Product: {
      std::vector<ScalarValue> comps;
      comps.reserve(k.components.size());
      for (auto& c : k.components) comps.push_back(scalar_zero(c));
      return ScalarValue::of_tuple(std::move(comps));
    }
  }
  fail(Err::Internal, "zero");
}

ScalarValue scalar_infinity(const ScalarKind& k) {
  switch (k.tag) {
    case ScalarTag::Nat: return ScalarValue::of_nat(ExtNat::inf());
    case ScalarTag::Scaled: return ScalarValue::of_scaled(ExtNat::inf());
    case ScalarTag::Uhf: return ScalarValue::of_uhf(UhfVal::inf());
    case ScalarTag::Product: {
      std::vector<ScalarValue> comps;
      for (auto& c : k.components) comps.push_back(scalar_infinity(c));
      return ScalarValue::of_tuple(std::move(comps));
    }
  }
  fail(Err::Internal, "infinity");
}

std::optional<Rat> scalar_rational_value(const ScalarKind& k, const ScalarValue& v) {
  switch (k.tag) {
    case ScalarTag::Nat:
      if (v.nat.infinite) return std::nullopt;
      return Rat((long long)v.nat.value);
    case ScalarTag::Scaled:
      if (v.nat.infinite) return std::nullopt;
      return Rat((long long)v.nat.value, (long long)k.scale);
    case ScalarTag::Uhf:
      if (v.uhf.form == UhfVal::Infinite) return std::nullopt;
      return v.uhf.value;
    case ScalarTag::Product: fail(Err::KindMismatch, "rational value of a tuple");
  }
  return std::nullopt;
}

// -- C_p tables ------------------------------------------------------------

namespace {

void check_uhf(const Supernatural& p, const UhfVal& a) {
  if (a.form == UhfVal::Compact && !denominator_divides(a.value, p))
    fail(Err::InvalidForSupernatural,
         "compact denominator of " + a.value.str() + " does not divide " + p.str());
}

}  // namespace

bool uhf_leq(const Supernatural& p, const UhfVal& a, const UhfVal& b) {
  check_uhf(p, a);
  check_uhf(p, b);
  if (b.form == UhfVal::Infinite) return true;
  if (a.form == UhfVal::Infinite) return false;
  if (a.form == UhfVal::Compact && b.form == UhfVal::Soft) return a.value < b.value;
  return a.value <= b.value;
}

bool uhf_way_below(const Supernatural& p, const UhfVal& a, const UhfVal& b) {
  check_uhf(p, a);
  check_uhf(p, b);
  if (b.form == UhfVal::Infinite) return a.form != UhfVal::Infinite;
  if (b.form == UhfVal::Compact) return uhf_leq(p, a, b);
  // Soft target: finite sources strictly below the value.
  if (a.form == UhfVal::Infinite) return false;
  return a.value < b.value;
}

UhfVal uhf_add(const UhfVal& a, const UhfVal& b) {
  if (a.form == UhfVal::Infinite || b.form == UhfVal::Infinite) return UhfVal::inf();
  if (a.form == UhfVal::Soft || b.form == UhfVal::Soft)
    return UhfVal::soft(a.value + b.value);
  return UhfVal::compact(a.value + b.value);
}

bool uhf_membership(const Supernatural& sub, const Supernatural& ambient, const UhfVal& a) {
  if (!ambient.divides(sub))
    fail(Err::NotASubsemigroup, sub.str() + " does not divide " + ambient.str());
  check_uhf(ambient, a);
  if (a.form != UhfVal::Compact) return true;
  return denominator_divides(a.value, sub);
}

// -- order / addition / way-below -------------------------------------------

bool scalar_leq(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b) {
  scalar_require_valid(k, a);
  scalar_require_valid(k, b);
  switch (k.tag) {
    case ScalarTag::Nat:
    case ScalarTag::Scaled: return a.nat <= b.nat;
    case ScalarTag::Uhf: return uhf_leq(k.p, a.uhf, b.uhf);
    case ScalarTag::Product:
      for (size_t i = 0; i < k.components.size(); ++i)
        if (!scalar_leq(k.components[i], a.comps[i], b.comps[i])) return false;
      return true;
  }
  return false;
}

bool scalar_way_below(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b) {
  scalar_require_valid(k, a);
  scalar_require_valid(k, b);
  switch (k.tag) {
    case ScalarTag::Nat:
    case ScalarTag::Scaled: return !a.nat.infinite && a.nat <= b.nat;
    case ScalarTag::Uhf: return uhf_way_below(k.p, a.uhf, b.uhf);
    case ScalarTag::Product:
      for (size_t i = 0; i < k.components.size(); ++i)
        if (!scalar_way_below(k.components[i], a.comps[i], b.comps[i])) return false;
      return true;
  }
  return false;
}

ScalarValue scalar_add(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b) {
  scalar_require_valid(k, a);
  scalar_require_valid(k, b);
  switch (k.tag) {
    case ScalarTag::Nat: return ScalarValue::of_nat(a.nat + b.nat);
    case ScalarTag::Scaled: {
      ScalarValue r = ScalarValue::of_scaled(a.nat + b.nat);
      return r;
    }
    case ScalarTag::Uhf: return ScalarValue::of_uhf(uhf_add(a.uhf, b.uhf));
    case ScalarTag::Product: {
      std::vector<ScalarValue> comps;
      comps.reserve(k.components.size());
      for (size_t i = 0; i < k.components.size(); ++i)
        comps.push_back(scalar_add(k.components[i], a.comps[i], b.comps[i]));
      return ScalarValue::of_tuple(std::move(comps));
    }
  }
  fail(Err::Internal, "add");
}

bool scalar_is_compact(const ScalarKind& k, const ScalarValue& v) {
  return scalar_way_below(k, v, v);
}

ScalarValue scalar_join(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b) {
  if (k.tag == ScalarTag::Product) {
    std::vector<ScalarValue> comps;
    comps.reserve(k.components.size());
    for (size_t i = 0; i < k.components.size(); ++i)
      comps.push_back(scalar_join(k.components[i], a.comps[i], b.comps[i]));
    return ScalarValue::of_tuple(std::move(comps));
  }
  return scalar_leq(k, a, b) ? b : a;
}

ScalarValue scalar_meet(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b) {
  if (k.tag == ScalarTag::Product) {
    std::vector<ScalarValue> comps;
    comps.reserve(k.components.size());
    for (size_t i = 0; i < k.components.size(); ++i)
      comps.push_back(scalar_meet(k.components[i], a.comps[i], b.comps[i]));
    return ScalarValue::of_tuple(std::move(comps));
  }
  return scalar_leq(k, a, b) ? a : b;
}

// -- canonical approximants ---------------------------------------------------

ScalarValue scalar_approximant(const ScalarKind& k, const ScalarValue& v, int step) {
  if (step < 1) fail(Err::PreconditionViolated, "approximant step must be >= 1");
  scalar_require_valid(k, v);
  switch (k.tag) {
    case ScalarTag::Nat:
    case ScalarTag::Scaled: {
      if (!v.nat.infinite) return v;
      ScalarValue r = v;
      r.nat = ExtNat::of((unsigned long long)step);
      return r;
    }
    case ScalarTag::Uhf: {
      switch (v.uhf.form) {
        case UhfVal::Compact: return v;
        case UhfVal::Infinite: return ScalarValue::of_uhf(UhfVal::compact(Rat(step)));
        case UhfVal::Soft: {
          // r(1 - 2^-step), strictly increasing with supremum r.
          Rat pow2(1);
          for (int i = 0; i < step && i < 40; ++i) pow2 = pow2 * Rat(1, 2);
          return ScalarValue::of_uhf(UhfVal::soft(v.uhf.value - v.uhf.value * pow2));
        }
      }
      fail(Err::Internal, "approximant uhf");
    }
    case ScalarTag::Product: {
      std::vector<ScalarValue> comps;
      comps.reserve(k.components.size());
      for (size_t i = 0; i < k.components.size(); ++i)
        comps.push_back(scalar_approximant(k.components[i], v.comps[i], step));
      return ScalarValue::of_tuple(std::move(comps));
    }
  }
  fail(Err::Internal, "approximant");
}

// -- interpolation ------------------------------------------------------------

std::optional<ScalarValue> scalar_interpolate(const ScalarKind& k,
                                              const std::vector<ScalarValue>& lowers,
                                              const std::vector<ScalarValue>& uppers) {
  ScalarValue c = scalar_zero(k);
  for (auto& l : lowers) c = scalar_join(k, c, l);
  for (auto& u : uppers)
    if (!scalar_way_below(k, c, u)) return std::nullopt;
  return c;
}

ScalarValue scalar_strict_interpolate(const ScalarKind& k, const ScalarValue& c,
                                      const ScalarValue& f) {
  if (!scalar_way_below(k, c, f))
    fail(Err::PreconditionViolated, "strict interpolation requires c << f");
  switch (k.tag) {
    case ScalarTag::Nat:
    case ScalarTag::Scaled: {
      if (!f.nat.infinite) return f;
      ScalarValue e = c;
      e.nat = ExtNat::of(c.nat.value + 1);
      return e;
    }
    case ScalarTag::Uhf: {
      if (f.uhf.form == UhfVal::Compact) return f;
      if (f.uhf.form == UhfVal::Infinite) {
        // c is finite; the next integer rank sits strictly between.
        long long floor_c = c.uhf.value.num() / c.uhf.value.den();
        return ScalarValue::of_uhf(UhfVal::compact(Rat(floor_c + 1)));
      }
      // Soft target: midpoint of the values, kept soft.
      Rat mid = (c.uhf.value + f.uhf.value) / Rat(2);
      return ScalarValue::of_uhf(UhfVal::soft(mid));
    }
    case ScalarTag::Product: {
      std::vector<ScalarValue> comps;
      comps.reserve(k.components.size());
      for (size_t i = 0; i < k.components.size(); ++i)
        comps.push_back(scalar_strict_interpolate(k.components[i], c.comps[i], f.comps[i]));
      return ScalarValue::of_tuple(std::move(comps));
    }
  }
  fail(Err::Internal, "strict interpolate");
}

// -- product structure -----------------------------------------------------------

std::vector<ScalarKind> flatten_kind(const ScalarKind& k) {
  if (k.tag != ScalarTag::Product) return {k};
  std::vector<ScalarKind> out;
  for (auto& c : k.components)
    for (auto& a : flatten_kind(c)) out.push_back(a);
  return out;
}

std::vector<ScalarValue> flatten_value(const ScalarKind& k, const ScalarValue& v) {
  if (k.tag != ScalarTag::Product) return {v};
  std::vector<ScalarValue> out;
  for (size_t i = 0; i < k.components.size(); ++i)
    for (auto& a : flatten_value(k.components[i], v.comps[i])) out.push_back(a);
  return out;
}

ScalarValue unflatten_value(const ScalarKind& k, const std::vector<ScalarValue>& atoms,
                            size_t& cursor) {
  if (k.tag != ScalarTag::Product) {
    if (cursor >= atoms.size()) fail(Err::KindMismatch, "not enough atoms for the kind");
    return atoms[cursor++];
  }
  std::vector<ScalarValue> comps;
  for (auto& c : k.components) comps.push_back(unflatten_value(c, atoms, cursor));
  return ScalarValue::of_tuple(std::move(comps));
}

// -- text I/O ------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level(const std::string& body) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '(') depth++;
    if (ch == ')') depth--;
    if (ch == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

}  // namespace

ScalarValue scalar_parse(const ScalarKind& k, const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) fail(Err::ParseError, "empty scalar literal");
  if (k.tag == ScalarTag::Product) {
    if (text.front() != '(' || text.back() != ')')
      fail(Err::ParseError, "tuple literal expected: " + text);
    auto parts = split_top_level(text.substr(1, text.size() - 2));
    if (parts.size() != k.components.size())
      fail(Err::ParseError, "tuple arity mismatch in: " + text);
    std::vector<ScalarValue> comps;
    for (size_t i = 0; i < parts.size(); ++i)
      comps.push_back(scalar_parse(k.components[i], parts[i]));
    return ScalarValue::of_tuple(std::move(comps));
  }
  if (text == "inf") return scalar_infinity(k);
  bool soft = false;
  if (text.rfind("soft ", 0) == 0 || text.rfind("soft\t", 0) == 0) {
    soft = true;
    text = trim(text.substr(5));
  }
  Rat q = Rat::parse(text);
  if (q.is_negative()) fail(Err::ParseError, "negative scalar literal: " + raw);
  switch (k.tag) {
    case ScalarTag::Nat: {
      if (soft) fail(Err::ParseError, "soft values only exist in C_p: " + raw);
      if (!q.is_integer()) fail(Err::ParseError, "Nbar needs an integer: " + raw);
      return ScalarValue::of_nat(ExtNat::of((unsigned long long)q.num()));
    }
    case ScalarTag::Scaled: {
      if (soft) fail(Err::ParseError, "soft values only exist in C_p: " + raw);
      Rat numerator = q * Rat((long long)k.scale);
      if (!numerator.is_integer())
        fail(Err::ElementNotInSemigroup,
             q.str() + " is not a multiple of 1/" + std::to_string(k.scale));
      return ScalarValue::of_scaled(ExtNat::of((unsigned long long)numerator.num()));
    }
    case ScalarTag::Uhf: {
      if (soft) {
        if (q.is_zero()) fail(Err::ParseError, "soft values are strictly positive");
        return ScalarValue::of_uhf(UhfVal::soft(q));
      }
      ScalarValue v = ScalarValue::of_uhf(UhfVal::compact(q));
      scalar_require_valid(k, v);
      return v;
    }
    case ScalarTag::Product: break;
  }
  fail(Err::Internal, "parse");
}

std::string scalar_str(const ScalarKind& k, const ScalarValue& v) {
  switch (k.tag) {
    case ScalarTag::Nat: return v.nat.str();
    case ScalarTag::Scaled: {
      if (v.nat.infinite) return "inf";
      return Rat((long long)v.nat.value, (long long)k.scale).str();
    }
    case ScalarTag::Uhf: return v.uhf.str();
    case ScalarTag::Product: {
      std::string out = "(";
      for (size_t i = 0; i < v.comps.size(); ++i) {
        if (i) out += ",";
        out += scalar_str(k.components[i], v.comps[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

}  // namespace cusg
