#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cusg/errors.hpp"
#include "cusg/rational.hpp"
#include "cusg/supernatural.hpp"

namespace cusg {

/// Element of the extended naturals N ∪ {∞}; ∞ is absorbing under addition
/// and the compacts are exactly the finite values.
struct ExtNat {
  bool infinite = false;
  unsigned long long value = 0;

  static ExtNat inf() { return {true, 0}; }
  static ExtNat of(unsigned long long v) { return {false, v}; }

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<=(const ExtNat& a, const ExtNat& b) {
    if (b.infinite) return true;
    if (a.infinite) return false;
    return a.value <= b.value;
  }

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
    if (a.infinite || b.infinite) return inf();
    if (a.value > UINT64_MAX - b.value) fail(Err::Overflow, "ExtNat addition");
    return of(a.value + b.value);
  }

  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

/// Element of C_p = R^{++} ⊔ ⋃_{n|p}(1/n)N ⊔ {∞}. Compact(0) is the zero.
struct UhfVal {
  enum Form { Compact = 0, Soft = 1, Infinite = 2 };

  Form form = Compact;
  Rat value;  // unused for Infinite; > 0 required for Soft

  static UhfVal inf() { return {Infinite, Rat(0)}; }
  static UhfVal compact(Rat q) { return {Compact, q}; }
  static UhfVal soft(Rat r) { return {Soft, r}; }

  friend bool operator==(const UhfVal& a, const UhfVal& b) {
    if (a.form != b.form) return false;
    if (a.form == Infinite) return true;
    return a.value == b.value;
  }

  std::string str() const;
};

enum class ScalarTag { Nat, Scaled, Uhf, Product };

/// Descriptor of a concrete scalar Cu-semigroup: N̄, (1/n)N̄, C_p, or a finite
/// direct sum of such (componentwise structure).
struct ScalarKind {
  ScalarTag tag = ScalarTag::Nat;
  unsigned long long scale = 1;        // Scaled: the n of (1/n)N̄
  Supernatural p;                      // Uhf
  std::vector<ScalarKind> components;  // Product

  static ScalarKind nat() { return {}; }
  static ScalarKind scaled(unsigned long long n);
  static ScalarKind uhf(Supernatural p);
  static ScalarKind product(std::vector<ScalarKind> comps);
  /// Homogeneous power: k copies of `base`.
  static ScalarKind power(const ScalarKind& base, int k);

  bool is_chain() const { return tag != ScalarTag::Product; }
  size_t arity() const { return tag == ScalarTag::Product ? components.size() : 1; }

  friend bool operator==(const ScalarKind& a, const ScalarKind& b);
  std::string str() const;
};

/// Value in a scalar semigroup; the active member follows the kind's tag.
struct ScalarValue {
  ScalarTag tag = ScalarTag::Nat;
  ExtNat nat;                       // Nat and Scaled (the numerator)
  UhfVal uhf;                       // Uhf
  std::vector<ScalarValue> comps;   // Product

  static ScalarValue of_nat(ExtNat v) {
    ScalarValue s;
    s.tag = ScalarTag::Nat;
    s.nat = v;
    return s;
  }
  static ScalarValue of_scaled(ExtNat numerator) {
    ScalarValue s;
    s.tag = ScalarTag::Scaled;
    s.nat = numerator;
    return s;
  }
  static ScalarValue of_uhf(UhfVal v) {
    ScalarValue s;
    s.tag = ScalarTag::Uhf;
    s.uhf = v;
    return s;
  }
  static ScalarValue of_tuple(std::vector<ScalarValue> comps) {
    ScalarValue s;
    s.tag = ScalarTag::Product;
    s.comps = std::move(comps);
    return s;
  }

  friend bool operator==(const ScalarValue& a, const ScalarValue& b);
  friend bool operator!=(const ScalarValue& a, const ScalarValue& b) { return !(a == b); }
};

// -- validity and structure --------------------------------------------------

bool scalar_valid(const ScalarKind& k, const ScalarValue& v);
void scalar_require_valid(const ScalarKind& k, const ScalarValue& v);
ScalarValue scalar_zero(const ScalarKind& k);
ScalarValue scalar_infinity(const ScalarKind& k);

/// Rational value of a chain element (Err::KindMismatch on products;
/// Compact/Soft distinction is dropped, infinity not representable).
std::optional<Rat> scalar_rational_value(const ScalarKind& k, const ScalarValue& v);

// -- order, addition, way-below ----------------------------------------------

bool scalar_leq(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b);
bool scalar_way_below(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b);
ScalarValue scalar_add(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b);
bool scalar_is_compact(const ScalarKind& k, const ScalarValue& v);

/// Lattice operations; all supported scalars are chains or finite products of
/// chains, so these are total.
ScalarValue scalar_join(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b);
ScalarValue scalar_meet(const ScalarKind& k, const ScalarValue& a, const ScalarValue& b);

/// k-th member of the canonical rapidly increasing sequence with supremum v
/// (1-indexed; eventually constant exactly when v is compact).
ScalarValue scalar_approximant(const ScalarKind& k, const ScalarValue& v, int step);

/// Some c with l ≤ c for all lowers and c ≪ u for all uppers, or nullopt.
/// Returns the join of the lowers when it qualifies (least witness).
std::optional<ScalarValue> scalar_interpolate(const ScalarKind& k,
                                              const std::vector<ScalarValue>& lowers,
                                              const std::vector<ScalarValue>& uppers);

/// Given c ≪ f, a value e with c ≪ e ≪ f (Err::PreconditionViolated otherwise).
ScalarValue scalar_strict_interpolate(const ScalarKind& k, const ScalarValue& c,
                                      const ScalarValue& f);

// -- C_p specifics -----------------------------------------------------------

/// Order of C_p. Errors with InvalidForSupernatural if a compact denominator
/// does not divide p.
bool uhf_leq(const Supernatural& p, const UhfVal& a, const UhfVal& b);
bool uhf_way_below(const Supernatural& p, const UhfVal& a, const UhfVal& b);
UhfVal uhf_add(const UhfVal& a, const UhfVal& b);

/// Membership of a (valid for `ambient`) in C_sub ⊆ C_ambient.
bool uhf_membership(const Supernatural& sub, const Supernatural& ambient, const UhfVal& a);

// -- product structure ---------------------------------------------------------

/// Chain atoms of a (possibly nested) product kind, in order.
std::vector<ScalarKind> flatten_kind(const ScalarKind& k);
std::vector<ScalarValue> flatten_value(const ScalarKind& k, const ScalarValue& v);
/// Rebuilds a value of kind k from its chain atoms (consumed in order).
ScalarValue unflatten_value(const ScalarKind& k, const std::vector<ScalarValue>& atoms,
                            size_t& cursor);

// -- text I/O ----------------------------------------------------------------

/// Scalar literal syntax: `inf`, `k`, `k/n`, `soft k/n`, tuples `(a,b,...)`.
ScalarValue scalar_parse(const ScalarKind& k, const std::string& text);
std::string scalar_str(const ScalarKind& k, const ScalarValue& v);

}  // namespace cusg
