#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "cusg/scalar.hpp"
#include "cusg/step_function.hpp"

namespace cusg {

class Element;

/// Depth-indexed rapidly increasing sequence presenting a general element as
/// a formal supremum. The generator is 1-indexed; rapid increase has been
/// checked up to verified_depth.
struct FormalSup {
  std::function<Element(int)> generator;
  int verified_depth = 0;
};

/// Value in one of the supported semigroup tiers.
class Element {
 public:
  enum class Tier { Scalar, Step, Pair, Sup };

  Element() : tier_(Tier::Scalar) {}

  static Element of_scalar(ScalarValue v);
  static Element of_step(StepFunction f);
  static Element of_pair(Element left, Element right);
  static Element of_sup(FormalSup s);

  Tier tier() const { return tier_; }
  bool is_scalar() const { return tier_ == Tier::Scalar; }
  bool is_step() const { return tier_ == Tier::Step; }
  bool is_pair() const { return tier_ == Tier::Pair; }
  bool is_sup() const { return tier_ == Tier::Sup; }

  const ScalarValue& scalar() const;
  const StepFunction& step() const;
  const Element& left() const;
  const Element& right() const;
  const FormalSup& sup() const;

  /// Structural equality of canonical forms (formal sups are never equal
  /// structurally unless they are the same object).
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  Tier tier_;
  ScalarValue scalar_;
  std::shared_ptr<const StepFunction> step_;
  std::shared_ptr<const std::pair<Element, Element>> pair_;
  std::shared_ptr<const FormalSup> sup_;
};

}  // namespace cusg
