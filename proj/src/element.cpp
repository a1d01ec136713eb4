#include "cusg/element.hpp"

#include "cusg/errors.hpp"

namespace cusg {

Element Element::of_scalar(ScalarValue v) {
  Element e;
  e.tier_ = Tier::Scalar;
  e.scalar_ = std::move(v);
  return e;
}

Element Element::of_step(StepFunction f) {
  Element e;
  e.tier_ = Tier::Step;
  e.step_ = std::make_shared<const StepFunction>(std::move(f));
  return e;
}

Element Element::of_pair(Element left, Element right) {
  Element e;
  e.tier_ = Tier::Pair;
  e.pair_ = std::make_shared<const std::pair<Element, Element>>(std::move(left),
                                                                std::move(right));
  return e;
}

Element Element::of_sup(FormalSup s) {
  Element e;
  e.tier_ = Tier::Sup;
  e.sup_ = std::make_shared<const FormalSup>(std::move(s));
  return e;
}

const ScalarValue& Element::scalar() const {
  if (tier_ != Tier::Scalar) fail(Err::KindMismatch, "not a scalar element");
  return scalar_;
}

const StepFunction& Element::step() const {
  if (tier_ != Tier::Step) fail(Err::KindMismatch, "not a step-function element");
  return *step_;
}

const Element& Element::left() const {
  if (tier_ != Tier::Pair) fail(Err::KindMismatch, "not a pullback element");
  return pair_->first;
}

const Element& Element::right() const {
  if (tier_ != Tier::Pair) fail(Err::KindMismatch, "not a pullback element");
  return pair_->second;
}

const FormalSup& Element::sup() const {
  if (tier_ != Tier::Sup) fail(Err::KindMismatch, "not a formal supremum");
  return *sup_;
}

bool operator==(const Element& a, const Element& b) {
  if (a.tier_ != b.tier_) return false;
  switch (a.tier_) {
    case Element::Tier::Scalar: return a.scalar_ == b.scalar_;
    case Element::Tier::Step: return *a.step_ == *b.step_;
    case Element::Tier::Pair:
      return a.pair_->first == b.pair_->first && a.pair_->second == b.pair_->second;
    case Element::Tier::Sup: return a.sup_ == b.sup_;
  }
  return false;
}

}  // namespace cusg
