#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cusg/element.hpp"
#include "cusg/lsc_order.hpp"
#include "cusg/sampling.hpp"
#include "cusg/ternary.hpp"

namespace cusg {

constexpr int kDefaultDepth = 16;

/// Abstract Cu-semigroup: an ordered abelian monoid with way-below, closed
/// under suprema of increasing sequences, in which every element is the
/// supremum of its canonical rapidly increasing approximant chain. Elements
/// are immutable and all operations are pure.
class Semigroup {
 public:
  virtual ~Semigroup() = default;

  virtual std::string name() const = 0;
  virtual Element zero() const = 0;
  virtual bool contains(const Element& a) const = 0;
  void require_element(const Element& a) const;

  virtual Ternary leq(const Element& a, const Element& b, int depth = kDefaultDepth) const = 0;
  virtual Ternary way_below(const Element& a, const Element& b,
                            int depth = kDefaultDepth) const = 0;
  virtual Element add(const Element& a, const Element& b) const = 0;

  /// Prefix of the canonical rapidly increasing chain with supremum a
  /// (1-indexed members; eventually constant exactly for compact a on scalar
  /// tiers).
  virtual std::vector<Element> approximant_chain(const Element& a, int count) const = 0;

  virtual Element sample(Rng& rng, const SampleParams& p) const = 0;

  virtual std::string format(const Element& a) const = 0;
  virtual Element parse(const std::string& text) const = 0;

  /// Canonical-form equality; Unknown when depth-bounded tiers cannot decide.
  virtual Ternary equal(const Element& a, const Element& b, int depth = kDefaultDepth) const;

  bool is_compact(const Element& a, int depth = kDefaultDepth) const {
    return way_below(a, a, depth).is_true();
  }
};

using SemigroupPtr = std::shared_ptr<const Semigroup>;

/// A concrete scalar Cu-semigroup (extended naturals, scaled copies, C_p, and
/// finite products).
class ScalarSemigroup : public Semigroup {
 public:
  explicit ScalarSemigroup(ScalarKind kind) : kind_(std::move(kind)) {}

  const ScalarKind& kind() const { return kind_; }

  std::string name() const override { return kind_.str(); }
  Element zero() const override { return Element::of_scalar(scalar_zero(kind_)); }
  bool contains(const Element& a) const override;
  Ternary leq(const Element& a, const Element& b, int depth) const override;
  Ternary way_below(const Element& a, const Element& b, int depth) const override;
  Element add(const Element& a, const Element& b) const override;
  std::vector<Element> approximant_chain(const Element& a, int count) const override;
  Element sample(Rng& rng, const SampleParams& p) const override;
  std::string format(const Element& a) const override;
  Element parse(const std::string& text) const override;

  /// Some c with l <= c for all lowers and c << u for all uppers, if any.
  std::optional<Element> interpolate(const std::vector<Element>& lowers,
                                     const std::vector<Element>& uppers) const;

 private:
  ScalarKind kind_;
};

/// Lsc(X, M) for a supported space X and scalar kind M; step functions are
/// the dense computable tier, formal sups present general elements.
class LscSemigroup final : public Semigroup {
 public:
  LscSemigroup(Space X, ScalarKind scalar);

  const Space& space() const { return space_; }
  const ScalarKind& scalar() const { return scalar_; }

  std::string name() const override;
  Element zero() const override {
    return Element::of_step(StepFunction::zero(space_, scalar_));
  }
  bool contains(const Element& a) const override;
  Ternary leq(const Element& a, const Element& b, int depth) const override;
  Ternary way_below(const Element& a, const Element& b, int depth) const override;
  Element add(const Element& a, const Element& b) const override;
  std::vector<Element> approximant_chain(const Element& a, int count) const override;
  Element sample(Rng& rng, const SampleParams& p) const override;
  std::string format(const Element& a) const override;
  Element parse(const std::string& text) const override;

 private:
  Space space_;
  ScalarKind scalar_;
};

// -- generic operations --------------------------------------------------

/// Depth-bounded comparisons that accept formal-sup operands by probing their
/// terms; exact-tier comparisons delegate back to S. Used by the Lsc and
/// pullback tiers.
Ternary sup_aware_leq(const Semigroup& S, const Element& a, const Element& b, int depth);
Ternary sup_aware_way_below(const Semigroup& S, const Element& a, const Element& b, int depth);
Element sup_aware_add(const Semigroup& S, const Element& a, const Element& b);

/// Supremum of an increasing sequence probed to the given depth. Returns the
/// recognized element when the probes stabilize (or, on integer chains, grow
/// strictly toward the top); otherwise wraps the generator as a FormalSup.
/// Err::NotIncreasing if a probed pair violates monotonicity.
Element sup_increasing(const Semigroup& S, const std::function<Element(int)>& gen, int depth);

/// Probe-certified check that sup_k gen(k) equals candidate: every probed
/// term sits below candidate and every canonical approximant of candidate is
/// dominated by some probed term.
bool sup_equals(const Semigroup& S, const std::function<Element(int)>& gen,
                const Element& candidate, int depth);

}  // namespace cusg
