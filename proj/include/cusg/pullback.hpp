#pragma once

#include "cusg/morphism.hpp"
#include "cusg/semigroup.hpp"

namespace cusg {

/// Pullback semigroup S_left ⊕_{S_base} S_right = {(b, a) | phi(b) = pi(a)}
/// with componentwise order, addition, and suprema. With pi surjective the
/// pullback is again a Cu-semigroup; canonical rapidly increasing
/// presentations are built by approximating the left value, pushing it
/// through phi, and patching the base-constrained cells onto the canonical
/// chain of the right value.
class PullbackSemigroup final : public Semigroup {
 public:
  PullbackSemigroup(SemigroupPtr left, SemigroupPtr right, SemigroupPtr base, CuMorphism phi,
                    CuMorphism pi, bool pi_surjective);

  const SemigroupPtr& left_semigroup() const { return left_; }
  const SemigroupPtr& right_semigroup() const { return right_; }
  const SemigroupPtr& base_semigroup() const { return base_; }
  const CuMorphism& phi() const { return phi_; }
  const CuMorphism& pi() const { return pi_; }

  /// Validates the base constraint phi(b) = pi(a); ConstraintViolated with
  /// the two base values otherwise.
  Element make_pair(const Element& b, const Element& a) const;

  Element phi_of(const Element& left_value) const;
  Element pi_of(const Element& right_value) const;

  std::string name() const override;
  Element zero() const override;
  bool contains(const Element& x) const override;
  Ternary leq(const Element& x, const Element& y, int depth) const override;
  Ternary way_below(const Element& x, const Element& y, int depth) const override;
  Element add(const Element& x, const Element& y) const override;
  std::vector<Element> approximant_chain(const Element& x, int count) const override;
  Element sample(Rng& rng, const SampleParams& p) const override;
  std::string format(const Element& x) const override;
  /// Pair syntax: `<left> | <right>`.
  Element parse(const std::string& text) const override;

 private:
  struct ConstraintGeometry;
  ConstraintGeometry constrained_set() const;
  StepFunction base_as_glue_data(const ConstraintGeometry& geo, const Element& base_value) const;

  SemigroupPtr left_, right_, base_;
  CuMorphism phi_, pi_;
  bool pi_surjective_;
};

/// Writes `data` onto the closed subcomplex Y inside `f`, with collars of
/// radius rho carrying the boundary values into the complement (junction
/// point cells take meets to stay lower semicontinuous). The result agrees
/// with `data` on Y exactly.
StepFunction patch_step(const StepFunction& f, const SubComplex& Y, const StepFunction& data,
                        const Rat& rho);

}  // namespace cusg
