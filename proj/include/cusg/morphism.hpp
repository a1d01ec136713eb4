#pragma once

#include <memory>
#include <vector>

#include "cusg/semigroup.hpp"

namespace cusg {

/// Morphism in Cu between supported semigroups. Preservation of 0, +, order,
/// suprema at probes, and way-below at probes is a tested contract rather
/// than a structural guarantee.
///
/// Applied to a pullback element, a morphism acts on the right (function)
/// component; this realizes the connecting maps of iterated pullback chains,
/// whose left legs factor through the function part.
class CuMorphism;

/// One stage of a composition: the morphism and the semigroup it lands in.
struct MorphismStep {
  std::shared_ptr<const CuMorphism> morphism;
  SemigroupPtr target;
};

class CuMorphism {
 public:
  enum class Kind { Identity, MatrixMap, Evaluation, Restriction, Precomposition, Composition };
  using Step = MorphismStep;

  CuMorphism() : kind_(Kind::Identity) {}

  static CuMorphism identity();
  /// y_i = sum_j entries[i][j] * x_j on the flattened chain atoms of the
  /// value vector (0 * infinity = 0); between Lsc semigroups the matrix acts
  /// cellwise.
  static CuMorphism matrix(std::vector<std::vector<long long>> entries);
  /// f -> (f(p_1), ..., f(p_k)) as a flat product of scalar atoms.
  static CuMorphism evaluation(std::vector<Point> points);
  static CuMorphism restriction(SubComplex Y);
  static CuMorphism precomposition(CellMap m);
  static CuMorphism composition(std::vector<Step> steps);

  Kind kind() const { return kind_; }
  const std::vector<std::vector<long long>>& entries() const { return entries_; }
  const std::vector<Point>& points() const { return points_; }
  const SubComplex& subcomplex() const;
  const CellMap& cell_map() const;

  Element apply(const Semigroup& src, const Semigroup& dst, const Element& x) const;

  /// Block expansion: each entry e of `incidence` becomes e * I_k (used to
  /// lift vertex-incidence matrices to tuple-valued scalars).
  static std::vector<std::vector<long long>> block_matrix(
      const std::vector<std::vector<long long>>& incidence, int block);

 private:
  Kind kind_;
  std::vector<std::vector<long long>> entries_;
  std::vector<Point> points_;
  std::shared_ptr<const SubComplex> sub_;
  std::shared_ptr<const CellMap> map_;
  std::vector<Step> steps_;
};

/// Scalar-level matrix application on flattened atoms.
ScalarValue apply_matrix_scalar(const std::vector<std::vector<long long>>& entries,
                                const ScalarKind& src, const ScalarKind& dst,
                                const ScalarValue& x);

}  // namespace cusg
