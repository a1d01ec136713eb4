#pragma once

#include <map>
#include <vector>

#include "cusg/step_function.hpp"

namespace cusg {

/// Compact containment g << f for step functions, decided by local
/// interpolation on the common refinement: every point cell p, with its
/// adjacent open cells N(p), must admit a scalar c with
///   g on p and N(p) <= c << f on p and N(p).
/// Shrinking neighbourhoods of step data consist of p together with slivers
/// of N(p), so this condition is equivalent to the characterization of
/// compact containment by local interpolants.
bool way_below_step(const StepFunction& g, const StepFunction& f);

/// k-th member of the canonical monotone approximating sequence of f: open
/// cells widen by a 1/2^k-schedule margin toward each point cell and every
/// value is replaced by its k-th canonical scalar approximant (meets keep the
/// data lower semicontinuous). g_k << f, g_k <= g_{k+1}, and sup_k g_k = f
/// pointwise.
StepFunction chi_approx(const StepFunction& f, int k);

/// Given g1 << f and g2 << f, a witness h with g1 << h, g2 << h, h << f
/// (PreconditionViolated otherwise). Margin cells around every point cell of
/// the common refinement carry strict interpolants, mirroring the directed
/// cover refinement with a zero-dimensional boundary set.
StepFunction directed_join(const StepFunction& g1, const StepFunction& g2,
                           const StepFunction& f);

/// The canonical rapidly increasing chain below f: chi approximants boosted
/// by directed joins so consecutive members are compactly contained.
class LscApproxChain {
 public:
  explicit LscApproxChain(StepFunction f) : f_(std::move(f)) {}
  /// 1-indexed; members are memoized.
  const StepFunction& at(int n);
  const StepFunction& target() const { return f_; }

 private:
  StepFunction f_;
  std::vector<StepFunction> cache_;
};

/// Pullback of step data along a cellwise-affine continuous map.
StepFunction precompose(const StepFunction& f, const CellMap& m);

/// Piecewise characteristic presentation: a finite family of open sets with
/// an ordered index map into the scalars, evaluated cellwise.
struct PiecewiseCharPresentation {
  Space space;
  ScalarKind kind;
  std::vector<OpenSet> opens;
  std::map<std::vector<int>, ScalarValue> phi;  // index sets, sorted; empty set maps to 0
};

StepFunction from_presentation(const PiecewiseCharPresentation& p);

}  // namespace cusg
