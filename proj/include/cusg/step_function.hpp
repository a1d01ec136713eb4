#pragma once

#include <vector>

#include "cusg/scalar.hpp"
#include "cusg/space.hpp"

namespace cusg {

/// Finitely presented lower-semicontinuous function on a 1-complex: exact
/// rational breakpoints per edge with a value per cell, alternating point and
/// open-interval cells, plus a value per vertex. Lower semicontinuity means
/// every point cell's value sits below the values of its adjacent open cells;
/// for step data this is exactly openness of {t | a << f(t)} for all a.
class StepFunction {
 public:
  struct EdgeData {
    std::vector<Rat> cuts;                     // strictly increasing, in (0,1)
    std::vector<ScalarValue> point_values;     // one per cut
    std::vector<ScalarValue> interval_values;  // cuts.size() + 1 open cells
  };

  StepFunction() = default;

  /// Validates cell data (lower semicontinuity, breakpoint order) and brings
  /// it to canonical form. Errors: NotLowerSemicontinuous, BadBreakpoints.
  StepFunction(Space space, ScalarKind kind, std::vector<ScalarValue> vertex_values,
               std::vector<EdgeData> edges);

  static StepFunction constant(const Space& X, const ScalarKind& k, const ScalarValue& v);
  static StepFunction zero(const Space& X, const ScalarKind& k);

  const Space& space() const { return space_; }
  const ScalarKind& kind() const { return kind_; }
  const std::vector<ScalarValue>& vertex_values() const { return vertex_values_; }
  const std::vector<EdgeData>& edges() const { return edges_; }

  ScalarValue eval(const Point& p) const;
  bool is_constant() const;

  friend bool operator==(const StepFunction& f, const StepFunction& g);
  friend bool operator!=(const StepFunction& f, const StepFunction& g) { return !(f == g); }

  std::string str() const;

  /// Refined copy with the given extra cuts inserted (function unchanged).
  StepFunction refined(const std::vector<std::vector<Rat>>& extra_cuts_per_edge) const;

 private:
  friend void check_same_shape(const StepFunction& f, const StepFunction& g);

  void validate_and_canonicalize();

  Space space_;
  ScalarKind kind_;
  std::vector<ScalarValue> vertex_values_;
  std::vector<EdgeData> edges_;
};

/// SpaceMismatch/KindMismatch unless both live on one space and scalar kind.
void check_same_shape(const StepFunction& f, const StepFunction& g);

/// Refines both functions to common breakpoints.
std::pair<StepFunction, StepFunction> common_refinement(const StepFunction& f,
                                                        const StepFunction& g);

bool leq_step(const StepFunction& f, const StepFunction& g);
StepFunction add_step(const StepFunction& f, const StepFunction& g);
/// Cellwise join (pointwise maximum); lower semicontinuous for chain products.
StepFunction join_step(const StepFunction& f, const StepFunction& g);

/// Restriction f|_Y to a closed subcomplex, as a function on Y's own space.
StepFunction restrict_step(const StepFunction& f, const SubComplex& Y);

/// f_{downarrow g}: g on Y, f elsewhere; requires g <= f|_Y
/// (GlueOrderViolation otherwise). g lives on derived_space(Y).sub.
StepFunction glue_step(const StepFunction& f, const SubComplex& Y, const StepFunction& g);

/// f * chi_U: f on the open set U, zero outside.
StepFunction char_action(const StepFunction& f, const OpenSet& U);

/// Text syntax for step functions, e.g. `edge e1: [0,1/2]=1, (1/2,1]=2` with
/// vertex assignments `v0: 3` and the shorthand `const 2`. Exact rational
/// coordinates throughout; StepFunction::str() emits this syntax.
StepFunction parse_step(const Space& X, const ScalarKind& K, const std::string& text);

}  // namespace cusg
