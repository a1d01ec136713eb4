#pragma once

#include <optional>

#include "cusg/harness.hpp"
#include "cusg/pullback.hpp"

namespace cusg {

/// Specification of a catalog semigroup.
struct AlgebraSpec {
  enum class Kind {
    IntervalAlgebra,   // Lsc([0,1], M)
    GraphAlgebra,      // Lsc(X, M) via the edge-interval pullback
    Nccw1,             // {(f,b) : (f(0),f(1))^t = A b}
    DimensionDrop,     // {f : f(0) in left fibre, f(1) in right fibre}
    MappingTorus,      // {f : f(1) = P f(0)}
    RshChain,          // iterated pullbacks over restrictions
    TwoDimDimDrop,     // point-constraint membership only
  };

  Kind kind = Kind::IntervalAlgebra;
  ScalarKind scalar = ScalarKind::nat();  // fibre value kind M
  Space space = Space::interval();

  // Nccw1: 2s x r matrix; MappingTorus: permutation matrix over the scalar atoms
  std::vector<std::vector<long long>> matrix;
  int nccw_r = 0, nccw_s = 0;

  // DimensionDrop
  Supernatural p, q;
  bool supernatural = false;  // integers p,q realize (1/p)Nbar fibres, else C_p

  // RshChain stages: each pulls back over the restriction to a closed subset
  // whose derived space matches the previous stage's underlying space; the
  // matrix acts cellwise on the previous stage's function part.
  struct RshStage {
    Space space;
    SubComplex closed;
    std::vector<std::vector<long long>> matrix;
    int arity = 1;  // scalar atoms of this stage (Nbar^arity)
    RshStage(Space sp, SubComplex y, std::vector<std::vector<long long>> m, int k)
        : space(std::move(sp)), closed(std::move(y)), matrix(std::move(m)), arity(k) {}
  };
  std::vector<RshStage> rsh_stages;
  int rsh_base_arity = 1;
  Space rsh_base_space = Space::interval();

  // TwoDimDimDrop: one supernatural constraint per marked point
  std::vector<Supernatural> point_fibres;
};

/// A catalog semigroup: the realizing descriptor plus translation helpers.
struct BuiltAlgebra {
  AlgebraSpec spec;
  SemigroupPtr semigroup;                                // the realizing semigroup
  std::shared_ptr<const PullbackSemigroup> pullback;     // when the model is a pullback
  std::shared_ptr<const LscSemigroup> direct;            // direct Lsc(X, M) form, when meaningful
};

BuiltAlgebra build(const AlgebraSpec& spec);

struct MemberResult {
  bool member = false;
  std::string reason;  // populated when member is false
};

/// Checks the point constraints of the catalog display for a candidate
/// (a step function for the function models; a list of fibre values for the
/// two-dimensional marker).
MemberResult member(const BuiltAlgebra& B, const StepFunction& candidate);
MemberResult member_two_dim(const AlgebraSpec& spec, const std::vector<UhfVal>& point_values);

/// Compact elements up to the bound, found by the way-below self test over
/// constants on the value grid together with a one-breakpoint search family.
std::vector<Element> compact_elements(const BuiltAlgebra& B, int bound);

/// Translates sampled elements between Lsc(X, M) and the edge-interval
/// pullback and verifies the translation is an additive order-embedding that
/// hits all sampled canonical elements.
HarnessReport graph_iso_check(const Space& X, const ScalarKind& M, const HarnessOptions& opts);

/// Translation helpers used by graph_iso_check (exposed for tests).
Element graph_to_pair(const BuiltAlgebra& G, const StepFunction& f);
StepFunction pair_to_graph(const BuiltAlgebra& G, const Element& pair);

// -- spec files -----------------------------------------------------------------

/// Parses the structured-text spec schema, e.g.
///   {"kind":"dimension_drop","p":"2^inf","q":"3^inf"}
///   {"kind":"nccw1","r":1,"s":1,"A":[[1],[1]]}
/// See the README for the field-by-field description.
AlgebraSpec parse_algebra_spec(const std::string& json_text);

/// Built-in spec registry (`zdd23`, `lsc-interval-nbar`, `loop-nbar`, ...);
/// nullopt when the name is unknown.
std::optional<AlgebraSpec> builtin_spec(const std::string& name);
std::vector<std::string> builtin_spec_names();

ScalarKind parse_scalar_kind(const std::string& text);

}  // namespace cusg
