#pragma once

#include "cusg/morphism.hpp"
#include "cusg/semigroup.hpp"

namespace cusg {

struct Violation {
  int trial = 0;
  std::string law;
  std::string witness;
};

struct HarnessReport {
  std::string subject;
  unsigned long long seed = 0;
  int trials = 0;
  int depth = kDefaultDepth;
  std::vector<Violation> violations;  // sorted by trial index

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

struct HarnessOptions {
  unsigned long long seed = 1;
  int trials = 200;
  int depth = kDefaultDepth;
  bool parallel = true;  // OpenMP over trials when available
  SampleParams params;
};

/// Randomized Cu-axiom suite: partial-order laws, least zero, way-below as an
/// auxiliary relation compatible with addition, canonical approximant chains
/// (rapidly increasing with the right supremum), and suprema of sampled
/// increasing sequences. Trials are independently seeded, so the parallel and
/// serial runners produce identical reports.
HarnessReport check_cu_axioms(const Semigroup& S, const HarnessOptions& opts);

/// Serial reference runner (same trial kernel, no OpenMP).
HarnessReport check_cu_axioms_serial(const Semigroup& S, HarnessOptions opts);

/// Morphism contract: preserves zero, addition, order, and way-below at
/// sampled probes.
HarnessReport check_morphism(const Semigroup& src, const Semigroup& dst, const CuMorphism& m,
                             const HarnessOptions& opts);

}  // namespace cusg
