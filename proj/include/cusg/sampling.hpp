#pragma once

#include <random>

#include "cusg/step_function.hpp"

namespace cusg {

using Rng = std::mt19937_64;

/// Deterministic per-trial RNG derived from a master seed; trials can run in
/// any order (or in parallel) and reproduce the same stream.
inline Rng trial_rng(unsigned long long seed, unsigned long long trial) {
  Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
  r.discard(8);
  return r;
}

struct SampleParams {
  int value_bound = 5;     // numerators / integer values
  int max_cuts = 4;        // breakpoints per edge
  int grid_denominator = 32;
  int infinity_weight = 1;  // relative odds of sampling infinity
};

ScalarValue sample_scalar(const ScalarKind& k, Rng& rng, const SampleParams& p = {});
StepFunction sample_step(const Space& X, const ScalarKind& k, Rng& rng,
                         const SampleParams& p = {});

}  // namespace cusg
