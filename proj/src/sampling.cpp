#include "cusg/sampling.hpp"

#include <algorithm>
#include <set>

namespace cusg {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

ScalarValue sample_scalar(const ScalarKind& k, Rng& rng, const SampleParams& p) {
  switch (k.tag) {
    case ScalarTag::Nat:
    case ScalarTag::Scaled: {
      int roll = uniform(rng, 0, p.value_bound + p.infinity_weight);
      ExtNat v = roll > p.value_bound ? ExtNat::inf() : ExtNat::of(roll);
      return k.tag == ScalarTag::Nat ? ScalarValue::of_nat(v) : ScalarValue::of_scaled(v);
    }
    case ScalarTag::Uhf: {
      int roll = uniform(rng, 0, 5 + p.infinity_weight);
      if (roll > 5) return ScalarValue::of_uhf(UhfVal::inf());
      // denominators that divide p, up to the second stage
      std::vector<long long> denoms = {1};
      for (auto& [prime, e] : k.p.exponents()) {
        if (e == 0) continue;
        denoms.push_back((long long)prime);
        if (e == Supernatural::kInf || e >= 2) denoms.push_back((long long)(prime * prime));
      }
      long long d = denoms[uniform(rng, 0, (int)denoms.size() - 1)];
      long long num = uniform(rng, 0, p.value_bound * 2);
      if (roll % 2 == 0 && num > 0) return ScalarValue::of_uhf(UhfVal::soft(Rat(num, d)));
      return ScalarValue::of_uhf(UhfVal::compact(Rat(num, d)));
    }
    case ScalarTag::Product: {
      std::vector<ScalarValue> comps;
      for (auto& c : k.components) comps.push_back(sample_scalar(c, rng, p));
      return ScalarValue::of_tuple(std::move(comps));
    }
  }
  fail(Err::Internal, "sample_scalar");
}

StepFunction sample_step(const Space& X, const ScalarKind& k, Rng& rng,
                         const SampleParams& p) {
  std::vector<StepFunction::EdgeData> edges;
  for (size_t e = 0; e < X.edges.size(); ++e) {
    StepFunction::EdgeData ed;
    int n = uniform(rng, 0, p.max_cuts);
    std::set<int> picks;
    while ((int)picks.size() < n) picks.insert(uniform(rng, 1, p.grid_denominator - 1));
    for (int c : picks) ed.cuts.push_back(Rat(c, p.grid_denominator));
    for (int i = 0; i <= n; ++i) ed.interval_values.push_back(sample_scalar(k, rng, p));
    for (int i = 0; i < n; ++i) {
      ScalarValue v = sample_scalar(k, rng, p);
      v = scalar_meet(k, v, ed.interval_values[i]);
      v = scalar_meet(k, v, ed.interval_values[i + 1]);
      ed.point_values.push_back(v);
    }
    edges.push_back(std::move(ed));
  }
  std::vector<ScalarValue> verts;
  for (int v = 0; v < X.num_vertices; ++v) {
    ScalarValue val = sample_scalar(k, rng, p);
    for (size_t e = 0; e < X.edges.size(); ++e) {
      if (X.edges[e].src == v) val = scalar_meet(k, val, edges[e].interval_values.front());
      if (X.edges[e].dst == v) val = scalar_meet(k, val, edges[e].interval_values.back());
    }
    verts.push_back(val);
  }
  return StepFunction(X, k, std::move(verts), std::move(edges));
}

}  // namespace cusg
