// Benchmark comparing the OpenMP-parallel suite runners against the serial
// reference on the three hot kernels: the randomized axiom harness, the
// way-below sweep, and the compactness self-test sweep.

#include <chrono>
#include <cstdio>

#include "cusg/catalog.hpp"
#include "cusg/harness.hpp"

#if defined(CUSG_HAVE_OPENMP)
#include <omp.h>
#endif

using namespace cusg;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Row {
  const char* name;
  double serial;
  double parallel;
};

double time_axiom_harness(bool parallel) {
  LscSemigroup S(Space::loop(), ScalarKind::power(ScalarKind::nat(), 2));
  HarnessOptions opts;
  opts.seed = 17;
  opts.trials = 300;
  opts.parallel = parallel;
  opts.params.max_cuts = 3;
  opts.params.grid_denominator = 16;
  double t0 = now_seconds();
  auto rep = check_cu_axioms(S, opts);
  double dt = now_seconds() - t0;
  if (!rep.ok()) std::puts("warning: harness reported violations");
  return dt;
}

double time_way_below_sweep(bool parallel) {
  const int pairs = 4000;
  SampleParams p;
  p.value_bound = 5;
  p.max_cuts = 4;
  p.grid_denominator = 32;
  auto K = ScalarKind::power(ScalarKind::nat(), 2);
  std::vector<int> results(pairs, 0);
  double t0 = now_seconds();
#if defined(CUSG_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
  for (int t = 0; t < pairs; ++t) {
    Rng rng = trial_rng(5, t);
    auto g = sample_step(Space::interval(), K, rng, p);
    auto f = sample_step(Space::interval(), K, rng, p);
    results[t] = way_below_step(g, f);
  }
  double dt = now_seconds() - t0;
  long long sum = 0;
  for (int r : results) sum += r;
  std::printf("  (way-below sweep: %lld/%d positive)\n", sum, pairs);
  return dt;
}

double time_compact_sweep(bool parallel) {
  const int functions = 120000;
  SampleParams p;
  p.value_bound = 3;
  p.max_cuts = 3;
  p.grid_denominator = 4;
  auto X = Space::graph(3, {{0, 1}, {1, 2}});
  std::vector<int> results(functions, 0);
  double t0 = now_seconds();
#if defined(CUSG_HAVE_OPENMP)
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int t = 0; t < functions; ++t) {
    Rng rng = trial_rng(23, t);
    auto f = sample_step(X, ScalarKind::nat(), rng, p);
    results[t] = way_below_step(f, f);
  }
  double dt = now_seconds() - t0;
  long long sum = 0;
  for (int r : results) sum += r;
  std::printf("  (compact sweep: %lld/%d compact)\n", sum, functions);
  return dt;
}

}  // namespace

int main() {
#if defined(CUSG_HAVE_OPENMP)
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both columns run the serial path\n");
#endif
  Row rows[] = {
      {"axiom harness (300 trials)", time_axiom_harness(false), time_axiom_harness(true)},
      {"way-below sweep (4000 pairs)", time_way_below_sweep(false), time_way_below_sweep(true)},
      {"compactness sweep (120k functions)", time_compact_sweep(false),
       time_compact_sweep(true)},
  };
  std::printf("\n%-36s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");
  for (auto& r : rows)
    std::printf("%-36s %10.3f %10.3f %7.2fx\n", r.name, r.serial, r.parallel,
                r.serial / (r.parallel > 0 ? r.parallel : 1e-9));
  return 0;
}
