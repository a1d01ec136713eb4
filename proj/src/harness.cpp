#include "cusg/harness.hpp"

#include <algorithm>
#include <sstream>

namespace cusg {

std::string HarnessReport::summary() const {
  std::ostringstream os;
  os << "subject=" << subject << " seed=" << seed << " trials=" << trials
     << " violations=" << violations.size();
  for (auto& v : violations)
    os << "\n  trial=" << v.trial << " law=" << v.law << " witness=" << v.witness;
  return os.str();
}

namespace {

struct TrialSink {
  int trial;
  const Semigroup& S;
  std::vector<Violation>* out;

  void report(const std::string& law, const std::string& witness) {
    out->push_back({trial, law, witness});
  }
  void expect(Ternary got, bool want, const std::string& law, const std::string& witness) {
    if (got.is_unknown()) return;  // depth-bounded tiers may abstain
    if (got.is_true() != want) report(law, witness);
  }
};

void axiom_trial(const Semigroup& S, const HarnessOptions& opts, int trial,
                 std::vector<Violation>* out) {
  TrialSink sink{trial, S, out};
  try {
    Rng rng = trial_rng(opts.seed, (unsigned long long)trial);
    Element a = S.sample(rng, opts.params);
    Element b = S.sample(rng, opts.params);
    Element c = S.sample(rng, opts.params);
    const int depth = opts.depth;

    // partial order
    sink.expect(S.leq(a, a, depth), true, "reflexivity", S.format(a));
    if (S.leq(a, b, depth).is_true() && S.leq(b, a, depth).is_true())
      sink.expect(S.equal(a, b, depth), true, "antisymmetry",
                  S.format(a) + " vs " + S.format(b));
    if (S.leq(a, b, depth).is_true() && S.leq(b, c, depth).is_true())
      sink.expect(S.leq(a, c, depth), true, "transitivity",
                  S.format(a) + " <= " + S.format(b) + " <= " + S.format(c));

    // zero is the least element and is way below everything
    sink.expect(S.leq(S.zero(), a, depth), true, "zero-least", S.format(a));
    sink.expect(S.way_below(S.zero(), a, depth), true, "zero-way-below", S.format(a));

    // way-below is an auxiliary relation below the order
    if (S.way_below(a, b, depth).is_true())
      sink.expect(S.leq(a, b, depth), true, "wb-implies-leq",
                  S.format(a) + " << " + S.format(b));
    {
      // a' <= a << d <= d' forces a' << d'
      Element d = S.add(a, b);
      if (S.way_below(a, d, depth).is_true()) {
        Element a2 = S.approximant_chain(a, 1).front();
        Element d2 = S.add(d, c);
        sink.expect(S.way_below(a2, d2, depth), true, "wb-auxiliary",
                    S.format(a2) + " << " + S.format(d2));
      }
    }

    // additivity of way-below
    {
      Element a1 = S.approximant_chain(b, 1 + trial % 3).back();
      Element c1 = S.approximant_chain(c, 1 + (trial / 3) % 3).back();
      if (S.way_below(a1, b, depth).is_true() && S.way_below(c1, c, depth).is_true())
        sink.expect(S.way_below(S.add(a1, c1), S.add(b, c), depth), true, "wb-additivity",
                    S.format(a1) + "+" + S.format(c1) + " << " + S.format(b) + "+" +
                        S.format(c));
    }

    // canonical approximants: rapidly increasing with supremum a
    {
      int len = std::min(4, depth);
      auto chain = S.approximant_chain(a, len);
      for (int i = 0; i + 1 < len; ++i) {
        sink.expect(S.way_below(chain[i], chain[i + 1], depth), true, "chain-rapid",
                    S.format(chain[i]) + " << " + S.format(chain[i + 1]));
        sink.expect(S.leq(chain[i], a, depth), true, "chain-below", S.format(chain[i]));
      }
      auto gen = [&](int k) { return chain[std::min(k - 1, len - 1)]; };
      if (!sup_equals(S, gen, a, len))
        sink.report("chain-sup", S.format(a));
    }

    // suprema of sampled increasing sequences exist (prefix sums increase)
    {
      std::vector<Element> prefix = {a};
      prefix.push_back(S.add(a, b));
      prefix.push_back(S.add(prefix.back(), c));
      auto gen = [&](int k) { return prefix[std::min<size_t>(k - 1, prefix.size() - 1)]; };
      Element sup = sup_increasing(S, gen, std::min(depth, 6));
      for (auto& t : prefix)
        sink.expect(S.leq(t, sup, depth), true, "sup-upper-bound",
                    S.format(t) + " vs sup");
    }
  } catch (const CuError& e) {
    sink.report("exception", e.what());
  }
}

template <typename Kernel>
HarnessReport run_trials(const std::string& subject, const HarnessOptions& opts,
                         Kernel&& kernel) {
  HarnessReport rep;
  rep.subject = subject;
  rep.seed = opts.seed;
  rep.trials = opts.trials;
  rep.depth = opts.depth;
  std::vector<std::vector<Violation>> buckets(opts.trials);
#if defined(CUSG_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 8) if (opts.parallel)
#endif
  for (int t = 0; t < opts.trials; ++t) kernel(t, &buckets[t]);
  for (auto& b : buckets)
    for (auto& v : b) rep.violations.push_back(v);
  return rep;
}

}  // namespace

HarnessReport check_cu_axioms(const Semigroup& S, const HarnessOptions& opts) {
  return run_trials(S.name(), opts, [&](int t, std::vector<Violation>* out) {
    axiom_trial(S, opts, t, out);
  });
}

HarnessReport check_cu_axioms_serial(const Semigroup& S, HarnessOptions opts) {
  opts.parallel = false;
  return check_cu_axioms(S, opts);
}

HarnessReport check_morphism(const Semigroup& src, const Semigroup& dst, const CuMorphism& m,
                             const HarnessOptions& opts) {
  auto kernel = [&](int t, std::vector<Violation>* out) {
    TrialSink sink{t, src, out};
    try {
      Rng rng = trial_rng(opts.seed, (unsigned long long)t);
      Element a = src.sample(rng, opts.params);
      Element b = src.sample(rng, opts.params);
      const int depth = opts.depth;
      Element fa = m.apply(src, dst, a);
      Element fb = m.apply(src, dst, b);
      if (t == 0)
        sink.expect(dst.equal(m.apply(src, dst, src.zero()), dst.zero(), depth), true,
                    "morphism-zero", "0");
      sink.expect(dst.equal(m.apply(src, dst, src.add(a, b)), dst.add(fa, fb), depth), true,
                  "morphism-additive", src.format(a) + ", " + src.format(b));
      if (src.leq(a, b, depth).is_true())
        sink.expect(dst.leq(fa, fb, depth), true, "morphism-monotone",
                    src.format(a) + " <= " + src.format(b));
      if (src.way_below(a, b, depth).is_true())
        sink.expect(dst.way_below(fa, fb, depth), true, "morphism-wb",
                    src.format(a) + " << " + src.format(b));
    } catch (const CuError& e) {
      sink.report("exception", e.what());
    }
  };
  return run_trials("morphism into " + dst.name(), opts, kernel);
}

}  // namespace cusg
