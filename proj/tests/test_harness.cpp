#include "doctest.h"

#include "cusg/catalog.hpp"
#include "cusg/harness.hpp"

using namespace cusg;

TEST_CASE("axiom harness passes on scalar semigroups") {
  HarnessOptions opts;
  opts.trials = 150;
  opts.seed = 7;
  for (auto kind : {ScalarKind::nat(), ScalarKind::power(ScalarKind::nat(), 3),
                    ScalarKind::uhf(Supernatural::parse("2^inf"))}) {
    ScalarSemigroup S(kind);
    auto rep = check_cu_axioms(S, opts);
    INFO(rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("axiom harness passes on the step tier") {
  HarnessOptions opts;
  opts.trials = 60;
  opts.seed = 7;
  opts.params.max_cuts = 2;
  opts.params.grid_denominator = 8;
  LscSemigroup S(Space::interval(), ScalarKind::nat());
  auto rep = check_cu_axioms(S, opts);
  INFO(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("axiom harness passes on a pullback") {
  HarnessOptions opts;
  opts.trials = 25;
  opts.seed = 3;
  opts.params.max_cuts = 2;
  opts.params.grid_denominator = 8;
  auto Z = build(*builtin_spec("zdd23"));
  auto rep = check_cu_axioms(*Z.semigroup, opts);
  INFO(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("parallel and serial runners produce identical reports") {
  HarnessOptions opts;
  opts.trials = 80;
  opts.seed = 99;
  LscSemigroup S(Space::loop(), ScalarKind::nat());
  auto par = check_cu_axioms(S, opts);
  auto ser = check_cu_axioms_serial(S, opts);
  CHECK(par.summary() == ser.summary());
}

TEST_CASE("the harness reports violations with witnesses") {
  // A deliberately broken semigroup: way_below is reflexive everywhere, which
  // contradicts the auxiliary-relation laws at infinity.
  class Broken final : public ScalarSemigroup {
   public:
    Broken() : ScalarSemigroup(ScalarKind::nat()) {}
    Ternary way_below(const Element& a, const Element& b, int) const override {
      return leq(b, a, kDefaultDepth);  // reversed on purpose
    }
  };
  HarnessOptions opts;
  opts.trials = 120;
  opts.seed = 5;
  Broken S;
  auto rep = check_cu_axioms(S, opts);
  CHECK(!rep.ok());
  CHECK(!rep.violations.front().witness.empty());
}
