#include "doctest.h"

#include "cusg/pullback.hpp"

using namespace cusg;

namespace {

// NCCW with one matrix column (1,1)^t: pairs (b, f) with f(0) = f(1) = b.
std::shared_ptr<PullbackSemigroup> nccw_11() {
  auto X = Space::interval();
  auto left = std::make_shared<ScalarSemigroup>(ScalarKind::nat());
  auto right = std::make_shared<LscSemigroup>(X, ScalarKind::nat());
  auto base = std::make_shared<ScalarSemigroup>(ScalarKind::power(ScalarKind::nat(), 2));
  auto phi = CuMorphism::matrix({{1}, {1}});
  auto pi = CuMorphism::evaluation({Point::at(X, 0), Point::at(X, 1)});
  return std::make_shared<PullbackSemigroup>(left, right, base, phi, pi, true);
}

// dimension drop Z_{2,3}: {f in Lsc([0,1], (1/6)N): f(0) in (1/2)N, f(1) in (1/3)N}
std::shared_ptr<PullbackSemigroup> zdd23() {
  auto X = Space::interval();
  auto sixth = ScalarKind::scaled(6);
  auto left = std::make_shared<ScalarSemigroup>(
      ScalarKind::product({ScalarKind::scaled(2), ScalarKind::scaled(3)}));
  auto right = std::make_shared<LscSemigroup>(X, sixth);
  auto base = std::make_shared<ScalarSemigroup>(ScalarKind::power(sixth, 2));
  auto phi = CuMorphism::matrix({{1, 0}, {0, 1}});
  auto pi = CuMorphism::evaluation({Point::at(X, 0), Point::at(X, 1)});
  return std::make_shared<PullbackSemigroup>(left, right, base, phi, pi, true);
}

}  // namespace

TEST_CASE("pullback pairing validates the base constraint") {
  auto P = nccw_11();
  auto two = P->left_semigroup()->parse("2");
  auto const2 = P->right_semigroup()->parse("const 2");
  CHECK_NOTHROW(P->make_pair(two, const2));
  CHECK_NOTHROW(P->make_pair(P->left_semigroup()->zero(), P->right_semigroup()->zero()));

  // f(0)=2 but f(1)=3 violates (f(0),f(1))^t = (b,b)^t
  auto skew = P->right_semigroup()->parse("edge e1: [0,1/2]=2, (1/2,1]=3");
  CHECK_THROWS_AS(P->make_pair(two, skew), CuError);
}

TEST_CASE("pullback order and addition are componentwise") {
  auto P = nccw_11();
  auto p2 = P->parse("2 | const 2");
  auto p3 = P->parse("3 | const 3");
  CHECK(P->leq(p2, p3, 16).is_true());
  CHECK(P->leq(p3, p2, 16).is_false());
  CHECK(P->leq(p2, p2, 16).is_true());

  auto one = P->parse("1 | const 1");
  auto sum = P->add(one, one);
  CHECK(P->equal(sum, p2, 16).is_true());
  CHECK(P->equal(P->add(p2, P->zero()), p2, 16).is_true());
}

TEST_CASE("pullback way-below") {
  auto P = nccw_11();
  auto p2 = P->parse("2 | const 2");
  auto top = P->parse("inf | const inf");
  CHECK(P->way_below(p2, top, 16).is_true());
  CHECK(P->way_below(top, top, 16).is_false());
  auto one = P->parse("1 | const 1");
  CHECK(P->way_below(one, one, 16).is_true());
}

TEST_CASE("canonical approximants: compact elements stabilize") {
  auto P = zdd23();
  auto x = P->parse("(1,1) | const 1");
  auto chain = P->approximant_chain(x, 5);
  for (auto& c : chain) CHECK(P->equal(c, x, 16).is_true());
}

TEST_CASE("canonical approximants of the top are rapidly increasing with supremum top") {
  auto P = nccw_11();
  auto x = P->parse("inf | const inf");
  auto chain = P->approximant_chain(x, 6);
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    CHECK(P->way_below(chain[i], chain[i + 1], 16).is_true());
    CHECK(P->leq(chain[i], x, 16).is_true());
  }
  auto gen = [&](int k) { return chain[std::min<size_t>(k - 1, chain.size() - 1)]; };
  CHECK(sup_equals(*P, gen, x, 6));
}

TEST_CASE("canonical approximants on sampled elements") {
  for (auto P : {nccw_11(), zdd23()}) {
    SampleParams prm;
    prm.max_cuts = 2;
    prm.grid_denominator = 8;
    for (int t = 0; t < 12; ++t) {
      Rng rng = trial_rng(321, t);
      Element x = P->sample(rng, prm);
      auto chain = P->approximant_chain(x, 4);
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(P->way_below(chain[i], chain[i + 1], 16).is_true());
        CHECK(P->leq(chain[i], x, 16).is_true());
      }
      auto gen = [&](int k) { return chain[std::min<size_t>(k - 1, chain.size() - 1)]; };
      CHECK(sup_equals(*P, gen, x, 4));
    }
  }
}

TEST_CASE("sampled pullback elements satisfy the constraint by construction") {
  auto P = zdd23();
  SampleParams prm;
  prm.max_cuts = 3;
  prm.grid_denominator = 16;
  for (int t = 0; t < 40; ++t) {
    Rng rng = trial_rng(77, t);
    Element x = P->sample(rng, prm);
    CHECK(P->contains(x));
  }
}

TEST_CASE("mapping torus constraint f(1) = swap(f(0))") {
  auto X = Space::interval();
  auto k2 = ScalarKind::power(ScalarKind::nat(), 2);
  auto left = std::make_shared<ScalarSemigroup>(k2);
  auto right = std::make_shared<LscSemigroup>(X, k2);
  auto base = std::make_shared<ScalarSemigroup>(ScalarKind::power(ScalarKind::nat(), 4));
  // phi(b) = (b, swap b)
  auto phi = CuMorphism::matrix({{1, 0}, {0, 1}, {0, 1}, {1, 0}});
  auto pi = CuMorphism::evaluation({Point::at(X, 0), Point::at(X, 1)});
  PullbackSemigroup T(left, right, base, phi, pi, true);

  auto b = left->parse("(1,2)");
  CHECK_THROWS_AS(T.make_pair(b, right->parse("const (1,2)")), CuError);
  // f with f(0)=(1,2), f(1)=(2,1), dipping to the meet at the crossover
  auto f = right->parse("edge e1: [0,1/2)=(1,2), {1/2}=(1,1), (1/2,1]=(2,1)");
  CHECK_NOTHROW(T.make_pair(b, f));
  // constant (1,1) is fixed by the swap
  CHECK_NOTHROW(T.make_pair(left->parse("(1,1)"), right->parse("const (1,1)")));
}

TEST_CASE("pullback formatting round-trips") {
  auto P = zdd23();
  SampleParams prm;
  prm.max_cuts = 2;
  prm.grid_denominator = 8;
  for (int t = 0; t < 15; ++t) {
    Rng rng = trial_rng(9, t);
    Element x = P->sample(rng, prm);
    Element y = P->parse(P->format(x));
    CHECK(x == y);
  }
}

TEST_CASE("sup recognition for increasing sequences") {
  ScalarSemigroup N(ScalarKind::nat());
  auto ramp = [&](int k) { return Element::of_scalar(ScalarValue::of_nat(ExtNat::of(k))); };
  CHECK(sup_increasing(N, ramp, 16) ==
        Element::of_scalar(ScalarValue::of_nat(ExtNat::inf())));
  auto constant4 = [&](int) { return Element::of_scalar(ScalarValue::of_nat(ExtNat::of(4))); };
  CHECK(sup_increasing(N, constant4, 16) ==
        Element::of_scalar(ScalarValue::of_nat(ExtNat::of(4))));
  auto decreasing = [&](int k) {
    return Element::of_scalar(ScalarValue::of_nat(ExtNat::of(k == 1 ? 5 : 1)));
  };
  CHECK_THROWS_AS(sup_increasing(N, decreasing, 16), CuError);

  // steps with fixed breakpoints: k * chi over the whole space has supremum
  // the constant infinity
  auto X = Space::interval();
  LscSemigroup L(X, ScalarKind::nat());
  auto gen = [&](int k) {
    return Element::of_step(
        StepFunction::constant(X, ScalarKind::nat(), ScalarValue::of_nat(ExtNat::of(k))));
  };
  auto got = sup_increasing(L, gen, 16);
  CHECK(got == Element::of_step(StepFunction::constant(
                   X, ScalarKind::nat(), ScalarValue::of_nat(ExtNat::inf()))));

  // soft suprema are not recognizable: a formal sup wrapper comes back
  ScalarSemigroup C2(ScalarKind::uhf(Supernatural::parse("2^inf")));
  auto soft_gen = [&](int k) {
    return Element::of_scalar(
        scalar_approximant(C2.kind(), scalar_parse(C2.kind(), "soft 1"), k));
  };
  auto s = sup_increasing(C2, soft_gen, 8);
  CHECK(s.is_sup());
  CHECK(sup_equals(C2, soft_gen, C2.parse("soft 1"), 8));
  CHECK(!sup_equals(C2, soft_gen, C2.parse("soft 2"), 8));
  CHECK(!sup_equals(C2, soft_gen, C2.parse("1"), 8));
}
