#include "doctest.h"

#include "cusg/lsc_order.hpp"
#include "cusg/sampling.hpp"

using namespace cusg;

namespace {

const ScalarKind kNat = ScalarKind::nat();

ScalarValue nat(unsigned long long v) { return ScalarValue::of_nat(ExtNat::of(v)); }
ScalarValue nat_inf() { return ScalarValue::of_nat(ExtNat::inf()); }

StepFunction dip() {
  StepFunction::EdgeData ed;
  ed.cuts = {Rat(1, 2)};
  ed.point_values = {nat(1)};
  ed.interval_values = {nat(2), nat(2)};
  return StepFunction(Space::interval(), kNat, {nat(2), nat(2)}, {ed});
}

// Search for a canonical chi member dominating g; independent route for
// deciding g << f (it never calls way_below_step).
bool chi_search_oracle(const StepFunction& g, const StepFunction& f, int depth) {
  for (int k = 1; k <= depth; ++k)
    if (leq_step(g, chi_approx(f, k))) return true;
  return false;
}

}  // namespace

TEST_CASE("way-below on step functions") {
  auto X = Space::interval();
  // g = 1 on [0,1/2], 2 on (1/2,1]; f = constant inf
  StepFunction::EdgeData ed;
  ed.cuts = {Rat(1, 2)};
  ed.point_values = {nat(1)};
  ed.interval_values = {nat(1), nat(2)};
  StepFunction g(X, kNat, {nat(1), nat(2)}, {ed});
  auto top = StepFunction::constant(X, kNat, nat_inf());
  CHECK(way_below_step(g, top));

  // f with a zero dip is not way-below itself: at 1/2 we would need c >= 1, c << 0
  StepFunction::EdgeData e2;
  e2.cuts = {Rat(1, 2)};
  e2.point_values = {nat(0)};
  e2.interval_values = {nat(0), nat(1)};
  StepFunction f2(X, kNat, {nat(0), nat(1)}, {e2});
  CHECK(!way_below_step(f2, f2));
  CHECK(leq_step(f2, f2));

  // constant compact functions are compact
  auto one = StepFunction::constant(X, kNat, nat(1));
  CHECK(way_below_step(one, one));
  CHECK(!way_below_step(top, top));
  CHECK(!way_below_step(dip(), dip()));
}

TEST_CASE("way-below implies order and respects mixed chains") {
  auto X = Space::interval();
  Rng rng(20240817);
  SampleParams p;
  for (int t = 0; t < 200; ++t) {
    auto a = sample_step(X, kNat, rng, p);
    auto b = sample_step(X, kNat, rng, p);
    if (way_below_step(a, b)) CHECK(leq_step(a, b));
  }
  // a <= b << c <= d implies a << d
  for (int t = 0; t < 200; ++t) {
    auto b = sample_step(X, kNat, rng, p);
    auto c = join_step(b, sample_step(X, kNat, rng, p));
    if (!way_below_step(b, c)) continue;
    auto a = char_action(b, OpenSet::edge_interval(X, 0, Rat(1, 4), Rat(3, 4)));
    auto d = join_step(c, sample_step(X, kNat, rng, p));
    CHECK(way_below_step(a, d));
  }
}

TEST_CASE("chi approximants: examples") {
  auto X = Space::interval();
  auto top = StepFunction::constant(X, kNat, nat_inf());
  for (int k = 1; k <= 5; ++k) {
    auto gk = chi_approx(top, k);
    CHECK(gk == StepFunction::constant(X, kNat, nat(k)));
  }
  auto three = StepFunction::constant(X, kNat, nat(3));
  CHECK(chi_approx(three, 1) == three);
  CHECK(chi_approx(three, 4) == three);

  // for the dip the point value is kept and the margins widen
  auto f = dip();
  for (int k = 1; k <= 6; ++k) {
    auto gk = chi_approx(f, k);
    CHECK(way_below_step(gk, f));
    CHECK(leq_step(gk, f));
    CHECK(gk.eval(Point::on_edge(X, 0, Rat(1, 2))) == nat(1));
  }
}

TEST_CASE("chi approximants are monotone with pointwise supremum f") {
  Rng rng(7);
  SampleParams p;
  auto X = Space::interval();
  for (int trial = 0; trial < 60; ++trial) {
    const ScalarKind& K = trial % 2 ? ScalarKind::power(kNat, 2) : kNat;
    auto f = sample_step(X, K, rng, p);
    StepFunction prev = chi_approx(f, 1);
    CHECK(way_below_step(prev, f));
    for (int k = 2; k <= 6; ++k) {
      auto cur = chi_approx(f, k);
      CHECK(leq_step(prev, cur));
      CHECK(way_below_step(cur, f));
      prev = cur;
    }
    // pointwise supremum reaches f at every cell representative of f
    auto probe = [&](const Point& t) {
      ScalarValue target = f.eval(t);
      // compare against the value of a late approximant joined with compacts
      ScalarValue got = chi_approx(f, 9).eval(t);
      if (scalar_is_compact(K, target)) {
        CHECK(got == target);
      } else {
        CHECK(scalar_leq(K, got, target));
        CHECK(!(got == target));
      }
    };
    probe(Point::at(X, 0));
    probe(Point::at(X, 1));
    for (auto& ed : f.edges())
      for (auto& t : ed.cuts) probe(Point::on_edge(X, 0, t));
  }
}

TEST_CASE("directed join produces a two-sided witness") {
  auto X = Space::interval();
  auto two = StepFunction::constant(X, kNat, nat(2));
  // g1 = 1 * chi_{[0,2/3)}, g2 = 1 * chi_{(1/3,1]}
  auto g1 = char_action(StepFunction::constant(X, kNat, nat(1)),
                        OpenSet(X, {true, false}, {{{Rat(0), Rat(2, 3)}}}));
  auto g2 = char_action(StepFunction::constant(X, kNat, nat(1)),
                        OpenSet(X, {false, true}, {{{Rat(1, 3), Rat(1)}}}));
  REQUIRE(way_below_step(g1, two));
  REQUIRE(way_below_step(g2, two));
  auto h = directed_join(g1, g2, two);
  CHECK(way_below_step(g1, h));
  CHECK(way_below_step(g2, h));
  CHECK(way_below_step(h, two));

  auto zero = StepFunction::zero(X, kNat);
  auto h0 = directed_join(zero, zero, dip());
  CHECK(way_below_step(zero, h0));
  CHECK(way_below_step(h0, dip()));

  CHECK_THROWS_AS(directed_join(StepFunction::constant(X, kNat, nat_inf()), zero,
                                StepFunction::constant(X, kNat, nat_inf())),
                  CuError);
}

TEST_CASE("directed join on random pairs below a common bound") {
  Rng rng(99);
  SampleParams p;
  p.max_cuts = 3;
  for (int trial = 0; trial < 80; ++trial) {
    const ScalarKind& K = trial % 2 ? ScalarKind::power(kNat, 2) : kNat;
    const Space X = trial % 3 ? Space::interval() : Space::loop();
    auto f = sample_step(X, K, rng, p);
    auto g1 = chi_approx(f, 1 + trial % 2);
    auto g2 = chi_approx(f, 1 + (trial / 2) % 3);
    auto h = directed_join(g1, g2, f);
    CHECK(way_below_step(g1, h));
    CHECK(way_below_step(g2, h));
    CHECK(way_below_step(h, f));
  }
}

TEST_CASE("the canonical chain is rapidly increasing") {
  Rng rng(424242);
  SampleParams p;
  p.max_cuts = 3;
  for (int trial = 0; trial < 25; ++trial) {
    const Space X = trial % 2 ? Space::interval() : Space::loop();
    auto f = sample_step(X, kNat, rng, p);
    LscApproxChain chain(f);
    for (int n = 1; n < 5; ++n) {
      CHECK(way_below_step(chain.at(n), chain.at(n + 1)));
      CHECK(way_below_step(chain.at(n), f));
      CHECK(leq_step(chi_approx(f, n), chain.at(n)));
    }
  }
}

TEST_CASE("way_below_step agrees with the chi-search oracle") {
  Rng rng(1234);
  SampleParams p;
  p.max_cuts = 4;
  p.grid_denominator = 32;
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const ScalarKind& K = trial % 2 ? ScalarKind::power(kNat, 2) : kNat;
    auto X = Space::interval();
    auto g = sample_step(X, K, rng, p);
    auto f = sample_step(X, K, rng, p);
    bool direct = way_below_step(g, f);
    bool oracle = chi_search_oracle(g, f, 6);
    CHECK(direct == oracle);
    checked += direct == oracle;
  }
  CHECK(checked == 150);
}

TEST_CASE("restriction preserves way-below (random)") {
  Rng rng(5150);
  SampleParams p;
  p.max_cuts = 3;
  auto X = Space::interval();
  std::vector<SubComplex> subs = {
      SubComplex::interval_part(X, 0, Rat(0), Rat(1, 2)),
      SubComplex::interval_part(X, 0, Rat(1, 4), Rat(3, 4)),
      SubComplex::single_point(X, Point::on_edge(X, 0, Rat(1, 2))),
      SubComplex::vertex_set(X, {0, 1}),
  };
  for (int trial = 0; trial < 120; ++trial) {
    auto f = sample_step(X, kNat, rng, p);
    auto g = chi_approx(f, 1 + trial % 4);
    auto& Y = subs[trial % subs.size()];
    REQUIRE(way_below_step(g, f));
    CHECK(way_below_step(restrict_step(g, Y), restrict_step(f, Y)));
  }
}

TEST_CASE("additivity of way-below (random)") {
  Rng rng(31337);
  SampleParams p;
  p.max_cuts = 3;
  auto X = Space::interval();
  for (int trial = 0; trial < 120; ++trial) {
    auto f1 = sample_step(X, kNat, rng, p);
    auto f2 = sample_step(X, kNat, rng, p);
    auto g1 = chi_approx(f1, 1 + trial % 3);
    auto g2 = chi_approx(f2, 1 + (trial / 3) % 3);
    CHECK(way_below_step(add_step(g1, g2), add_step(f1, f2)));
  }
}

TEST_CASE("precomposition") {
  auto X = Space::interval();
  auto f = dip();
  CHECK(precompose(f, CellMap::identity(X)) == f);

  // asymmetric function mirrored
  StepFunction::EdgeData ed;
  ed.cuts = {Rat(1, 2)};
  ed.point_values = {nat(1)};
  ed.interval_values = {nat(1), nat(2)};
  StepFunction asym(X, kNat, {nat(1), nat(2)}, {ed});
  auto mirrored = precompose(asym, CellMap::mirror_interval());
  CHECK(mirrored.eval(Point::at(X, 0)) == nat(2));
  CHECK(mirrored.eval(Point::on_edge(X, 0, Rat(1, 4))) == nat(2));
  CHECK(mirrored.eval(Point::on_edge(X, 0, Rat(1, 2))) == nat(1));
  CHECK(mirrored.eval(Point::on_edge(X, 0, Rat(3, 4))) == nat(1));
  CHECK(precompose(mirrored, CellMap::mirror_interval()) == asym);

  // loop doubling map t -> 2t mod 1
  auto L = Space::loop();
  CellMap::Segment s1, s2;
  s1.from = Rat(0);
  s1.to = Rat(1, 2);
  s1.edge = 0;
  s1.a = Rat(0);
  s1.b = Rat(1);
  s2 = s1;
  s2.from = Rat(1, 2);
  s2.to = Rat(1);
  CellMap doubling(L, L, {Point::at(L, 0)}, {{s1, s2}});
  StepFunction::EdgeData le;
  le.cuts = {Rat(1, 2)};
  le.point_values = {nat(1)};
  le.interval_values = {nat(1), nat(3)};
  StepFunction lf(L, kNat, {nat(1)}, {le});
  auto pulled = precompose(lf, doubling);
  for (auto t : {Rat(1, 8), Rat(1, 4), Rat(3, 8), Rat(1, 2), Rat(5, 8), Rat(7, 8)})
    CHECK(pulled.eval(Point::on_edge(L, 0, t)) == lf.eval(doubling.apply(Point::on_edge(L, 0, t))));

  // functoriality on the composite mirror∘mirror at sample functions
  Rng rng(8);
  SampleParams p;
  for (int t = 0; t < 40; ++t) {
    auto g = sample_step(X, kNat, rng, p);
    auto h = sample_step(X, kNat, rng, p);
    auto gm = precompose(g, CellMap::mirror_interval());
    auto hm = precompose(h, CellMap::mirror_interval());
    CHECK(leq_step(g, h) == leq_step(gm, hm));
    CHECK(way_below_step(g, h) == way_below_step(gm, hm));
    CHECK(add_step(gm, hm) == precompose(add_step(g, h), CellMap::mirror_interval()));
  }
}

TEST_CASE("piecewise characteristic presentations") {
  auto X = Space::interval();
  // single open set: a * chi_U
  PiecewiseCharPresentation p;
  p.space = X;
  p.kind = kNat;
  p.opens = {OpenSet::edge_interval(X, 0, Rat(1, 4), Rat(3, 4))};
  p.phi[{0}] = nat(3);
  auto g = from_presentation(p);
  CHECK(g == char_action(StepFunction::constant(X, kNat, nat(3)), p.opens[0]));

  // two disjoint opens give a two-bump function
  PiecewiseCharPresentation q;
  q.space = X;
  q.kind = kNat;
  q.opens = {OpenSet::edge_interval(X, 0, Rat(1, 8), Rat(1, 4)),
             OpenSet::edge_interval(X, 0, Rat(1, 2), Rat(3, 4))};
  q.phi[{0}] = nat(2);
  q.phi[{1}] = nat(5);
  auto h = from_presentation(q);
  CHECK(h.eval(Point::on_edge(X, 0, Rat(3, 16))) == nat(2));
  CHECK(h.eval(Point::on_edge(X, 0, Rat(5, 8))) == nat(5));
  CHECK(h.eval(Point::on_edge(X, 0, Rat(3, 8))) == nat(0));

  // empty family yields the zero function
  PiecewiseCharPresentation z;
  z.space = X;
  z.kind = kNat;
  CHECK(from_presentation(z) == StepFunction::zero(X, kNat));

  // overlapping closures beyond multiplicity 2 are rejected
  PiecewiseCharPresentation bad;
  bad.space = X;
  bad.kind = kNat;
  bad.opens = {OpenSet::edge_interval(X, 0, Rat(1, 8), Rat(1, 2)),
               OpenSet::edge_interval(X, 0, Rat(1, 4), Rat(3, 4)),
               OpenSet::edge_interval(X, 0, Rat(3, 8), Rat(7, 8))};
  bad.phi[{0}] = nat(1);
  bad.phi[{0, 1}] = nat(2);
  bad.phi[{1}] = nat(1);
  bad.phi[{1, 2}] = nat(2);
  bad.phi[{2}] = nat(1);
  bad.phi[{0, 1, 2}] = nat(3);
  CHECK_THROWS_AS(from_presentation(bad), CuError);

  // phi must be ordered
  PiecewiseCharPresentation unordered;
  unordered.space = X;
  unordered.kind = kNat;
  unordered.opens = {OpenSet::edge_interval(X, 0, Rat(1, 8), Rat(1, 2)),
                     OpenSet::edge_interval(X, 0, Rat(1, 4), Rat(3, 4))};
  unordered.phi[{0}] = nat(5);
  unordered.phi[{1}] = nat(1);
  unordered.phi[{0, 1}] = nat(2);
  CHECK_THROWS_AS(from_presentation(unordered), CuError);
}

TEST_CASE("compactness on step tiers: compact iff constant finite (small sweep)") {
  for (const Space& X : {Space::interval(), Space::graph(3, {{0, 1}, {1, 2}})}) {
    Rng rng(5);
    SampleParams p;
    p.max_cuts = 2;
    p.grid_denominator = 4;
    for (int t = 0; t < 150; ++t) {
      auto f = sample_step(X, kNat, rng, p);
      bool compact = way_below_step(f, f);
      bool expected = f.is_constant() && !f.eval(Point::at(X, 0)).nat.infinite;
      CHECK(compact == expected);
    }
  }
}

TEST_CASE("cancellation: a+b << a+c implies b << c (random over Nbar^2)") {
  Rng rng(2718);
  SampleParams p;
  p.max_cuts = 2;
  auto K2 = ScalarKind::power(kNat, 2);
  auto X = Space::interval();
  SampleParams finite = p;
  finite.infinity_weight = 0;
  int hits = 0;
  for (int t = 0; t < 400 && hits < 60; ++t) {
    // mostly low-variation a so the hypothesis a+b << a+c is reachable
    auto a = t % 2 ? StepFunction::constant(X, K2, sample_scalar(K2, rng, finite))
                   : sample_step(X, K2, rng, finite);
    auto c = sample_step(X, K2, rng, p);
    auto b = t % 4 ? chi_approx(c, 1 + t % 3) : sample_step(X, K2, rng, p);
    if (!way_below_step(add_step(a, b), add_step(a, c))) continue;
    ++hits;
    CHECK(way_below_step(b, c));
  }
  CHECK(hits >= 30);
}
