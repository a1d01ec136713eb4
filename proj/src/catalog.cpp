#include "cusg/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cusg {

namespace {

using nlohmann::json;

SemigroupPtr scalar_sg(const ScalarKind& k) { return std::make_shared<ScalarSemigroup>(k); }

std::shared_ptr<const PullbackSemigroup> endpoint_pullback(const ScalarKind& fibre,
                                                           const ScalarKind& left_kind,
                                                           const ScalarKind& base_kind,
                                                           CuMorphism phi) {
  auto X = Space::interval();
  auto right = std::make_shared<LscSemigroup>(X, fibre);
  auto pi = CuMorphism::evaluation({Point::at(X, 0), Point::at(X, 1)});
  return std::make_shared<PullbackSemigroup>(scalar_sg(left_kind), right, scalar_sg(base_kind),
                                             std::move(phi), pi, true);
}

bool is_permutation(const std::vector<std::vector<long long>>& m) {
  for (auto& row : m) {
    if (row.size() != m.size()) return false;
    long long sum = 0;
    for (auto e : row) {
      if (e != 0 && e != 1) return false;
      sum += e;
    }
    if (sum != 1) return false;
  }
  for (size_t j = 0; j < m.size(); ++j) {
    long long sum = 0;
    for (auto& row : m) sum += row[j];
    if (sum != 1) return false;
  }
  return true;
}

}  // namespace

BuiltAlgebra build(const AlgebraSpec& spec) {
  BuiltAlgebra out;
  out.spec = spec;
  switch (spec.kind) {
    case AlgebraSpec::Kind::IntervalAlgebra: {
      out.direct = std::make_shared<LscSemigroup>(Space::interval(), spec.scalar);
      out.semigroup = out.direct;
      return out;
    }
    case AlgebraSpec::Kind::GraphAlgebra: {
      out.direct = std::make_shared<LscSemigroup>(spec.space, spec.scalar);
      int m = (int)spec.space.edges.size();
      int n = spec.space.num_vertices;
      if (m == 0) {
        out.semigroup = out.direct;
        return out;
      }
      int k = (int)flatten_kind(spec.scalar).size();
      std::vector<std::vector<long long>> incidence(2 * m, std::vector<long long>(n, 0));
      for (int e = 0; e < m; ++e) {
        incidence[e][spec.space.edges[e].src] = 1;
        incidence[m + e][spec.space.edges[e].dst] = 1;
      }
      auto X = Space::interval();
      auto fibre = ScalarKind::power(spec.scalar, m);
      auto right = std::make_shared<LscSemigroup>(X, fibre);
      auto left_kind = ScalarKind::power(spec.scalar, n);
      auto base_kind = ScalarKind::power(spec.scalar, 2 * m);
      auto phi = CuMorphism::matrix(CuMorphism::block_matrix(incidence, k));
      auto pi = CuMorphism::evaluation({Point::at(X, 0), Point::at(X, 1)});
      out.pullback = std::make_shared<PullbackSemigroup>(scalar_sg(left_kind), right,
                                                         scalar_sg(base_kind), phi, pi, true);
      out.semigroup = out.pullback;
      return out;
    }
    case AlgebraSpec::Kind::Nccw1: {
      if (spec.matrix.size() != (size_t)(2 * spec.nccw_s))
        fail(Err::InvalidSpec, "NCCW matrix needs 2s rows");
      for (auto& row : spec.matrix)
        if (row.size() != (size_t)spec.nccw_r) fail(Err::InvalidSpec, "NCCW matrix needs r columns");
      auto fibre = ScalarKind::power(ScalarKind::nat(), spec.nccw_s);
      auto left_kind = ScalarKind::power(ScalarKind::nat(), spec.nccw_r);
      auto base_kind = ScalarKind::power(ScalarKind::nat(), 2 * spec.nccw_s);
      out.pullback =
          endpoint_pullback(fibre, left_kind, base_kind, CuMorphism::matrix(spec.matrix));
      out.semigroup = out.pullback;
      return out;
    }
    case AlgebraSpec::Kind::DimensionDrop: {
      if (spec.supernatural) {
        Supernatural pq = spec.p * spec.q;
        auto fibre = ScalarKind::uhf(pq);
        auto left_kind =
            ScalarKind::product({ScalarKind::uhf(spec.p), ScalarKind::uhf(spec.q)});
        auto base_kind = ScalarKind::power(fibre, 2);
        out.pullback = endpoint_pullback(fibre, left_kind, base_kind,
                                         CuMorphism::matrix({{1, 0}, {0, 1}}));
      } else {
        unsigned long long pi_ = spec.p.stage(64), qi = spec.q.stage(64);
        auto fibre = ScalarKind::scaled(pi_ * qi);
        auto left_kind =
            ScalarKind::product({ScalarKind::scaled(pi_), ScalarKind::scaled(qi)});
        auto base_kind = ScalarKind::power(fibre, 2);
        out.pullback = endpoint_pullback(fibre, left_kind, base_kind,
                                         CuMorphism::matrix({{1, 0}, {0, 1}}));
      }
      out.semigroup = out.pullback;
      return out;
    }
    case AlgebraSpec::Kind::MappingTorus: {
      int k = (int)flatten_kind(spec.scalar).size();
      if ((int)spec.matrix.size() != k || !is_permutation(spec.matrix))
        fail(Err::InvalidSpec,
             "mapping torus automorphisms are permutation matrices over the scalar atoms");
      std::vector<std::vector<long long>> stacked;
      for (int i = 0; i < k; ++i) {
        std::vector<long long> row(k, 0);
        row[i] = 1;
        stacked.push_back(std::move(row));
      }
      for (auto& row : spec.matrix) stacked.push_back(row);
      auto base_kind = ScalarKind::power(spec.scalar, 2);
      out.pullback =
          endpoint_pullback(spec.scalar, spec.scalar, base_kind, CuMorphism::matrix(stacked));
      out.semigroup = out.pullback;
      return out;
    }
    case AlgebraSpec::Kind::RshChain: {
      SemigroupPtr prev = std::make_shared<LscSemigroup>(
          spec.rsh_base_space, ScalarKind::power(ScalarKind::nat(), spec.rsh_base_arity));
      std::shared_ptr<const PullbackSemigroup> last;
      for (auto& stage : spec.rsh_stages) {
        auto fibre = ScalarKind::power(ScalarKind::nat(), stage.arity);
        auto right = std::make_shared<LscSemigroup>(stage.space, fibre);
        SubSpace D = derived_space(stage.closed);
        auto base = std::make_shared<LscSemigroup>(D.sub, fibre);
        auto phi = CuMorphism::matrix(stage.matrix);
        auto pi = CuMorphism::restriction(stage.closed);
        last = std::make_shared<PullbackSemigroup>(prev, right, base, phi, pi, true);
        prev = last;
      }
      if (!last) fail(Err::InvalidSpec, "rsh chain needs at least one stage");
      out.pullback = last;
      out.semigroup = last;
      return out;
    }
    case AlgebraSpec::Kind::TwoDimDimDrop: {
      // marker only: membership over finite point-constraint data
      if (spec.point_fibres.empty()) fail(Err::InvalidSpec, "needs at least one marked point");
      Supernatural prod = spec.point_fibres[0];
      for (size_t i = 1; i < spec.point_fibres.size(); ++i) prod = prod * spec.point_fibres[i];
      out.semigroup = scalar_sg(ScalarKind::uhf(prod));
      return out;
    }
  }
  fail(Err::Internal, "build");
}

// -- membership -------------------------------------------------------------------

namespace {

// Solves A b = t over ExtNat^r by bounded search (entries of t drive the bound).
std::optional<std::vector<ExtNat>> solve_matrix(const std::vector<std::vector<long long>>& A,
                                                const std::vector<ExtNat>& t) {
  size_t r = A[0].size();
  unsigned long long bound = 1;
  for (auto& v : t)
    if (!v.infinite) bound = std::max(bound, v.value);
  if (r > 4 || bound > 256) fail(Err::InvalidSpec, "matrix solve bound exceeded");
  std::vector<unsigned long long> digits(r, 0);  // bound+1 encodes infinity
  auto value_of = [&](size_t j) {
    return digits[j] > bound ? ExtNat::inf() : ExtNat::of(digits[j]);
  };
  while (true) {
    bool match = true;
    for (size_t i = 0; i < A.size() && match; ++i) {
      ExtNat acc = ExtNat::of(0);
      for (size_t j = 0; j < r; ++j) {
        if (A[i][j] == 0) continue;
        ExtNat v = value_of(j);
        if (v.infinite) {
          acc = ExtNat::inf();
        } else if (!acc.infinite) {
          acc = acc + ExtNat::of(v.value * (unsigned long long)A[i][j]);
        }
      }
      match = acc == t[i];
    }
    if (match) {
      std::vector<ExtNat> out;
      for (size_t j = 0; j < r; ++j) out.push_back(value_of(j));
      return out;
    }
    size_t j = 0;
    while (j < r && digits[j] == bound + 1) digits[j++] = 0;
    if (j == r) return std::nullopt;
    digits[j]++;
  }
}

}  // namespace

MemberResult member(const BuiltAlgebra& B, const StepFunction& candidate) {
  switch (B.spec.kind) {
    case AlgebraSpec::Kind::IntervalAlgebra:
    case AlgebraSpec::Kind::GraphAlgebra:
      return {true, ""};
    case AlgebraSpec::Kind::DimensionDrop: {
      const Space& X = candidate.space();
      ScalarValue f0 = candidate.eval(Point::at(X, 0));
      ScalarValue f1 = candidate.eval(Point::at(X, 1));
      auto check_end = [&](const char* which, const ScalarValue& v,
                           const Supernatural& sn) -> MemberResult {
        if (B.spec.supernatural) {
          Supernatural pq = B.spec.p * B.spec.q;
          if (!uhf_membership(sn, pq, v.uhf))
            return {false, std::string(which) + "=" + scalar_str(candidate.kind(), v) +
                               " is not in C_{" + sn.str() + "}"};
        } else {
          unsigned long long n = sn.stage(64);
          if (!v.nat.infinite) {
            Rat value((long long)v.nat.value, (long long)candidate.kind().scale);
            if (!value.times_is_integer((long long)n))
              return {false, std::string(which) + "=" + value.str() + " is not in (1/" +
                                 std::to_string(n) + ")Nbar"};
          }
        }
        return {true, ""};
      };
      auto r0 = check_end("f(0)", f0, B.spec.p);
      if (!r0.member) return r0;
      return check_end("f(1)", f1, B.spec.q);
    }
    case AlgebraSpec::Kind::MappingTorus: {
      const Space& X = candidate.space();
      ScalarValue f0 = candidate.eval(Point::at(X, 0));
      ScalarValue f1 = candidate.eval(Point::at(X, 1));
      ScalarValue want = apply_matrix_scalar(B.spec.matrix, candidate.kind(), candidate.kind(), f0);
      if (!(f1 == want))
        return {false, "f(1)=" + scalar_str(candidate.kind(), f1) + " but Cu(phi)(f(0))=" +
                           scalar_str(candidate.kind(), want)};
      return {true, ""};
    }
    case AlgebraSpec::Kind::Nccw1: {
      const Space& X = candidate.space();
      std::vector<ExtNat> t;
      for (auto& v : flatten_value(candidate.kind(), candidate.eval(Point::at(X, 0))))
        t.push_back(v.nat);
      for (auto& v : flatten_value(candidate.kind(), candidate.eval(Point::at(X, 1))))
        t.push_back(v.nat);
      if (solve_matrix(B.spec.matrix, t).has_value()) return {true, ""};
      return {false, "no b in Nbar^" + std::to_string(B.spec.nccw_r) +
                         " solves (f(0),f(1))^t = A b"};
    }
    case AlgebraSpec::Kind::RshChain:
      fail(Err::InvalidSpec, "membership for rsh chains goes through the pullback pairing");
    case AlgebraSpec::Kind::TwoDimDimDrop:
      fail(Err::InvalidSpec, "the two-dimensional marker takes point values, not functions");
  }
  fail(Err::Internal, "member");
}

MemberResult member_two_dim(const AlgebraSpec& spec, const std::vector<UhfVal>& point_values) {
  if (spec.kind != AlgebraSpec::Kind::TwoDimDimDrop)
    fail(Err::InvalidSpec, "not a two-dimensional dimension-drop marker");
  if (point_values.size() != spec.point_fibres.size())
    fail(Err::InvalidSpec, "one value per marked point required");
  Supernatural prod = spec.point_fibres[0];
  for (size_t i = 1; i < spec.point_fibres.size(); ++i) prod = prod * spec.point_fibres[i];
  for (size_t i = 0; i < point_values.size(); ++i) {
    if (!uhf_membership(spec.point_fibres[i], prod, point_values[i]))
      return {false, "f(x_" + std::to_string(i + 1) + ")=" + point_values[i].str() +
                         " is not in C_{" + spec.point_fibres[i].str() + "}"};
  }
  return {true, ""};
}

// -- compact elements ---------------------------------------------------------------

namespace {

std::vector<ScalarValue> enumerate_constants(const ScalarKind& k, int bound) {
  std::vector<ScalarValue> out;
  switch (k.tag) {
    case ScalarTag::Nat:
      for (int v = 0; v <= bound; ++v) out.push_back(ScalarValue::of_nat(ExtNat::of(v)));
      out.push_back(ScalarValue::of_nat(ExtNat::inf()));
      return out;
    case ScalarTag::Scaled:
      for (int v = 0; v <= bound * (int)k.scale; ++v)
        out.push_back(ScalarValue::of_scaled(ExtNat::of(v)));
      out.push_back(ScalarValue::of_scaled(ExtNat::inf()));
      return out;
    case ScalarTag::Uhf: {
      std::vector<long long> denoms = {1};
      for (auto& [prime, e] : k.p.exponents())
        if (e != 0) denoms.push_back((long long)prime);
      for (long long d : denoms)
        for (long long n = 0; n <= bound * d; ++n) {
          ScalarValue v = ScalarValue::of_uhf(UhfVal::compact(Rat(n, d)));
          if (scalar_valid(k, v)) out.push_back(v);
          if (n > 0) out.push_back(ScalarValue::of_uhf(UhfVal::soft(Rat(n, d))));
        }
      out.push_back(ScalarValue::of_uhf(UhfVal::inf()));
      return out;
    }
    case ScalarTag::Product: {
      // componentwise grid, capped to keep the search at desk scale
      std::vector<std::vector<ScalarValue>> grids;
      size_t total = 1;
      for (auto& c : k.components) {
        grids.push_back(enumerate_constants(c, bound));
        total *= grids.back().size();
      }
      if (total > 20000) fail(Err::InvalidSpec, "constant grid too large");
      std::vector<ScalarValue> out;
      std::vector<size_t> idx(k.components.size(), 0);
      while (true) {
        std::vector<ScalarValue> comps;
        for (size_t i = 0; i < idx.size(); ++i) comps.push_back(grids[i][idx[i]]);
        out.push_back(ScalarValue::of_tuple(std::move(comps)));
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == grids[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
      return out;
    }
  }
  return out;
}

}  // namespace

std::vector<Element> compact_elements(const BuiltAlgebra& B, int bound) {
  const Semigroup& S = *B.semigroup;
  std::vector<Element> found;
  auto consider = [&](const Element& x) {
    if (!S.contains(x)) return;
    if (!S.way_below(x, x, kDefaultDepth).is_true()) return;
    for (auto& f : found)
      if (S.equal(f, x, kDefaultDepth).is_true()) return;
    found.push_back(x);
  };

  const LscSemigroup* fn_part = B.pullback
                                    ? dynamic_cast<const LscSemigroup*>(
                                          B.pullback->right_semigroup().get())
                                    : B.direct.get();
  if (!fn_part) fail(Err::InvalidSpec, "compact search needs a function model");
  const ScalarKind& M = fn_part->scalar();
  const Space& X = fn_part->space();

  auto lift = [&](const StepFunction& f) -> std::optional<Element> {
    if (!B.pullback) return Element::of_step(f);
    // solve the base constraint for a left witness
    Element fe = Element::of_step(f);
    Element t = B.pullback->pi_of(fe);
    const auto* lk = dynamic_cast<const ScalarSemigroup*>(B.pullback->left_semigroup().get());
    const auto* bk = dynamic_cast<const ScalarSemigroup*>(B.pullback->base_semigroup().get());
    if (!lk || !bk) return std::nullopt;
    // bounded search over the left constant grid
    for (auto& bv : enumerate_constants(lk->kind(), bound + 2)) {
      Element b = Element::of_scalar(bv);
      if (!lk->contains(b)) continue;
      try {
        if (bk->equal(B.pullback->phi_of(b), t, kDefaultDepth).is_true())
          return B.pullback->make_pair(b, fe);
      } catch (const CuError&) {
      }
    }
    return std::nullopt;
  };

  // constants over the value grid
  for (auto& v : enumerate_constants(M, bound)) {
    if (!scalar_valid(M, v)) continue;
    auto lifted = lift(StepFunction::constant(X, M, v));
    if (lifted.has_value()) consider(*lifted);
  }

  // one-breakpoint search family: confirms no non-constant compacts hide at
  // small scale
  std::vector<Rat> cuts = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
  auto small = enumerate_constants(M, std::min(bound, 2));
  if (!X.edges.empty() && small.size() <= 40) {
    for (auto& t : cuts)
      for (auto& lo : small)
        for (auto& hi : small) {
          if (lo == hi) continue;
          StepFunction::EdgeData ed;
          ed.cuts = {t};
          ed.point_values = {scalar_meet(M, lo, hi)};
          ed.interval_values = {lo, hi};
          std::vector<StepFunction::EdgeData> edges(X.edges.size());
          std::vector<ScalarValue> verts;
          for (size_t e = 0; e < X.edges.size(); ++e) {
            edges[e].interval_values = {lo};
            if (e == 0) edges[e] = ed;
          }
          for (int v = 0; v < X.num_vertices; ++v) verts.push_back(scalar_meet(M, lo, hi));
          try {
            StepFunction f(X, M, std::move(verts), std::move(edges));
            auto lifted = lift(f);
            if (lifted.has_value()) consider(*lifted);
          } catch (const CuError&) {
          }
        }
  }
  return found;
}

// -- graph decomposition ---------------------------------------------------------

namespace {

ScalarValue wrap_tuple(std::vector<ScalarValue> comps) {
  if (comps.size() == 1) return comps[0];
  return ScalarValue::of_tuple(std::move(comps));
}

ScalarValue component_of(const ScalarValue& v, size_t i, size_t arity) {
  if (arity == 1) return v;
  return v.comps[i];
}

}  // namespace

Element graph_to_pair(const BuiltAlgebra& G, const StepFunction& f) {
  if (!G.pullback) fail(Err::InvalidSpec, "graph decomposition needs edges");
  const Space& X = G.spec.space;
  const ScalarKind& M = G.spec.scalar;
  int m = (int)X.edges.size();
  auto X01 = Space::interval();

  // left: vertex values
  std::vector<ScalarValue> verts;
  for (int v = 0; v < X.num_vertices; ++v) verts.push_back(f.vertex_values()[v]);
  Element b = Element::of_scalar(wrap_tuple(std::move(verts)));

  // right: tuple-valued function over the shared interval
  std::vector<Rat> cuts;
  for (auto& ed : f.edges())
    for (auto& t : ed.cuts) {
      bool seen = false;
      for (auto& c : cuts) seen |= c == t;
      if (!seen) cuts.push_back(t);
    }
  std::sort(cuts.begin(), cuts.end(), [](const Rat& a, const Rat& b) { return a < b; });
  auto tuple_at = [&](const Rat& t) {
    std::vector<ScalarValue> comps;
    for (int e = 0; e < m; ++e) comps.push_back(f.eval(Point::on_edge(X, e, t)));
    return wrap_tuple(std::move(comps));
  };
  StepFunction::EdgeData ed;
  ed.cuts = cuts;
  for (auto& t : cuts) ed.point_values.push_back(tuple_at(t));
  Rat prev(0);
  for (size_t i = 0; i <= cuts.size(); ++i) {
    Rat next = i < cuts.size() ? cuts[i] : Rat(1);
    ed.interval_values.push_back(tuple_at((prev + next) / Rat(2)));
    prev = next;
  }
  std::vector<ScalarValue> end0, end1;
  for (int e = 0; e < m; ++e) {
    end0.push_back(f.vertex_values()[X.edges[e].src]);
    end1.push_back(f.vertex_values()[X.edges[e].dst]);
  }
  StepFunction F(X01, ScalarKind::power(M, m),
                 {wrap_tuple(std::move(end0)), wrap_tuple(std::move(end1))}, {ed});
  return G.pullback->make_pair(b, Element::of_step(F));
}

StepFunction pair_to_graph(const BuiltAlgebra& G, const Element& pair) {
  if (!G.pullback) fail(Err::InvalidSpec, "graph decomposition needs edges");
  const Space& X = G.spec.space;
  const ScalarKind& M = G.spec.scalar;
  const StepFunction& F = pair.right().step();
  const ScalarValue& b = pair.left().scalar();
  size_t m = X.edges.size();
  std::vector<StepFunction::EdgeData> edges;
  for (size_t e = 0; e < m; ++e) {
    StepFunction::EdgeData ed;
    ed.cuts = F.edges()[0].cuts;
    for (auto& v : F.edges()[0].point_values) ed.point_values.push_back(component_of(v, e, m));
    for (auto& v : F.edges()[0].interval_values)
      ed.interval_values.push_back(component_of(v, e, m));
    edges.push_back(std::move(ed));
  }
  std::vector<ScalarValue> verts;
  for (int v = 0; v < X.num_vertices; ++v)
    verts.push_back(component_of(b, (size_t)v, (size_t)X.num_vertices));
  return StepFunction(X, M, std::move(verts), std::move(edges));
}

HarnessReport graph_iso_check(const Space& X, const ScalarKind& M, const HarnessOptions& opts) {
  AlgebraSpec spec;
  spec.kind = AlgebraSpec::Kind::GraphAlgebra;
  spec.space = X;
  spec.scalar = M;
  BuiltAlgebra G = build(spec);

  HarnessReport rep;
  rep.subject = "graph-iso " + X.str() + " over " + M.str();
  rep.seed = opts.seed;
  rep.trials = opts.trials;
  rep.depth = opts.depth;

  if (!G.pullback) {
    // discrete space: the translation is the identity on vertex tuples
    for (int t = 0; t < opts.trials; ++t) {
      Rng rng = trial_rng(opts.seed, t);
      auto f = sample_step(X, M, rng, opts.params);
      StepFunction back(X, M, f.vertex_values(), {});
      if (!(back == f)) rep.violations.push_back({t, "identity", f.str()});
    }
    return rep;
  }

  std::vector<std::vector<Violation>> buckets(opts.trials);
#if defined(CUSG_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 8) if (opts.parallel)
#endif
  for (int t = 0; t < opts.trials; ++t) {
    auto* out = &buckets[t];
    try {
      Rng rng = trial_rng(opts.seed, t);
      const Semigroup& D = *G.direct;
      const PullbackSemigroup& P = *G.pullback;
      Element f = D.sample(rng, opts.params);
      Element g = D.sample(rng, opts.params);
      Element x = graph_to_pair(G, f.step());
      Element y = graph_to_pair(G, g.step());
      if (!P.contains(x)) out->push_back({t, "constraint", D.format(f)});
      if (!(pair_to_graph(G, x) == f.step())) out->push_back({t, "round-trip", D.format(f)});
      if (D.leq(f, g, opts.depth).is_true() != P.leq(x, y, opts.depth).is_true())
        out->push_back({t, "order-embedding", D.format(f) + " vs " + D.format(g)});
      if (D.way_below(f, g, opts.depth).is_true() != P.way_below(x, y, opts.depth).is_true())
        out->push_back({t, "wb-embedding", D.format(f) + " vs " + D.format(g)});
      Element sum_direct = D.add(f, g);
      Element sum_pair = P.add(x, y);
      if (!P.equal(graph_to_pair(G, sum_direct.step()), sum_pair, opts.depth).is_true())
        out->push_back({t, "additive", D.format(f) + " + " + D.format(g)});
      // surjectivity at probes: sampled pullback elements pull back and forth
      Element z = P.sample(rng, opts.params);
      StepFunction back = pair_to_graph(G, z);
      if (!P.equal(graph_to_pair(G, back), z, opts.depth).is_true())
        out->push_back({t, "surjective-probe", P.format(z)});
    } catch (const CuError& e) {
      out->push_back({t, "exception", e.what()});
    }
  }
  for (auto& b : buckets)
    for (auto& v : b) rep.violations.push_back(v);
  return rep;
}

// -- spec files -------------------------------------------------------------------

ScalarKind parse_scalar_kind(const std::string& raw) {
  std::string text = raw;
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  auto caret = text.rfind('^');
  if (caret != std::string::npos && text.find('(') == std::string::npos) {
    // nbar^k style powers
    int k = std::stoi(text.substr(caret + 1));
    return ScalarKind::power(parse_scalar_kind(text.substr(0, caret)), k);
  }
  if (text == "nbar") return ScalarKind::nat();
  if (text.rfind("scaled(", 0) == 0 && text.back() == ')')
    return ScalarKind::scaled(std::stoull(text.substr(7, text.size() - 8)));
  if (text.rfind("uhf(", 0) == 0) {
    auto close = text.find(')');
    ScalarKind base = ScalarKind::uhf(Supernatural::parse(text.substr(4, close - 4)));
    if (close + 1 < text.size() && text[close + 1] == '^')
      return ScalarKind::power(base, std::stoi(text.substr(close + 2)));
    return base;
  }
  if (text.rfind("prod(", 0) == 0 && text.back() == ')') {
    std::vector<ScalarKind> comps;
    std::string body = text.substr(5, text.size() - 6);
    int depth = 0;
    std::string cur;
    for (char ch : body) {
      if (ch == '(') depth++;
      if (ch == ')') depth--;
      if (ch == ',' && depth == 0) {
        comps.push_back(parse_scalar_kind(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    comps.push_back(parse_scalar_kind(cur));
    return ScalarKind::product(std::move(comps));
  }
  fail(Err::ParseError, "unknown scalar kind: " + raw);
}

namespace {

Space parse_space_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "interval") return Space::interval();
    if (s == "loop") return Space::loop();
    if (s.rfind("cycle", 0) == 0) return Space::cycle(std::stoi(s.substr(5)));
    if (s.rfind("theta", 0) == 0) return Space::theta(std::stoi(s.substr(5)));
    if (s.rfind("discrete", 0) == 0) return Space::discrete(std::stoi(s.substr(8)));
    fail(Err::InvalidSpec, "unknown space: " + s);
  }
  int n = j.at("vertices").get<int>();
  std::vector<Space::Edge> edges;
  for (auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return Space::graph(n, std::move(edges));
}

std::vector<std::vector<long long>> parse_matrix_json(const json& j) {
  std::vector<std::vector<long long>> m;
  for (auto& row : j) {
    std::vector<long long> r;
    for (auto& e : row) r.push_back(e.get<long long>());
    m.push_back(std::move(r));
  }
  return m;
}

Supernatural parse_supernatural_json(const json& j) {
  if (j.is_number_integer()) return Supernatural::from_int(j.get<unsigned long long>());
  return Supernatural::parse(j.get<std::string>());
}

}  // namespace

AlgebraSpec parse_algebra_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Err::ParseError, std::string("bad spec file: ") + e.what());
  }
  AlgebraSpec spec;
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "interval" || kind == "interval_algebra") {
      spec.kind = AlgebraSpec::Kind::IntervalAlgebra;
      spec.scalar = parse_scalar_kind(j.value("scalar", "nbar"));
    } else if (kind == "graph" || kind == "graph_algebra") {
      spec.kind = AlgebraSpec::Kind::GraphAlgebra;
      spec.space = parse_space_json(j.at("space"));
      spec.scalar = parse_scalar_kind(j.value("scalar", "nbar"));
    } else if (kind == "nccw1") {
      spec.kind = AlgebraSpec::Kind::Nccw1;
      spec.nccw_r = j.at("r").get<int>();
      spec.nccw_s = j.at("s").get<int>();
      spec.matrix = parse_matrix_json(j.at("A"));
    } else if (kind == "dimension_drop") {
      spec.kind = AlgebraSpec::Kind::DimensionDrop;
      spec.p = parse_supernatural_json(j.at("p"));
      spec.q = parse_supernatural_json(j.at("q"));
      spec.supernatural = !spec.p.is_finite() || !spec.q.is_finite();
      if (j.contains("supernatural")) spec.supernatural = j.at("supernatural").get<bool>();
    } else if (kind == "mapping_torus") {
      spec.kind = AlgebraSpec::Kind::MappingTorus;
      spec.scalar = parse_scalar_kind(j.value("scalar", "nbar"));
      spec.matrix = parse_matrix_json(j.at("perm"));
    } else if (kind == "two_dim_dimension_drop") {
      spec.kind = AlgebraSpec::Kind::TwoDimDimDrop;
      for (auto& p : j.at("points")) spec.point_fibres.push_back(parse_supernatural_json(p));
    } else if (kind == "rsh_chain") {
      spec.kind = AlgebraSpec::Kind::RshChain;
      spec.rsh_base_space = parse_space_json(j.at("base_space"));
      spec.rsh_base_arity = j.value("base_arity", 1);
      for (auto& st : j.at("stages")) {
        Space sp = parse_space_json(st.at("space"));
        SubComplex closed = st.value("subset", std::string("whole")) == "whole"
                                ? SubComplex::whole(sp)
                                : SubComplex::vertex_set(sp, st.at("vertices").get<std::vector<int>>());
        spec.rsh_stages.emplace_back(sp, closed, parse_matrix_json(st.at("A")),
                                     st.value("arity", 1));
      }
    } else {
      fail(Err::InvalidSpec, "unknown spec kind: " + kind);
    }
  } catch (const json::exception& e) {
    fail(Err::ParseError, std::string("bad spec file: ") + e.what());
  }
  return spec;
}

std::optional<AlgebraSpec> builtin_spec(const std::string& name) {
  auto make = [](const std::string& text) { return parse_algebra_spec(text); };
  if (name == "lsc-interval-nbar") return make(R"js({"kind":"interval","scalar":"nbar"})js");
  if (name == "lsc-interval-nbar2") return make(R"js({"kind":"interval","scalar":"nbar^2"})js");
  if (name == "lsc-interval-c2")
    return make(R"js({"kind":"interval","scalar":"uhf(2^inf)"})js");
  if (name == "loop-nbar") return make(R"js({"kind":"graph","space":"loop","scalar":"nbar"})js");
  if (name == "loop-nbar2") return make(R"js({"kind":"graph","space":"loop","scalar":"nbar^2"})js");
  if (name == "theta3-nbar") return make(R"js({"kind":"graph","space":"theta3","scalar":"nbar"})js");
  if (name == "cycle3-nbar") return make(R"js({"kind":"graph","space":"cycle3","scalar":"nbar"})js");
  if (name == "zdd23") return make(R"js({"kind":"dimension_drop","p":2,"q":3})js");
  if (name == "zdd-2inf-3inf")
    return make(R"js({"kind":"dimension_drop","p":"2^inf","q":"3^inf"})js");
  if (name == "nccw-11") return make(R"js({"kind":"nccw1","r":1,"s":1,"A":[[1],[1]]})js");
  if (name == "torus-swap-nbar2")
    return make(R"js({"kind":"mapping_torus","scalar":"nbar^2","perm":[[0,1],[1,0]]})js");
  return std::nullopt;
}

std::vector<std::string> builtin_spec_names() {
  return {"lsc-interval-nbar", "lsc-interval-nbar2", "lsc-interval-c2", "loop-nbar",
          "loop-nbar2",        "theta3-nbar",        "cycle3-nbar",     "zdd23",
          "zdd-2inf-3inf",     "nccw-11",            "torus-swap-nbar2"};
}

}  // namespace cusg
