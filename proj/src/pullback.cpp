#include "cusg/pullback.hpp"

#include <algorithm>

#include "cusg/lsc_order.hpp"

namespace cusg {

namespace {

// Collar regions: open intervals hanging off the boundary of Y into its
// complement, each carrying the value of the adjacent boundary point.
struct Collar {
  int edge;
  Rat lo, hi;      // open region (lo, hi)
  bool junction_at_hi;  // the outer junction cut
  Point boundary;  // the boundary point of Y whose value the collar carries
};

std::vector<Collar> collar_regions(const SubComplex& Y, const Rat& rho) {
  const Space& X = Y.space();
  std::vector<Collar> out;
  auto side_covered = [&](int edge, const Rat& t, bool left_side) {
    for (auto& [a, b] : Y.edge_intervals()[edge]) {
      if (left_side && a < t && t <= b) return true;
      if (!left_side && a <= t && t < b) return true;
    }
    return false;
  };
  for (int v = 0; v < X.num_vertices; ++v) {
    if (!Y.vertices()[v]) continue;
    for (size_t e = 0; e < X.edges.size(); ++e) {
      if (X.edges[e].src == v && !side_covered((int)e, Rat(0), false))
        out.push_back({(int)e, Rat(0), rho, true, Point::at(X, v)});
      if (X.edges[e].dst == v && !side_covered((int)e, Rat(1), true))
        out.push_back({(int)e, Rat(1) - rho, Rat(1), false, Point::at(X, v)});
    }
  }
  for (size_t e = 0; e < X.edges.size(); ++e) {
    for (auto& [a, b] : Y.edge_intervals()[e]) {
      if (a > Rat(0) && !side_covered((int)e, a, true))
        out.push_back({(int)e, a - rho, a, false, Point::on_edge(X, (int)e, a)});
      if (b < Rat(1) && !side_covered((int)e, b, false))
        out.push_back({(int)e, b, b + rho, true, Point::on_edge(X, (int)e, b)});
    }
  }
  return out;
}

}  // namespace

StepFunction patch_step(const StepFunction& f, const SubComplex& Y, const StepFunction& data,
                        const Rat& rho) {
  if (f.space() != Y.space()) fail(Err::SpaceMismatch, "subcomplex of a different space");
  SubSpace D = derived_space(Y);
  if (data.space() != D.sub) fail(Err::SpaceMismatch, "patch data does not live on the subcomplex");
  auto collars = collar_regions(Y, rho);

  // refine at Y endpoints, data cuts pulled into X, and collar boundaries
  std::vector<std::vector<Rat>> extra(f.space().edges.size());
  for (size_t s = 0; s < D.edge_origin.size(); ++s) {
    auto& eo = D.edge_origin[s];
    extra[eo.edge].push_back(eo.a);
    extra[eo.edge].push_back(eo.b);
    for (auto& u : data.edges()[s].cuts) extra[eo.edge].push_back(eo.a + u * (eo.b - eo.a));
  }
  for (auto& origin : D.vertex_origin)
    if (!origin.at_vertex) extra[origin.edge].push_back(origin.t);
  for (auto& c : collars) {
    extra[c.edge].push_back(c.lo);
    extra[c.edge].push_back(c.hi);
  }
  StepFunction out = f.refined(extra);

  std::vector<ScalarValue> verts = out.vertex_values();
  std::vector<StepFunction::EdgeData> edges = out.edges();
  const ScalarKind& K = f.kind();

  auto data_at_boundary = [&](const Point& p) -> ScalarValue {
    for (size_t sv = 0; sv < D.vertex_origin.size(); ++sv)
      if (D.vertex_origin[sv] == p) return data.vertex_values()[sv];
    fail(Err::Internal, "collar without a matching boundary vertex");
  };

  // overwrite the collar regions first (boundary values pushed outward)
  for (auto& c : collars) {
    ScalarValue v = data_at_boundary(c.boundary);
    auto& ed = edges[c.edge];
    for (size_t i = 0; i < ed.cuts.size(); ++i)
      if (ed.cuts[i] > c.lo && ed.cuts[i] < c.hi) ed.point_values[i] = v;
    Rat prev(0);
    for (size_t i = 0; i <= ed.cuts.size(); ++i) {
      Rat next = i < ed.cuts.size() ? ed.cuts[i] : Rat(1);
      if (prev >= c.lo && next <= c.hi) ed.interval_values[i] = v;
      prev = next;
    }
    // junction: meet with the cell beyond the collar
    Rat jt = c.junction_at_hi ? c.hi : c.lo;
    for (size_t i = 0; i < ed.cuts.size(); ++i) {
      if (!(ed.cuts[i] == jt)) continue;
      const ScalarValue& beyond =
          c.junction_at_hi ? ed.interval_values[i + 1] : ed.interval_values[i];
      ed.point_values[i] = scalar_meet(K, v, beyond);
    }
  }

  // overwrite Y itself with the data
  for (size_t sv = 0; sv < D.vertex_origin.size(); ++sv) {
    const Point& origin = D.vertex_origin[sv];
    const ScalarValue& val = data.vertex_values()[sv];
    if (origin.at_vertex) {
      verts[origin.vertex] = val;
    } else {
      auto& ed = edges[origin.edge];
      for (size_t i = 0; i < ed.cuts.size(); ++i)
        if (ed.cuts[i] == origin.t) ed.point_values[i] = val;
    }
  }
  for (size_t s = 0; s < D.edge_origin.size(); ++s) {
    auto& eo = D.edge_origin[s];
    auto& ed = edges[eo.edge];
    Rat width = eo.b - eo.a;
    for (size_t i = 0; i < ed.cuts.size(); ++i)
      if (ed.cuts[i] > eo.a && ed.cuts[i] < eo.b)
        ed.point_values[i] =
            data.eval(Point::on_edge(D.sub, (int)s, (ed.cuts[i] - eo.a) / width));
    Rat prev(0);
    for (size_t i = 0; i <= ed.cuts.size(); ++i) {
      Rat next = i < ed.cuts.size() ? ed.cuts[i] : Rat(1);
      if (prev >= eo.a && next <= eo.b && prev < next)
        ed.interval_values[i] =
            data.eval(Point::on_edge(D.sub, (int)s, ((prev + next) / Rat(2) - eo.a) / width));
      prev = next;
    }
  }
  return StepFunction(f.space(), K, std::move(verts), std::move(edges));
}

// -- PullbackSemigroup ---------------------------------------------------------

PullbackSemigroup::PullbackSemigroup(SemigroupPtr left, SemigroupPtr right, SemigroupPtr base,
                                     CuMorphism phi, CuMorphism pi, bool pi_surjective)
    : left_(std::move(left)),
      right_(std::move(right)),
      base_(std::move(base)),
      phi_(std::move(phi)),
      pi_(std::move(pi)),
      pi_surjective_(pi_surjective) {
  if (!left_ || !right_ || !base_) fail(Err::InvalidSpec, "pullback needs three semigroups");
}

Element PullbackSemigroup::phi_of(const Element& b) const { return phi_.apply(*left_, *base_, b); }
Element PullbackSemigroup::pi_of(const Element& a) const { return pi_.apply(*right_, *base_, a); }

Element PullbackSemigroup::make_pair(const Element& b, const Element& a) const {
  left_->require_element(b);
  right_->require_element(a);
  Element vb = phi_of(b);
  Element va = pi_of(a);
  if (!base_->equal(vb, va).is_true())
    fail(Err::ConstraintViolated, "phi(left) = " + base_->format(vb) +
                                      " differs from pi(right) = " + base_->format(va));
  return Element::of_pair(b, a);
}

std::string PullbackSemigroup::name() const {
  return left_->name() + " (+)_{" + base_->name() + "} " + right_->name();
}

Element PullbackSemigroup::zero() const { return Element::of_pair(left_->zero(), right_->zero()); }

bool PullbackSemigroup::contains(const Element& x) const {
  if (x.is_sup()) {
    const FormalSup& s = x.sup();
    return s.verified_depth >= 1 && contains(s.generator(1));
  }
  if (!x.is_pair()) return false;
  if (!left_->contains(x.left()) || !right_->contains(x.right())) return false;
  return base_->equal(phi_of(x.left()), pi_of(x.right())).is_true();
}

Ternary PullbackSemigroup::leq(const Element& x, const Element& y, int depth) const {
  require_element(x);
  require_element(y);
  if (x.is_sup() || y.is_sup()) return sup_aware_leq(*this, x, y, depth);
  return left_->leq(x.left(), y.left(), depth) && right_->leq(x.right(), y.right(), depth);
}

Ternary PullbackSemigroup::way_below(const Element& x, const Element& y, int depth) const {
  require_element(x);
  require_element(y);
  if (x.is_sup() || y.is_sup()) return sup_aware_way_below(*this, x, y, depth);
  // Componentwise compact containment is exact: suprema in the pullback are
  // componentwise, so componentwise << is sufficient, and the canonical
  // presentations make it necessary.
  return left_->way_below(x.left(), y.left(), depth) &&
         right_->way_below(x.right(), y.right(), depth);
}

Element PullbackSemigroup::add(const Element& x, const Element& y) const {
  require_element(x);
  require_element(y);
  if (x.is_sup() || y.is_sup()) return sup_aware_add(*this, x, y);
  Element sum = Element::of_pair(left_->add(x.left(), y.left()),
                                 right_->add(x.right(), y.right()));
  if (!contains(sum)) fail(Err::Internal, "addition broke the base constraint");
  return sum;
}

// Geometry of the constrained set: the subcomplex of the right space on which
// pi reads values off.
struct PullbackSemigroup::ConstraintGeometry {
  SubComplex Y;
  SubSpace derived;
  // for evaluation morphisms: the evaluation point of each derived vertex
  std::vector<int> eval_point_of_vertex;
  bool from_evaluation = false;
};

PullbackSemigroup::ConstraintGeometry PullbackSemigroup::constrained_set() const {
  const auto* rl = dynamic_cast<const LscSemigroup*>(right_.get());
  if (!rl)
    fail(Err::CannotMatchBase, "canonical presentations need an Lsc right semigroup");
  const Space& X = rl->space();
  if (pi_.kind() == CuMorphism::Kind::Evaluation) {
    std::vector<bool> vs(X.num_vertices, false);
    std::vector<std::vector<std::pair<Rat, Rat>>> ivs(X.edges.size());
    for (auto& p : pi_.points()) {
      if (p.at_vertex)
        vs[p.vertex] = true;
      else
        ivs[p.edge].push_back({p.t, p.t});
    }
    ConstraintGeometry geo{SubComplex(X, std::move(vs), std::move(ivs)), {}, {}, true};
    geo.derived = derived_space(geo.Y);
    for (auto& origin : geo.derived.vertex_origin) {
      int found = -1;
      for (size_t i = 0; i < pi_.points().size(); ++i)
        if (pi_.points()[i] == origin) found = (int)i;
      if (found < 0) fail(Err::Internal, "derived vertex without an evaluation point");
      geo.eval_point_of_vertex.push_back(found);
    }
    return geo;
  }
  if (pi_.kind() == CuMorphism::Kind::Restriction) {
    ConstraintGeometry geo{pi_.subcomplex(), {}, {}, false};
    geo.derived = derived_space(geo.Y);
    return geo;
  }
  fail(Err::CannotMatchBase,
       "canonical presentations need an evaluation or restriction constraint");
}

StepFunction PullbackSemigroup::base_as_glue_data(const ConstraintGeometry& geo,
                                                  const Element& base_value) const {
  const auto* rl = dynamic_cast<const LscSemigroup*>(right_.get());
  if (!geo.from_evaluation) return base_value.step();
  // slice the flat base tuple back into one scalar value per evaluation point
  const auto* bk = dynamic_cast<const ScalarSemigroup*>(base_.get());
  if (!bk) fail(Err::Internal, "evaluation base must be scalar");
  auto atoms = flatten_value(bk->kind(), base_value.scalar());
  size_t per_point = flatten_kind(rl->scalar()).size();
  std::vector<ScalarValue> verts;
  for (size_t sv = 0; sv < geo.derived.vertex_origin.size(); ++sv) {
    size_t at = geo.eval_point_of_vertex[sv] * per_point;
    std::vector<ScalarValue> slice(atoms.begin() + at, atoms.begin() + at + per_point);
    size_t cursor = 0;
    verts.push_back(unflatten_value(rl->scalar(), slice, cursor));
  }
  return StepFunction(geo.derived.sub, rl->scalar(), std::move(verts), {});
}

std::vector<Element> PullbackSemigroup::approximant_chain(const Element& x, int count) const {
  require_element(x);
  if (x.is_sup()) {
    std::vector<Element> out;
    for (int k = 1; k <= count; ++k) out.push_back(x.sup().generator(k));
    return out;
  }
  if (!pi_surjective_)
    fail(Err::CannotMatchBase, "canonical presentations require a surjective pi");
  auto geo = constrained_set();
  const StepFunction& f = x.right().step();

  // collar radius scale: a quarter of the smallest feature near the boundary
  // (distances between boundary points, to f's breakpoints, and to the edge
  // ends, all per edge)
  Rat w(1, 4);
  std::vector<std::vector<Rat>> marks(f.space().edges.size());
  for (auto& origin : geo.derived.vertex_origin)
    if (!origin.at_vertex) marks[origin.edge].push_back(origin.t);
  for (size_t e = 0; e < geo.Y.edge_intervals().size(); ++e)
    for (auto& [a, b] : geo.Y.edge_intervals()[e]) {
      if (a > Rat(0)) marks[e].push_back(a);
      if (b < Rat(1)) marks[e].push_back(b);
      if (a < b) w = min(w, (b - a) / Rat(2));
    }
  for (size_t e = 0; e < marks.size(); ++e) {
    for (auto& t : marks[e]) {
      w = min(w, t / Rat(2));
      w = min(w, (Rat(1) - t) / Rat(2));
      for (auto& c : f.edges()[e].cuts)
        if (!(c == t)) w = min(w, (c < t ? t - c : c - t) / Rat(2));
      for (auto& s : marks[e])
        if (!(s == t)) w = min(w, (s < t ? t - s : s - t) / Rat(4));
    }
    for (auto& c : f.edges()[e].cuts) {
      w = min(w, c / Rat(2));
      w = min(w, (Rat(1) - c) / Rat(2));
    }
  }

  auto left_chain = left_->approximant_chain(x.left(), count);
  LscApproxChain right_chain(f);

  std::vector<Element> out;
  StepFunction prev_z = StepFunction::zero(f.space(), f.kind());
  int m = 0;
  Rat rho = w;
  for (int n = 1; n <= count; ++n) {
    rho = rho / Rat(2);
    Element vb = phi_of(left_chain[n - 1]);
    StepFunction g = base_as_glue_data(geo, vb);
    int tries = 0;
    StepFunction z = prev_z;
    for (m = std::max(m + 1, n);; ++m) {
      if (++tries > 64)
        fail(Err::CannotMatchBase,
             "no right-side approximant matches the base values at depth " + std::to_string(n) +
                 " (left stage " + left_->format(left_chain[n - 1]) + ")");
      z = patch_step(right_chain.at(m), geo.Y, g, rho);
      if (!way_below_step(z, f)) continue;
      if (n > 1 && !way_below_step(prev_z, z)) continue;
      break;
    }
    prev_z = z;
    out.push_back(Element::of_pair(left_chain[n - 1], Element::of_step(z)));
    if (!contains(out.back()))
      fail(Err::Internal, "canonical approximant broke the base constraint");
  }
  return out;
}

Element PullbackSemigroup::sample(Rng& rng, const SampleParams& p) const {
  auto geo = constrained_set();
  Element b = left_->sample(rng, p);
  StepFunction g = base_as_glue_data(geo, phi_of(b));
  StepFunction f0 = right_->sample(rng, p).step();
  // keep collars off the sampling grid so cell structures stay in range
  Rat rho(1, 4 * p.grid_denominator);
  for (auto& origin : geo.derived.vertex_origin)
    if (!origin.at_vertex) {
      rho = min(rho, origin.t / Rat(4));
      rho = min(rho, (Rat(1) - origin.t) / Rat(4));
    }
  StepFunction a = patch_step(f0, geo.Y, g, rho);
  return make_pair(b, Element::of_step(a));
}

std::string PullbackSemigroup::format(const Element& x) const {
  return left_->format(x.left()) + " | " + right_->format(x.right());
}

Element PullbackSemigroup::parse(const std::string& text) const {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    fail(Err::ParseError, "pullback elements look like `<left> | <right>`");
  Element b = left_->parse(text.substr(0, bar));
  Element a = right_->parse(text.substr(bar + 1));
  return make_pair(b, a);
}

}  // namespace cusg
