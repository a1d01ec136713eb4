#include "cusg/step_function.hpp"

#include <algorithm>
#include <sstream>

namespace cusg {

StepFunction::StepFunction(Space space, ScalarKind kind, std::vector<ScalarValue> vertex_values,
                           std::vector<EdgeData> edges)
    : space_(std::move(space)),
      kind_(std::move(kind)),
      vertex_values_(std::move(vertex_values)),
      edges_(std::move(edges)) {
  validate_and_canonicalize();
}

void StepFunction::validate_and_canonicalize() {
  if ((int)vertex_values_.size() != space_.num_vertices)
    fail(Err::ElementNotInSemigroup, "one value per vertex required");
  edges_.resize(space_.edges.size());
  for (auto& v : vertex_values_) scalar_require_valid(kind_, v);
  for (size_t e = 0; e < edges_.size(); ++e) {
    auto& ed = edges_[e];
    if (ed.interval_values.empty() && ed.cuts.empty()) {
      // allow default-constructed edges only when a value can't be inferred
      fail(Err::ElementNotInSemigroup, "edge without cell data");
    }
    if (ed.point_values.size() != ed.cuts.size() ||
        ed.interval_values.size() != ed.cuts.size() + 1)
      fail(Err::BadBreakpoints, "cell counts do not match breakpoints");
    for (size_t i = 0; i < ed.cuts.size(); ++i) {
      if (!(ed.cuts[i] > Rat(0)) || !(ed.cuts[i] < Rat(1)))
        fail(Err::BadBreakpoints, "breakpoint outside (0,1): " + ed.cuts[i].str());
      if (i && !(ed.cuts[i - 1] < ed.cuts[i]))
        fail(Err::BadBreakpoints, "breakpoints not strictly increasing");
    }
    for (auto& v : ed.point_values) scalar_require_valid(kind_, v);
    for (auto& v : ed.interval_values) scalar_require_valid(kind_, v);
    // lower semicontinuity at interior point cells
    for (size_t i = 0; i < ed.cuts.size(); ++i) {
      if (!scalar_leq(kind_, ed.point_values[i], ed.interval_values[i]) ||
          !scalar_leq(kind_, ed.point_values[i], ed.interval_values[i + 1]))
        fail(Err::NotLowerSemicontinuous,
             "point cell at " + ed.cuts[i].str() + " on edge " + std::to_string(e) +
                 " exceeds an adjacent open cell");
    }
  }
  // lower semicontinuity at vertices (all incident edge ends)
  for (size_t e = 0; e < edges_.size(); ++e) {
    auto& ed = edges_[e];
    const ScalarValue& src_val = vertex_values_[space_.edges[e].src];
    const ScalarValue& dst_val = vertex_values_[space_.edges[e].dst];
    if (!scalar_leq(kind_, src_val, ed.interval_values.front()))
      fail(Err::NotLowerSemicontinuous,
           "vertex " + std::to_string(space_.edges[e].src) + " exceeds edge " +
               std::to_string(e) + " start cell");
    if (!scalar_leq(kind_, dst_val, ed.interval_values.back()))
      fail(Err::NotLowerSemicontinuous,
           "vertex " + std::to_string(space_.edges[e].dst) + " exceeds edge " +
               std::to_string(e) + " end cell");
  }
  // canonical form: merge point cells indistinguishable from their neighbours
  for (auto& ed : edges_) {
    bool any = false;
    for (size_t i = 0; i < ed.cuts.size() && !any; ++i)
      any = ed.point_values[i] == ed.interval_values[i] &&
            ed.interval_values[i] == ed.interval_values[i + 1];
    if (!any) continue;
    EdgeData out;
    out.interval_values.push_back(ed.interval_values[0]);
    for (size_t i = 0; i < ed.cuts.size(); ++i) {
      const ScalarValue& left = out.interval_values.back();
      const ScalarValue& right = ed.interval_values[i + 1];
      if (ed.point_values[i] == left && left == right) continue;  // merged
      out.cuts.push_back(ed.cuts[i]);
      out.point_values.push_back(ed.point_values[i]);
      out.interval_values.push_back(right);
    }
    ed = std::move(out);
  }
}

StepFunction StepFunction::constant(const Space& X, const ScalarKind& k, const ScalarValue& v) {
  std::vector<EdgeData> edges(X.edges.size());
  for (auto& ed : edges) ed.interval_values = {v};
  return StepFunction(X, k, std::vector<ScalarValue>(X.num_vertices, v), std::move(edges));
}

StepFunction StepFunction::zero(const Space& X, const ScalarKind& k) {
  return constant(X, k, scalar_zero(k));
}

ScalarValue StepFunction::eval(const Point& p) const {
  if (p.at_vertex) {
    if (p.vertex < 0 || p.vertex >= space_.num_vertices)
      fail(Err::PointNotInSpace, "vertex out of range");
    return vertex_values_[p.vertex];
  }
  if (p.edge < 0 || p.edge >= (int)edges_.size()) fail(Err::PointNotInSpace, "edge out of range");
  const EdgeData& ed = edges_[p.edge];
  size_t pos = std::lower_bound(ed.cuts.begin(), ed.cuts.end(), p.t,
                                [](const Rat& a, const Rat& b) { return a < b; }) -
               ed.cuts.begin();
  if (pos < ed.cuts.size() && ed.cuts[pos] == p.t) return ed.point_values[pos];
  return ed.interval_values[pos];
}

bool StepFunction::is_constant() const {
  const ScalarValue* ref = nullptr;
  for (auto& v : vertex_values_) {
    if (!ref) ref = &v;
    if (!(v == *ref)) return false;
  }
  for (auto& ed : edges_) {
    for (auto& v : ed.point_values)
      if (!ref || !(v == *ref)) return false;
    for (auto& v : ed.interval_values) {
      if (!ref) ref = &v;
      if (!(v == *ref)) return false;
    }
  }
  return ref != nullptr;
}

bool operator==(const StepFunction& f, const StepFunction& g) {
  if (f.space_ != g.space_ || !(f.kind_ == g.kind_)) return false;
  if (!(f.vertex_values_ == g.vertex_values_)) return false;
  for (size_t e = 0; e < f.edges_.size(); ++e) {
    if (!(f.edges_[e].cuts == g.edges_[e].cuts)) return false;
    if (!(f.edges_[e].point_values == g.edges_[e].point_values)) return false;
    if (!(f.edges_[e].interval_values == g.edges_[e].interval_values)) return false;
  }
  return true;
}

std::string StepFunction::str() const {
  if (is_constant())
    return "const " + scalar_str(kind_, vertex_values_.empty()
                                             ? edges_[0].interval_values[0]
                                             : vertex_values_[0]);
  std::ostringstream os;
  for (int v = 0; v < space_.num_vertices; ++v) {
    if (v) os << "; ";
    os << "v" << v << ": " << scalar_str(kind_, vertex_values_[v]);
  }
  for (size_t e = 0; e < edges_.size(); ++e) {
    os << "; edge e" << (e + 1) << ": ";
    const EdgeData& ed = edges_[e];
    Rat prev(0);
    for (size_t i = 0; i <= ed.cuts.size(); ++i) {
      Rat next = i < ed.cuts.size() ? ed.cuts[i] : Rat(1);
      if (i) os << ", ";
      os << "(" << prev.str() << "," << next.str()
         << ")=" << scalar_str(kind_, ed.interval_values[i]);
      if (i < ed.cuts.size())
        os << ", {" << next.str() << "}=" << scalar_str(kind_, ed.point_values[i]);
      prev = next;
    }
  }
  return os.str();
}

StepFunction StepFunction::refined(const std::vector<std::vector<Rat>>& extra) const {
  StepFunction out = *this;
  for (size_t e = 0; e < edges_.size() && e < extra.size(); ++e) {
    for (const Rat& t : extra[e]) {
      if (!(t > Rat(0)) || !(t < Rat(1))) continue;
      auto& ed = out.edges_[e];
      size_t pos = std::lower_bound(ed.cuts.begin(), ed.cuts.end(), t,
                                    [](const Rat& a, const Rat& b) { return a < b; }) -
                   ed.cuts.begin();
      if (pos < ed.cuts.size() && ed.cuts[pos] == t) continue;
      ScalarValue inside = ed.interval_values[pos];
      ed.cuts.insert(ed.cuts.begin() + pos, t);
      ed.point_values.insert(ed.point_values.begin() + pos, inside);
      ed.interval_values.insert(ed.interval_values.begin() + pos, inside);
    }
  }
  return out;
}

void check_same_shape(const StepFunction& f, const StepFunction& g) {
  if (f.space_ != g.space_) fail(Err::SpaceMismatch, "step functions on different spaces");
  if (!(f.kind_ == g.kind_)) fail(Err::KindMismatch, "step functions of different scalar kinds");
}

std::pair<StepFunction, StepFunction> common_refinement(const StepFunction& f,
                                                        const StepFunction& g) {
  check_same_shape(f, g);
  std::vector<std::vector<Rat>> fc, gc;
  for (auto& ed : g.edges()) fc.push_back(ed.cuts);
  for (auto& ed : f.edges()) gc.push_back(ed.cuts);
  return {f.refined(fc), g.refined(gc)};
}

namespace {

template <typename Op>
StepFunction cellwise(const StepFunction& f, const StepFunction& g, Op op) {
  auto [rf, rg] = common_refinement(f, g);
  const ScalarKind& k = rf.kind();
  std::vector<ScalarValue> verts;
  for (int v = 0; v < rf.space().num_vertices; ++v)
    verts.push_back(op(k, rf.vertex_values()[v], rg.vertex_values()[v]));
  std::vector<StepFunction::EdgeData> edges;
  for (size_t e = 0; e < rf.edges().size(); ++e) {
    StepFunction::EdgeData ed;
    ed.cuts = rf.edges()[e].cuts;
    for (size_t i = 0; i < ed.cuts.size(); ++i)
      ed.point_values.push_back(
          op(k, rf.edges()[e].point_values[i], rg.edges()[e].point_values[i]));
    for (size_t i = 0; i <= ed.cuts.size(); ++i)
      ed.interval_values.push_back(
          op(k, rf.edges()[e].interval_values[i], rg.edges()[e].interval_values[i]));
    edges.push_back(std::move(ed));
  }
  return StepFunction(rf.space(), k, std::move(verts), std::move(edges));
}

}  // namespace

namespace {

bool leq_aligned(const StepFunction& f, const StepFunction& g) {
  const ScalarKind& k = f.kind();
  for (int v = 0; v < f.space().num_vertices; ++v)
    if (!scalar_leq(k, f.vertex_values()[v], g.vertex_values()[v])) return false;
  for (size_t e = 0; e < f.edges().size(); ++e) {
    for (size_t i = 0; i < f.edges()[e].cuts.size(); ++i)
      if (!scalar_leq(k, f.edges()[e].point_values[i], g.edges()[e].point_values[i]))
        return false;
    for (size_t i = 0; i <= f.edges()[e].cuts.size(); ++i)
      if (!scalar_leq(k, f.edges()[e].interval_values[i], g.edges()[e].interval_values[i]))
        return false;
  }
  return true;
}

}  // namespace

bool leq_step(const StepFunction& f, const StepFunction& g) {
  check_same_shape(f, g);
  bool aligned = true;
  for (size_t e = 0; e < f.edges().size() && aligned; ++e)
    aligned = f.edges()[e].cuts == g.edges()[e].cuts;
  if (aligned) return leq_aligned(f, g);
  auto [rf, rg] = common_refinement(f, g);
  return leq_aligned(rf, rg);
}

StepFunction add_step(const StepFunction& f, const StepFunction& g) {
  return cellwise(f, g, [](const ScalarKind& k, const ScalarValue& a, const ScalarValue& b) {
    return scalar_add(k, a, b);
  });
}

StepFunction join_step(const StepFunction& f, const StepFunction& g) {
  return cellwise(f, g, [](const ScalarKind& k, const ScalarValue& a, const ScalarValue& b) {
    return scalar_join(k, a, b);
  });
}

StepFunction restrict_step(const StepFunction& f, const SubComplex& Y) {
  if (f.space() != Y.space()) fail(Err::SpaceMismatch, "subcomplex of a different space");
  SubSpace D = derived_space(Y);
  std::vector<ScalarValue> verts;
  for (auto& origin : D.vertex_origin) verts.push_back(f.eval(origin));
  std::vector<StepFunction::EdgeData> edges;
  for (auto& eo : D.edge_origin) {
    StepFunction::EdgeData ed;
    const auto& src = f.edges()[eo.edge];
    Rat width = eo.b - eo.a;
    for (size_t i = 0; i < src.cuts.size(); ++i) {
      if (src.cuts[i] > eo.a && src.cuts[i] < eo.b) {
        ed.cuts.push_back((src.cuts[i] - eo.a) / width);
        ed.point_values.push_back(src.point_values[i]);
      }
    }
    // interval values: sample each resulting open cell at its midpoint
    Rat prev = eo.a;
    for (size_t i = 0; i <= ed.cuts.size(); ++i) {
      Rat next = i < ed.cuts.size() ? eo.a + ed.cuts[i] * width : eo.b;
      Rat mid = (prev + next) / Rat(2);
      ed.interval_values.push_back(f.eval(Point::on_edge(f.space(), eo.edge, mid)));
      prev = next;
    }
    edges.push_back(std::move(ed));
  }
  return StepFunction(D.sub, f.kind(), std::move(verts), std::move(edges));
}

StepFunction glue_step(const StepFunction& f, const SubComplex& Y, const StepFunction& g) {
  if (f.space() != Y.space()) fail(Err::SpaceMismatch, "subcomplex of a different space");
  SubSpace D = derived_space(Y);
  if (g.space() != D.sub) fail(Err::SpaceMismatch, "glue data does not live on the subcomplex");
  if (!(g.kind() == f.kind())) fail(Err::KindMismatch, "glue data of a different scalar kind");
  if (!leq_step(g, restrict_step(f, Y)))
    fail(Err::GlueOrderViolation, "glued function must sit below the restriction");

  // Refine f at Y's interval endpoints and at the images of g's cuts.
  std::vector<std::vector<Rat>> extra(f.space().edges.size());
  for (size_t s = 0; s < D.edge_origin.size(); ++s) {
    auto& eo = D.edge_origin[s];
    extra[eo.edge].push_back(eo.a);
    extra[eo.edge].push_back(eo.b);
    for (auto& u : g.edges()[s].cuts) extra[eo.edge].push_back(eo.a + u * (eo.b - eo.a));
  }
  for (auto& origin : D.vertex_origin)
    if (!origin.at_vertex) extra[origin.edge].push_back(origin.t);
  StepFunction out = f.refined(extra);

  std::vector<ScalarValue> verts = out.vertex_values();
  std::vector<StepFunction::EdgeData> edges = out.edges();
  // vertex positions of the subcomplex
  for (size_t sv = 0; sv < D.vertex_origin.size(); ++sv) {
    const Point& origin = D.vertex_origin[sv];
    ScalarValue val = g.vertex_values()[sv];
    if (origin.at_vertex) {
      verts[origin.vertex] = val;
    } else {
      auto& ed = edges[origin.edge];
      for (size_t i = 0; i < ed.cuts.size(); ++i)
        if (ed.cuts[i] == origin.t) ed.point_values[i] = val;
    }
  }
  // interior cells of nondegenerate pieces
  for (size_t s = 0; s < D.edge_origin.size(); ++s) {
    auto& eo = D.edge_origin[s];
    auto& ed = edges[eo.edge];
    Rat width = eo.b - eo.a;
    for (size_t i = 0; i < ed.cuts.size(); ++i) {
      if (ed.cuts[i] > eo.a && ed.cuts[i] < eo.b)
        ed.point_values[i] = g.eval(Point::on_edge(D.sub, (int)s, (ed.cuts[i] - eo.a) / width));
    }
    Rat prev(0);
    for (size_t i = 0; i <= ed.cuts.size(); ++i) {
      Rat next = i < ed.cuts.size() ? ed.cuts[i] : Rat(1);
      if (prev >= eo.a && next <= eo.b && prev < next) {
        Rat mid = ((prev + next) / Rat(2) - eo.a) / width;
        ed.interval_values[i] = g.eval(Point::on_edge(D.sub, (int)s, mid));
      }
      prev = next;
    }
  }
  return StepFunction(f.space(), f.kind(), std::move(verts), std::move(edges));
}

StepFunction char_action(const StepFunction& f, const OpenSet& U) {
  if (f.space() != U.space()) fail(Err::SpaceMismatch, "open set of a different space");
  std::vector<std::vector<Rat>> extra(f.space().edges.size());
  for (size_t e = 0; e < U.edge_intervals().size(); ++e)
    for (auto& [a, b] : U.edge_intervals()[e]) {
      extra[e].push_back(a);
      extra[e].push_back(b);
    }
  StepFunction out = f.refined(extra);
  const ScalarValue zero = scalar_zero(f.kind());
  std::vector<ScalarValue> verts;
  for (int v = 0; v < f.space().num_vertices; ++v)
    verts.push_back(U.vertices()[v] ? out.vertex_values()[v] : zero);
  std::vector<StepFunction::EdgeData> edges = out.edges();
  for (size_t e = 0; e < edges.size(); ++e) {
    auto& ed = edges[e];
    for (size_t i = 0; i < ed.cuts.size(); ++i)
      if (!U.contains(Point::on_edge(f.space(), (int)e, ed.cuts[i])))
        ed.point_values[i] = zero;
    Rat prev(0);
    for (size_t i = 0; i <= ed.cuts.size(); ++i) {
      Rat next = i < ed.cuts.size() ? ed.cuts[i] : Rat(1);
      Rat mid = (prev + next) / Rat(2);
      if (!U.contains(Point::on_edge(f.space(), (int)e, mid))) ed.interval_values[i] = zero;
      prev = next;
    }
  }
  return StepFunction(f.space(), f.kind(), std::move(verts), std::move(edges));
}

}  // namespace cusg
