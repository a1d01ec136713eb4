#include "cusg/space.hpp"

#include <algorithm>
#include <functional>

namespace cusg {

// -- Space --------------------------------------------------------------

Space Space::interval() {
  Space X;
  X.kind = SpaceKind::Interval;
  X.num_vertices = 2;
  X.edges = {{0, 1}};
  return X;
}

Space Space::discrete(int points) {
  if (points <= 0) fail(Err::InvalidSpec, "discrete space needs at least one point");
  Space X;
  X.kind = SpaceKind::Discrete;
  X.num_vertices = points;
  return X;
}

Space Space::graph(int vertices, std::vector<Edge> edges) {
  if (vertices <= 0) fail(Err::InvalidSpec, "graph needs at least one vertex");
  for (auto& e : edges)
    if (e.src < 0 || e.src >= vertices || e.dst < 0 || e.dst >= vertices)
      fail(Err::InvalidSpec, "edge endpoint out of range");
  Space X;
  X.kind = SpaceKind::Graph;
  X.num_vertices = vertices;
  X.edges = std::move(edges);
  return X;
}

Space Space::loop() { return graph(1, {{0, 0}}); }

Space Space::cycle(int n) {
  if (n < 1) fail(Err::InvalidSpec, "cycle needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return graph(n, std::move(edges));
}

Space Space::theta(int parallel) {
  std::vector<Edge> edges;
  for (int i = 0; i < parallel; ++i) edges.push_back({0, 1});
  return graph(2, std::move(edges));
}

bool Space::connected() const {
  if (num_vertices == 0) return false;
  std::vector<int> comp(num_vertices);
  for (int i = 0; i < num_vertices; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (comp[a] != a) a = comp[a] = comp[comp[a]];
    return a;
  };
  for (auto& e : edges) comp[find(e.src)] = find(e.dst);
  for (int i = 1; i < num_vertices; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

bool operator==(const Space& a, const Space& b) {
  if (a.num_vertices != b.num_vertices || a.edges.size() != b.edges.size()) return false;
  for (size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i].src != b.edges[i].src || a.edges[i].dst != b.edges[i].dst) return false;
  return true;
}

std::string Space::str() const {
  switch (kind) {
    case SpaceKind::Interval: return "[0,1]";
    case SpaceKind::Discrete: return "discrete(" + std::to_string(num_vertices) + ")";
    case SpaceKind::Graph:
      return "graph(v=" + std::to_string(num_vertices) +
             ",e=" + std::to_string(edges.size()) + ")";
  }
  return "?";
}

// -- Point --------------------------------------------------------------

Point Point::at(const Space& X, int vertex) {
  if (vertex < 0 || vertex >= X.num_vertices) fail(Err::PointNotInSpace, "vertex out of range");
  Point p;
  p.at_vertex = true;
  p.vertex = vertex;
  return p;
}

Point Point::on_edge(const Space& X, int edge, const Rat& t) {
  if (edge < 0 || edge >= (int)X.edges.size()) fail(Err::PointNotInSpace, "edge out of range");
  if (t < Rat(0) || t > Rat(1)) fail(Err::PointNotInSpace, "coordinate outside [0,1]");
  if (t == Rat(0)) return at(X, X.edges[edge].src);
  if (t == Rat(1)) return at(X, X.edges[edge].dst);
  Point p;
  p.at_vertex = false;
  p.edge = edge;
  p.t = t;
  return p;
}

bool operator==(const Point& a, const Point& b) {
  if (a.at_vertex != b.at_vertex) return false;
  if (a.at_vertex) return a.vertex == b.vertex;
  return a.edge == b.edge && a.t == b.t;
}

// -- SubComplex -----------------------------------------------------------

namespace {

// Sorts, validates and merges touching closed intervals.
std::vector<std::pair<Rat, Rat>> normalize_closed(std::vector<std::pair<Rat, Rat>> ivs) {
  for (auto& [a, b] : ivs) {
    if (a > b || a < Rat(0) || b > Rat(1))
      fail(Err::NotClosedSubcomplex, "bad closed interval [" + a.str() + "," + b.str() + "]");
  }
  std::sort(ivs.begin(), ivs.end(),
            [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<std::pair<Rat, Rat>> out;
  for (auto& iv : ivs) {
    if (!out.empty() && iv.first <= out.back().second) {
      out.back().second = max(out.back().second, iv.second);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

SubComplex::SubComplex(const Space& X, std::vector<bool> vertices,
                       std::vector<std::vector<std::pair<Rat, Rat>>> edge_intervals)
    : space_(X), verts_(std::move(vertices)), intervals_(std::move(edge_intervals)) {
  verts_.resize(X.num_vertices, false);
  intervals_.resize(X.edges.size());
  for (size_t e = 0; e < intervals_.size(); ++e) {
    intervals_[e] = normalize_closed(std::move(intervals_[e]));
    // Closedness at the glued endpoints: touching an endpoint pulls the vertex in.
    for (auto& [a, b] : intervals_[e]) {
      if (a == Rat(0)) verts_[space_.edges[e].src] = true;
      if (b == Rat(1)) verts_[space_.edges[e].dst] = true;
    }
  }
}

SubComplex SubComplex::whole(const Space& X) {
  std::vector<std::vector<std::pair<Rat, Rat>>> ivs(X.edges.size());
  for (auto& v : ivs) v.push_back({Rat(0), Rat(1)});
  return SubComplex(X, std::vector<bool>(X.num_vertices, true), std::move(ivs));
}

SubComplex SubComplex::vertex_set(const Space& X, const std::vector<int>& verts) {
  std::vector<bool> vs(X.num_vertices, false);
  for (int v : verts) {
    if (v < 0 || v >= X.num_vertices) fail(Err::NotClosedSubcomplex, "vertex out of range");
    vs[v] = true;
  }
  return SubComplex(X, std::move(vs), {});
}

SubComplex SubComplex::single_point(const Space& X, const Point& p) {
  if (p.at_vertex) return vertex_set(X, {p.vertex});
  std::vector<std::vector<std::pair<Rat, Rat>>> ivs(X.edges.size());
  ivs[p.edge].push_back({p.t, p.t});
  return SubComplex(X, std::vector<bool>(X.num_vertices, false), std::move(ivs));
}

SubComplex SubComplex::interval_part(const Space& X, int edge, const Rat& a, const Rat& b) {
  if (edge < 0 || edge >= (int)X.edges.size()) fail(Err::NotClosedSubcomplex, "edge out of range");
  std::vector<std::vector<std::pair<Rat, Rat>>> ivs(X.edges.size());
  ivs[edge].push_back({a, b});
  return SubComplex(X, std::vector<bool>(X.num_vertices, false), std::move(ivs));
}

bool SubComplex::contains(const Point& p) const {
  if (p.at_vertex) return verts_[p.vertex];
  for (auto& [a, b] : intervals_[p.edge])
    if (a <= p.t && p.t <= b) return true;
  return false;
}

bool SubComplex::is_whole() const {
  for (int v = 0; v < space_.num_vertices; ++v)
    if (!verts_[v]) return false;
  for (size_t e = 0; e < intervals_.size(); ++e) {
    if (intervals_[e].size() != 1) return false;
    if (!(intervals_[e][0].first == Rat(0)) || !(intervals_[e][0].second == Rat(1)))
      return false;
  }
  return true;
}

// -- OpenSet ---------------------------------------------------------------

OpenSet::OpenSet(const Space& X, std::vector<bool> vertices,
                 std::vector<std::vector<std::pair<Rat, Rat>>> edge_intervals)
    : space_(X), verts_(std::move(vertices)), intervals_(std::move(edge_intervals)) {
  verts_.resize(X.num_vertices, false);
  intervals_.resize(X.edges.size());
  for (auto& ivs : intervals_) {
    for (auto& [a, b] : ivs)
      if (a >= b || a < Rat(0) || b > Rat(1))
        fail(Err::NotOpen, "bad open interval (" + a.str() + "," + b.str() + ")");
    std::sort(ivs.begin(), ivs.end(), [](auto& x, auto& y) { return x.first < y.first; });
    for (size_t i = 1; i < ivs.size(); ++i)
      if (ivs[i].first < ivs[i - 1].second) fail(Err::NotOpen, "overlapping open intervals");
  }
  // A vertex in an open set needs a sliver of every incident edge end.
  for (int v = 0; v < space_.num_vertices; ++v) {
    if (!verts_[v]) continue;
    for (size_t e = 0; e < space_.edges.size(); ++e) {
      if (space_.edges[e].src == v) {
        bool covered = false;
        for (auto& [a, b] : intervals_[e]) covered |= a == Rat(0);
        if (!covered) fail(Err::NotOpen, "vertex lacks a sliver at an outgoing edge end");
      }
      if (space_.edges[e].dst == v) {
        bool covered = false;
        for (auto& [a, b] : intervals_[e]) covered |= b == Rat(1);
        if (!covered) fail(Err::NotOpen, "vertex lacks a sliver at an incoming edge end");
      }
    }
  }
}

OpenSet OpenSet::whole(const Space& X) {
  std::vector<std::vector<std::pair<Rat, Rat>>> ivs(X.edges.size());
  for (auto& v : ivs) v.push_back({Rat(0), Rat(1)});
  return OpenSet(X, std::vector<bool>(X.num_vertices, true), std::move(ivs));
}

OpenSet OpenSet::empty(const Space& X) {
  return OpenSet(X, std::vector<bool>(X.num_vertices, false),
                 std::vector<std::vector<std::pair<Rat, Rat>>>(X.edges.size()));
}

OpenSet OpenSet::edge_interval(const Space& X, int edge, const Rat& a, const Rat& b) {
  if (edge < 0 || edge >= (int)X.edges.size()) fail(Err::NotOpen, "edge out of range");
  std::vector<std::vector<std::pair<Rat, Rat>>> ivs(X.edges.size());
  ivs[edge].push_back({a, b});
  return OpenSet(X, std::vector<bool>(X.num_vertices, false), std::move(ivs));
}

bool OpenSet::contains(const Point& p) const {
  if (p.at_vertex) return verts_[p.vertex];
  for (auto& [a, b] : intervals_[p.edge])
    if (a < p.t && p.t < b) return true;
  return false;
}

bool OpenSet::closure_contains(const Point& p) const {
  if (p.at_vertex) {
    if (verts_[p.vertex]) return true;
    for (size_t e = 0; e < space_.edges.size(); ++e) {
      if (space_.edges[e].src == p.vertex)
        for (auto& [a, b] : intervals_[e])
          if (a == Rat(0)) return true;
      if (space_.edges[e].dst == p.vertex)
        for (auto& [a, b] : intervals_[e])
          if (b == Rat(1)) return true;
    }
    return false;
  }
  for (auto& [a, b] : intervals_[p.edge])
    if (a <= p.t && p.t <= b) return true;
  return false;
}

// -- derived space ----------------------------------------------------------

SubSpace derived_space(const SubComplex& Y) {
  const Space& X = Y.space();
  SubSpace out;
  std::vector<int> vertex_index(X.num_vertices, -1);
  for (int v = 0; v < X.num_vertices; ++v) {
    if (Y.vertices()[v]) {
      vertex_index[v] = (int)out.vertex_origin.size();
      out.vertex_origin.push_back(Point::at(X, v));
    }
  }
  // Interior interval endpoints and isolated interior points become vertices.
  struct PendingEdge {
    int x_edge;
    Rat a, b;
    int va, vb;
  };
  std::vector<PendingEdge> pend;
  auto interior_vertex = [&](int e, const Rat& t) {
    Point p = Point::on_edge(X, e, t);
    if (p.at_vertex) return vertex_index[p.vertex];
    for (size_t i = 0; i < out.vertex_origin.size(); ++i)
      if (out.vertex_origin[i] == p) return (int)i;
    out.vertex_origin.push_back(p);
    return (int)out.vertex_origin.size() - 1;
  };
  for (size_t e = 0; e < X.edges.size(); ++e) {
    for (auto& [a, b] : Y.edge_intervals()[e]) {
      if (a == b) {
        interior_vertex((int)e, a);
        continue;
      }
      PendingEdge pe;
      pe.x_edge = (int)e;
      pe.a = a;
      pe.b = b;
      pe.va = interior_vertex((int)e, a);
      pe.vb = interior_vertex((int)e, b);
      pend.push_back(pe);
    }
  }
  std::vector<Space::Edge> edges;
  for (auto& pe : pend) {
    edges.push_back({pe.va, pe.vb});
    out.edge_origin.push_back({pe.x_edge, pe.a, pe.b});
  }
  if (out.vertex_origin.empty()) fail(Err::NotClosedSubcomplex, "empty subcomplex");
  out.sub = Space::graph((int)out.vertex_origin.size(), std::move(edges));
  if (out.sub.edges.empty()) out.sub.kind = SpaceKind::Discrete;
  return out;
}

// -- CellMap ------------------------------------------------------------------

CellMap::CellMap(Space domain, Space codomain, std::vector<Point> vertex_images,
                 std::vector<std::vector<Segment>> edge_segments)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      vertex_images_(std::move(vertex_images)),
      segments_(std::move(edge_segments)) {
  if ((int)vertex_images_.size() != domain_.num_vertices)
    fail(Err::MapNotCellwiseAffine, "one image per domain vertex required");
  segments_.resize(domain_.edges.size());
  for (size_t e = 0; e < segments_.size(); ++e) {
    auto& segs = segments_[e];
    if (segs.empty()) fail(Err::MapNotCellwiseAffine, "edge without segments");
    if (!(segs.front().from == Rat(0)) || !(segs.back().to == Rat(1)))
      fail(Err::MapNotCellwiseAffine, "subdivision must span [0,1]");
    for (size_t i = 0; i < segs.size(); ++i) {
      auto& s = segs[i];
      if (!(s.from < s.to)) fail(Err::MapNotCellwiseAffine, "degenerate subdivision piece");
      if (i && !(segs[i - 1].to == s.from))
        fail(Err::MapNotCellwiseAffine, "subdivision pieces must be contiguous");
      if (!s.collapses) {
        if (s.edge < 0 || s.edge >= (int)codomain_.edges.size())
          fail(Err::MapNotCellwiseAffine, "segment targets a missing edge");
        if (s.a == s.b) fail(Err::MapNotCellwiseAffine, "affine segment with empty image");
        if (s.a < Rat(0) || s.a > Rat(1) || s.b < Rat(0) || s.b > Rat(1))
          fail(Err::MapNotCellwiseAffine, "image outside the target edge");
      }
    }
    // Continuity: consecutive pieces agree, endpoints match vertex images.
    for (size_t i = 0; i + 1 < segs.size(); ++i)
      if (!(segment_image(segs[i], segs[i].to) == segment_image(segs[i + 1], segs[i + 1].from)))
        fail(Err::MapNotCellwiseAffine, "discontinuity inside an edge");
    if (!(segment_image(segs.front(), Rat(0)) == vertex_images_[domain_.edges[e].src]))
      fail(Err::MapNotCellwiseAffine, "edge start disagrees with vertex image");
    if (!(segment_image(segs.back(), Rat(1)) == vertex_images_[domain_.edges[e].dst]))
      fail(Err::MapNotCellwiseAffine, "edge end disagrees with vertex image");
  }
}

Point CellMap::segment_image(const Segment& seg, const Rat& s) const {
  if (seg.collapses) return seg.point;
  const Rat u = seg.a + (s - seg.from) / (seg.to - seg.from) * (seg.b - seg.a);
  return Point::on_edge(codomain_, seg.edge, u);
}

CellMap CellMap::identity(const Space& X) {
  std::vector<Point> vi;
  for (int v = 0; v < X.num_vertices; ++v) vi.push_back(Point::at(X, v));
  std::vector<std::vector<Segment>> segs(X.edges.size());
  for (size_t e = 0; e < X.edges.size(); ++e) {
    Segment s;
    s.from = Rat(0);
    s.to = Rat(1);
    s.edge = (int)e;
    s.a = Rat(0);
    s.b = Rat(1);
    segs[e] = {s};
  }
  return CellMap(X, X, std::move(vi), std::move(segs));
}

CellMap CellMap::mirror_interval() {
  Space X = Space::interval();
  std::vector<Point> vi = {Point::at(X, 1), Point::at(X, 0)};
  Segment s;
  s.from = Rat(0);
  s.to = Rat(1);
  s.edge = 0;
  s.a = Rat(1);
  s.b = Rat(0);
  return CellMap(X, X, std::move(vi), {{s}});
}

Point CellMap::apply(const Point& p) const {
  if (p.at_vertex) return vertex_images_[p.vertex];
  for (auto& s : segments_[p.edge])
    if (s.from <= p.t && p.t <= s.to) return segment_image(s, p.t);
  fail(Err::Internal, "point outside subdivision");
}

}  // namespace cusg
