#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusg/rational.hpp"

namespace cusg {

enum class SpaceKind { Discrete, Interval, Graph };

/// A space of dimension <= 1 realized as a 1-complex: a finite set of
/// vertices and a finite set of directed edges, each edge a copy of [0,1]
/// glued at its endpoints (loops and parallel edges allowed). The interval
/// [0,1] is the complex with two vertices and one edge; a discrete space has
/// no edges.
struct Space {
  SpaceKind kind = SpaceKind::Graph;
  int num_vertices = 0;
  struct Edge {
    int src = 0;
    int dst = 0;
  };
  std::vector<Edge> edges;

  static Space interval();
  static Space discrete(int points);
  static Space graph(int vertices, std::vector<Edge> edges);
  static Space loop();                 // one vertex, one edge
  static Space cycle(int n);           // n >= 1 vertices in a cycle
  static Space theta(int parallel);    // two vertices, `parallel` edges

  bool connected() const;
  int dimension() const { return edges.empty() ? 0 : 1; }

  friend bool operator==(const Space& a, const Space& b);
  friend bool operator!=(const Space& a, const Space& b) { return !(a == b); }
  std::string str() const;
};

/// A point of the complex: a vertex, or an interior edge point with exact
/// rational local coordinate in (0,1). Coordinates 0 and 1 normalize to the
/// edge's endpoints.
struct Point {
  bool at_vertex = true;
  int vertex = 0;
  int edge = 0;
  Rat t;

  static Point at(const Space& X, int vertex);
  static Point on_edge(const Space& X, int edge, const Rat& t);
  friend bool operator==(const Point& a, const Point& b);
};

/// Closed subcomplex: a set of vertices together with disjoint closed
/// rational subintervals of edges (single points allowed as degenerate
/// intervals). An included interval touching a local endpoint forces the
/// corresponding vertex in.
class SubComplex {
 public:
  SubComplex(const Space& X, std::vector<bool> vertices,
             std::vector<std::vector<std::pair<Rat, Rat>>> edge_intervals);

  static SubComplex whole(const Space& X);
  static SubComplex vertex_set(const Space& X, const std::vector<int>& verts);
  static SubComplex single_point(const Space& X, const Point& p);
  static SubComplex interval_part(const Space& X, int edge, const Rat& a, const Rat& b);

  const Space& space() const { return space_; }
  const std::vector<bool>& vertices() const { return verts_; }
  const std::vector<std::vector<std::pair<Rat, Rat>>>& edge_intervals() const {
    return intervals_;
  }
  bool contains(const Point& p) const;
  bool is_whole() const;

 private:
  Space space_;
  std::vector<bool> verts_;
  // per edge, sorted disjoint closed intervals [a,b] with 0 <= a <= b <= 1
  std::vector<std::vector<std::pair<Rat, Rat>>> intervals_;
};

/// Open subset: disjoint open rational intervals per edge plus a set of
/// vertices; an included vertex must have every incident edge end covered by
/// an interval reaching the corresponding local endpoint.
class OpenSet {
 public:
  OpenSet(const Space& X, std::vector<bool> vertices,
          std::vector<std::vector<std::pair<Rat, Rat>>> edge_intervals);

  static OpenSet whole(const Space& X);
  static OpenSet empty(const Space& X);
  static OpenSet edge_interval(const Space& X, int edge, const Rat& a, const Rat& b);

  const Space& space() const { return space_; }
  const std::vector<bool>& vertices() const { return verts_; }
  const std::vector<std::vector<std::pair<Rat, Rat>>>& edge_intervals() const {
    return intervals_;
  }

  bool contains(const Point& p) const;
  bool closure_contains(const Point& p) const;

 private:
  Space space_;
  std::vector<bool> verts_;
  std::vector<std::vector<std::pair<Rat, Rat>>> intervals_;  // open (a,b)
};

/// The space a closed subcomplex carries in its own right, together with the
/// positions its cells came from. Sub-vertices list the original X-vertices
/// first and then interior points in (edge, coordinate) order; each maximal
/// nondegenerate interval [a,b] becomes a sub-edge rescaled to [0,1].
struct SubSpace {
  Space sub;
  std::vector<Point> vertex_origin;  // position in X of each sub-vertex
  struct EdgeOrigin {
    int edge;   // edge of X
    Rat a, b;   // [a,b] with a < b; local sub-coordinate u maps to a + u(b-a)
  };
  std::vector<EdgeOrigin> edge_origin;
};

SubSpace derived_space(const SubComplex& Y);

/// Continuous cellwise-affine map X' -> X given by exact rational data:
/// vertex images plus, per domain edge, a subdivision whose segments map
/// affinely onto edge segments of X or collapse to single points.
class CellMap {
 public:
  struct Segment {
    Rat from, to;           // subdivision piece [from,to] of the domain edge
    bool collapses = false;
    Point point;            // image when collapsing
    int edge = 0;           // else: affine onto [a,b] (reversal allowed) of this edge
    Rat a, b;
  };

  CellMap(Space domain, Space codomain, std::vector<Point> vertex_images,
          std::vector<std::vector<Segment>> edge_segments);

  static CellMap identity(const Space& X);
  /// [0,1] -> [0,1], t -> 1 - t.
  static CellMap mirror_interval();

  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  const std::vector<Point>& vertex_images() const { return vertex_images_; }
  const std::vector<std::vector<Segment>>& edge_segments() const { return segments_; }

  Point apply(const Point& p) const;

 private:
  Point segment_image(const Segment& seg, const Rat& s) const;

  Space domain_, codomain_;
  std::vector<Point> vertex_images_;
  std::vector<std::vector<Segment>> segments_;
};

}  // namespace cusg
