#include "cusg/lsc_order.hpp"

#include <algorithm>
#include <set>

namespace cusg {

namespace {

struct LocalCells {
  std::vector<ScalarValue> values;  // value at the point cell and its open neighbours
};

// Collects, for every point cell of f (interior cuts and vertices), the value
// at the cell together with the values on all adjacent open cells.
std::vector<LocalCells> point_neighbourhoods(const StepFunction& f) {
  std::vector<LocalCells> out;
  for (size_t e = 0; e < f.edges().size(); ++e) {
    auto& ed = f.edges()[e];
    for (size_t i = 0; i < ed.cuts.size(); ++i) {
      LocalCells lc;
      lc.values = {ed.point_values[i], ed.interval_values[i], ed.interval_values[i + 1]};
      out.push_back(std::move(lc));
    }
  }
  for (int v = 0; v < f.space().num_vertices; ++v) {
    LocalCells lc;
    lc.values = {f.vertex_values()[v]};
    for (size_t e = 0; e < f.space().edges.size(); ++e) {
      if (f.space().edges[e].src == v) lc.values.push_back(f.edges()[e].interval_values.front());
      if (f.space().edges[e].dst == v) lc.values.push_back(f.edges()[e].interval_values.back());
    }
    out.push_back(std::move(lc));
  }
  return out;
}

Rat min_gap(const StepFunction::EdgeData& ed) {
  Rat gap(1);
  Rat prev(0);
  for (auto& t : ed.cuts) {
    gap = min(gap, t - prev);
    prev = t;
  }
  gap = min(gap, Rat(1) - prev);
  return gap;
}

Rat pow2_inv(int k) {
  if (k > 40) k = 40;
  long long d = 1LL << k;
  return Rat(1, d);
}

}  // namespace

namespace {

bool same_cuts(const StepFunction& g, const StepFunction& f) {
  for (size_t e = 0; e < g.edges().size(); ++e)
    if (!(g.edges()[e].cuts == f.edges()[e].cuts)) return false;
  return true;
}

// Local interpolation over aligned cell data, allocation-free.
bool way_below_aligned(const StepFunction& g, const StepFunction& f) {
  const ScalarKind& k = g.kind();
  for (size_t e = 0; e < g.edges().size(); ++e) {
    auto& ge = g.edges()[e];
    auto& fe = f.edges()[e];
    for (size_t i = 0; i < ge.cuts.size(); ++i) {
      ScalarValue c = scalar_join(k, scalar_join(k, ge.point_values[i], ge.interval_values[i]),
                                  ge.interval_values[i + 1]);
      if (!scalar_way_below(k, c, fe.point_values[i]) ||
          !scalar_way_below(k, c, fe.interval_values[i]) ||
          !scalar_way_below(k, c, fe.interval_values[i + 1]))
        return false;
    }
  }
  for (int v = 0; v < g.space().num_vertices; ++v) {
    ScalarValue c = g.vertex_values()[v];
    for (size_t e = 0; e < g.space().edges.size(); ++e) {
      if (g.space().edges[e].src == v)
        c = scalar_join(k, c, g.edges()[e].interval_values.front());
      if (g.space().edges[e].dst == v) c = scalar_join(k, c, g.edges()[e].interval_values.back());
    }
    if (!scalar_way_below(k, c, f.vertex_values()[v])) return false;
    for (size_t e = 0; e < g.space().edges.size(); ++e) {
      if (g.space().edges[e].src == v &&
          !scalar_way_below(k, c, f.edges()[e].interval_values.front()))
        return false;
      if (g.space().edges[e].dst == v &&
          !scalar_way_below(k, c, f.edges()[e].interval_values.back()))
        return false;
    }
  }
  return true;
}

}  // namespace

bool way_below_step(const StepFunction& g, const StepFunction& f) {
  check_same_shape(g, f);
  if (same_cuts(g, f)) return way_below_aligned(g, f);
  auto [rg, rf] = common_refinement(g, f);
  return way_below_aligned(rg, rf);
}

StepFunction chi_approx(const StepFunction& f, int k) {
  if (k < 1) fail(Err::PreconditionViolated, "approximation depth must be >= 1");
  const ScalarKind& K = f.kind();
  auto ap = [&](const ScalarValue& v) { return scalar_approximant(K, v, k); };

  // vertex values: meet of the approximant with the approximants of every
  // incident open cell (keeps the data lower semicontinuous)
  std::vector<ScalarValue> verts;
  for (int v = 0; v < f.space().num_vertices; ++v) {
    ScalarValue m = ap(f.vertex_values()[v]);
    for (size_t e = 0; e < f.space().edges.size(); ++e) {
      if (f.space().edges[e].src == v)
        m = scalar_meet(K, m, ap(f.edges()[e].interval_values.front()));
      if (f.space().edges[e].dst == v)
        m = scalar_meet(K, m, ap(f.edges()[e].interval_values.back()));
    }
    verts.push_back(m);
  }

  std::vector<StepFunction::EdgeData> edges;
  for (size_t e = 0; e < f.edges().size(); ++e) {
    auto& src = f.edges()[e];
    Rat delta = min(min_gap(src) / Rat(4), pow2_inv(k + 2));
    StepFunction::EdgeData ed;
    auto push_cell = [&](const Rat& cut, const ScalarValue& point_v, const ScalarValue& iv) {
      ed.cuts.push_back(cut);
      ed.point_values.push_back(point_v);
      ed.interval_values.push_back(iv);
    };
    // start margin toward the source vertex
    ScalarValue m_src =
        scalar_meet(K, ap(f.vertex_values()[f.space().edges[e].src]), ap(src.interval_values[0]));
    ed.interval_values.push_back(m_src);  // (0, delta)
    push_cell(delta, m_src, ap(src.interval_values[0]));
    for (size_t i = 0; i < src.cuts.size(); ++i) {
      const Rat& t = src.cuts[i];
      ScalarValue ml = scalar_meet(K, ap(src.point_values[i]), ap(src.interval_values[i]));
      ScalarValue mr = scalar_meet(K, ap(src.point_values[i]), ap(src.interval_values[i + 1]));
      push_cell(t - delta, ml, ml);
      push_cell(t, scalar_meet(K, ml, mr), mr);
      push_cell(t + delta, mr, ap(src.interval_values[i + 1]));
    }
    // end margin toward the target vertex
    ScalarValue m_dst = scalar_meet(K, ap(f.vertex_values()[f.space().edges[e].dst]),
                                    ap(src.interval_values.back()));
    push_cell(Rat(1) - delta, m_dst, m_dst);
    edges.push_back(std::move(ed));
  }
  return StepFunction(f.space(), K, std::move(verts), std::move(edges));
}

StepFunction directed_join(const StepFunction& g1, const StepFunction& g2,
                           const StepFunction& f) {
  if (!way_below_step(g1, f) || !way_below_step(g2, f))
    fail(Err::PreconditionViolated, "directed_join needs g1 << f and g2 << f");
  StepFunction g0 = join_step(g1, g2);
  auto [rg, rf] = common_refinement(g0, f);
  const ScalarKind& K = rg.kind();
  const Space& X = rg.space();

  // strict interpolants at every point cell
  std::vector<std::vector<ScalarValue>> cut_e(X.edges.size());
  std::vector<std::vector<ScalarValue>> cut_F(X.edges.size());
  std::vector<ScalarValue> vert_e, vert_F;
  {
    auto gn = point_neighbourhoods(rg);
    auto fn = point_neighbourhoods(rf);
    size_t idx = 0;
    for (size_t e = 0; e < X.edges.size(); ++e) {
      for (size_t i = 0; i < rg.edges()[e].cuts.size(); ++i, ++idx) {
        ScalarValue c = scalar_zero(K);
        for (auto& v : gn[idx].values) c = scalar_join(K, c, v);
        ScalarValue F = fn[idx].values[0];
        for (auto& v : fn[idx].values) F = scalar_meet(K, F, v);
        cut_e[e].push_back(scalar_strict_interpolate(K, c, F));
        cut_F[e].push_back(F);
      }
    }
    for (int v = 0; v < X.num_vertices; ++v, ++idx) {
      ScalarValue c = scalar_zero(K);
      for (auto& val : gn[idx].values) c = scalar_join(K, c, val);
      ScalarValue F = fn[idx].values[0];
      for (auto& val : fn[idx].values) F = scalar_meet(K, F, val);
      vert_e.push_back(scalar_strict_interpolate(K, c, F));
      vert_F.push_back(F);
    }
  }

  std::vector<StepFunction::EdgeData> edges;
  for (size_t e = 0; e < X.edges.size(); ++e) {
    auto& sg = rg.edges()[e];
    auto& sf = rf.edges()[e];
    Rat delta = min_gap(sg) / Rat(4);
    StepFunction::EdgeData ed;
    auto push_cell = [&](const Rat& cut, const ScalarValue& point_v, const ScalarValue& iv) {
      ed.cuts.push_back(cut);
      ed.point_values.push_back(point_v);
      ed.interval_values.push_back(iv);
    };
    Rat left_pos(0);
    for (size_t i = 0; i <= sg.cuts.size(); ++i) {
      // open cell i sits between point cells pl and pr
      const ScalarValue& e_pl =
          i == 0 ? vert_e[X.edges[e].src] : cut_e[e][i - 1];
      const ScalarValue& F_pl =
          i == 0 ? vert_F[X.edges[e].src] : cut_F[e][i - 1];
      const ScalarValue& e_pr =
          i == sg.cuts.size() ? vert_e[X.edges[e].dst] : cut_e[e][i];
      const ScalarValue& F_pr =
          i == sg.cuts.size() ? vert_F[X.edges[e].dst] : cut_F[e][i];
      Rat right_pos = i == sg.cuts.size() ? Rat(1) : sg.cuts[i];
      ScalarValue jl = scalar_strict_interpolate(
          K, scalar_join(K, e_pl, sg.interval_values[i]),
          scalar_meet(K, F_pl, sf.interval_values[i]));
      ScalarValue jr = scalar_strict_interpolate(
          K, scalar_join(K, e_pr, sg.interval_values[i]),
          scalar_meet(K, F_pr, sf.interval_values[i]));
      ScalarValue ec = scalar_strict_interpolate(K, sg.interval_values[i], sf.interval_values[i]);
      if (i > 0) {
        // the point cell at left_pos
        push_cell(left_pos, cut_e[e][i - 1], jl);
      } else {
        ed.interval_values.push_back(jl);  // first margin (0, delta)
      }
      push_cell(left_pos + delta, scalar_meet(K, jl, ec), ec);
      push_cell(right_pos - delta, scalar_meet(K, jr, ec), jr);
      left_pos = right_pos;
    }
    edges.push_back(std::move(ed));
  }
  std::vector<ScalarValue> verts = vert_e;
  return StepFunction(X, K, std::move(verts), std::move(edges));
}

const StepFunction& LscApproxChain::at(int n) {
  if (n < 1) fail(Err::PreconditionViolated, "chain index must be >= 1");
  while ((int)cache_.size() < n) {
    int next = (int)cache_.size() + 1;
    if (next == 1) {
      cache_.push_back(chi_approx(f_, 1));
    } else {
      cache_.push_back(directed_join(cache_.back(), chi_approx(f_, next), f_));
    }
  }
  return cache_[n - 1];
}

StepFunction precompose(const StepFunction& f, const CellMap& m) {
  if (f.space() != m.codomain()) fail(Err::SpaceMismatch, "map targets a different space");
  const Space& D = m.domain();
  const ScalarKind& K = f.kind();
  std::vector<ScalarValue> verts;
  for (int v = 0; v < D.num_vertices; ++v) verts.push_back(f.eval(m.vertex_images()[v]));
  std::vector<StepFunction::EdgeData> edges;
  for (size_t e = 0; e < D.edges.size(); ++e) {
    std::set<std::pair<long long, long long>> cutset;  // exact rationals as pairs
    std::vector<Rat> cuts;
    auto add_cut = [&](const Rat& t) {
      if (!(t > Rat(0)) || !(t < Rat(1))) return;
      if (cutset.insert({t.num(), t.den()}).second) cuts.push_back(t);
    };
    for (auto& seg : m.edge_segments()[e]) {
      add_cut(seg.from);
      add_cut(seg.to);
      if (seg.collapses) continue;
      Rat lo = min(seg.a, seg.b), hi = max(seg.a, seg.b);
      for (auto& u : f.edges()[seg.edge].cuts) {
        if (u > lo && u < hi)
          add_cut(seg.from + (u - seg.a) / (seg.b - seg.a) * (seg.to - seg.from));
      }
    }
    std::sort(cuts.begin(), cuts.end(), [](const Rat& a, const Rat& b) { return a < b; });
    StepFunction::EdgeData ed;
    ed.cuts = cuts;
    for (auto& t : cuts) ed.point_values.push_back(f.eval(m.apply(Point::on_edge(D, (int)e, t))));
    Rat prev(0);
    for (size_t i = 0; i <= cuts.size(); ++i) {
      Rat next = i < cuts.size() ? cuts[i] : Rat(1);
      Rat mid = (prev + next) / Rat(2);
      ed.interval_values.push_back(f.eval(m.apply(Point::on_edge(D, (int)e, mid))));
      prev = next;
    }
    edges.push_back(std::move(ed));
  }
  return StepFunction(D, K, std::move(verts), std::move(edges));
}

StepFunction from_presentation(const PiecewiseCharPresentation& p) {
  const Space& X = p.space;
  for (auto& U : p.opens)
    if (U.space() != X) fail(Err::SpaceMismatch, "open set of a different space");
  const int max_multiplicity = X.dimension() + 1;

  auto lookup = [&](std::vector<int> F) -> ScalarValue {
    std::sort(F.begin(), F.end());
    if (F.empty()) return scalar_zero(p.kind);
    auto it = p.phi.find(F);
    if (it == p.phi.end())
      fail(Err::PhiNotOrdered, "phi is undefined on an occurring index set");
    return it->second;
  };

  auto membership = [&](const Point& t) {
    std::vector<int> open_of, closure_of;
    for (size_t i = 0; i < p.opens.size(); ++i) {
      if (p.opens[i].contains(t)) open_of.push_back((int)i);
      if (p.opens[i].closure_contains(t)) closure_of.push_back((int)i);
    }
    if ((int)closure_of.size() > max_multiplicity)
      fail(Err::MultiplicityExceeded, "closure multiplicity exceeds dimension + 1");
    return std::pair(open_of, closure_of);
  };

  // order-preservation of phi on all occurring index sets
  std::vector<std::vector<int>> occurring;
  auto record = [&](const std::vector<int>& F) {
    auto s = F;
    std::sort(s.begin(), s.end());
    occurring.push_back(s);
  };

  // refinement: all interval endpoints of the opens per edge
  std::vector<ScalarValue> verts;
  for (int v = 0; v < X.num_vertices; ++v) {
    auto [F, Fp] = membership(Point::at(X, v));
    record(F);
    record(Fp);
    verts.push_back(lookup(F));
  }
  std::vector<StepFunction::EdgeData> edges;
  for (size_t e = 0; e < X.edges.size(); ++e) {
    std::set<std::pair<long long, long long>> cutset;
    std::vector<Rat> cuts;
    for (auto& U : p.opens)
      for (auto& [a, b] : U.edge_intervals()[e]) {
        for (const Rat* t : {&a, &b})
          if (*t > Rat(0) && *t < Rat(1) && cutset.insert({t->num(), t->den()}).second)
            cuts.push_back(*t);
      }
    std::sort(cuts.begin(), cuts.end(), [](const Rat& x, const Rat& y) { return x < y; });
    StepFunction::EdgeData ed;
    ed.cuts = cuts;
    for (auto& t : cuts) {
      auto [F, Fp] = membership(Point::on_edge(X, (int)e, t));
      record(F);
      record(Fp);
      ed.point_values.push_back(lookup(F));
    }
    Rat prev(0);
    for (size_t i = 0; i <= cuts.size(); ++i) {
      Rat next = i < cuts.size() ? cuts[i] : Rat(1);
      auto [F, Fp] = membership(Point::on_edge(X, (int)e, (prev + next) / Rat(2)));
      record(F);
      record(Fp);
      ed.interval_values.push_back(lookup(F));
      prev = next;
    }
    edges.push_back(std::move(ed));
  }

  for (auto& F1 : occurring)
    for (auto& F2 : occurring) {
      if (F1.size() > F2.size()) continue;
      if (!std::includes(F2.begin(), F2.end(), F1.begin(), F1.end())) continue;
      if (!scalar_leq(p.kind, lookup(F1), lookup(F2)))
        fail(Err::PhiNotOrdered, "phi is not order-preserving on the index sets");
    }

  return StepFunction(X, p.kind, std::move(verts), std::move(edges));
}

}  // namespace cusg
