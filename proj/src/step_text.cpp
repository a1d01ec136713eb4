#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "cusg/step_function.hpp"

namespace cusg {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Splits on `sep` outside any brackets; interval delimiters mix ( with ] so
// only the nesting count matters.
std::vector<std::string> split_outside_brackets(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[' || ch == '{') depth++;
    if (ch == ')' || ch == ']' || ch == '}') depth--;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

struct Piece {
  Rat a, b;
  bool closed_a = false, closed_b = false;
  ScalarValue value;
};

struct EdgeItems {
  std::vector<Piece> pieces;
  std::map<std::pair<long long, long long>, ScalarValue> singletons;  // t -> value
};

}  // namespace

StepFunction parse_step(const Space& X, const ScalarKind& K, const std::string& raw) {
  std::string text = trim(raw);
  if (text.rfind("const ", 0) == 0)
    return StepFunction::constant(X, K, scalar_parse(K, text.substr(6)));
  if (text == "0" || text == "zero") return StepFunction::zero(X, K);

  std::vector<std::optional<ScalarValue>> vertex_vals(X.num_vertices);
  auto assign_vertex = [&](int v, const ScalarValue& val, const char* who) {
    if (v < 0 || v >= X.num_vertices) fail(Err::ParseError, "vertex out of range");
    if (vertex_vals[v].has_value() && !(*vertex_vals[v] == val))
      fail(Err::ParseError, std::string("conflicting values for vertex from ") + who);
    vertex_vals[v] = val;
  };

  std::vector<EdgeItems> items(X.edges.size());
  for (auto& seg : split_outside_brackets(text, ';')) {
    if (seg.empty()) continue;
    if (seg[0] == 'v') {
      auto colon = seg.find(':');
      if (colon == std::string::npos) fail(Err::ParseError, "expected `v<i>: value` in " + seg);
      int v = std::stoi(seg.substr(1, colon - 1));
      assign_vertex(v, scalar_parse(K, trim(seg.substr(colon + 1))), "explicit assignment");
      continue;
    }
    if (seg.rfind("edge", 0) != 0) fail(Err::ParseError, "expected `edge e<i>: ...` in " + seg);
    auto colon = seg.find(':');
    if (colon == std::string::npos) fail(Err::ParseError, "missing `:` in " + seg);
    std::string name = trim(seg.substr(4, colon - 4));
    if (name.empty() || name[0] != 'e') fail(Err::ParseError, "edge names look like e1: " + seg);
    int e = std::stoi(name.substr(1)) - 1;
    if (e < 0 || e >= (int)X.edges.size()) fail(Err::ParseError, "edge out of range: " + name);
    for (auto& cell : split_outside_brackets(seg.substr(colon + 1), ',')) {
      if (cell.empty()) continue;
      auto eq = cell.find('=', cell.find_first_of(")]}"));
      if (eq == std::string::npos) fail(Err::ParseError, "cell without value: " + cell);
      ScalarValue value = scalar_parse(K, trim(cell.substr(eq + 1)));
      std::string range = trim(cell.substr(0, eq));
      if (range.size() < 3) fail(Err::ParseError, "bad cell: " + cell);
      if (range[0] == '{') {
        if (range.back() != '}') fail(Err::ParseError, "bad point cell: " + cell);
        Rat t = Rat::parse(trim(range.substr(1, range.size() - 2)));
        if (t == Rat(0)) {
          assign_vertex(X.edges[e].src, value, "point cell {0}");
        } else if (t == Rat(1)) {
          assign_vertex(X.edges[e].dst, value, "point cell {1}");
        } else {
          items[e].singletons[{t.num(), t.den()}] = value;
        }
        continue;
      }
      Piece p;
      p.closed_a = range[0] == '[';
      if (!p.closed_a && range[0] != '(') fail(Err::ParseError, "bad cell: " + cell);
      p.closed_b = range.back() == ']';
      if (!p.closed_b && range.back() != ')') fail(Err::ParseError, "bad cell: " + cell);
      auto comma = range.find(',');
      if (comma == std::string::npos) fail(Err::ParseError, "bad interval: " + cell);
      p.a = Rat::parse(trim(range.substr(1, comma - 1)));
      p.b = Rat::parse(trim(range.substr(comma + 1, range.size() - comma - 2)));
      if (!(p.a < p.b) || p.a < Rat(0) || p.b > Rat(1))
        fail(Err::ParseError, "bad interval bounds: " + cell);
      p.value = value;
      items[e].pieces.push_back(std::move(p));
    }
  }

  std::vector<StepFunction::EdgeData> edges(X.edges.size());
  for (size_t e = 0; e < X.edges.size(); ++e) {
    auto& it = items[e];
    if (it.pieces.empty()) {
      if (!X.edges.empty() && !it.singletons.empty())
        fail(Err::ParseError, "edge has points but no covering intervals");
      fail(Err::ParseError, "edge e" + std::to_string(e + 1) + " has no cell data");
    }
    std::sort(it.pieces.begin(), it.pieces.end(),
              [](const Piece& x, const Piece& y) { return x.a < y.a; });
    if (!(it.pieces.front().a == Rat(0)) || !(it.pieces.back().b == Rat(1)))
      fail(Err::ParseError, "edge cells must cover [0,1]");
    for (size_t i = 0; i + 1 < it.pieces.size(); ++i)
      if (!(it.pieces[i].b == it.pieces[i + 1].a))
        fail(Err::ParseError, "edge cells must be contiguous");

    // cuts: interior piece boundaries plus singleton points
    std::vector<Rat> cuts;
    for (size_t i = 0; i + 1 < it.pieces.size(); ++i) cuts.push_back(it.pieces[i].b);
    for (auto& [key, v] : it.singletons) {
      Rat t(key.first, key.second);
      bool present = false;
      for (auto& c : cuts) present |= c == t;
      if (!present) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end(), [](const Rat& x, const Rat& y) { return x < y; });

    auto piece_at = [&](const Rat& t) -> const Piece& {
      for (auto& p : it.pieces)
        if (p.a <= t && t < p.b) return p;
      return it.pieces.back();
    };
    StepFunction::EdgeData ed;
    ed.cuts = cuts;
    for (auto& t : cuts) {
      auto single = it.singletons.find({t.num(), t.den()});
      bool is_boundary = false;
      const Piece* left = nullptr;
      const Piece* right = nullptr;
      for (size_t i = 0; i + 1 < it.pieces.size(); ++i)
        if (it.pieces[i].b == t) {
          is_boundary = true;
          left = &it.pieces[i];
          right = &it.pieces[i + 1];
        }
      if (single != it.singletons.end()) {
        if (is_boundary && (left->closed_b || right->closed_a))
          fail(Err::ParseError, "point " + t.str() + " assigned twice");
        ed.point_values.push_back(single->second);
      } else if (is_boundary) {
        if (left->closed_b == right->closed_a)
          fail(Err::ParseError, "point " + t.str() + " needs exactly one closed side");
        ed.point_values.push_back(left->closed_b ? left->value : right->value);
      } else {
        ed.point_values.push_back(piece_at(t).value);
      }
    }
    Rat prev(0);
    for (size_t i = 0; i <= cuts.size(); ++i) {
      Rat next = i < cuts.size() ? cuts[i] : Rat(1);
      ed.interval_values.push_back(piece_at((prev + next) / Rat(2)).value);
      prev = next;
    }
    // endpoint closure assigns vertex values
    if (it.pieces.front().closed_a)
      assign_vertex(X.edges[e].src, it.pieces.front().value, "closed interval end");
    if (it.pieces.back().closed_b)
      assign_vertex(X.edges[e].dst, it.pieces.back().value, "closed interval end");
    edges[e] = std::move(ed);
  }

  std::vector<ScalarValue> verts;
  for (int v = 0; v < X.num_vertices; ++v) {
    if (!vertex_vals[v].has_value())
      fail(Err::ParseError, "no value for vertex v" + std::to_string(v));
    verts.push_back(*vertex_vals[v]);
  }
  return StepFunction(X, K, std::move(verts), std::move(edges));
}

}  // namespace cusg
