#include "cusg/semigroup.hpp"

#include "cusg/pullback.hpp"

namespace cusg {

void Semigroup::require_element(const Element& a) const {
  if (!contains(a))
    fail(Err::ElementNotInSemigroup, "element does not belong to " + name());
}

Ternary Semigroup::equal(const Element& a, const Element& b, int depth) const {
  if (a == b) return Ternary::yes();
  return leq(a, b, depth) && leq(b, a, depth);
}

// -- ScalarSemigroup --------------------------------------------------------

bool ScalarSemigroup::contains(const Element& a) const {
  return a.is_scalar() && scalar_valid(kind_, a.scalar());
}

Ternary ScalarSemigroup::leq(const Element& a, const Element& b, int) const {
  require_element(a);
  require_element(b);
  return Ternary::of(scalar_leq(kind_, a.scalar(), b.scalar()));
}

Ternary ScalarSemigroup::way_below(const Element& a, const Element& b, int) const {
  require_element(a);
  require_element(b);
  return Ternary::of(scalar_way_below(kind_, a.scalar(), b.scalar()));
}

Element ScalarSemigroup::add(const Element& a, const Element& b) const {
  require_element(a);
  require_element(b);
  return Element::of_scalar(scalar_add(kind_, a.scalar(), b.scalar()));
}

std::vector<Element> ScalarSemigroup::approximant_chain(const Element& a, int count) const {
  require_element(a);
  std::vector<Element> out;
  for (int k = 1; k <= count; ++k)
    out.push_back(Element::of_scalar(scalar_approximant(kind_, a.scalar(), k)));
  return out;
}

Element ScalarSemigroup::sample(Rng& rng, const SampleParams& p) const {
  return Element::of_scalar(sample_scalar(kind_, rng, p));
}

std::string ScalarSemigroup::format(const Element& a) const {
  return scalar_str(kind_, a.scalar());
}

Element ScalarSemigroup::parse(const std::string& text) const {
  return Element::of_scalar(scalar_parse(kind_, text));
}

std::optional<Element> ScalarSemigroup::interpolate(const std::vector<Element>& lowers,
                                                    const std::vector<Element>& uppers) const {
  std::vector<ScalarValue> lo, up;
  for (auto& l : lowers) lo.push_back(l.scalar());
  for (auto& u : uppers) up.push_back(u.scalar());
  auto got = scalar_interpolate(kind_, lo, up);
  if (!got.has_value()) return std::nullopt;
  return Element::of_scalar(*got);
}

// -- LscSemigroup -------------------------------------------------------------

LscSemigroup::LscSemigroup(Space X, ScalarKind scalar)
    : space_(std::move(X)), scalar_(std::move(scalar)) {}

std::string LscSemigroup::name() const {
  return "Lsc(" + space_.str() + ", " + scalar_.str() + ")";
}

bool LscSemigroup::contains(const Element& a) const {
  if (a.is_step())
    return a.step().space() == space_ && a.step().kind() == scalar_;
  if (a.is_sup()) {
    const FormalSup& s = a.sup();
    if (s.verified_depth < 1) return false;
    Element first = s.generator(1);
    return first.is_step() && contains(first);
  }
  return false;
}

Ternary LscSemigroup::leq(const Element& a, const Element& b, int depth) const {
  require_element(a);
  require_element(b);
  if (a.is_step() && b.is_step()) return Ternary::of(leq_step(a.step(), b.step()));
  return sup_aware_leq(*this, a, b, depth);
}

Ternary LscSemigroup::way_below(const Element& a, const Element& b, int depth) const {
  require_element(a);
  require_element(b);
  if (a.is_step() && b.is_step()) return Ternary::of(way_below_step(a.step(), b.step()));
  return sup_aware_way_below(*this, a, b, depth);
}

Element LscSemigroup::add(const Element& a, const Element& b) const {
  require_element(a);
  require_element(b);
  if (a.is_step() && b.is_step()) return Element::of_step(add_step(a.step(), b.step()));
  return sup_aware_add(*this, a, b);
}

std::vector<Element> LscSemigroup::approximant_chain(const Element& a, int count) const {
  require_element(a);
  std::vector<Element> out;
  if (a.is_step()) {
    LscApproxChain chain(a.step());
    for (int k = 1; k <= count; ++k) out.push_back(Element::of_step(chain.at(k)));
    return out;
  }
  for (int k = 1; k <= count; ++k) out.push_back(a.sup().generator(k));
  return out;
}

Element LscSemigroup::sample(Rng& rng, const SampleParams& p) const {
  return Element::of_step(sample_step(space_, scalar_, rng, p));
}

std::string LscSemigroup::format(const Element& a) const {
  if (a.is_step()) return a.step().str();
  return "sup{" + a.sup().generator(1).step().str() + ", ...}";
}

Element LscSemigroup::parse(const std::string& text) const {
  return Element::of_step(parse_step(space_, scalar_, text));
}

// -- generic sup handling -------------------------------------------------------

namespace {

// Probes of a formal sup, 1-indexed.
std::vector<Element> sup_terms(const FormalSup& s, int depth) {
  std::vector<Element> out;
  for (int k = 1; k <= depth; ++k) out.push_back(s.generator(k));
  return out;
}

bool stabilized(const std::vector<Element>& terms) {
  size_t n = terms.size();
  return n >= 2 && terms[n - 1] == terms[n - 2];
}

}  // namespace

Ternary sup_aware_leq(const Semigroup& S, const Element& a, const Element& b, int depth) {
  if (!a.is_sup() && !b.is_sup()) return S.leq(a, b, depth);
  if (a.is_sup() && !b.is_sup()) {
    auto terms = sup_terms(a.sup(), depth);
    for (auto& t : terms) {
      Ternary r = S.leq(t, b, depth);
      if (r.is_false()) return Ternary::no();
    }
    return stabilized(terms) ? Ternary::yes() : Ternary::unknown_at(depth);
  }
  if (!a.is_sup() && b.is_sup()) {
    auto terms = sup_terms(b.sup(), depth);
    for (auto& t : terms)
      if (S.leq(a, t, depth).is_true()) return Ternary::yes();
    return stabilized(terms) ? Ternary::no() : Ternary::unknown_at(depth);
  }
  // sup vs sup: every probed term of a must fit below some probed term of b
  auto ta = sup_terms(a.sup(), depth);
  auto tb = sup_terms(b.sup(), depth);
  bool all = true;
  for (auto& x : ta) {
    bool found = false;
    for (auto& y : tb) found |= S.leq(x, y, depth).is_true();
    if (!found) {
      if (stabilized(tb)) return Ternary::no();
      all = false;
    }
  }
  if (all && stabilized(ta)) return Ternary::yes();
  return Ternary::unknown_at(depth);
}

Ternary sup_aware_way_below(const Semigroup& S, const Element& a, const Element& b, int depth) {
  if (!a.is_sup() && !b.is_sup()) return S.way_below(a, b, depth);
  if (b.is_sup()) {
    // b's presentation is rapidly increasing: a << b iff a fits below a term
    auto terms = sup_terms(b.sup(), depth);
    for (auto& t : terms)
      if (sup_aware_leq(S, a, t, depth).is_true()) return Ternary::yes();
    return stabilized(terms) ? S.way_below(a, terms.back(), depth) : Ternary::unknown_at(depth);
  }
  auto terms = sup_terms(a.sup(), depth);
  if (stabilized(terms)) return S.way_below(terms.back(), b, depth);
  // the sup dominates every term, so a failing term certifies the negative
  for (auto& t : terms)
    if (S.way_below(t, b, depth).is_false()) return Ternary::no();
  return Ternary::unknown_at(depth);
}

Element sup_aware_add(const Semigroup& S, const Element& a, const Element& b) {
  if (!a.is_sup() && !b.is_sup()) return S.add(a, b);
  // termwise sums of rapidly increasing sequences are rapidly increasing
  const Semigroup* sp = &S;
  Element ca = a, cb = b;
  int vd = kDefaultDepth;
  if (ca.is_sup()) vd = std::min(vd, ca.sup().verified_depth);
  if (cb.is_sup()) vd = std::min(vd, cb.sup().verified_depth);
  FormalSup s;
  s.verified_depth = vd;
  s.generator = [sp, ca, cb](int k) {
    Element x = ca.is_sup() ? ca.sup().generator(k) : ca;
    Element y = cb.is_sup() ? cb.sup().generator(k) : cb;
    return sp->add(x, y);
  };
  return Element::of_sup(std::move(s));
}

namespace {

// Supremum recognition for a probed scalar sequence: stabilized tails give
// their value; integer chains that grow at the last probe escape to the top.
std::optional<ScalarValue> recognize_scalar_sup(const ScalarKind& k,
                                                const std::vector<ScalarValue>& vals) {
  const ScalarValue& last = vals.back();
  const ScalarValue& prev = vals[vals.size() - 2];
  switch (k.tag) {
    case ScalarTag::Nat:
    case ScalarTag::Scaled:
      if (last == prev) return last;
      return scalar_infinity(k);
    case ScalarTag::Uhf:
      if (last == prev) return last;
      return std::nullopt;  // soft suprema are not recognizable from probes
    case ScalarTag::Product: {
      std::vector<ScalarValue> comps;
      for (size_t i = 0; i < k.components.size(); ++i) {
        std::vector<ScalarValue> column;
        for (auto& v : vals) column.push_back(v.comps[i]);
        auto got = recognize_scalar_sup(k.components[i], column);
        if (!got.has_value()) return std::nullopt;
        comps.push_back(*got);
      }
      return ScalarValue::of_tuple(std::move(comps));
    }
  }
  return std::nullopt;
}

}  // namespace

Element sup_increasing(const Semigroup& S, const std::function<Element(int)>& gen, int depth) {
  if (depth < 2) depth = 2;
  std::vector<Element> terms;
  for (int k = 1; k <= depth; ++k) {
    terms.push_back(gen(k));
    S.require_element(terms.back());
    if (k > 1 && S.leq(terms[k - 2], terms[k - 1], depth).is_false())
      fail(Err::NotIncreasing,
           "terms " + std::to_string(k - 1) + " and " + std::to_string(k) + " decrease");
  }

  if (terms.back().is_scalar()) {
    const auto* sk = dynamic_cast<const ScalarSemigroup*>(&S);
    std::vector<ScalarValue> vals;
    for (auto& t : terms) vals.push_back(t.scalar());
    if (sk) {
      auto got = recognize_scalar_sup(sk->kind(), vals);
      if (got.has_value()) return Element::of_scalar(*got);
    }
  } else if (terms.back().is_step()) {
    const StepFunction& f1 = terms[terms.size() - 2].step();
    const StepFunction& f2 = terms.back().step();
    bool same_cuts = true;
    for (size_t e = 0; e < f1.edges().size(); ++e)
      same_cuts &= f1.edges()[e].cuts == f2.edges()[e].cuts;
    if (same_cuts) {
      // fixed breakpoints: recognize cellwise over the probed tail
      const ScalarKind& K = f2.kind();
      bool ok = true;
      auto recognize_cell = [&](auto&& get) -> std::optional<ScalarValue> {
        std::vector<ScalarValue> vals;
        for (auto& t : terms) {
          auto [rt, rf] = common_refinement(t.step(), f2);
          vals.push_back(get(rt));
        }
        return recognize_scalar_sup(K, vals);
      };
      std::vector<ScalarValue> verts;
      for (int v = 0; v < f2.space().num_vertices && ok; ++v) {
        auto got = recognize_cell([&](const StepFunction& h) { return h.vertex_values()[v]; });
        ok &= got.has_value();
        if (ok) verts.push_back(*got);
      }
      std::vector<StepFunction::EdgeData> edges;
      for (size_t e = 0; e < f2.edges().size() && ok; ++e) {
        StepFunction::EdgeData ed;
        ed.cuts = f2.edges()[e].cuts;
        for (size_t i = 0; i < ed.cuts.size() && ok; ++i) {
          auto got = recognize_cell(
              [&](const StepFunction& h) { return h.edges()[e].point_values[i]; });
          ok &= got.has_value();
          if (ok) ed.point_values.push_back(*got);
        }
        for (size_t i = 0; i <= ed.cuts.size() && ok; ++i) {
          auto got = recognize_cell(
              [&](const StepFunction& h) { return h.edges()[e].interval_values[i]; });
          ok &= got.has_value();
          if (ok) ed.interval_values.push_back(*got);
        }
        edges.push_back(std::move(ed));
      }
      if (ok)
        return Element::of_step(
            StepFunction(f2.space(), K, std::move(verts), std::move(edges)));
    }
  } else if (terms.back().is_pair()) {
    // componentwise recognition through the pullback's factors (suprema in
    // the pullback are componentwise and the morphisms preserve them)
    if (const auto* P = dynamic_cast<const PullbackSemigroup*>(&S)) {
      auto lgen = [gen](int k) { return gen(k).left(); };
      auto rgen = [gen](int k) { return gen(k).right(); };
      Element ls = sup_increasing(*P->left_semigroup(), lgen, depth);
      Element rs = sup_increasing(*P->right_semigroup(), rgen, depth);
      if (!ls.is_sup() && !rs.is_sup()) {
        Element pair = Element::of_pair(ls, rs);
        if (S.contains(pair)) return pair;
      }
    }
  }

  FormalSup s;
  s.generator = gen;
  s.verified_depth = depth;
  return Element::of_sup(std::move(s));
}

bool sup_equals(const Semigroup& S, const std::function<Element(int)>& gen,
                const Element& candidate, int depth) {
  for (int k = 1; k <= depth; ++k)
    if (!S.leq(gen(k), candidate, depth).is_true()) return false;
  auto chain = S.approximant_chain(candidate, depth);
  for (auto& c : chain) {
    bool dominated = false;
    for (int k = depth; k >= 1 && !dominated; --k)
      dominated = S.leq(c, gen(k), depth).is_true();
    if (!dominated) return false;
  }
  return true;
}

}  // namespace cusg
