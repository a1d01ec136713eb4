#include "cusg/limits.hpp"

namespace cusg {

ChainLimit::ChainLimit(std::function<unsigned long long(int)> multiplier)
    : multiplier_(std::move(multiplier)) {
  totals_.push_back(Rat(1));
}

ChainLimit ChainLimit::for_supernatural(const Supernatural& p) {
  return ChainLimit([p](int i) {
    unsigned long long a = p.stage(i);
    unsigned long long b = p.stage(i + 1);
    return b / a;
  });
}

ChainLimit ChainLimit::constant_multiplier(unsigned long long m) {
  return ChainLimit([m](int) { return m; });
}

Rat ChainLimit::stage_total(int i) const {
  if (i < 0) fail(Err::StageMismatch, "negative stage");
  while ((int)totals_.size() <= i) {
    int k = (int)totals_.size() - 1;
    unsigned long long m = multiplier_(k);
    if (m == 0) fail(Err::InvalidSpec, "zero connecting multiplier");
    totals_.push_back(totals_.back() * Rat((long long)m));
  }
  return totals_[i];
}

ExtNat ChainLimit::push(int i, int j, const ExtNat& v) const {
  if (j < i) fail(Err::StageMismatch, "push to an earlier stage");
  if (v.infinite) return v;
  Rat factor = stage_total(j) / stage_total(i);
  Rat out = Rat((long long)v.value) * factor;
  if (!out.is_integer()) fail(Err::Internal, "non-integral push");
  return ExtNat::of((unsigned long long)out.num());
}

bool ChainLimit::check_coherence(int depth) const {
  for (int i = 0; i < depth; ++i) {
    for (unsigned long long v = 0; v <= 3; ++v) {
      ExtNat x = ExtNat::of(v);
      if (!(push(i, i, x) == x)) return false;
      for (int j = i; j <= depth; ++j)
        for (int k = j; k <= depth; ++k)
          if (!(push(j, k, push(i, j, x)) == push(i, k, x))) return false;
    }
  }
  return true;
}

ChainLimit::Elem ChainLimit::stage_element(int stage, const ExtNat& v) const {
  if (stage < 0) fail(Err::StageMismatch, "negative stage");
  Elem e;
  e.terms = {{stage, v}};
  if (!v.infinite) {
    e.sup_value = Rat((long long)v.value) / stage_total(stage);
    e.sup_attained = true;
  }
  return e;
}

ChainLimit::Elem ChainLimit::compact_from_value(const Rat& q, int depth) const {
  if (q.is_negative()) fail(Err::InvalidForSupernatural, "negative value");
  for (int k = 0; k <= depth; ++k) {
    Rat scaled = q * stage_total(k);
    if (scaled.is_integer())
      return stage_element(k, ExtNat::of((unsigned long long)scaled.num()));
  }
  fail(Err::InvalidForSupernatural,
       "denominator of " + q.str() + " not reached by the stage system");
}

ChainLimit::Elem ChainLimit::soft_from_value(const Rat& r, int depth) const {
  if (r.is_negative() || r.is_zero()) fail(Err::PreconditionViolated, "soft value must be > 0");
  Elem e;
  for (int k = 1; k <= depth; ++k) {
    Rat scaled = r * stage_total(k);
    long long fl = scaled.num() / scaled.den();
    long long v = scaled.is_integer() ? fl - 1 : fl;
    if (v < 0) v = 0;
    e.terms.push_back({k, ExtNat::of((unsigned long long)v)});
  }
  e.sup_value = r;
  e.sup_attained = false;
  return e;
}

// Decides γ_i(v) ≤ y. A finite stage value is compact in the limit, so the
// question reduces to finding one dominating term of y; the presentation
// metadata settles it when no probed term works.
Ternary ChainLimit::term_leq(int i, const ExtNat& v, const Elem& y, int depth) const {
  if (v.infinite) {
    for (auto& [j, w] : y.terms)
      if (w.infinite) return Ternary::yes();
    if (y.sup_value.has_value()) return Ternary::no();
    return Ternary::unknown_at(depth);
  }
  Rat value = Rat((long long)v.value) / stage_total(i);
  for (auto& [j, w] : y.terms) {
    if (w.infinite) return Ternary::yes();
    if (value <= Rat((long long)w.value) / stage_total(j)) return Ternary::yes();
  }
  if (y.sup_value.has_value()) {
    if (y.sup_attained) return Ternary::of(value <= *y.sup_value);
    return Ternary::of(value < *y.sup_value);
  }
  return Ternary::unknown_at(depth);
}

Ternary ChainLimit::leq(const Elem& x, const Elem& y, int depth) const {
  Ternary acc = Ternary::yes();
  for (auto& [i, v] : x.terms) {
    acc = acc && term_leq(i, v, y, depth);
    if (acc.is_false()) return acc;
  }
  if (x.sup_value.has_value() && !x.sup_attained) {
    // Presentation tail: every value strictly below x's supremum must fit.
    bool y_has_inf = false;
    for (auto& [j, w] : y.terms) y_has_inf |= w.infinite;
    if (!y_has_inf) {
      if (!y.sup_value.has_value()) return Ternary::unknown_at(depth);
      acc = acc && Ternary::of(*x.sup_value <= *y.sup_value);
    }
  }
  return acc;
}

Ternary ChainLimit::way_below(const Elem& x, const Elem& y, int depth) const {
  // x ≪ y iff x lies below one term of y's rapidly increasing presentation,
  // except that a compact top term makes ≪ coincide with ≤ below it.
  bool y_has_inf = false;
  for (auto& [j, w] : y.terms) y_has_inf |= w.infinite;
  bool x_has_inf = false;
  for (auto& [i, v] : x.terms) x_has_inf |= v.infinite;
  if (y_has_inf) {
    // a ≪ ∞ iff a is dominated by some finite stage element
    if (x_has_inf) return Ternary::no();
    if (x.sup_value.has_value()) return Ternary::yes();
    return Ternary::unknown_at(depth);
  }
  if (x_has_inf) return Ternary::no();
  if (y.terms.size() == 1) {
    // finite stage element: compact, so ≪ coincides with ≤
    return leq(x, y, depth);
  }
  for (auto& [j, w] : y.terms) {
    Elem stage_y = stage_element(j, w);
    if (leq(x, stage_y, depth).is_true()) return Ternary::yes();
  }
  if (x.sup_value.has_value() && y.sup_value.has_value()) {
    if (y.sup_attained) return Ternary::no();  // the term scan above was exact
    return Ternary::of(*x.sup_value < *y.sup_value);
  }
  return Ternary::unknown_at(depth);
}

ChainLimit::Elem ChainLimit::add(const Elem& x, const Elem& y) const {
  for (auto& [i, v] : x.terms)
    if (v.infinite) return top();
  for (auto& [j, w] : y.terms)
    if (w.infinite) return top();
  Elem out;
  size_t n = std::max(x.terms.size(), y.terms.size());
  for (size_t t = 0; t < n; ++t) {
    auto [i, v] = x.terms[std::min(t, x.terms.size() - 1)];
    auto [j, w] = y.terms[std::min(t, y.terms.size() - 1)];
    int k = std::max(i, j);
    out.terms.push_back({k, push(i, k, v) + push(j, k, w)});
  }
  if (x.sup_value.has_value() && y.sup_value.has_value()) {
    out.sup_value = *x.sup_value + *y.sup_value;
    out.sup_attained = x.sup_attained && y.sup_attained;
  }
  return out;
}

Ternary limit_leq(const ChainLimit& L, int stage_x, const ExtNat& x, int stage_y,
                  const ExtNat& y, int depth) {
  return L.leq(L.stage_element(stage_x, x), L.stage_element(stage_y, y), depth);
}

}  // namespace cusg
