#include "cusg/morphism.hpp"

#include "cusg/pullback.hpp"

namespace cusg {

CuMorphism CuMorphism::identity() { return CuMorphism(); }

CuMorphism CuMorphism::matrix(std::vector<std::vector<long long>> entries) {
  if (entries.empty()) fail(Err::InvalidSpec, "empty matrix");
  for (auto& row : entries) {
    if (row.size() != entries[0].size()) fail(Err::InvalidSpec, "ragged matrix");
    for (auto e : row)
      if (e < 0) fail(Err::InvalidSpec, "matrix entries must be non-negative integers");
  }
  CuMorphism m;
  m.kind_ = Kind::MatrixMap;
  m.entries_ = std::move(entries);
  return m;
}

CuMorphism CuMorphism::evaluation(std::vector<Point> points) {
  if (points.empty()) fail(Err::InvalidSpec, "evaluation needs at least one point");
  CuMorphism m;
  m.kind_ = Kind::Evaluation;
  m.points_ = std::move(points);
  return m;
}

CuMorphism CuMorphism::restriction(SubComplex Y) {
  CuMorphism m;
  m.kind_ = Kind::Restriction;
  m.sub_ = std::make_shared<const SubComplex>(std::move(Y));
  return m;
}

CuMorphism CuMorphism::precomposition(CellMap cm) {
  CuMorphism m;
  m.kind_ = Kind::Precomposition;
  m.map_ = std::make_shared<const CellMap>(std::move(cm));
  return m;
}

CuMorphism CuMorphism::composition(std::vector<Step> steps) {
  if (steps.empty()) fail(Err::InvalidSpec, "empty composition");
  CuMorphism m;
  m.kind_ = Kind::Composition;
  m.steps_ = std::move(steps);
  return m;
}

const SubComplex& CuMorphism::subcomplex() const {
  if (!sub_) fail(Err::Internal, "no subcomplex on this morphism");
  return *sub_;
}

const CellMap& CuMorphism::cell_map() const {
  if (!map_) fail(Err::Internal, "no cell map on this morphism");
  return *map_;
}

std::vector<std::vector<long long>> CuMorphism::block_matrix(
    const std::vector<std::vector<long long>>& incidence, int block) {
  std::vector<std::vector<long long>> out(incidence.size() * block);
  for (size_t i = 0; i < incidence.size(); ++i)
    for (int bi = 0; bi < block; ++bi) {
      auto& row = out[i * block + bi];
      row.assign(incidence[i].size() * block, 0);
      for (size_t j = 0; j < incidence[i].size(); ++j)
        row[j * block + bi] = incidence[i][j];
    }
  return out;
}

namespace {

struct ChainNumber {
  bool infinite = false;
  bool soft = false;
  Rat value;
};

ChainNumber to_number(const ScalarKind& k, const ScalarValue& v) {
  ChainNumber n;
  switch (k.tag) {
    case ScalarTag::Nat:
      n.infinite = v.nat.infinite;
      if (!n.infinite) n.value = Rat((long long)v.nat.value);
      return n;
    case ScalarTag::Scaled:
      n.infinite = v.nat.infinite;
      if (!n.infinite) n.value = Rat((long long)v.nat.value, (long long)k.scale);
      return n;
    case ScalarTag::Uhf:
      n.infinite = v.uhf.form == UhfVal::Infinite;
      n.soft = v.uhf.form == UhfVal::Soft;
      if (!n.infinite) n.value = v.uhf.value;
      return n;
    case ScalarTag::Product: break;
  }
  fail(Err::KindMismatch, "matrix maps act on chain atoms");
}

ScalarValue from_number(const ScalarKind& k, const ChainNumber& n) {
  switch (k.tag) {
    case ScalarTag::Nat: {
      if (n.soft) fail(Err::KindMismatch, "soft value cannot land in " + k.str());
      if (n.infinite) return ScalarValue::of_nat(ExtNat::inf());
      if (!n.value.is_integer())
        fail(Err::ElementNotInSemigroup, n.value.str() + " is not a natural number");
      return ScalarValue::of_nat(ExtNat::of((unsigned long long)n.value.num()));
    }
    case ScalarTag::Scaled: {
      if (n.soft) fail(Err::KindMismatch, "soft value cannot land in " + k.str());
      if (n.infinite) return ScalarValue::of_scaled(ExtNat::inf());
      Rat num = n.value * Rat((long long)k.scale);
      if (!num.is_integer())
        fail(Err::ElementNotInSemigroup,
             n.value.str() + " is not a multiple of 1/" + std::to_string(k.scale));
      return ScalarValue::of_scaled(ExtNat::of((unsigned long long)num.num()));
    }
    case ScalarTag::Uhf: {
      if (n.infinite) return ScalarValue::of_uhf(UhfVal::inf());
      if (n.soft) return ScalarValue::of_uhf(UhfVal::soft(n.value));
      ScalarValue v = ScalarValue::of_uhf(UhfVal::compact(n.value));
      scalar_require_valid(k, v);
      return v;
    }
    case ScalarTag::Product: break;
  }
  fail(Err::KindMismatch, "matrix maps land on chain atoms");
}

}  // namespace

ScalarValue apply_matrix_scalar(const std::vector<std::vector<long long>>& entries,
                                const ScalarKind& src, const ScalarKind& dst,
                                const ScalarValue& x) {
  auto src_atoms_k = flatten_kind(src);
  auto dst_atoms_k = flatten_kind(dst);
  auto xs = flatten_value(src, x);
  if (xs.size() != entries[0].size())
    fail(Err::DescriptorMismatch, "matrix width does not match the source arity");
  if (dst_atoms_k.size() != entries.size())
    fail(Err::DescriptorMismatch, "matrix height does not match the target arity");

  std::vector<ChainNumber> inputs;
  for (size_t j = 0; j < xs.size(); ++j) inputs.push_back(to_number(src_atoms_k[j], xs[j]));

  std::vector<ScalarValue> out_atoms;
  for (size_t i = 0; i < entries.size(); ++i) {
    ChainNumber acc;
    acc.value = Rat(0);
    for (size_t j = 0; j < entries[i].size(); ++j) {
      if (entries[i][j] == 0) continue;  // 0 * infinity = 0
      if (inputs[j].infinite) {
        acc.infinite = true;
        continue;
      }
      acc.soft |= inputs[j].soft;
      acc.value = acc.value + Rat(entries[i][j]) * inputs[j].value;
    }
    if (acc.soft && acc.value.is_zero()) acc.soft = false;
    out_atoms.push_back(from_number(dst_atoms_k[i], acc));
  }
  size_t cursor = 0;
  return unflatten_value(dst, out_atoms, cursor);
}

Element CuMorphism::apply(const Semigroup& src, const Semigroup& dst, const Element& x) const {
  src.require_element(x);
  // Morphisms out of a pullback act through the right (function) component.
  if (x.is_pair()) {
    const auto* pb = dynamic_cast<const PullbackSemigroup*>(&src);
    if (!pb) fail(Err::DescriptorMismatch, "pair element outside a pullback semigroup");
    return apply(*pb->right_semigroup(), dst, x.right());
  }
  switch (kind_) {
    case Kind::Identity: return x;
    case Kind::MatrixMap: {
      if (x.is_scalar()) {
        const auto* sk = dynamic_cast<const ScalarSemigroup*>(&src);
        const auto* dk = dynamic_cast<const ScalarSemigroup*>(&dst);
        if (!sk || !dk) fail(Err::DescriptorMismatch, "matrix map between scalar semigroups");
        return Element::of_scalar(apply_matrix_scalar(entries_, sk->kind(), dk->kind(), x.scalar()));
      }
      // cellwise action on step functions
      const auto* sl = dynamic_cast<const LscSemigroup*>(&src);
      const auto* dl = dynamic_cast<const LscSemigroup*>(&dst);
      if (!sl || !dl || !(sl->space() == dl->space()))
        fail(Err::DescriptorMismatch, "cellwise matrix map needs Lsc semigroups on one space");
      const StepFunction& f = x.step();
      auto cell = [&](const ScalarValue& v) {
        return apply_matrix_scalar(entries_, sl->scalar(), dl->scalar(), v);
      };
      std::vector<ScalarValue> verts;
      for (auto& v : f.vertex_values()) verts.push_back(cell(v));
      std::vector<StepFunction::EdgeData> edges;
      for (auto& ed : f.edges()) {
        StepFunction::EdgeData ne;
        ne.cuts = ed.cuts;
        for (auto& v : ed.point_values) ne.point_values.push_back(cell(v));
        for (auto& v : ed.interval_values) ne.interval_values.push_back(cell(v));
        edges.push_back(std::move(ne));
      }
      return Element::of_step(StepFunction(sl->space(), dl->scalar(), std::move(verts),
                                           std::move(edges)));
    }
    case Kind::Evaluation: {
      const StepFunction& f = x.step();
      std::vector<ScalarValue> atoms;
      for (auto& p : points_)
        for (auto& a : flatten_value(f.kind(), f.eval(p))) atoms.push_back(a);
      const auto* dk = dynamic_cast<const ScalarSemigroup*>(&dst);
      if (!dk) fail(Err::DescriptorMismatch, "evaluation lands in a scalar semigroup");
      size_t cursor = 0;
      ScalarValue v = unflatten_value(dk->kind(), atoms, cursor);
      if (cursor != atoms.size())
        fail(Err::DescriptorMismatch, "evaluation arity does not match the base kind");
      return Element::of_scalar(std::move(v));
    }
    case Kind::Restriction: return Element::of_step(restrict_step(x.step(), *sub_));
    case Kind::Precomposition: return Element::of_step(precompose(x.step(), *map_));
    case Kind::Composition: {
      Element cur = x;
      const Semigroup* from = &src;
      for (size_t i = 0; i < steps_.size(); ++i) {
        const Semigroup& to = i + 1 == steps_.size() ? dst : *steps_[i].target;
        cur = steps_[i].morphism->apply(*from, to, cur);
        from = i + 1 == steps_.size() ? &dst : steps_[i].target.get();
      }
      return cur;
    }
  }
  fail(Err::Internal, "morphism apply");
}

}  // namespace cusg
