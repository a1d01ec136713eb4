#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cusg/scalar.hpp"
#include "cusg/ternary.hpp"

namespace cusg {

/// Inductive system N̄ → N̄ → ... with multiplication connecting maps, plus
/// its limit order computed from the directed-limit criteria: a semigroup S
/// with maps γ_i is the limit iff (a) every element is a supremum of pushed
/// stage elements and (b) γ_i(x) ≤ γ_j(y) exactly when every x' ≪ x admits a
/// stage k with γ_{i,k}(x') ≪ γ_{j,k}(y).
///
/// Elements are presented as increasing sequences of stage terms; a single
/// term is a stage element. For sequences of finite terms the exact rational
/// supremum of the values is carried as presentation metadata, which lets the
/// order be certified beyond the probed depth.
class ChainLimit {
 public:
  /// multiplier(i) is the map from stage i to stage i+1.
  explicit ChainLimit(std::function<unsigned long long(int)> multiplier);

  /// Stage chain n_k = p.stage(k): the system (M_n)_{n|p} presenting C_p.
  static ChainLimit for_supernatural(const Supernatural& p);
  static ChainLimit constant_multiplier(unsigned long long m);

  /// Accumulated weight: one unit at stage i is worth 1/n_i in the limit.
  Rat stage_total(int i) const;  // n_i as a rational
  /// γ_{i,j} on raw stage values, j >= i.
  ExtNat push(int i, int j, const ExtNat& v) const;

  /// Probes γ_{i,i} = id and γ_{j,k}∘γ_{i,j} = γ_{i,k} on sample values.
  bool check_coherence(int depth) const;

  struct Elem {
    std::vector<std::pair<int, ExtNat>> terms;  // increasing presentation
    std::optional<Rat> sup_value;  // exact sup of the term values, finite terms only
    bool sup_attained = true;
  };

  Elem stage_element(int stage, const ExtNat& v) const;
  /// Compact presentation of a non-negative rational q: lands at the first
  /// stage whose total q divides (Err::InvalidForSupernatural if none within
  /// the scan bound).
  Elem compact_from_value(const Rat& q, int depth) const;
  /// Soft presentation: strictly increasing compacts with supremum r, never
  /// attained.
  Elem soft_from_value(const Rat& r, int depth) const;
  Elem top() const { return stage_element(0, ExtNat::inf()); }

  Ternary leq(const Elem& x, const Elem& y, int depth) const;
  Ternary way_below(const Elem& x, const Elem& y, int depth) const;
  Elem add(const Elem& x, const Elem& y) const;

 private:
  Ternary term_leq(int i, const ExtNat& v, const Elem& y, int depth) const;

  std::function<unsigned long long(int)> multiplier_;
  mutable std::vector<Rat> totals_;  // cached n_i
};

/// The spec-facing limit order on a chain system: decides γ_i(x) ≤ γ_j(y)
/// for stage elements, Err::StageMismatch on negative stages.
Ternary limit_leq(const ChainLimit& L, int stage_x, const ExtNat& x, int stage_y,
                  const ExtNat& y, int depth);

}  // namespace cusg
