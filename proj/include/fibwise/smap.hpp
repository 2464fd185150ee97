#pragma once

#include <optional>

#include "fibwise/sset.hpp"

namespace fibwise {

/// Simplicial map, stored as the normal-form value of each nondegenerate
/// source simplex.  Construction checks commutation with all face maps.
class SMap {
 public:
  SMap() = default;

  static SMap build(SSetPtr src, SSetPtr tgt,
                    std::vector<std::vector<Value>> assign);
  /// Unchecked variant for internal use where validity is structural.
  static SMap trusted(SSetPtr src, SSetPtr tgt,
                      std::vector<std::vector<Value>> assign);
  static SMap identity(SSetPtr X);
  static SMap compose(const SMap& g, const SMap& f);  // g after f
  /// The unique map to a one-vertex target.
  static SMap constant(SSetPtr src, SSetPtr tgt, SimplexRef vertex);

  const SSetPtr& src() const { return src_; }
  const SSetPtr& tgt() const { return tgt_; }

  Value apply(const Value& v) const;
  Value apply(SimplexRef r) const { return assign_[r.dim][r.idx]; }

  bool same_assignment(const SMap& o) const { return assign_ == o.assign_; }
  /// Equality as a morphism between the same objects.
  bool equals(const SMap& o) const {
    return src_.get() == o.src_.get() && tgt_.get() == o.tgt_.get() &&
           assign_ == o.assign_;
  }

  bool is_identity_map() const;
  bool is_mono() const;
  /// Inverse if this is an isomorphism of simplicial sets.
  std::optional<SMap> inverse() const;
  bool is_isomorphism() const { return inverse().has_value(); }

  const std::vector<std::vector<Value>>& assignment() const { return assign_; }

 private:
  SSetPtr src_, tgt_;
  std::vector<std::vector<Value>> assign_;
  void validate() const;
};

/// The map Delta^n -> X classifying an n-dimensional value of X.
SMap classifying_map(SSetPtr simplex_n, SSetPtr X, const Value& v);

/// Coface Delta^{n-1} -> Delta^n and codegeneracy Delta^{n+1} -> Delta^n.
SMap coface_map(SSetPtr from, SSetPtr to, int i);
SMap codegeneracy_map(SSetPtr from, SSetPtr to, int i);

}  // namespace fibwise
