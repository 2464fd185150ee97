#pragma once

#include <functional>
#include <optional>

#include "fibwise/smap.hpp"

namespace fibwise {

/// Equality constraint post ∘ h ∘ pre == rhs on candidate maps h: A -> B.
/// `pre` defaults to the identity of A when absent; `post` to the identity
/// of B.  rhs maps pre.src() -> post.tgt().
struct MapConstraint {
  std::optional<SMap> pre;
  std::optional<SMap> post;
  SMap rhs;
};

struct EnumOptions {
  std::vector<MapConstraint> constraints;
  /// pinned values: simplex of A -> required image value
  std::vector<std::pair<SimplexRef, Value>> pins;
  /// stop after this many maps (0 = no limit)
  size_t limit = 0;
};

/// All simplicial maps A -> B satisfying the options, by backtracking over
/// nondegenerate simplices in dimension order with face-compatibility
/// pruning.  B must reach at least dim A.
std::vector<SMap> enumerate_maps(SSetPtr A, SSetPtr B,
                                 const EnumOptions& opts = {});
size_t count_maps(SSetPtr A, SSetPtr B, const EnumOptions& opts = {});
bool exists_map(SSetPtr A, SSetPtr B, const EnumOptions& opts = {});

/// Search for an isomorphism A -> B; optional equivariance constraints
/// h ∘ ga == gb ∘ h for listed automorphism pairs.
std::optional<SMap> find_iso(
    SSetPtr A, SSetPtr B,
    const std::vector<std::pair<SMap, SMap>>& equivariance = {});

}  // namespace fibwise
