#pragma once

#include "fibwise/colimit.hpp"
#include "fibwise/enumerate.hpp"
#include "fibwise/limits.hpp"
#include "fibwise/sset_std.hpp"

namespace fibwise {

/// A retractive space X -> Y -> X with retraction ∘ section = id.
struct RetSpace {
  SSetPtr base;
  SSetPtr total;
  SMap section;     // base -> total
  SMap retraction;  // total -> base

  bool same_base(const RetSpace& o) const {
    return base.get() == o.base.get();
  }
};
RetSpace make_retspace(SSetPtr base, SSetPtr total, SMap section,
                       SMap retraction);

/// Morphism of retractive spaces over a fixed base.
struct RetMap {
  RetSpace src, tgt;
  SMap map;
};
RetMap make_retmap(RetSpace src, RetSpace tgt, SMap map);
RetMap ret_identity(const RetSpace& Y);
RetMap ret_compose(const RetMap& g, const RetMap& f);
bool ret_iso(const RetMap& m);
std::optional<RetMap> ret_inverse(const RetMap& m);

/// The zero object 0_X (total = X, section = retraction = id).
RetSpace ret_zero(SSetPtr X);
bool is_zero(const RetSpace& Y);

/// Y_{+X}: freely adjoin a section to p : Y -> X.
struct PlusBase {
  RetSpace sp;
  Colimit co;  // coproduct [X, Y]; leg 0 is the section copy
  /// which coproduct copy a nondegenerate total simplex came from
  int copy_of(SimplexRef r) const;
};
PlusBase plus_base(const SMap& p);
/// X_{+X} (the fibrewise monoidal unit).
PlusBase unit_ret(SSetPtr X);
/// x_{+X} for a vertex x of X.
PlusBase vertex_plus(SSetPtr X, SimplexRef vertex);

/// f_! Y via the iterated pushout.
struct Pushforward {
  RetSpace input;  // Y over X
  RetSpace sp;     // f_! Y over X'
  Colimit co;      // pushout diagram [X, Ytot, X']
  SMap into;       // Ytot -> f_! Y (the colimit leg)
};
Pushforward pushforward(const SMap& f, const RetSpace& Y);
RetMap pushforward_map(const SMap& f, const Pushforward& PY,
                       const Pushforward& PZ, const RetMap& phi);

/// f^* Z with the induced section and retraction.
struct PullbackRet {
  RetSpace input;  // Z over X'
  RetSpace sp;     // f^* Z over X
  Pullback pb;     // X x_{X'} Ztot
};
PullbackRet pullback_ret(const SMap& f, const RetSpace& Z);
RetMap pullback_ret_map(const SMap& f, const PullbackRet& PZ,
                        const PullbackRet& PW, const RetMap& phi);
/// X * K for pointed K over a point: pullback along X -> *.
PullbackRet star(SSetPtr X, const SMap& terminal, const RetSpace& K);

/// (f_! ⊣ f^*) adjuncts, exact and mutually inverse.
RetMap adjunct_fwd(const SMap& f, const Pushforward& PY, const PullbackRet& PZ,
                   const RetMap& psi);  // psi: f_!Y -> Z  ~>  Y -> f^*Z
RetMap adjunct_bwd(const SMap& f, const Pushforward& PY, const PullbackRet& PZ,
                   const RetMap& phi);  // phi: Y -> f^*Z  ~>  f_!Y -> Z

/// Morphisms of retractive spaces over a fixed base, by enumeration.
std::vector<RetMap> enumerate_ret_maps(const RetSpace& Y, const RetSpace& Z);
size_t count_ret_maps(const RetSpace& Y, const RetSpace& Z);
/// Equivariant isomorphism search (pairs of automorphisms that must commute).
std::optional<RetMap> find_ret_iso(
    const RetSpace& Y, const RetSpace& Z,
    const std::vector<std::pair<RetMap, RetMap>>& equivariance = {});

/// The zero morphism Y -> Z over X.
RetMap ret_zero_map(const RetSpace& Y, const RetSpace& Z);

}  // namespace fibwise
