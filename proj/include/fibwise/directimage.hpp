#pragma once

#include <map>

#include "fibwise/rawsset.hpp"
#include "fibwise/smash.hpp"

namespace fibwise {

/// Family of pullback complexes P_sigma = Delta^n x_W T indexed by simplex
/// values of W, with restriction maps along simplex operators; shared by the
/// section-formula constructions below.
class SimplexFamily {
 public:
  SimplexFamily(SSetPtr w, SMap to_w);
  /// classifying map + pullback for a value of W
  std::pair<SMap, Pullback>& at(const Value& sigma);
  SSetPtr delta(int n);
  /// restriction P_tau -> P_sigma along op : Delta^{dim tau} -> Delta^{dim
  /// sigma} (with sigma-hat ∘ op = tau-hat)
  SMap restrict(const Value& tau, const Value& sigma, const SMap& op);
  const SMap& to_w() const { return to_w_; }

 private:
  SSetPtr w_;
  SMap to_w_;
  std::vector<SSetPtr> std_;
  std::map<std::string, std::pair<SMap, Pullback>> built_;
};

std::string map_fingerprint(const SMap& t);
/// raw-element key used by the section-formula constructions
std::string section_elem_key(const Value& sigma, const SMap& t);

/// f_* Y computed up to a dimension bound: level-n elements are pairs of an
/// n-simplex sigma of X' and a section of Y -> X over the pullback f^*sigma.
struct DirectImage {
  RetSpace input;  // Y over X
  int bound;
  RetSpace sp;  // f_* Y over X', total truncated at bound
  RawSSet raw;
  RawSSet::Normal norm;
  struct Elem {
    Value sigma;
    SMap t;
  };
  std::vector<std::vector<Elem>> elems;
  std::shared_ptr<SimplexFamily> fam;
};
DirectImage direct_image(const SMap& f, const RetSpace& Y, int bound);

/// Internal hom F_X(Y, Z) up to a dimension bound, via the section formula
/// underlying the cospan presentation: level-n elements are pairs of an
/// n-simplex sigma of X and a fibrewise map u : sigma x_X Y -> Z restricting
/// to the basepoint section over the section of Y.
struct InternalHom {
  RetSpace Y, Z;
  int bound;
  RetSpace sp;  // F_X(Y,Z) over X, total truncated at bound
  RawSSet raw;
  RawSSet::Normal norm;
  struct Elem {
    Value sigma;
    SMap u;
  };
  std::vector<std::vector<Elem>> elems;
  std::shared_ptr<SimplexFamily> fam;
  /// raw element index of a total-space value (inverse of norm.value_of)
  int raw_index(const Value& v) const;
  mutable std::vector<std::map<std::string, int>> inv_;
};
InternalHom internal_hom(const RetSpace& Y, const RetSpace& Z, int bound);

/// Pointed cotensor F_X(X*K, Y) up to the bound.
InternalHom pcotensor(SSetPtr X, const SMap& terminal, const RetSpace& K,
                      const RetSpace& Y, int bound);

}  // namespace fibwise
