#pragma once

#include "fibwise/smap.hpp"

namespace fibwise {

/// Pullback of A -f-> C <-g- B, computed levelwise on jointly nondegenerate
/// pairs of values up to dim A + dim B (or the truncation bound).  Product is
/// the special case of the terminal cospan.
class Pullback {
 public:
  Pullback(const SMap& f, const SMap& g, const std::string& prefix = "p");

  const SSetPtr& space() const { return space_; }
  const SMap& pr1() const { return pr1_; }
  const SMap& pr2() const { return pr2_; }

  /// Unique map W -> space from a commuting cone.
  SMap factor(const SMap& to_a, const SMap& to_b) const;
  /// The value of the pullback corresponding to a matching pair of values.
  Value pair_value(const Value& va, const Value& vb) const;

  const SSetPtr& a() const { return A_; }
  const SSetPtr& b() const { return B_; }

 private:
  SSetPtr A_, B_, space_;
  SMap pr1_, pr2_;
  // nondegenerate pair -> new simplex index, keyed per level
  std::vector<std::unordered_map<std::string, int>> pair_idx_;
};

Pullback product(SSetPtr A, SSetPtr B, const std::string& prefix = "p");

/// Functorial action: the induced map P(A,B) -> P(A',B') of pullbacks (over
/// compatible cospans) or products, from maps f: A->A', g: B->B'.
SMap pullback_map(const Pullback& P, const Pullback& Q, const SMap& f,
                  const SMap& g);

}  // namespace fibwise
