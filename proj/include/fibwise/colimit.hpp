#pragma once

#include "fibwise/smap.hpp"

namespace fibwise {

/// A finite diagram of simplicial sets: arrows reference object indices.
struct Diagram {
  std::vector<SSetPtr> objects;
  struct Arrow {
    int src;
    int tgt;
    SMap f;
  };
  std::vector<Arrow> arrows;

  int add(SSetPtr X) {
    objects.push_back(std::move(X));
    return static_cast<int>(objects.size()) - 1;
  }
  void arrow(int s, int t, SMap f) {
    arrows.push_back(Arrow{s, t, std::move(f)});
  }
};

/// Colimit computed levelwise by union-find on simplex values, with the
/// normal form extracted afterwards.  Keeps the cocone legs and supports
/// factorisation through any other cocone.
class Colimit {
 public:
  explicit Colimit(Diagram d, const std::string& name_prefix = "q");

  const SSetPtr& space() const { return space_; }
  const SMap& leg(int obj) const { return legs_[obj]; }
  const Diagram& diagram() const { return dia_; }

  /// Unique map space -> W through a commuting cocone (one leg per object).
  SMap factor(const std::vector<SMap>& cocone) const;

 private:
  Diagram dia_;
  SSetPtr space_;
  std::vector<SMap> legs_;
};

/// Disjoint union; legs are the coprojections.
Colimit coproduct(std::vector<SSetPtr> objects);
/// Pushout of B <-f- A -g-> C; legs order: [A, B, C].
Colimit pushout(const SMap& f, const SMap& g);
/// Coequalizer of f, g : A => B; legs order: [A, B].
Colimit coequalizer(const SMap& f, const SMap& g);

struct QuotientResult {
  SSetPtr space;
  SMap proj;           // X -> X/A
  SimplexRef basepoint;  // the collapsed vertex
};
/// X/A along a subcomplex inclusion; for empty A this is X + a fresh point.
QuotientResult quotient(SSetPtr X, const SMap& incl);

/// Full subcomplex on a face-closed set of nondegenerate simplices.
struct SubcomplexResult {
  SSetPtr space;
  SMap incl;
};
SubcomplexResult subcomplex(SSetPtr X,
                            const std::function<bool(SimplexRef)>& keep);

}  // namespace fibwise
