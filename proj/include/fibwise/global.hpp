#pragma once

#include "fibwise/smash.hpp"

namespace fibwise {

/// Object of the global category: a base together with a retractive space
/// over it.
struct GlobObj {
  SSetPtr base;
  RetSpace fib;
};
GlobObj make_globobj(RetSpace fib);

/// Morphism (f, psi): (X, Y) -> (X', Z), stored in the canonical pair form
/// together with the data needed to interconvert the four presentations.
struct GlobMor {
  GlobObj src, tgt;
  SMap f;            // X -> X'
  Pushforward pf;    // f_! Y
  PullbackRet pr;    // f^* Z
  RetMap psi;        // f_! Y -> Z   (over-target form)

  RetMap over_source() const;  // psi^v : Y -> f^* Z
  SMap square() const;         // underlying Ytot -> Ztot
};
/// Build from the commuting-square presentation.
GlobMor globmor_from_square(GlobObj src, GlobObj tgt, SMap f, SMap square);
/// Build from the over-source presentation phi : Y -> f^* Z, where the
/// pullback f^* Z is the given one.
GlobMor globmor_from_source(GlobObj src, GlobObj tgt, SMap f,
                            const PullbackRet& pr, const SMap& phi_total);
GlobMor glob_identity(const GlobObj& a);
bool glob_is_iso(const GlobMor& m);
bool glob_is_mono(const GlobMor& m);

/// External smash product (X,Y) △ (X',Z), retractive over X x X'.
struct ExtSmash {
  GlobObj a, b;
  Pullback bprod;  // Xa x Xb
  Pullback tprod;  // Ya x Zb (totals)
  Colimit colim;   // pushout [U, T, B], U = union of basepoint loci
  GlobObj obj;
  const SMap& q() const { return colim.leg(1); }  // T -> total
};
ExtSmash ext_smash(const GlobObj& a, const GlobObj& b);
/// Functorial action on a pair of global morphisms.
GlobMor ext_smash_map(const ExtSmash& s, const ExtSmash& t, const GlobMor& m1,
                      const GlobMor& m2);
/// Braiding (X,Y)△(X',Z) -> (X',Z)△(X,Y).
GlobMor ext_symmetry(const ExtSmash& ab, const ExtSmash& ba);
/// Left unitor (pt,S^0)△(X,Y) -> (X,Y); `unit` must be the PlusBase of S^0.
GlobMor ext_unitor_left(const PlusBase& unit, const ExtSmash& ua);
GlobMor ext_unitor_right(const PlusBase& unit, const ExtSmash& au);

/// One-step triple external smash and its comparisons.
struct ExtSmash3 {
  GlobObj a, b, c;
  Pullback b12, b123;  // base products
  Pullback t12, t123;  // total products
  Colimit colim;       // pushout [U, T123, B123]
  GlobObj obj;
  const SMap& q() const { return colim.leg(1); }
};
ExtSmash3 ext_smash3(const GlobObj& a, const GlobObj& b, const GlobObj& c);
GlobMor ext3_to_left(const ExtSmash3& t, const ExtSmash& ab,
                     const ExtSmash& ab_c);
GlobMor ext3_to_right(const ExtSmash3& t, const ExtSmash& bc,
                      const ExtSmash& a_bc);

/// Canonical comparison Y ∧_X Z -> Δ_X^* ((X,Y) △ (X,Z)).
struct DiagCompare {
  Smash fib;          // Y ∧_X Z
  ExtSmash ext;       // (X,Y) △ (X,Z)
  PullbackRet pulled; // Δ^* of the external smash
  RetMap cmp;
  bool iso;
};
DiagCompare diag_compare(const RetSpace& Y, const RetSpace& Z);

/// Canonical comparison p1^*Y ∧_{XxX'} p2^*Z <- (X,Y)△(X',Z).
struct ExtFibCompare {
  ExtSmash ext;
  PullbackRet p1y, p2z;
  Smash fib;
  RetMap cmp;  // ext total -> fibrewise smash total (over the product)
  bool iso;
};
ExtFibCompare ext_to_fib_compare(const GlobObj& a, const GlobObj& b);

/// Strict fibre of an external smash at a pair of vertices, compared with
/// the smash of the strict fibres.
struct StrictFibre {
  PullbackRet lhs;  // (x,y)^* (Y △ Z) over the point
  Smash rhs;        // x^*Y ∧ y^*Z over the point
  RetMap cmp;       // rhs -> lhs
  bool iso;
};
StrictFibre strict_fibre_compare(const ExtSmash& e, SimplexRef vx,
                                 SimplexRef vy);

/// The two monoidal embeddings.
GlobObj embed_fib(const RetSpace& pointed);           // K |-> (pt, K)
GlobObj embed_base(SSetPtr K, const RetSpace& s0);    // K |-> (K, K*S^0)

/// Generating (acyclic) cofibrations of the global model structure up to a
/// dimension cap: zero-fibre images of boundary/horn inclusions plus the
/// freely-added-section morphisms over simplices.
struct GeneratingSets {
  std::vector<GlobMor> cofibrations;
  std::vector<GlobMor> acyclic_cofibrations;
};
GeneratingSets generating_sets_global(int cap);

}  // namespace fibwise
