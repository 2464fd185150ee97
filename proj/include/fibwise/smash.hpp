#pragma once

#include "fibwise/retractive.hpp"

namespace fibwise {

/// Y ∧_X Z: the colimit of the span/cospan diagram collapsing the fibrewise
/// wedge inside the fibre product.  Provenance (fibre product + colimit) is
/// kept so that maps out of the smash can be built by factorisation.
struct Smash {
  RetSpace Y, Z;
  RetSpace space;
  Pullback prod;  // Ytot x_X Ztot
  Colimit colim;  // objects [X, Ytot, Ztot, P]
  const SMap& q() const { return colim.leg(3); }  // P -> total
};

Smash fib_smash(const RetSpace& Y, const RetSpace& Z);

/// Functorial action f ∧ g between already-built smashes over the same base.
RetMap smash_map(const Smash& s, const Smash& t, const RetMap& f,
                 const RetMap& g);

/// Canonical comparison between two builds of the same smash.
RetMap smash_comparison(const Smash& s, const Smash& t);

/// Braiding Y ∧_X Z -> Z ∧_X Y.
RetMap smash_symmetry(const Smash& yz, const Smash& zy);

/// Left unitor X_{+X} ∧_X Z -> Z  (unit must be a PlusBase of the identity).
RetMap smash_unitor_left(const PlusBase& unit, const Smash& uz);
/// Right unitor Y ∧_X X_{+X} -> Y.
RetMap smash_unitor_right(const PlusBase& unit, const Smash& yu);

/// Triple smash A ∧ B ∧ C built in one step, with comparisons to the two
/// iterated builds.
struct Smash3 {
  RetSpace A, B, C;
  RetSpace space;
  Pullback p12;    // At x_X Bt
  Pullback p123;   // (At x Bt) x Ct
  Colimit colim;   // pushout [U, P123, X]; U = union of basepoint loci
  const SMap& q() const { return colim.leg(1); }  // P123 -> total
};
Smash3 fib_smash3(const RetSpace& A, const RetSpace& B, const RetSpace& C);
/// Comparison Smash3 -> (A ∧ B) ∧ C.
RetMap smash3_to_left(const Smash3& t, const Smash& ab, const Smash& ab_c);
/// Comparison Smash3 -> A ∧ (B ∧ C).
RetMap smash3_to_right(const Smash3& t, const Smash& bc, const Smash& a_bc);
/// Associator (A ∧ B) ∧ C -> A ∧ (B ∧ C).
RetMap smash_assoc(const Smash3& t, const Smash& ab, const Smash& ab_c,
                   const Smash& bc, const Smash& a_bc);
/// Middle swap on the triple smash: A ∧ B ∧ C -> A ∧ C ∧ B.
RetMap smash3_swap_last(const Smash3& t, const Smash3& t_swapped);
/// First swap: A ∧ B ∧ C -> B ∧ A ∧ C.
RetMap smash3_swap_first(const Smash3& t, const Smash3& t_swapped);

/// Pointed tensor K ⊙_X Y = (X*K) ∧_X Y packaged with its provenance.
struct PTensor {
  RetSpace K;       // pointed object over the point
  PullbackRet xk;   // X * K
  Smash smash;      // (X*K) ∧_X Y
  const RetSpace& space() const { return smash.space; }
};
PTensor ptensor(SSetPtr X, const SMap& terminal, const RetSpace& K,
                const RetSpace& Y);
/// Functorial K ⊙ f between built tensors (same K).
RetMap ptensor_map(const PTensor& a, const PTensor& b, const RetMap& f);
/// Action of a pointed automorphism of K: g ⊙ id.
RetMap ptensor_act(const PTensor& a, const PTensor& b, const RetMap& g_onK,
                   const SMap& terminal);

}  // namespace fibwise
