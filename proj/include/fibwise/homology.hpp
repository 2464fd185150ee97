#pragma once

#include "fibwise/retractive.hpp"

namespace fibwise {

/// Coefficient field: rationals (p = 0) or F_p for prime p <= 97.
struct Field {
  int p = 0;
  static Field Q() { return Field{0}; }
  static Field Fp(int prime);
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

/// Betti numbers of the normalized chain complex, indices 0..dim.
std::vector<int> homology(const SSetPtr& X, Field k);
/// Reduced Betti numbers of a nonempty complex.
std::vector<int> reduced_homology(const SSetPtr& X, Field k);
/// Reduced homology of the cofibre X_! Y = Ytot / s(X) of a retractive space.
std::vector<int> rel_quotient_homology(const RetSpace& Y, Field k);

/// dim H_p(Ytot) = dim H_p(X) + dim H~_p(X_! Y) for all p.
bool split_sequence_holds(const RetSpace& Y, Field k);

/// d ∘ d = 0 for the normalized chain complex of X (diagnostic).
bool boundary_squares_to_zero(const SSetPtr& X, Field k);

}  // namespace fibwise
