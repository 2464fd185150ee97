#pragma once

#include <vector>

namespace fibwise {

/// Permutations of {0..n-1} as value vectors: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // a after b
Perm perm_inverse(const Perm& p);
Perm adjacent_transposition(int n, int i);  // swaps i, i+1
bool perm_is_identity(const Perm& p);
/// factor into adjacent transpositions: p = t_{out[k-1]} ∘ ... ∘ t_{out[0]}
std::vector<int> perm_factor_adjacent(const Perm& p);
/// block embedding Sigma_p x Sigma_q -> Sigma_{p+q}
Perm block_perm(const Perm& a, const Perm& b);
/// all permutations of n (n <= 6)
std::vector<Perm> all_perms(int n);

/// (p,q)-shuffles: minimal coset representatives of Sigma_p x Sigma_q in
/// Sigma_{p+q}, i.e. permutations increasing on both blocks.
std::vector<Perm> shuffles(int p, int q);
/// decompose g = c ∘ (a x b) with c a (p,q)-shuffle
struct ShuffleCoset {
  Perm rep;
  Perm left;   // in Sigma_p
  Perm right;  // in Sigma_q
};
ShuffleCoset shuffle_decompose(const Perm& g, int p, int q);
int shuffle_index(const std::vector<Perm>& reps, const Perm& rep);

/// Cosets Sigma_n / (1^k x Sigma_{n-k}), represented by the injective word
/// (g(0), ..., g(k-1)); the canonical representative extends the word with
/// the remaining values in increasing order.
std::vector<Perm> injection_cosets(int n, int k);
/// decompose g = rep ∘ (1^k x h) with h in Sigma_{n-k}
struct InjCoset {
  Perm rep;
  Perm tail;  // h in Sigma_{n-k}
};
InjCoset injection_decompose(const Perm& g, int k);
int injection_index(const std::vector<Perm>& reps, const Perm& rep);

/// compositions of n into three ordered parts and their minimal coset
/// representatives for Sigma_p x Sigma_s x Sigma_q (triple shuffles)
std::vector<Perm> shuffles3(int p, int s, int q);
struct Shuffle3Coset {
  Perm rep;
  Perm a, b, c;  // components in Sigma_p, Sigma_s, Sigma_q
};
Shuffle3Coset shuffle3_decompose(const Perm& g, int p, int s, int q);

}  // namespace fibwise
