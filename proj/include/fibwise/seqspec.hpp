#pragma once

#include <functional>

#include "fibwise/directimage.hpp"

namespace fibwise {

/// Shared per-base data: the point, the pointed circle and X * S^1.
/// Contexts over different bases must share `pt` and `s1` so that base
/// change can move suspensions across.
struct BaseCtx {
  SSetPtr X;
  SSetPtr pt;
  SMap terminal;    // X -> pt
  RetSpace s1;      // pointed circle over pt
  PullbackRet xs1;  // X * S^1
};
RetSpace pointed_circle_over(SSetPtr pt);
BaseCtx make_base_ctx(SSetPtr X, SSetPtr pt, const RetSpace& s1);
BaseCtx make_base_ctx(SSetPtr X);

/// S^1 ⊙_X Y with provenance, sharing the context's X*S^1.
PTensor susp_of(const BaseCtx& c, const RetSpace& Y);

/// Y, ΣY, Σ²Y, ... ; stage j is Σ^{j} Y.
struct SuspChain {
  RetSpace base_obj;
  std::vector<PTensor> stages;
  const RetSpace& at(int j) const {
    return j == 0 ? base_obj : stages[j - 1].smash.space;
  }
};
SuspChain susp_chain(const BaseCtx& c, const RetSpace& Y, int upto);
/// Σ^j f between two chains.
RetMap chain_map(const BaseCtx& c, const SuspChain& a, const SuspChain& b,
                 const RetMap& f, int j);

/// Fibrewise wedge of retractive spaces with origin lookup.
struct Wedge {
  Colimit colim;  // objects [X, totals...]
  RetSpace space;
  /// (summand, simplex) of a nondegenerate total simplex; summand -1 = base
  std::pair<int, SimplexRef> origin(SimplexRef r) const;
  const SMap& leg_total(int i) const { return colim.leg(i + 1); }
  int arity() const {
    return static_cast<int>(colim.diagram().objects.size()) - 1;
  }
};
Wedge wedge_many(const BaseCtx& c, const std::vector<RetSpace>& summands);
/// Map out of a wedge given per-summand retractive maps.
RetMap wedge_factor(const Wedge& w, const RetSpace& target,
                    const std::vector<RetMap>& legs);

/// Level-truncated sequential X-spectrum.
struct SeqSpec {
  int N = 0;
  std::vector<RetSpace> level;  // 0..N
  std::vector<PTensor> susp;    // S^1 ⊙ level[n], n < N
  std::vector<RetMap> sigma;    // Σ level[n] -> level[n+1]
};
SeqSpec seq_from_levels(
    const BaseCtx& c, std::vector<RetSpace> levels,
    const std::function<RetMap(int, const PTensor&)>& sigma_of);
SeqSpec seq_zero(const BaseCtx& c, int N);

struct SeqMor {
  std::vector<RetMap> f;  // one per level
};
bool seq_mor_squares_ok(const BaseCtx& c, const SeqSpec& A, const SeqSpec& B,
                        const std::vector<RetMap>& f);
SeqMor make_seq_mor(const BaseCtx& c, const SeqSpec& A, const SeqSpec& B,
                    std::vector<RetMap> f);
std::vector<SeqMor> enumerate_seq_mors(const BaseCtx& c, const SeqSpec& A,
                                       const SeqSpec& B);
bool seq_mor_iso(const SeqMor& m);

/// Free spectrum on Y at level k.
SeqSpec free_seq(const BaseCtx& c, int k, const RetSpace& Y, int N);
/// Free extension of u : Y -> A.level[k] along the (free ⊣ ev_k) adjunction.
SeqMor free_extend(const BaseCtx& c, const SeqSpec& freeA, int k,
                   const SeqSpec& B, const RetMap& u);

/// zeta_{k,X}(C) : free(k+1, Σ C) -> free(k, C); iso above level k.
struct Zeta {
  PTensor sc;  // Σ C
  SeqSpec dom, cod;
  SeqMor map;
};
Zeta zeta(const BaseCtx& c, int k, const RetSpace& C, int N);

SeqSpec shift(const SeqSpec& A);                       // s_X
SeqSpec unshift(const BaseCtx& c, const SeqSpec& A);   // l_X

/// Prolonged suspension (levelwise Σ_X) and its twisted tensor variant.
struct SuspSpec {
  SeqSpec sp;
  std::vector<PTensor> lift;  // Σ level[n] as a tensor, n <= N
  std::vector<RetMap> twist;  // the S^1/S^1 interchange on Σ² level[n]
};
SuspSpec susp_spec(const BaseCtx& c, const SeqSpec& A);
/// Tensor version S^1 ⊙ A: same levels, structure maps twisted.
SeqSpec tensor_susp_spec(const BaseCtx& c, const SeqSpec& A,
                         const SuspSpec& prolonged);

/// Levelwise loops up to the bound, with counit/adjunct machinery.
struct LoopSpec {
  SeqSpec sp;
  std::vector<InternalHom> hom;  // Ω level[n]
};
LoopSpec loop_spec(const BaseCtx& c, const SeqSpec& A, int bound);
/// counit Σ(Ω W) -> W for a built hom.
RetMap cotensor_counit(const BaseCtx& c, const PTensor& ten,
                       const InternalHom& hom);
/// adjunct W -> Ω V of g : Σ W -> V.
RetMap cotensor_adjunct(const BaseCtx& c, const PTensor& tenW,
                        const InternalHom& homV, const RetMap& g);

/// The free-spectrum monad T(Z)_n = wedge of suspensions.
struct TspLevel {
  Wedge w;
  std::vector<SuspChain> chains;  // chain i suspends Z_i up to n-i
};
struct Tsp {
  std::vector<TspLevel> levels;  // 0..N
};
Tsp tsp_apply(const BaseCtx& c, const std::vector<RetSpace>& Z);
/// unit Z_n -> T(Z)_n
RetMap tsp_unit(const Tsp& t, int n, const RetSpace& Zn);
/// algebra structure map T(A)_n -> A_n of a spectrum
RetMap tsp_algebra(const BaseCtx& c, const Tsp& t, const SeqSpec& A, int n);
/// iterated structure composite Σ^{n-i} A_i -> A_n along a chain
RetMap iterated_sigma(const BaseCtx& c, const SeqSpec& A, const SuspChain& ch,
                      int i, int n);
/// Σ(wedge) -> wedge(Σ) distributor
RetMap susp_wedge_distrib(const BaseCtx& c, const PTensor& sw, const Wedge& w,
                          const Wedge& target,
                          const std::vector<PTensor>& summand_susp);
/// unit axiom (algebra ∘ unit = id) for all levels
bool tsp_algebra_check(const BaseCtx& c, const SeqSpec& A);
/// comparison Σ^a (chA.at(b)) -> chB.at(a+b) where outer is a chain over
/// chA.at(b) and chA, chB are chains over the same object
RetMap chain_reassoc(const BaseCtx& c, const SuspChain& outer,
                     const SuspChain& chA, const SuspChain& chB, int a, int b);
/// monad multiplication T(T Z)_n -> T(Z)_n
RetMap tsp_mu(const BaseCtx& c, const std::vector<RetSpace>& Z, const Tsp& t,
              const Tsp& tt, int n);
/// functorial action T(g)_n for a levelwise map g : W -> V of sequences
RetMap tsp_map(const BaseCtx& c, const Tsp& tsrc, const Tsp& ttgt,
               const std::vector<RetMap>& g, int n);

/// Base change, levelwise, with the tensor comparison built in.
SeqSpec seq_pushforward(const BaseCtx& cx, const BaseCtx& cy, const SMap& f,
                        const SeqSpec& A);
SeqSpec seq_pullback(const BaseCtx& cx, const BaseCtx& cy, const SMap& f,
                     const SeqSpec& A);

/// Double spectra: grid A[m][n] with two suspension directions.
struct DblSpec {
  int M = 0, N = 0;
  std::vector<std::vector<RetSpace>> grid;
  std::vector<std::vector<PTensor>> susp;  // S^1 ⊙ grid[m][n]
  std::vector<std::vector<RetMap>> sig_h;  // Σ grid[m][n] -> grid[m+1][n]
  std::vector<std::vector<RetMap>> sig_v;  // Σ grid[m][n] -> grid[m][n+1]
};
DblSpec dbl_from(const BaseCtx& c, const SeqSpec& P, int M);
SeqSpec dbl_ev0(const BaseCtx& c, const DblSpec& D);
bool dbl_interchange_ok(const BaseCtx& c, const DblSpec& D);

}  // namespace fibwise
