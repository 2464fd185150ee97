#include "doctest.h"
#include "fibwise/seqspec.hpp"

using namespace fibwise;

namespace {
struct Fix {
  SSetPtr s1 = circle();
  SSetPtr d1 = standard(1);
  BaseCtx cs1 = make_base_ctx(s1);
  BaseCtx cd1 = make_base_ctx(d1, cs1.pt, cs1.s1);
  BaseCtx cpt = make_base_ctx(cs1.pt, cs1.pt, cs1.s1);
};

// pointed n-sphere models over the point: S^0, then S^{n} = Σ S^{n-1}
std::vector<RetSpace> spheres(const BaseCtx& cpt, int upto) {
  std::vector<RetSpace> out;
  out.push_back(unit_ret(cpt.pt).sp);  // S^0
  if (upto >= 1) out.push_back(cpt.s1);
  SuspChain ch = susp_chain(cpt, cpt.s1, upto - 1);
  for (int n = 2; n <= upto; ++n) out.push_back(ch.at(n - 1));
  return out;
}
}  // namespace

TEST_CASE("free spectrum of the unit is the pulled-back sphere") {
  Fix F;
  const int N = 3;
  SeqSpec sp = free_seq(F.cs1, 0, unit_ret(F.s1).sp, N);
  CHECK(sp.level[0].total->census() == std::vector<int>{2, 2});
  auto sph = spheres(F.cpt, N);
  for (int n = 0; n <= N; ++n) {
    PullbackRet xs = star(F.s1, F.cs1.terminal, sph[n]);
    auto iso = find_ret_iso(sp.level[n], xs.sp);
    CHECK(iso.has_value());
  }
}

TEST_CASE("free spectrum of a vertex gives wedges of spheres") {
  Fix F;
  const int N = 3;
  SeqSpec sp = free_seq(F.cs1, 0, vertex_plus(F.s1, F.s1->by_name("pt")).sp, N);
  auto sph = spheres(F.cpt, N);
  for (int n = 1; n <= N; ++n) {
    // S^n ∨_pt X: glue the sphere to X at the basepoint
    SSetPtr pt = F.cs1.pt;
    SMap to_sphere =
        classifying_map(pt, sph[n].total,
                        sph[n].section.apply(SimplexRef{0, 0}));
    SMap to_base = classifying_map(pt, F.s1,
                                   SSet::pure(F.s1->by_name("pt")));
    Colimit wedge = pushout(to_sphere, to_base);
    CHECK(sp.level[n].total->census() == wedge.space()->census());
  }
  // free at level 1: level 0 is the zero object
  SeqSpec sp1 = free_seq(F.cs1, 1, unit_ret(F.s1).sp, 2);
  CHECK(is_zero(sp1.level[0]));
}

TEST_CASE("free adjunction: hom sets and extension round trips") {
  Fix F;
  const int N = 2;
  RetSpace y = vertex_plus(F.d1, F.d1->by_name("0")).sp;
  SeqSpec fr = free_seq(F.cd1, 1, y, N);
  SeqSpec b = free_seq(F.cd1, 0, unit_ret(F.d1).sp, N);
  auto specmors = enumerate_seq_mors(F.cd1, fr, b);
  auto retmors = enumerate_ret_maps(y, b.level[1]);
  CHECK(specmors.size() == retmors.size());
  for (const auto& u : retmors) {
    SeqMor ext = free_extend(F.cd1, fr, 1, b, u);
    CHECK(ext.f[1].map.same_assignment(u.map));
  }
}

TEST_CASE("zeta maps are isos above the shift level") {
  Fix F;
  const int N = 3;
  Zeta z = zeta(F.cs1, 1, vertex_plus(F.s1, F.s1->by_name("pt")).sp, N);
  CHECK(is_zero(z.dom.level[1]));
  for (int n = 0; n <= 1; ++n) CHECK(is_zero(z.dom.level[n]));
  for (int n = 2; n <= N; ++n) CHECK(ret_iso(z.map.f[n]));
  Zeta z0 = zeta(F.cs1, 0, unit_ret(F.s1).sp, 2);
  for (int n = 1; n <= 2; ++n) CHECK(ret_iso(z0.map.f[n]));
}

TEST_CASE("shift and unshift") {
  Fix F;
  RetSpace y = vertex_plus(F.s1, F.s1->by_name("pt")).sp;
  SeqSpec f1 = free_seq(F.cs1, 1, y, 3);
  SeqSpec sh = shift(f1);
  SeqSpec f0 = free_seq(F.cs1, 0, y, 2);
  for (int n = 0; n <= 2; ++n)
    CHECK(find_ret_iso(sh.level[n], f0.level[n]).has_value());

  SeqSpec us = unshift(F.cs1, f0);
  SeqSpec us_sh = shift(us);
  for (int n = 0; n <= 1; ++n)
    CHECK(us_sh.level[n].total.get() == f0.level[n].total.get());

  // |Hom(l A, B)| = |Hom(A, s B)| at matched truncations
  SeqSpec a = free_seq(F.cd1, 0, vertex_plus(F.d1, F.d1->by_name("0")).sp, 1);
  SeqSpec b = free_seq(F.cd1, 0, unit_ret(F.d1).sp, 2);
  SeqSpec la = unshift(F.cd1, a);
  SeqSpec sb = shift(b);
  CHECK(enumerate_seq_mors(F.cd1, la, b).size() ==
        enumerate_seq_mors(F.cd1, a, sb).size());
}

TEST_CASE("prolonged suspension and the twist") {
  Fix F;
  SeqSpec a = free_seq(F.cs1, 0, vertex_plus(F.s1, F.s1->by_name("pt")).sp, 1);
  SuspSpec sa = susp_spec(F.cs1, a);
  for (int n = 0; n < a.N; ++n) {
    // the twist is an involution
    RetMap sq = ret_compose(sa.twist[n], sa.twist[n]);
    CHECK(sq.map.is_identity_map());
  }
  // nontrivial on a free level with a nondegenerate 2-cell
  bool some_nontrivial = false;
  for (int n = 0; n < a.N; ++n)
    if (!sa.twist[n].map.is_identity_map()) some_nontrivial = true;
  CHECK(some_nontrivial);
  SeqSpec tensor = tensor_susp_spec(F.cs1, a, sa);
  for (int n = 0; n < a.N; ++n)
    CHECK(tensor.sigma[n].map.same_assignment(
        SMap::compose(sa.sp.sigma[n].map, sa.twist[n].map)));

  // suspension of the zero spectrum is zero
  SuspSpec sz = susp_spec(F.cs1, seq_zero(F.cs1, 1));
  for (auto& l : sz.sp.level) CHECK(is_zero(l));
}

TEST_CASE("loops and the suspension adjunction") {
  Fix F;
  const int N = 1;
  SeqSpec a = free_seq(F.cd1, 0, vertex_plus(F.d1, F.d1->by_name("0")).sp, N);
  SeqSpec b = free_seq(F.cd1, 0, unit_ret(F.d1).sp, N);
  SuspSpec sa = susp_spec(F.cd1, a);
  LoopSpec lb = loop_spec(F.cd1, b, 2);
  auto lhs = enumerate_seq_mors(F.cd1, sa.sp, b);
  auto rhs = enumerate_seq_mors(F.cd1, a, lb.sp);
  CHECK(lhs.size() == rhs.size());
}

TEST_CASE("the free-spectrum monad") {
  Fix F;
  RetSpace y = vertex_plus(F.d1, F.d1->by_name("0")).sp;
  RetSpace z = ret_zero(F.d1);
  // single-summand chain: T(Y, 0, 0)_n = Σ^n Y
  Tsp t = tsp_apply(F.cd1, {y, z, z});
  SuspChain ch = susp_chain(F.cd1, y, 2);
  for (int n = 0; n <= 2; ++n) {
    CHECK(find_ret_iso(t.levels[n].w.space, ch.at(n)).has_value());
  }
  // unit axiom on a free spectrum
  SeqSpec fr = free_seq(F.cd1, 0, y, 2);
  CHECK(tsp_algebra_check(F.cd1, fr));

  // multiplication: associativity square on the corpus spectrum
  std::vector<RetSpace> Z{y, z, z};
  std::vector<RetSpace> tz;
  for (auto& lv : t.levels) tz.push_back(lv.w.space);
  Tsp tt = tsp_apply(F.cd1, tz);
  std::vector<RetSpace> ttz;
  for (auto& lv : tt.levels) ttz.push_back(lv.w.space);
  Tsp ttt = tsp_apply(F.cd1, ttz);
  for (int n = 0; n <= 2; ++n) {
    RetMap mu_n = tsp_mu(F.cd1, Z, t, tt, n);        // TT -> T
    RetMap mu_tn = tsp_mu(F.cd1, tz, tt, ttt, n);    // TTT -> TT
    std::vector<RetMap> mus;
    for (int i = 0; i <= n; ++i) mus.push_back(tsp_mu(F.cd1, Z, t, tt, i));
    RetMap t_mu = tsp_map(F.cd1, ttt, tt, mus, n);   // T(mu) : TTT -> TT
    SMap lhs = SMap::compose(mu_n.map, t_mu.map);
    SMap rhs = SMap::compose(mu_n.map, mu_tn.map);
    CHECK(lhs.same_assignment(rhs));
  }
}

TEST_CASE("double spectra") {
  Fix F;
  SeqSpec p = free_seq(F.cd1, 0, vertex_plus(F.d1, F.d1->by_name("0")).sp, 1);
  DblSpec d = dbl_from(F.cd1, p, 1);
  CHECK(dbl_interchange_ok(F.cd1, d));
  SeqSpec e = dbl_ev0(F.cd1, d);
  CHECK(e.level[0].total.get() == p.level[0].total.get());
  // zero spectrum gives the zero grid
  DblSpec dz = dbl_from(F.cd1, seq_zero(F.cd1, 1), 1);
  for (auto& row : dz.grid)
    for (auto& sp : row) CHECK(is_zero(sp));
}
