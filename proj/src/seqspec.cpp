#include "fibwise/seqspec.hpp"

#include <stdexcept>

namespace fibwise {

RetSpace pointed_circle_over(SSetPtr pt) {
  SSetPtr d1 = standard(1);
  QuotientResult q = quotient(
      d1, subcomplex(d1, [](SimplexRef r) { return r.dim == 0; }).incl);
  SMap sec = classifying_map(pt, q.space, SSet::pure(q.basepoint));
  SMap ret = SMap::constant(q.space, pt, SimplexRef{0, 0});
  return make_retspace(pt, q.space, sec, ret);
}

BaseCtx make_base_ctx(SSetPtr X, SSetPtr pt, const RetSpace& s1) {
  SMap terminal = SMap::constant(X, pt, SimplexRef{0, 0});
  PullbackRet xs1 = star(X, terminal, s1);
  return BaseCtx{std::move(X), std::move(pt), std::move(terminal), s1,
                 std::move(xs1)};
}

BaseCtx make_base_ctx(SSetPtr X) {
  SSetPtr pt = point();
  RetSpace s1 = pointed_circle_over(pt);
  return make_base_ctx(std::move(X), std::move(pt), s1);
}

PTensor susp_of(const BaseCtx& c, const RetSpace& Y) {
  Smash sm = fib_smash(c.xs1.sp, Y);
  return PTensor{c.s1, c.xs1, std::move(sm)};
}

SuspChain susp_chain(const BaseCtx& c, const RetSpace& Y, int upto) {
  SuspChain ch;
  ch.base_obj = Y;
  for (int j = 1; j <= upto; ++j)
    ch.stages.push_back(susp_of(c, ch.at(j - 1)));
  return ch;
}

RetMap chain_map(const BaseCtx& c, const SuspChain& a, const SuspChain& b,
                 const RetMap& f, int j) {
  if (j == 0) return f;
  RetMap prev = chain_map(c, a, b, f, j - 1);
  return ptensor_map(a.stages[j - 1], b.stages[j - 1], prev);
}

std::pair<int, SimplexRef> Wedge::origin(SimplexRef r) const {
  const auto& objs = colim.diagram().objects;
  for (size_t o = 0; o < objs.size(); ++o)
    for (int j = 0; j < objs[o]->level_size(r.dim); ++j) {
      Value v = colim.leg(static_cast<int>(o)).apply(SimplexRef{r.dim, j});
      if (v.pure() && v.s == r)
        return {static_cast<int>(o) - 1, SimplexRef{r.dim, j}};
    }
  throw std::logic_error("wedge: unreached simplex");
}

Wedge wedge_many(const BaseCtx& c, const std::vector<RetSpace>& summands) {
  Diagram d;
  int xi = d.add(c.X);
  for (const auto& s : summands) {
    int i = d.add(s.total);
    d.arrow(xi, i, s.section);
  }
  Colimit co(std::move(d), "v");
  SMap section = co.leg(0);
  std::vector<SMap> rets{SMap::identity(c.X)};
  for (const auto& s : summands) rets.push_back(s.retraction);
  SMap retraction = co.factor(rets);
  RetSpace sp =
      make_retspace(c.X, co.space(), std::move(section), std::move(retraction));
  return Wedge{std::move(co), std::move(sp)};
}

RetMap wedge_factor(const Wedge& w, const RetSpace& target,
                    const std::vector<RetMap>& legs) {
  std::vector<SMap> cocone{target.section};
  for (const auto& m : legs) cocone.push_back(m.map);
  SMap f = w.colim.factor(cocone);
  return make_retmap(w.space, target, std::move(f));
}

SeqSpec seq_from_levels(
    const BaseCtx& c, std::vector<RetSpace> levels,
    const std::function<RetMap(int, const PTensor&)>& sigma_of) {
  SeqSpec out;
  out.N = static_cast<int>(levels.size()) - 1;
  out.level = std::move(levels);
  for (int n = 0; n < out.N; ++n) {
    out.susp.push_back(susp_of(c, out.level[n]));
    RetMap s = sigma_of(n, out.susp.back());
    if (s.tgt.total.get() != out.level[n + 1].total.get())
      throw std::invalid_argument("seq: sigma target mismatch");
    out.sigma.push_back(std::move(s));
  }
  return out;
}

SeqSpec seq_zero(const BaseCtx& c, int N) {
  RetSpace z = ret_zero(c.X);
  std::vector<RetSpace> levels(N + 1, z);
  return seq_from_levels(c, std::move(levels),
                         [&](int n, const PTensor& t) {
                           (void)n;
                           return ret_zero_map(t.smash.space, z);
                         });
}

bool seq_mor_squares_ok(const BaseCtx& c, const SeqSpec& A, const SeqSpec& B,
                        const std::vector<RetMap>& f) {
  for (int n = 0; n + 1 <= A.N; ++n) {
    RetMap sf = ptensor_map(A.susp[n], B.susp[n], f[n]);
    SMap lhs = SMap::compose(B.sigma[n].map, sf.map);
    SMap rhs = SMap::compose(f[n + 1].map, A.sigma[n].map);
    if (!lhs.same_assignment(rhs)) return false;
  }
  (void)c;
  return true;
}

SeqMor make_seq_mor(const BaseCtx& c, const SeqSpec& A, const SeqSpec& B,
                    std::vector<RetMap> f) {
  if (static_cast<int>(f.size()) != A.N + 1 || A.N != B.N)
    throw std::invalid_argument("seq_mor: level count mismatch");
  if (!seq_mor_squares_ok(c, A, B, f))
    throw std::invalid_argument("seq_mor: squares do not commute");
  return SeqMor{std::move(f)};
}

std::vector<SeqMor> enumerate_seq_mors(const BaseCtx& c, const SeqSpec& A,
                                       const SeqSpec& B) {
  std::vector<SeqMor> out;
  std::vector<std::vector<RetMap>> cand(A.N + 1);
  for (int n = 0; n <= A.N; ++n)
    cand[n] = enumerate_ret_maps(A.level[n], B.level[n]);
  std::vector<RetMap> cur;
  std::function<void(int)> walk = [&](int n) {
    if (n > A.N) {
      out.push_back(SeqMor{cur});
      return;
    }
    for (const auto& f : cand[n]) {
      if (n > 0) {
        RetMap sf = ptensor_map(A.susp[n - 1], B.susp[n - 1], cur[n - 1]);
        SMap lhs = SMap::compose(B.sigma[n - 1].map, sf.map);
        SMap rhs = SMap::compose(f.map, A.sigma[n - 1].map);
        if (!lhs.same_assignment(rhs)) continue;
      }
      cur.push_back(f);
      walk(n + 1);
      cur.pop_back();
    }
  };
  walk(0);
  return out;
}

bool seq_mor_iso(const SeqMor& m) {
  for (const auto& f : m.f)
    if (!ret_iso(f)) return false;
  return true;
}

SeqSpec free_seq(const BaseCtx& c, int k, const RetSpace& Y, int N) {
  if (N < k) throw std::invalid_argument("free_seq: N < k");
  RetSpace z = ret_zero(c.X);
  SuspChain ch = susp_chain(c, Y, N - k);
  SeqSpec out;
  out.N = N;
  for (int n = 0; n < k; ++n) out.level.push_back(z);
  for (int j = 0; j <= N - k; ++j) out.level.push_back(ch.at(j));
  for (int n = 0; n < N; ++n) {
    if (n < k) {
      out.susp.push_back(susp_of(c, z));
      out.sigma.push_back(
          ret_zero_map(out.susp.back().smash.space, out.level[n + 1]));
    } else {
      out.susp.push_back(ch.stages[n - k]);
      out.sigma.push_back(make_retmap(ch.stages[n - k].smash.space,
                                      out.level[n + 1],
                                      SMap::identity(out.level[n + 1].total)));
    }
  }
  return out;
}

SeqMor free_extend(const BaseCtx& c, const SeqSpec& freeA, int k,
                   const SeqSpec& B, const RetMap& u) {
  std::vector<RetMap> f;
  for (int n = 0; n < k; ++n)
    f.push_back(ret_zero_map(freeA.level[n], B.level[n]));
  f.push_back(make_retmap(freeA.level[k], B.level[k], u.map));
  for (int n = k + 1; n <= freeA.N; ++n) {
    RetMap sf = ptensor_map(freeA.susp[n - 1], B.susp[n - 1], f[n - 1]);
    f.push_back(ret_compose(B.sigma[n - 1], sf));
  }
  return make_seq_mor(c, freeA, B, std::move(f));
}

Zeta zeta(const BaseCtx& c, int k, const RetSpace& C, int N) {
  if (N < k + 1) throw std::invalid_argument("zeta: N < k+1");
  PTensor sc = susp_of(c, C);
  SeqSpec dom = free_seq(c, k + 1, sc.smash.space, N);
  SeqSpec cod = free_seq(c, k, C, N);
  std::vector<RetMap> f;
  for (int n = 0; n <= k; ++n)
    f.push_back(ret_zero_map(dom.level[n], cod.level[n]));
  f.push_back(smash_comparison(sc.smash, cod.susp[k].smash));
  for (int n = k + 2; n <= N; ++n)
    f.push_back(ptensor_map(dom.susp[n - 1], cod.susp[n - 1], f[n - 1]));
  SeqMor m = make_seq_mor(c, dom, cod, std::move(f));
  return Zeta{std::move(sc), std::move(dom), std::move(cod), std::move(m)};
}

SeqSpec shift(const SeqSpec& A) {
  if (A.N < 1) throw std::invalid_argument("shift: trunc 0");
  SeqSpec out;
  out.N = A.N - 1;
  out.level.assign(A.level.begin() + 1, A.level.end());
  out.susp.assign(A.susp.begin() + 1, A.susp.end());
  out.sigma.assign(A.sigma.begin() + 1, A.sigma.end());
  return out;
}

SeqSpec unshift(const BaseCtx& c, const SeqSpec& A) {
  SeqSpec out;
  out.N = A.N;
  RetSpace z = ret_zero(c.X);
  out.level.push_back(z);
  for (int n = 0; n < A.N; ++n) out.level.push_back(A.level[n]);
  out.susp.push_back(susp_of(c, z));
  out.sigma.push_back(
      ret_zero_map(out.susp.back().smash.space, out.level[1]));
  for (int n = 1; n < A.N; ++n) {
    out.susp.push_back(A.susp[n - 1]);
    out.sigma.push_back(A.sigma[n - 1]);
  }
  return out;
}

namespace {
RetMap twist_auto(const BaseCtx& c, const RetSpace& An, const PTensor& inner,
                  const PTensor& outer) {
  // the S^1/S^1 interchange on Σ² An, transported through the triple smash
  Smash3 t3 = fib_smash3(c.xs1.sp, c.xs1.sp, An);
  RetMap right = smash3_to_right(t3, inner.smash, outer.smash);
  auto rinv = ret_inverse(right);
  if (!rinv) throw std::logic_error("twist: comparison not iso");
  RetMap swap = smash3_swap_first(t3, t3);
  return ret_compose(right, ret_compose(swap, *rinv));
}
}  // namespace

SuspSpec susp_spec(const BaseCtx& c, const SeqSpec& A) {
  SuspSpec out;
  for (int n = 0; n <= A.N; ++n)
    out.lift.push_back(n < A.N ? A.susp[n] : susp_of(c, A.level[n]));
  std::vector<RetSpace> levels;
  for (int n = 0; n <= A.N; ++n) levels.push_back(out.lift[n].smash.space);
  out.sp = seq_from_levels(c, levels, [&](int n, const PTensor& t) {
    return ptensor_map(t, out.lift[n + 1], A.sigma[n]);
  });
  for (int n = 0; n < A.N; ++n)
    out.twist.push_back(twist_auto(c, A.level[n], out.lift[n], out.sp.susp[n]));
  return out;
}

SeqSpec tensor_susp_spec(const BaseCtx& c, const SeqSpec& A,
                         const SuspSpec& prolonged) {
  (void)c;
  SeqSpec out = prolonged.sp;
  for (int n = 0; n < out.N; ++n)
    out.sigma[n] = ret_compose(prolonged.sp.sigma[n], prolonged.twist[n]);
  (void)A;
  return out;
}

RetMap cotensor_counit(const BaseCtx& c, const PTensor& ten,
                       const InternalHom& hom) {
  const Pullback& prod = ten.smash.prod;
  const SSet& P = *prod.space();
  const RetSpace& W = hom.Z;
  std::vector<std::vector<Value>> assign(P.dim() + 1);
  for (int d = 0; d <= P.dim(); ++d)
    for (int j = 0; j < P.level_size(d); ++j) {
      Value a = prod.pr1().apply(SimplexRef{d, j});
      Value b = prod.pr2().apply(SimplexRef{d, j});
      int e = hom.raw_index(b);
      const auto& el = hom.elems[d][e];
      auto& fp = hom.fam->at(el.sigma);
      Value arg = fp.second.pair_value(
          SSet::pure(SimplexRef{d, 0}), a);
      assign[d].push_back(el.u.apply(arg));
    }
  SMap pleg = SMap::build(prod.space(), W.total, std::move(assign));
  SMap m = ten.smash.colim.factor(
      {W.section, SMap::compose(W.section, ten.smash.Y.retraction),
       SMap::compose(W.section, ten.smash.Z.retraction), pleg});
  return make_retmap(ten.smash.space, W, std::move(m));
}

RetMap cotensor_adjunct(const BaseCtx& c, const PTensor& tenW,
                        const InternalHom& homV, const RetMap& g) {
  (void)c;
  const RetSpace& W = tenW.smash.Z;  // tenW = S^1 ⊙ W
  const SSet& Wt = *W.total;
  std::vector<std::vector<Value>> assign(Wt.dim() + 1);
  for (int d = 0; d <= Wt.dim(); ++d)
    for (int j = 0; j < Wt.level_size(d); ++j) {
      Value sigma = W.retraction.apply(SimplexRef{d, j});
      auto& fp = homV.fam->at(sigma);
      const Pullback& psig = fp.second;
      SMap clw = classifying_map(homV.fam->delta(d), W.total,
                                 SSet::pure(SimplexRef{d, j}));
      SMap into_prod = tenW.smash.prod.factor(
          psig.pr2(), SMap::compose(clw, psig.pr1()));
      SMap u = SMap::compose(g.map,
                             SMap::compose(tenW.smash.q(), into_prod));
      int raw_idx =
          homV.raw.index_of(d, section_elem_key(sigma, u));
      assign[d].push_back(homV.norm.value_of[d][raw_idx]);
    }
  SMap m = SMap::build(W.total, homV.sp.total, std::move(assign));
  return make_retmap(W, homV.sp, std::move(m));
}

LoopSpec loop_spec(const BaseCtx& c, const SeqSpec& A, int bound) {
  LoopSpec out;
  for (int n = 0; n <= A.N; ++n)
    out.hom.push_back(internal_hom(c.xs1.sp, A.level[n], bound));
  std::vector<RetSpace> levels;
  for (auto& h : out.hom) levels.push_back(h.sp);
  out.sp = seq_from_levels(c, levels, [&](int n, const PTensor& t) {
    // counit then the spectrum structure map, adjointed back in
    RetMap counit = cotensor_counit(c, t, out.hom[n]);
    PTensor t2 = susp_of(c, t.smash.space);
    RetMap g = ret_compose(A.sigma[n], ptensor_map(t2, A.susp[n], counit));
    return cotensor_adjunct(c, t2, out.hom[n + 1], g);
  });
  return out;
}

Tsp tsp_apply(const BaseCtx& c, const std::vector<RetSpace>& Z) {
  Tsp out;
  int N = static_cast<int>(Z.size()) - 1;
  for (int n = 0; n <= N; ++n) {
    std::vector<SuspChain> chains;
    std::vector<RetSpace> summands;
    for (int i = 0; i <= n; ++i) {
      chains.push_back(susp_chain(c, Z[i], n - i));
      summands.push_back(chains.back().at(n - i));
    }
    out.levels.push_back(TspLevel{wedge_many(c, summands), std::move(chains)});
  }
  return out;
}

RetMap tsp_unit(const Tsp& t, int n, const RetSpace& Zn) {
  const Wedge& w = t.levels[n].w;
  // summand i = n is Z_n itself
  SMap leg = w.leg_total(n);
  return make_retmap(Zn, w.space, leg);
}

RetMap iterated_sigma(const BaseCtx& c, const SeqSpec& A, const SuspChain& ch,
                      int i, int n) {
  // m_{i,n} : Σ^{n-i} A_i -> A_n along the chain
  if (n == i) return ret_identity(A.level[i]);
  RetMap prev = iterated_sigma(c, A, ch, i, n - 1);
  RetMap sf = ptensor_map(ch.stages[n - 1 - i], A.susp[n - 1], prev);
  return ret_compose(A.sigma[n - 1], sf);
}

RetMap tsp_algebra(const BaseCtx& c, const Tsp& t, const SeqSpec& A, int n) {
  std::vector<RetMap> legs;
  for (int i = 0; i <= n; ++i)
    legs.push_back(iterated_sigma(c, A, t.levels[n].chains[i], i, n));
  return wedge_factor(t.levels[n].w, A.level[n], legs);
}

RetMap susp_wedge_distrib(const BaseCtx& c, const PTensor& sw, const Wedge& w,
                          const Wedge& target,
                          const std::vector<PTensor>& summand_susp) {
  (void)c;
  const Pullback& prod = sw.smash.prod;
  const SSet& P = *prod.space();
  std::vector<std::vector<Value>> assign(P.dim() + 1);
  for (int d = 0; d <= P.dim(); ++d)
    for (int j = 0; j < P.level_size(d); ++j) {
      Value a = prod.pr1().apply(SimplexRef{d, j});
      Value b = prod.pr2().apply(SimplexRef{d, j});
      auto [summand, pre] = w.origin(b.s);
      if (summand < 0) {
        // base part: collapse through the section
        Value img = SMap::compose(target.space.section,
                                  SMap::compose(w.space.retraction,
                                                prod.pr2()))
                        .apply(SimplexRef{d, j});
        assign[d].push_back(img);
      } else {
        Value vb{b.op, pre};
        Value pair = summand_susp[summand].smash.prod.pair_value(a, vb);
        Value img = summand_susp[summand].smash.q().apply(pair);
        assign[d].push_back(target.leg_total(summand).apply(img));
      }
    }
  SMap pleg = SMap::build(prod.space(), target.space.total, std::move(assign));
  const RetSpace& tgt = target.space;
  SMap m = sw.smash.colim.factor(
      {tgt.section, SMap::compose(tgt.section, sw.smash.Y.retraction),
       SMap::compose(tgt.section, sw.smash.Z.retraction), pleg});
  return make_retmap(sw.smash.space, tgt, std::move(m));
}

RetMap chain_reassoc(const BaseCtx& c, const SuspChain& outer,
                     const SuspChain& chA, const SuspChain& chB, int a,
                     int b) {
  if (a == 0)
    return chain_map(c, chA, chB, ret_identity(chA.base_obj), b);
  RetMap prev = chain_reassoc(c, outer, chA, chB, a - 1, b);
  return ptensor_map(outer.stages[a - 1], chB.stages[a + b - 1], prev);
}

RetMap tsp_mu(const BaseCtx& c, const std::vector<RetSpace>& Z, const Tsp& t,
              const Tsp& tt, int n) {
  std::vector<RetMap> legs;
  for (int i = 0; i <= n; ++i) {
    // summand i of TT at level n: Σ^{n-i} (T(Z)_i); distribute suspensions
    // over the wedge step by step, then reassociate chains into T(Z)_n
    const Wedge& w0 = t.levels[i].w;
    int steps = n - i;
    // per-summand chains of the iterated suspensions
    std::vector<SuspChain> souter(i + 1);
    for (int j = 0; j <= i; ++j)
      souter[j].base_obj = t.levels[i].chains[j].at(i - j);
    // current wedge and the map from the TT chain stage into it
    const Wedge* cur = &w0;
    std::vector<Wedge> store;
    store.reserve(steps);
    RetMap down = ret_identity(w0.space);
    for (int step = 0; step < steps; ++step) {
      std::vector<PTensor> ssusp;
      std::vector<RetSpace> snext;
      for (int j = 0; j <= i; ++j) {
        souter[j].stages.push_back(susp_of(c, souter[j].at(step)));
        ssusp.push_back(souter[j].stages.back());
        snext.push_back(souter[j].at(step + 1));
      }
      Wedge next = wedge_many(c, snext);
      PTensor scur = susp_of(c, cur->space);
      RetMap dist = susp_wedge_distrib(c, scur, *cur, next, ssusp);
      // lift `down` one suspension and compose
      RetMap sdown = ptensor_map(tt.levels[n].chains[i].stages[step], scur,
                                 down);
      down = ret_compose(dist, sdown);
      store.push_back(std::move(next));
      cur = &store.back();
    }
    // map the final wedge into T(Z)_n
    std::vector<RetMap> sublegs;
    for (int j = 0; j <= i; ++j)
      sublegs.push_back(ret_compose(
          make_retmap(t.levels[n].chains[j].at(n - j), t.levels[n].w.space,
                      t.levels[n].w.leg_total(j)),
          chain_reassoc(c, souter[j], t.levels[i].chains[j],
                        t.levels[n].chains[j], n - i, i - j)));
    RetMap collapse = wedge_factor(*cur, t.levels[n].w.space, sublegs);
    legs.push_back(ret_compose(collapse, down));
  }
  (void)Z;
  return wedge_factor(tt.levels[n].w, t.levels[n].w.space, legs);
}

RetMap tsp_map(const BaseCtx& c, const Tsp& tsrc, const Tsp& ttgt,
               const std::vector<RetMap>& g, int n) {
  std::vector<RetMap> legs;
  for (int i = 0; i <= n; ++i)
    legs.push_back(ret_compose(
        make_retmap(ttgt.levels[n].chains[i].at(n - i), ttgt.levels[n].w.space,
                    ttgt.levels[n].w.leg_total(i)),
        chain_map(c, tsrc.levels[n].chains[i], ttgt.levels[n].chains[i], g[i],
                  n - i)));
  return wedge_factor(tsrc.levels[n].w, ttgt.levels[n].w.space, legs);
}

bool tsp_algebra_check(const BaseCtx& c, const SeqSpec& A) {
  std::vector<RetSpace> Z = A.level;
  Tsp t = tsp_apply(c, Z);
  for (int n = 0; n <= A.N; ++n) {
    RetMap alg = tsp_algebra(c, t, A, n);
    RetMap unit = tsp_unit(t, n, A.level[n]);
    if (!SMap::compose(alg.map, unit.map).is_identity_map()) return false;
  }
  return true;
}

SeqSpec seq_pushforward(const BaseCtx& cx, const BaseCtx& cy, const SMap& f,
                        const SeqSpec& A) {
  std::vector<Pushforward> pf;
  for (int n = 0; n <= A.N; ++n) pf.push_back(pushforward(f, A.level[n]));
  std::vector<RetSpace> levels;
  for (auto& p : pf) levels.push_back(p.sp);
  return seq_from_levels(cy, levels, [&](int n, const PTensor& t) {
    // theta : f_!(Σ A_n) -> Σ' (f_! A_n), then f_!(sigma_n) ∘ theta^{-1}
    Pushforward pfs = pushforward(f, A.susp[n].smash.space);
    const Pullback& prod = A.susp[n].smash.prod;
    SMap u1 = cy.xs1.pb.factor(
        SMap::compose(f, SMap::compose(A.level[n].retraction, prod.pr2())),
        SMap::compose(cx.xs1.pb.pr2(), prod.pr1()));
    SMap u2 = SMap::compose(pf[n].into, prod.pr2());
    SMap pmap = t.smash.prod.factor(u1, u2);
    SMap pleg = SMap::compose(t.smash.q(), pmap);
    const RetSpace& tsp_ = t.smash.space;
    SMap psi = A.susp[n].smash.colim.factor(
        {SMap::compose(tsp_.section, f),
         SMap::compose(SMap::compose(tsp_.section, f),
                       cx.xs1.sp.retraction),
         SMap::compose(SMap::compose(tsp_.section, f),
                       A.level[n].retraction),
         pleg});
    SMap theta_map = pfs.co.factor(
        {SMap::compose(tsp_.section, f), psi, tsp_.section});
    RetMap theta = make_retmap(pfs.sp, tsp_, theta_map);
    auto tinv = ret_inverse(theta);
    if (!tinv) throw std::logic_error("seq_pushforward: theta not iso");
    RetMap fsig = pushforward_map(f, pfs, pf[n + 1], A.sigma[n]);
    return ret_compose(fsig, *tinv);
  });
}

SeqSpec seq_pullback(const BaseCtx& cx, const BaseCtx& cy, const SMap& f,
                     const SeqSpec& A) {
  // f : cx.X -> cy.X pulls A over cy.X back to cx.X
  std::vector<PullbackRet> pb;
  for (int n = 0; n <= A.N; ++n) pb.push_back(pullback_ret(f, A.level[n]));
  std::vector<RetSpace> levels;
  for (auto& p : pb) levels.push_back(p.sp);
  return seq_from_levels(cx, levels, [&](int n, const PTensor& t) {
    // kappa : Σ (f^* A_n) -> f^* (Σ A_n), then f^*(sigma_n)
    const Pullback& prod = t.smash.prod;  // (X*S^1) x_X f^*A_n
    SMap u1 = cy.xs1.pb.factor(
        SMap::compose(f, SMap::compose(t.smash.Y.retraction, prod.pr1())),
        SMap::compose(cx.xs1.pb.pr2(), prod.pr1()));
    SMap u2 = SMap::compose(pb[n].pb.pr2(), prod.pr2());
    SMap pmap = A.susp[n].smash.prod.factor(u1, u2);
    SMap pleg = SMap::compose(A.susp[n].smash.q(), pmap);
    const RetSpace& sa = A.susp[n].smash.space;
    SMap v = t.smash.colim.factor(
        {SMap::compose(sa.section, f),
         SMap::compose(SMap::compose(sa.section, f),
                       t.smash.Y.retraction),
         SMap::compose(SMap::compose(sa.section, f),
                       t.smash.Z.retraction),
         pleg});
    // into f^*(Σ A_n), then f^*(sigma)
    PullbackRet pbs = pullback_ret(f, sa);
    SMap kappa = pbs.pb.factor(t.smash.space.retraction, v);
    RetMap fsig = pullback_ret_map(f, pbs, pb[n + 1], A.sigma[n]);
    return ret_compose(fsig,
                       make_retmap(t.smash.space, pbs.sp, kappa));
  });
}

DblSpec dbl_from(const BaseCtx& c, const SeqSpec& P, int M) {
  DblSpec out;
  out.M = M;
  out.N = P.N;
  std::vector<SuspChain> chains;
  for (int n = 0; n <= P.N; ++n)
    chains.push_back(susp_chain(c, P.level[n], M + 1));
  out.grid.resize(M + 1);
  out.susp.resize(M + 1);
  out.sig_h.resize(M);
  out.sig_v.resize(M + 1);
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= P.N; ++n) out.grid[m].push_back(chains[n].at(m));
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= P.N; ++n) out.susp[m].push_back(chains[n].stages[m]);
  for (int m = 0; m < M; ++m)
    for (int n = 0; n <= P.N; ++n)
      out.sig_h[m].push_back(
          make_retmap(chains[n].stages[m].smash.space, out.grid[m + 1][n],
                      SMap::identity(out.grid[m + 1][n].total)));
  for (int n = 0; n < P.N; ++n) {
    RetMap v0 = ret_compose(
        P.sigma[n], smash_comparison(chains[n].stages[0].smash,
                                     P.susp[n].smash));
    out.sig_v[0].push_back(v0);
  }
  for (int m = 1; m <= M; ++m)
    for (int n = 0; n < P.N; ++n)
      out.sig_v[m].push_back(ptensor_map(chains[n].stages[m],
                                         chains[n + 1].stages[m - 1],
                                         out.sig_v[m - 1][n]));
  return out;
}

SeqSpec dbl_ev0(const BaseCtx& c, const DblSpec& D) {
  (void)c;
  SeqSpec out;
  out.N = D.M;
  for (int m = 0; m <= D.M; ++m) out.level.push_back(D.grid[m][0]);
  for (int m = 0; m < D.M; ++m) {
    out.susp.push_back(D.susp[m][0]);
    out.sigma.push_back(D.sig_h[m][0]);
  }
  return out;
}

bool dbl_interchange_ok(const BaseCtx& c, const DblSpec& D) {
  (void)c;
  for (int m = 0; m + 1 < D.M; ++m)
    for (int n = 0; n < D.N; ++n) {
      // both composites Σ² grid[m][n] -> grid[m+1][n+1]
      const PTensor& s2 = D.susp[m + 1][n];  // Σ(Σ grid[m][n]) source object
      RetMap p1 = ret_compose(
          D.sig_h[m][n + 1],
          ptensor_map(s2, D.susp[m][n + 1], D.sig_v[m][n]));
      RetMap p2 = ret_compose(
          D.sig_v[m + 1][n],
          ptensor_map(s2, D.susp[m + 1][n], D.sig_h[m][n]));
      if (!p1.map.same_assignment(p2.map)) return false;
    }
  return true;
}

}  // namespace fibwise
