#include "fibwise/global.hpp"

#include <stdexcept>

namespace fibwise {

namespace {
std::vector<std::vector<char>> section_image_of(const RetSpace& Y) {
  std::vector<std::vector<char>> in(Y.total->dim() + 1);
  for (int d = 0; d <= Y.total->dim(); ++d)
    in[d].assign(Y.total->level_size(d), 0);
  for (int d = 0; d <= Y.base->dim(); ++d)
    for (int j = 0; j < Y.base->level_size(d); ++j) {
      Value v = Y.section.apply(SimplexRef{d, j});
      in[v.s.dim][v.s.idx] = 1;
    }
  return in;
}
}  // namespace

GlobObj make_globobj(RetSpace fib) {
  SSetPtr b = fib.base;
  return GlobObj{std::move(b), std::move(fib)};
}

RetMap GlobMor::over_source() const { return adjunct_fwd(f, pf, pr, psi); }

SMap GlobMor::square() const { return SMap::compose(psi.map, pf.into); }

GlobMor globmor_from_square(GlobObj src, GlobObj tgt, SMap f, SMap square) {
  if (square.src().get() != src.fib.total.get() ||
      square.tgt().get() != tgt.fib.total.get())
    throw std::invalid_argument("globmor: square typing");
  if (!SMap::compose(square, src.fib.section)
           .same_assignment(SMap::compose(tgt.fib.section, f)))
    throw std::invalid_argument("globmor: square fails on sections");
  if (!SMap::compose(tgt.fib.retraction, square)
           .same_assignment(SMap::compose(f, src.fib.retraction)))
    throw std::invalid_argument("globmor: square fails on retractions");
  Pushforward pf = pushforward(f, src.fib);
  PullbackRet pr = pullback_ret(f, tgt.fib);
  SMap m = pf.co.factor(
      {SMap::compose(tgt.fib.section, f), square, tgt.fib.section});
  RetMap psi = make_retmap(pf.sp, tgt.fib, std::move(m));
  return GlobMor{std::move(src), std::move(tgt), std::move(f), std::move(pf),
                 std::move(pr), std::move(psi)};
}

GlobMor globmor_from_source(GlobObj src, GlobObj tgt, SMap f,
                            const PullbackRet& pr, const SMap& phi_total) {
  SMap square = SMap::compose(pr.pb.pr2(), phi_total);
  return globmor_from_square(std::move(src), std::move(tgt), std::move(f),
                             std::move(square));
}

GlobMor glob_identity(const GlobObj& a) {
  return globmor_from_square(a, a, SMap::identity(a.base),
                             SMap::identity(a.fib.total));
}

bool glob_is_iso(const GlobMor& m) {
  return m.f.is_isomorphism() && m.square().is_isomorphism();
}

bool glob_is_mono(const GlobMor& m) {
  return m.f.is_mono() && m.square().is_mono();
}

ExtSmash ext_smash(const GlobObj& a, const GlobObj& b) {
  Pullback bprod = product(a.base, b.base, "b");
  Pullback tprod = product(a.fib.total, b.fib.total, "t");
  auto inA = section_image_of(a.fib);
  auto inB = section_image_of(b.fib);
  SubcomplexResult U = subcomplex(tprod.space(), [&](SimplexRef r) {
    Value va = tprod.pr1().apply(r), vb = tprod.pr2().apply(r);
    return inA[va.s.dim][va.s.idx] || inB[vb.s.dim][vb.s.idx];
  });
  SMap proj = bprod.factor(SMap::compose(a.fib.retraction, tprod.pr1()),
                           SMap::compose(b.fib.retraction, tprod.pr2()));
  Colimit co = pushout(U.incl, SMap::compose(proj, U.incl));
  SMap section = co.leg(2);
  SMap retraction =
      co.factor({SMap::compose(proj, U.incl), proj, SMap::identity(bprod.space())});
  RetSpace sp = make_retspace(bprod.space(), co.space(), std::move(section),
                              std::move(retraction));
  GlobObj obj = make_globobj(sp);
  return ExtSmash{a,
                  b,
                  std::move(bprod),
                  std::move(tprod),
                  std::move(co),
                  std::move(obj)};
}

GlobMor ext_smash_map(const ExtSmash& s, const ExtSmash& t, const GlobMor& m1,
                      const GlobMor& m2) {
  SMap fbase = t.bprod.factor(SMap::compose(m1.f, s.bprod.pr1()),
                              SMap::compose(m2.f, s.bprod.pr2()));
  SMap tp = t.tprod.factor(SMap::compose(m1.square(), s.tprod.pr1()),
                           SMap::compose(m2.square(), s.tprod.pr2()));
  SMap leg_t = SMap::compose(t.q(), tp);
  const SMap& u_incl = s.colim.diagram().arrows[0].f;
  SMap sq = s.colim.factor({SMap::compose(leg_t, u_incl), leg_t,
                            SMap::compose(t.obj.fib.section, fbase)});
  return globmor_from_square(s.obj, t.obj, std::move(fbase), std::move(sq));
}

GlobMor ext_symmetry(const ExtSmash& ab, const ExtSmash& ba) {
  SMap fbase = ba.bprod.factor(ab.bprod.pr2(), ab.bprod.pr1());
  SMap tp = ba.tprod.factor(ab.tprod.pr2(), ab.tprod.pr1());
  SMap leg_t = SMap::compose(ba.q(), tp);
  const SMap& u_incl = ab.colim.diagram().arrows[0].f;
  SMap sq = ab.colim.factor({SMap::compose(leg_t, u_incl), leg_t,
                             SMap::compose(ba.obj.fib.section, fbase)});
  return globmor_from_square(ab.obj, ba.obj, std::move(fbase), std::move(sq));
}

namespace {
GlobMor ext_unitor(const PlusBase& unit, const ExtSmash& e, bool unit_left) {
  const GlobObj& other = unit_left ? e.b : e.a;
  SMap fbase = unit_left ? e.bprod.pr2() : e.bprod.pr1();
  const SSet& T = *e.tprod.space();
  SMap szr = SMap::compose(other.fib.section, other.fib.retraction);
  std::vector<std::vector<Value>> assign(T.dim() + 1);
  for (int d = 0; d <= T.dim(); ++d)
    for (int j = 0; j < T.level_size(d); ++j) {
      Value u = unit_left ? e.tprod.pr1().apply(SimplexRef{d, j})
                          : e.tprod.pr2().apply(SimplexRef{d, j});
      Value y = unit_left ? e.tprod.pr2().apply(SimplexRef{d, j})
                          : e.tprod.pr1().apply(SimplexRef{d, j});
      if (unit.copy_of(u.s) == 1)
        assign[d].push_back(y);
      else
        assign[d].push_back(szr.apply(y));
    }
  SMap leg_t = SMap::build(e.tprod.space(), other.fib.total, std::move(assign));
  const SMap& u_incl = e.colim.diagram().arrows[0].f;
  SMap sq = e.colim.factor({SMap::compose(leg_t, u_incl), leg_t,
                            SMap::compose(other.fib.section, fbase)});
  return globmor_from_square(e.obj, other, std::move(fbase), std::move(sq));
}
}  // namespace

GlobMor ext_unitor_left(const PlusBase& unit, const ExtSmash& ua) {
  return ext_unitor(unit, ua, true);
}
GlobMor ext_unitor_right(const PlusBase& unit, const ExtSmash& au) {
  return ext_unitor(unit, au, false);
}

ExtSmash3 ext_smash3(const GlobObj& a, const GlobObj& b, const GlobObj& c) {
  Pullback b12 = product(a.base, b.base, "b2");
  Pullback b123 = product(b12.space(), c.base, "b3");
  Pullback t12 = product(a.fib.total, b.fib.total, "t2");
  Pullback t123 = product(t12.space(), c.fib.total, "t3");
  SMap prA = SMap::compose(t12.pr1(), t123.pr1());
  SMap prB = SMap::compose(t12.pr2(), t123.pr1());
  const SMap& prC = t123.pr2();
  auto inA = section_image_of(a.fib);
  auto inB = section_image_of(b.fib);
  auto inC = section_image_of(c.fib);
  SubcomplexResult U = subcomplex(t123.space(), [&](SimplexRef r) {
    Value va = prA.apply(r), vb = prB.apply(r), vc = prC.apply(r);
    return inA[va.s.dim][va.s.idx] || inB[vb.s.dim][vb.s.idx] ||
           inC[vc.s.dim][vc.s.idx];
  });
  SMap proj12 = b12.factor(SMap::compose(a.fib.retraction, prA),
                           SMap::compose(b.fib.retraction, prB));
  SMap proj = b123.factor(proj12, SMap::compose(c.fib.retraction, prC));
  Colimit co = pushout(U.incl, SMap::compose(proj, U.incl));
  SMap section = co.leg(2);
  SMap retraction = co.factor(
      {SMap::compose(proj, U.incl), proj, SMap::identity(b123.space())});
  RetSpace sp = make_retspace(b123.space(), co.space(), std::move(section),
                              std::move(retraction));
  GlobObj obj = make_globobj(sp);
  return ExtSmash3{a,
                   b,
                   c,
                   std::move(b12),
                   std::move(b123),
                   std::move(t12),
                   std::move(t123),
                   std::move(co),
                   std::move(obj)};
}

GlobMor ext3_to_left(const ExtSmash3& t, const ExtSmash& ab,
                     const ExtSmash& ab_c) {
  // bases: (Xa x Xb) x Xc -> same shape on the target side
  SMap fb12 = ab.bprod.factor(SMap::compose(t.b12.pr1(), t.b123.pr1()),
                              SMap::compose(t.b12.pr2(), t.b123.pr1()));
  SMap fbase = ab_c.bprod.factor(fb12, t.b123.pr2());

  SMap t123_to_tab =
      ab.tprod.factor(SMap::compose(t.t12.pr1(), t.t123.pr1()),
                      SMap::compose(t.t12.pr2(), t.t123.pr1()));
  SMap t123_to_abtot = SMap::compose(ab.q(), t123_to_tab);
  SMap tp = ab_c.tprod.factor(t123_to_abtot, t.t123.pr2());
  SMap leg_t = SMap::compose(ab_c.q(), tp);
  const SMap& u_incl = t.colim.diagram().arrows[0].f;
  SMap sq = t.colim.factor({SMap::compose(leg_t, u_incl), leg_t,
                            SMap::compose(ab_c.obj.fib.section, fbase)});
  return globmor_from_square(t.obj, ab_c.obj, std::move(fbase), std::move(sq));
}

GlobMor ext3_to_right(const ExtSmash3& t, const ExtSmash& bc,
                      const ExtSmash& a_bc) {
  SMap fb23 = bc.bprod.factor(SMap::compose(t.b12.pr2(), t.b123.pr1()),
                              t.b123.pr2());
  SMap fbase = a_bc.bprod.factor(SMap::compose(t.b12.pr1(), t.b123.pr1()),
                                 fb23);
  SMap t123_to_tbc =
      bc.tprod.factor(SMap::compose(t.t12.pr2(), t.t123.pr1()), t.t123.pr2());
  SMap t123_to_bctot = SMap::compose(bc.q(), t123_to_tbc);
  SMap tp = a_bc.tprod.factor(SMap::compose(t.t12.pr1(), t.t123.pr1()),
                              t123_to_bctot);
  SMap leg_t = SMap::compose(a_bc.q(), tp);
  const SMap& u_incl = t.colim.diagram().arrows[0].f;
  SMap sq = t.colim.factor({SMap::compose(leg_t, u_incl), leg_t,
                            SMap::compose(a_bc.obj.fib.section, fbase)});
  return globmor_from_square(t.obj, a_bc.obj, std::move(fbase), std::move(sq));
}

DiagCompare diag_compare(const RetSpace& Y, const RetSpace& Z) {
  if (!Y.same_base(Z)) throw std::invalid_argument("diag_compare: bases");
  SSetPtr X = Y.base;
  Smash fib = fib_smash(Y, Z);
  ExtSmash ext = ext_smash(make_globobj(Y), make_globobj(Z));
  SMap diag = ext.bprod.factor(SMap::identity(X), SMap::identity(X));
  PullbackRet pulled = pullback_ret(diag, ext.obj.fib);
  // canonical map (Y ∧_X Z) -> Δ^* ((X,Y)△(X,Z)) by factorisation
  SMap p_to_T = ext.tprod.factor(fib.prod.pr1(), fib.prod.pr2());
  SMap p_to_E = SMap::compose(ext.q(), p_to_T);
  SMap p_leg =
      pulled.pb.factor(SMap::compose(Y.retraction, fib.prod.pr1()), p_to_E);
  SMap m = fib.colim.factor(
      {pulled.sp.section, SMap::compose(pulled.sp.section, Y.retraction),
       SMap::compose(pulled.sp.section, Z.retraction), p_leg});
  RetMap cmp = make_retmap(fib.space, pulled.sp, std::move(m));
  bool iso = ret_iso(cmp);
  return DiagCompare{std::move(fib), std::move(ext), std::move(pulled),
                     std::move(cmp), iso};
}

ExtFibCompare ext_to_fib_compare(const GlobObj& a, const GlobObj& b) {
  ExtSmash ext = ext_smash(a, b);
  PullbackRet p1y = pullback_ret(ext.bprod.pr1(), a.fib);
  PullbackRet p2z = pullback_ret(ext.bprod.pr2(), b.fib);
  Smash fib = fib_smash(p1y.sp, p2z.sp);
  // T = Ya x Zb -> P(p1Y, p2Z): pairwise with the base pairing
  SMap rr = ext.bprod.factor(SMap::compose(a.fib.retraction, ext.tprod.pr1()),
                             SMap::compose(b.fib.retraction, ext.tprod.pr2()));
  SMap to_p1y = p1y.pb.factor(rr, ext.tprod.pr1());
  SMap to_p2z = p2z.pb.factor(rr, ext.tprod.pr2());
  SMap t_leg = SMap::compose(fib.q(), fib.prod.factor(to_p1y, to_p2z));
  const SMap& u_incl = ext.colim.diagram().arrows[0].f;
  SMap m = ext.colim.factor(
      {SMap::compose(t_leg, u_incl), t_leg, fib.space.section});
  RetMap cmp = make_retmap(ext.obj.fib, fib.space, std::move(m));
  bool iso = ret_iso(cmp);
  return ExtFibCompare{std::move(ext), std::move(p1y), std::move(p2z),
                       std::move(fib), std::move(cmp), iso};
}

StrictFibre strict_fibre_compare(const ExtSmash& e, SimplexRef vx,
                                 SimplexRef vy) {
  SSetPtr pt = point();
  SMap x = classifying_map(pt, e.a.base, SSet::pure(vx));
  SMap y = classifying_map(pt, e.b.base, SSet::pure(vy));
  SMap xy = e.bprod.factor(x, y);
  PullbackRet lhs = pullback_ret(xy, e.obj.fib);
  PullbackRet xa = pullback_ret(x, e.a.fib);
  PullbackRet yb = pullback_ret(y, e.b.fib);
  Smash rhs = fib_smash(xa.sp, yb.sp);
  // P(x*Y, y*Z) -> lhs: pair ((pt,y0),(pt,z0)) -> (pt, class(y0,z0))
  SMap to_T = e.tprod.factor(SMap::compose(xa.pb.pr2(), rhs.prod.pr1()),
                             SMap::compose(yb.pb.pr2(), rhs.prod.pr2()));
  SMap to_E = SMap::compose(e.q(), to_T);
  SMap p_leg = lhs.pb.factor(
      SMap::compose(xa.pb.pr1(), rhs.prod.pr1()), to_E);
  SMap m = rhs.colim.factor(
      {lhs.sp.section, SMap::compose(lhs.sp.section, xa.sp.retraction),
       SMap::compose(lhs.sp.section, yb.sp.retraction), p_leg});
  RetMap cmp = make_retmap(rhs.space, lhs.sp, std::move(m));
  bool iso = ret_iso(cmp);
  return StrictFibre{std::move(lhs), std::move(rhs), std::move(cmp), iso};
}

GlobObj embed_fib(const RetSpace& pointed) { return make_globobj(pointed); }

GlobObj embed_base(SSetPtr K, const RetSpace& s0) {
  SMap terminal = SMap::constant(K, s0.base, SimplexRef{0, 0});
  PullbackRet ks0 = star(K, terminal, s0);
  return make_globobj(ks0.sp);
}

GeneratingSets generating_sets_global(int cap) {
  GeneratingSets out;
  for (int n = 0; n <= cap; ++n) {
    SSetPtr dn = standard(n);
    // zero-fibre images of boundary inclusions
    if (n >= 0) {
      SSetPtr bd = boundary(n);
      SubcomplexResult sub = subcomplex(
          dn, [&](SimplexRef r) { return r.dim < n; });
      GlobObj zsrc = make_globobj(ret_zero(sub.space));
      GlobObj ztgt = make_globobj(ret_zero(dn));
      out.cofibrations.push_back(
          globmor_from_square(zsrc, ztgt, sub.incl, sub.incl));
    }
    // freely-added-section morphisms (id|_{dDelta^n} -> id)_{+Delta^n}
    {
      SubcomplexResult sub =
          subcomplex(dn, [&](SimplexRef r) { return r.dim < n; });
      PlusBase src = plus_base(sub.incl);
      PlusBase tgt = unit_ret(dn);
      SMap sq = src.co.factor({tgt.co.leg(0), SMap::compose(tgt.co.leg(1), sub.incl)});
      GlobMor m = globmor_from_square(make_globobj(src.sp), make_globobj(tgt.sp),
                                      SMap::identity(dn), std::move(sq));
      out.cofibrations.push_back(std::move(m));
    }
    // acyclic: horn-based versions
    for (int k = 0; n >= 1 && k <= n; ++k) {
      SSetPtr h = horn(n, k);
      SubcomplexResult sub = subcomplex(dn, [&](SimplexRef r) {
        const std::string& nm = dn->name(r);
        if (r.dim == n) return false;
        if (r.dim == n - 1) {
          // keep unless it is the face opposite vertex k
          bool misses_k = true;
          for (char c : nm)
            if (c - '0' == k) misses_k = false;
          return !misses_k;
        }
        return true;
      });
      (void)h;
      GlobObj zsrc = make_globobj(ret_zero(sub.space));
      GlobObj ztgt = make_globobj(ret_zero(dn));
      out.acyclic_cofibrations.push_back(
          globmor_from_square(zsrc, ztgt, sub.incl, sub.incl));
      PlusBase src = plus_base(sub.incl);
      PlusBase tgt = unit_ret(dn);
      SMap sq = src.co.factor(
          {tgt.co.leg(0), SMap::compose(tgt.co.leg(1), sub.incl)});
      out.acyclic_cofibrations.push_back(
          globmor_from_square(make_globobj(src.sp), make_globobj(tgt.sp),
                              SMap::identity(dn), std::move(sq)));
    }
  }
  return out;
}

}  // namespace fibwise
