#include "fibwise/smash.hpp"

#include <stdexcept>

namespace fibwise {

namespace {
// wedge inclusion Ytot -> P = Ytot x_X Ztot over the section of Z
SMap wedge_in_left(const Pullback& P, const RetSpace& Y, const RetSpace& Z) {
  return P.factor(SMap::identity(Y.total),
                  SMap::compose(Z.section, Y.retraction));
}
SMap wedge_in_right(const Pullback& P, const RetSpace& Y, const RetSpace& Z) {
  return P.factor(SMap::compose(Y.section, Z.retraction),
                  SMap::identity(Z.total));
}
}  // namespace

Smash fib_smash(const RetSpace& Y, const RetSpace& Z) {
  if (!Y.same_base(Z)) throw std::invalid_argument("fib_smash: base mismatch");
  SSetPtr X = Y.base;
  Pullback prod(Y.retraction, Z.retraction);
  Diagram d;
  int xi = d.add(X);
  int yi = d.add(Y.total);
  int zi = d.add(Z.total);
  int pi = d.add(prod.space());
  d.arrow(xi, yi, Y.section);
  d.arrow(xi, zi, Z.section);
  d.arrow(yi, xi, Y.retraction);
  d.arrow(zi, xi, Z.retraction);
  d.arrow(yi, pi, wedge_in_left(prod, Y, Z));
  d.arrow(zi, pi, wedge_in_right(prod, Y, Z));
  Colimit co(std::move(d), "w");
  SMap section = co.leg(0);
  SMap retraction = co.factor({SMap::identity(X), Y.retraction, Z.retraction,
                               SMap::compose(Y.retraction, prod.pr1())});
  RetSpace sp =
      make_retspace(X, co.space(), std::move(section), std::move(retraction));
  return Smash{Y, Z, std::move(sp), std::move(prod), std::move(co)};
}

RetMap smash_map(const Smash& s, const Smash& t, const RetMap& f,
                 const RetMap& g) {
  SSetPtr X = s.Y.base;
  SMap pmap = pullback_map(s.prod, t.prod, f.map, g.map);
  SMap m = s.colim.factor(
      {t.space.section, SMap::compose(t.space.section, s.Y.retraction),
       SMap::compose(t.space.section, s.Z.retraction),
       SMap::compose(t.q(), pmap)});
  (void)X;
  return make_retmap(s.space, t.space, std::move(m));
}

RetMap smash_comparison(const Smash& s, const Smash& t) {
  return smash_map(s, t, ret_identity(s.Y), ret_identity(s.Z));
}

RetMap smash_symmetry(const Smash& yz, const Smash& zy) {
  SMap pswap = zy.prod.factor(yz.prod.pr2(), yz.prod.pr1());
  SMap m = yz.colim.factor(
      {zy.space.section, SMap::compose(zy.space.section, yz.Y.retraction),
       SMap::compose(zy.space.section, yz.Z.retraction),
       SMap::compose(zy.q(), pswap)});
  return make_retmap(yz.space, zy.space, std::move(m));
}

namespace {
// P = U x_X Z with U = X_{+X}: map P -> Ztot sending the free copy by pr_Z
// and the section copy through the basepoint section
SMap unit_collapse(const Pullback& P, const PlusBase& unit, const RetSpace& Z,
                   bool unit_on_left) {
  const SSet& Ps = *P.space();
  SMap szr = SMap::compose(Z.section, Z.retraction);
  std::vector<std::vector<Value>> assign(Ps.dim() + 1);
  for (int dd = 0; dd <= Ps.dim(); ++dd)
    for (int j = 0; j < Ps.level_size(dd); ++j) {
      Value u = unit_on_left ? P.pr1().apply(SimplexRef{dd, j})
                             : P.pr2().apply(SimplexRef{dd, j});
      Value z = unit_on_left ? P.pr2().apply(SimplexRef{dd, j})
                             : P.pr1().apply(SimplexRef{dd, j});
      if (unit.copy_of(u.s) == 1)
        assign[dd].push_back(z);
      else
        assign[dd].push_back(szr.apply(z));
    }
  return SMap::build(P.space(), Z.total, std::move(assign));
}
}  // namespace

RetMap smash_unitor_left(const PlusBase& unit, const Smash& uz) {
  const RetSpace& Z = uz.Z;
  SMap pmap = unit_collapse(uz.prod, unit, Z, true);
  SMap m = uz.colim.factor(
      {Z.section, SMap::compose(Z.section, uz.Y.retraction),
       SMap::compose(Z.section, Z.retraction), pmap});
  return make_retmap(uz.space, Z, std::move(m));
}

RetMap smash_unitor_right(const PlusBase& unit, const Smash& yu) {
  const RetSpace& Y = yu.Y;
  SMap pmap = unit_collapse(yu.prod, unit, Y, false);
  SMap m = yu.colim.factor(
      {Y.section, SMap::compose(Y.section, Y.retraction),
       SMap::compose(Y.section, yu.Z.retraction), pmap});
  return make_retmap(yu.space, Y, std::move(m));
}

namespace {
// nondegenerate simplices lying in the image of a section
std::vector<std::vector<char>> section_image(const RetSpace& Y) {
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

Smash3 fib_smash3(const RetSpace& A, const RetSpace& B, const RetSpace& C) {
  SSetPtr X = A.base;
  Pullback p12(A.retraction, B.retraction);
  SMap r12 = SMap::compose(A.retraction, p12.pr1());
  Pullback p123(r12, C.retraction);
  SMap prA = SMap::compose(p12.pr1(), p123.pr1());
  SMap prB = SMap::compose(p12.pr2(), p123.pr1());
  const SMap& prC = p123.pr2();
  auto inA = section_image(A);
  auto inB = section_image(B);
  auto inC = section_image(C);
  // U: simplices with some coordinate over the corresponding section
  SubcomplexResult U = subcomplex(p123.space(), [&](SimplexRef r) {
    Value a = prA.apply(r), b = prB.apply(r), c = prC.apply(r);
    return inA[a.s.dim][a.s.idx] || inB[b.s.dim][b.s.idx] ||
           inC[c.s.dim][c.s.idx];
  });
  SMap proj = SMap::compose(r12, p123.pr1());
  Colimit co = pushout(U.incl, SMap::compose(proj, U.incl));
  SMap section = co.leg(2);
  SMap retraction = co.factor(
      {SMap::compose(proj, U.incl), proj, SMap::identity(X)});
  RetSpace sp =
      make_retspace(X, co.space(), std::move(section), std::move(retraction));
  return Smash3{A, B, C, std::move(sp), std::move(p12), std::move(p123),
                std::move(co)};
}

RetMap smash3_to_left(const Smash3& t, const Smash& ab, const Smash& ab_c) {
  // cocone legs into ((A ∧ B) ∧ C)
  const SMap& sec = ab_c.space.section;
  // P123 -> outer P = (A∧B)tot x_X Ct, translating through ab's own product
  SMap p123_to_pab =
      ab.prod.factor(SMap::compose(t.p12.pr1(), t.p123.pr1()),
                     SMap::compose(t.p12.pr2(), t.p123.pr1()));
  SMap p123_to_abtot = SMap::compose(ab.q(), p123_to_pab);
  SMap pmap = ab_c.prod.factor(p123_to_abtot, t.p123.pr2());
  SMap leg_p = SMap::compose(ab_c.q(), pmap);
  const SMap& u_incl = t.colim.diagram().arrows[0].f;
  SMap m = t.colim.factor({SMap::compose(leg_p, u_incl), leg_p, sec});
  return make_retmap(t.space, ab_c.space, std::move(m));
}

RetMap smash3_to_right(const Smash3& t, const Smash& bc, const Smash& a_bc) {
  const SMap& sec = a_bc.space.section;
  // P123 -> P_BC -> (B∧C)tot, and P123 -> At
  SMap p123_to_pbc = bc.prod.factor(SMap::compose(t.p12.pr2(), t.p123.pr1()),
                                    t.p123.pr2());
  SMap p123_to_bctot = SMap::compose(bc.q(), p123_to_pbc);
  SMap pmap = a_bc.prod.factor(SMap::compose(t.p12.pr1(), t.p123.pr1()),
                               p123_to_bctot);
  SMap leg_p = SMap::compose(a_bc.q(), pmap);
  const SMap& u_incl = t.colim.diagram().arrows[0].f;
  SMap m = t.colim.factor({SMap::compose(leg_p, u_incl), leg_p, sec});
  return make_retmap(t.space, a_bc.space, std::move(m));
}

RetMap smash_assoc(const Smash3& t, const Smash& ab, const Smash& ab_c,
                   const Smash& bc, const Smash& a_bc) {
  RetMap left = smash3_to_left(t, ab, ab_c);
  RetMap right = smash3_to_right(t, bc, a_bc);
  auto inv = ret_inverse(left);
  if (!inv) throw std::logic_error("smash_assoc: comparison not iso");
  return ret_compose(right, *inv);
}

RetMap smash3_swap_last(const Smash3& t, const Smash3& ts) {
  // (a, b, c) -> (a, c, b)
  SMap to_p12 = ts.p12.factor(SMap::compose(t.p12.pr1(), t.p123.pr1()),
                              t.p123.pr2());
  SMap pmap =
      ts.p123.factor(to_p12, SMap::compose(t.p12.pr2(), t.p123.pr1()));
  SMap leg_p = SMap::compose(ts.q(), pmap);
  const SMap& u_incl = t.colim.diagram().arrows[0].f;
  SMap m = t.colim.factor(
      {SMap::compose(leg_p, u_incl), leg_p, ts.space.section});
  return make_retmap(t.space, ts.space, std::move(m));
}

RetMap smash3_swap_first(const Smash3& t, const Smash3& ts) {
  // (a, b, c) -> (b, a, c)
  SMap to_p12 = ts.p12.factor(SMap::compose(t.p12.pr2(), t.p123.pr1()),
                              SMap::compose(t.p12.pr1(), t.p123.pr1()));
  SMap pmap = ts.p123.factor(to_p12, t.p123.pr2());
  SMap leg_p = SMap::compose(ts.q(), pmap);
  const SMap& u_incl = t.colim.diagram().arrows[0].f;
  SMap m = t.colim.factor(
      {SMap::compose(leg_p, u_incl), leg_p, ts.space.section});
  return make_retmap(t.space, ts.space, std::move(m));
}

PTensor ptensor(SSetPtr X, const SMap& terminal, const RetSpace& K,
                const RetSpace& Y) {
  PullbackRet xk = star(X, terminal, K);
  Smash sm = fib_smash(xk.sp, Y);
  return PTensor{K, std::move(xk), std::move(sm)};
}

RetMap ptensor_map(const PTensor& a, const PTensor& b, const RetMap& f) {
  RetMap idxk = make_retmap(a.xk.sp, b.xk.sp,
                            b.xk.pb.factor(a.xk.pb.pr1(), a.xk.pb.pr2()));
  return smash_map(a.smash, b.smash, idxk, f);
}

RetMap ptensor_act(const PTensor& a, const PTensor& b, const RetMap& g_onK,
                   const SMap& terminal) {
  (void)terminal;
  RetMap xg = pullback_ret_map(terminal, a.xk, b.xk, g_onK);
  RetMap idy = ret_identity(a.smash.Z);
  return smash_map(a.smash, b.smash, xg, idy);
}

}  // namespace fibwise
