#include "doctest.h"
#include "fibwise/global.hpp"
#include "fibwise/homology.hpp"

using namespace fibwise;

namespace {
struct Fix {
  SSetPtr pt = point();
  SSetPtr d1 = standard(1);
  SSetPtr s1 = circle();
  PlusBase s0 = unit_ret(pt);  // S^0 over the point

  RetSpace pointed_circle() {
    QuotientResult q = quotient(
        d1, subcomplex(d1, [](SimplexRef r) { return r.dim == 0; }).incl);
    SMap sec = classifying_map(pt, q.space, SSet::pure(q.basepoint));
    SMap ret = SMap::constant(q.space, pt, SimplexRef{0, 0});
    return make_retspace(pt, q.space, sec, ret);
  }
};
}  // namespace

TEST_CASE("global morphism forms interconvert") {
  Fix F;
  SMap f = classifying_map(F.pt, F.d1, SSet::pure(F.d1->by_name("0")));
  GlobObj src = make_globobj(F.s0.sp);
  GlobObj tgt = make_globobj(unit_ret(F.d1).sp);

  GlobMor id = glob_identity(src);
  CHECK(id.square().is_identity_map());

  // square -> pair -> over_source -> back
  SMap sq =
      SMap::compose(tgt.fib.section, SMap::compose(f, F.s0.sp.retraction));
  GlobMor m = globmor_from_square(src, tgt, f, sq);
  RetMap phi = m.over_source();
  GlobMor m2 = globmor_from_source(src, tgt, f, m.pr, phi.map);
  CHECK(m2.square().same_assignment(m.square()));
  CHECK(m2.psi.map.same_assignment(m.psi.map));
}

TEST_CASE("external smash: unit, zero, symmetry") {
  Fix F;
  GlobObj a = make_globobj(vertex_plus(F.s1, F.s1->by_name("pt")).sp);
  GlobObj unit_obj = make_globobj(F.s0.sp);

  ExtSmash ua = ext_smash(unit_obj, a);
  GlobMor lam = ext_unitor_left(F.s0, ua);
  CHECK(glob_is_iso(lam));

  ExtSmash au = ext_smash(a, unit_obj);
  GlobMor rho = ext_unitor_right(F.s0, au);
  CHECK(glob_is_iso(rho));

  GlobObj z = make_globobj(ret_zero(F.d1));
  ExtSmash z_a = ext_smash(z, a);
  CHECK(is_zero(z_a.obj.fib));

  ExtSmash ab = ext_smash(a, make_globobj(unit_ret(F.d1).sp));
  ExtSmash ba = ext_smash(make_globobj(unit_ret(F.d1).sp), a);
  GlobMor sym = ext_symmetry(ab, ba);
  CHECK(glob_is_iso(sym));

  CHECK(ab.obj.base.get() == ab.bprod.space().get());
}

TEST_CASE("over the point, external smash is the smash") {
  Fix F;
  RetSpace s1p = F.pointed_circle();
  GlobObj a = make_globobj(s1p);
  ExtSmash aa = ext_smash(a, a);
  CHECK(aa.obj.base->census() == std::vector<int>{1});
  Smash sm = fib_smash(s1p, s1p);
  CHECK(aa.obj.fib.total->level_size(2) == sm.space.total->level_size(2));
  CHECK(homology(aa.obj.fib.total, Field::Q()) == std::vector<int>{1, 0, 1});
}

TEST_CASE("external smash associativity comparisons") {
  Fix F;
  GlobObj a = make_globobj(vertex_plus(F.d1, F.d1->by_name("0")).sp);
  GlobObj b = make_globobj(F.s0.sp);
  GlobObj c = make_globobj(unit_ret(F.s1).sp);
  ExtSmash ab = ext_smash(a, b);
  ExtSmash ab_c = ext_smash(ab.obj, c);
  ExtSmash bc = ext_smash(b, c);
  ExtSmash a_bc = ext_smash(a, bc.obj);
  ExtSmash3 t = ext_smash3(a, b, c);
  GlobMor left = ext3_to_left(t, ab, ab_c);
  CHECK(glob_is_iso(left));
  GlobMor right = ext3_to_right(t, bc, a_bc);
  CHECK(glob_is_iso(right));
}

TEST_CASE("diagonal comparison") {
  Fix F;
  RetSpace y = vertex_plus(F.s1, F.s1->by_name("pt")).sp;
  DiagCompare dc = diag_compare(y, unit_ret(F.s1).sp);
  CHECK(dc.iso);
  DiagCompare dc2 = diag_compare(y, y);
  CHECK(dc2.iso);
  RetSpace s1p = F.pointed_circle();
  DiagCompare dc3 = diag_compare(s1p, s1p);
  CHECK(dc3.iso);
}

TEST_CASE("external-to-fibrewise comparison") {
  Fix F;
  GlobObj a = make_globobj(vertex_plus(F.s1, F.s1->by_name("pt")).sp);
  GlobObj b = make_globobj(unit_ret(F.d1).sp);
  ExtFibCompare c1 = ext_to_fib_compare(a, b);
  CHECK(c1.iso);
  ExtFibCompare c2 = ext_to_fib_compare(a, make_globobj(F.s0.sp));
  CHECK(c2.iso);
  ExtFibCompare c3 = ext_to_fib_compare(make_globobj(ret_zero(F.d1)), b);
  CHECK(c3.iso);
}

TEST_CASE("strict fibres of external smashes") {
  Fix F;
  GlobObj a = make_globobj(vertex_plus(F.s1, F.s1->by_name("pt")).sp);
  GlobObj b = make_globobj(unit_ret(F.d1).sp);
  ExtSmash e = ext_smash(a, b);
  StrictFibre sf =
      strict_fibre_compare(e, F.s1->by_name("pt"), F.d1->by_name("0"));
  CHECK(sf.iso);
  StrictFibre sf2 =
      strict_fibre_compare(e, F.s1->by_name("pt"), F.d1->by_name("1"));
  CHECK(sf2.iso);
}

TEST_CASE("monoidal embeddings") {
  Fix F;
  GlobObj ek = embed_base(F.d1, F.s0.sp);
  GlobObj el = embed_base(F.s1, F.s0.sp);
  ExtSmash kl = ext_smash(ek, el);
  Pullback prod_kl = product(F.d1, F.s1);
  GlobObj ekl = embed_base(prod_kl.space(), F.s0.sp);
  auto iso_base = find_iso(kl.obj.base, ekl.base);
  CHECK(iso_base.has_value());
  CHECK(kl.obj.fib.total->total_size() == ekl.fib.total->total_size());

  GlobObj unit_obj = embed_fib(F.s0.sp);
  ExtSmash us = ext_smash(unit_obj, unit_obj);
  GlobMor lam = ext_unitor_left(F.s0, us);
  CHECK(glob_is_iso(lam));

  RetSpace s1p = F.pointed_circle();
  GlobObj ef = embed_fib(s1p);
  ExtSmash ff = ext_smash(ef, ef);
  Smash sm = fib_smash(s1p, s1p);
  CHECK(find_iso(ff.obj.fib.total, sm.space.total).has_value());
}

TEST_CASE("generating sets are monomorphisms") {
  GeneratingSets gs = generating_sets_global(2);
  CHECK(gs.cofibrations.size() == 6);
  CHECK(gs.acyclic_cofibrations.size() == 10);
  for (const auto& m : gs.cofibrations) CHECK(glob_is_mono(m));
  for (const auto& m : gs.acyclic_cofibrations) CHECK(glob_is_mono(m));
}
