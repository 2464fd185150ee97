#include "doctest.h"
#include "fibwise/directimage.hpp"
#include "fibwise/smash.hpp"

using namespace fibwise;

namespace {
struct Fix {
  SSetPtr pt = point();
  SSetPtr d1 = standard(1);
  SSetPtr s1 = circle();
  SMap t_d1 = SMap::constant(d1, pt, SimplexRef{0, 0});
  SMap t_s1 = SMap::constant(s1, pt, SimplexRef{0, 0});
};

RetSpace pointed_circle(const Fix& F) {
  QuotientResult q = quotient(
      F.d1, subcomplex(F.d1, [](SimplexRef r) { return r.dim == 0; }).incl);
  SMap sec = classifying_map(F.pt, q.space, SSet::pure(q.basepoint));
  SMap ret = SMap::constant(q.space, F.pt, SimplexRef{0, 0});
  return make_retspace(F.pt, q.space, sec, ret);
}
}  // namespace

TEST_CASE("plus_base basics") {
  Fix F;
  PlusBase u = unit_ret(F.d1);
  CHECK(u.sp.total->total_size() == 2 * F.d1->total_size());
  CHECK(SMap::compose(u.sp.retraction, u.sp.section).is_identity_map());

  PlusBase xp = vertex_plus(F.d1, F.d1->by_name("0"));
  CHECK(xp.sp.total->total_size() == F.d1->total_size() + 1);

  SMap from_empty = SMap::build(empty_sset(), F.d1, {});
  PlusBase zp = plus_base(from_empty);
  CHECK(zp.sp.total->total_size() == F.d1->total_size());
}

TEST_CASE("pushforward and pullback_ret") {
  Fix F;
  SMap f = classifying_map(F.pt, F.d1, SSet::pure(F.d1->by_name("0")));
  PlusBase y = unit_ret(F.pt);
  Pushforward fy = pushforward(f, y.sp);
  // 2 vertices + 1 edge + 1 extra vertex
  CHECK(fy.sp.total->census() == std::vector<int>{3, 1});

  Pushforward idy = pushforward(SMap::identity(F.pt), y.sp);
  CHECK(find_ret_iso(idy.sp, y.sp).has_value());

  PlusBase ux = unit_ret(F.d1);
  Pushforward collapsed = pushforward(F.t_d1, ux.sp);
  CHECK(collapsed.sp.total->census() == std::vector<int>{3, 1});

  PullbackRet fib = pullback_ret(f, unit_ret(F.d1).sp);
  CHECK(fib.sp.total->census() == std::vector<int>{2});

  PullbackRet idz = pullback_ret(SMap::identity(F.d1), unit_ret(F.d1).sp);
  CHECK(find_ret_iso(idz.sp, unit_ret(F.d1).sp).has_value());

  RetSpace s1p = pointed_circle(F);
  CHECK(s1p.total->census() == std::vector<int>{1, 1});
  PullbackRet xs1 = star(F.d1, F.t_d1, s1p);
  CHECK(xs1.sp.total->total_size() ==
        product(F.d1, s1p.total).space()->total_size());
}

TEST_CASE("base change adjunction: counts and round trips") {
  Fix F;
  SMap f = classifying_map(F.pt, F.d1, SSet::pure(F.d1->by_name("0")));
  PlusBase y = unit_ret(F.pt);
  PlusBase z = unit_ret(F.d1);
  Pushforward fy = pushforward(f, y.sp);
  PullbackRet fz = pullback_ret(f, z.sp);

  auto homs_up = enumerate_ret_maps(fy.sp, z.sp);
  auto homs_down = enumerate_ret_maps(y.sp, fz.sp);
  CHECK(homs_up.size() == homs_down.size());
  CHECK(homs_up.size() > 0);

  for (const auto& psi : homs_up) {
    RetMap down = adjunct_fwd(f, fy, fz, psi);
    RetMap back = adjunct_bwd(f, fy, fz, down);
    CHECK(back.map.same_assignment(psi.map));
  }
  for (const auto& phi : homs_down) {
    RetMap up = adjunct_bwd(f, fy, fz, phi);
    RetMap back = adjunct_fwd(f, fy, fz, up);
    CHECK(back.map.same_assignment(phi.map));
  }
}

TEST_CASE("fibrewise smash: unit, zero, symmetry") {
  Fix F;
  PlusBase u = unit_ret(F.s1);
  PlusBase xp = vertex_plus(F.s1, F.s1->by_name("pt"));

  Smash uz = fib_smash(u.sp, xp.sp);
  RetMap lambda = smash_unitor_left(u, uz);
  CHECK(ret_iso(lambda));

  Smash zu = fib_smash(xp.sp, u.sp);
  RetMap rho = smash_unitor_right(u, zu);
  CHECK(ret_iso(rho));

  Smash z = fib_smash(ret_zero(F.s1), xp.sp);
  CHECK(is_zero(z.space));

  Smash ab = fib_smash(xp.sp, xp.sp);
  RetMap sym = smash_symmetry(ab, ab);
  CHECK(ret_iso(sym));

  RetSpace s1ret = pointed_circle(F);
  Smash s2 = fib_smash(s1ret, s1ret);
  CHECK(s2.space.total->level_size(2) == 2);
}

TEST_CASE("smash associator") {
  Fix F;
  PlusBase a = vertex_plus(F.d1, F.d1->by_name("0"));
  PlusBase b = unit_ret(F.d1);
  PlusBase c = vertex_plus(F.d1, F.d1->by_name("1"));
  Smash ab = fib_smash(a.sp, b.sp);
  Smash ab_c = fib_smash(ab.space, c.sp);
  Smash bc = fib_smash(b.sp, c.sp);
  Smash a_bc = fib_smash(a.sp, bc.space);
  Smash3 t = fib_smash3(a.sp, b.sp, c.sp);
  RetMap left = smash3_to_left(t, ab, ab_c);
  CHECK(ret_iso(left));
  RetMap right = smash3_to_right(t, bc, a_bc);
  CHECK(ret_iso(right));
  RetMap assoc = smash_assoc(t, ab, ab_c, bc, a_bc);
  CHECK(ret_iso(assoc));
}

TEST_CASE("direct image and its adjunction") {
  Fix F;
  SMap f = classifying_map(F.pt, F.d1, SSet::pure(F.d1->by_name("0")));
  PlusBase y = unit_ret(F.pt);
  DirectImage di = direct_image(f, y.sp, 1);

  DirectImage idi = direct_image(SMap::identity(F.pt), y.sp, 1);
  CHECK(idi.sp.total->census() == y.sp.total->census());

  auto probe = [&](const RetSpace& K) {
    PullbackRet fk = pullback_ret(f, K);
    size_t lhs = count_ret_maps(fk.sp, y.sp);
    size_t rhs = count_ret_maps(K, di.sp);
    CHECK(lhs == rhs);
  };
  probe(unit_ret(F.d1).sp);
  probe(vertex_plus(F.d1, F.d1->by_name("0")).sp);
  probe(vertex_plus(F.d1, F.d1->by_name("1")).sp);
  probe(ret_zero(F.d1));
}

TEST_CASE("internal hom adjunction") {
  Fix F;
  PlusBase xp = vertex_plus(F.s1, F.s1->by_name("pt"));
  PlusBase u = unit_ret(F.s1);
  InternalHom hom = internal_hom(xp.sp, xp.sp, 2);

  InternalHom hu = internal_hom(u.sp, xp.sp, 2);
  for (int d = 0; d <= 2; ++d)
    CHECK(hu.sp.total->level_size(d) == xp.sp.total->level_size(d));

  auto check_adj = [&](const RetSpace& W, const InternalHom& h) {
    Smash wy = fib_smash(W, h.Y);
    size_t lhs = count_ret_maps(wy.space, h.Z);
    size_t rhs = count_ret_maps(W, h.sp);
    CHECK(lhs == rhs);
  };
  check_adj(u.sp, hom);
  check_adj(xp.sp, hom);
  check_adj(ret_zero(F.s1), hom);
}
