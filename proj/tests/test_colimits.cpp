#include "doctest.h"
#include "fibwise/colimit.hpp"
#include "fibwise/enumerate.hpp"
#include "fibwise/sset_std.hpp"

using namespace fibwise;

TEST_CASE("pushouts") {
  SSetPtr d1 = standard(1);
  SSetPtr d0 = standard(0);
  // S^1 = Delta^1 / boundary
  auto bd = subcomplex(d1, [](SimplexRef r) { return r.dim == 0; });
  SMap collapse = SMap::constant(bd.space, d0, SimplexRef{0, 0});
  Colimit s1 = pushout(bd.incl, collapse);
  CHECK(s1.space()->census() == std::vector<int>{1, 1});

  // pushout along identities gives back the object
  SMap id = SMap::identity(d1);
  Colimit same = pushout(id, id);
  CHECK(find_iso(same.space(), d1).has_value());
}

TEST_CASE("coproduct and coequalizer") {
  Colimit cp = coproduct({standard(1), standard(0)});
  CHECK(cp.space()->census() == std::vector<int>{3, 1});

  // coequalizer of the two endpoints Delta^0 => Delta^1 is the circle
  SSetPtr d0 = standard(0);
  SSetPtr d1 = standard(1);
  SMap v0 = classifying_map(d0, d1, SSet::pure(d1->by_name("0")));
  SMap v1 = classifying_map(d0, d1, SSet::pure(d1->by_name("1")));
  Colimit ce = coequalizer(v0, v1);
  CHECK(ce.space()->census() == std::vector<int>{1, 1});
}

TEST_CASE("quotient basics") {
  SSetPtr d1 = standard(1);
  // X / empty = X + point
  SMap none = SMap::build(empty_sset(), d1, {});
  QuotientResult q0 = quotient(d1, none);
  CHECK(q0.space->census() == std::vector<int>{3, 1});

  // Delta^1 / itself is a point
  QuotientResult q1 = quotient(d1, SMap::identity(d1));
  CHECK(q1.space->census() == std::vector<int>{1});
}

TEST_CASE("universal property: factorisations are unique on small diagrams") {
  SSetPtr d1 = standard(1);
  auto bd = subcomplex(d1, [](SimplexRef r) { return r.dim == 0; });
  SSetPtr d0 = standard(0);
  SMap collapse = SMap::constant(bd.space, d0, SimplexRef{0, 0});
  Colimit s1 = pushout(bd.incl, collapse);

  SSetPtr c = s1.space();
  SMap f = s1.factor({s1.leg(0), s1.leg(1), s1.leg(2)});
  CHECK(f.is_identity_map());

  // every map out of the colimit is determined by its cocone
  for (const auto& g : enumerate_maps(c, c)) {
    SMap g2 = s1.factor({SMap::compose(g, s1.leg(0)),
                         SMap::compose(g, s1.leg(1)),
                         SMap::compose(g, s1.leg(2))});
    CHECK(g2.same_assignment(g));
  }
}
