#include "doctest.h"
#include "fibwise/homology.hpp"
#include "fibwise/smash.hpp"

using namespace fibwise;

namespace {
RetSpace pointed_circle(SSetPtr pt) {
  SSetPtr d1 = standard(1);
  QuotientResult q = quotient(
      d1, subcomplex(d1, [](SimplexRef r) { return r.dim == 0; }).incl);
  SMap sec = classifying_map(pt, q.space, SSet::pure(q.basepoint));
  SMap ret = SMap::constant(q.space, pt, SimplexRef{0, 0});
  return make_retspace(pt, q.space, sec, ret);
}
}  // namespace

TEST_CASE("homology of basic complexes") {
  for (Field k : {Field::Q(), Field::Fp(2)}) {
    CHECK(homology(circle(), k) == std::vector<int>{1, 1});
    CHECK(homology(boundary(2), k) == std::vector<int>{1, 1});
    CHECK(homology(standard(3), k) == std::vector<int>{1});
    CHECK(homology(horn(2, 1), k) == std::vector<int>{1});
    CHECK(boundary_squares_to_zero(circle(), k));
    CHECK(boundary_squares_to_zero(boundary(3), k));
    CHECK(homology(boundary(3), k) == std::vector<int>{1, 0, 1});
  }
}

TEST_CASE("homology of the smashed circle") {
  SSetPtr pt = point();
  RetSpace s1 = pointed_circle(pt);
  Smash s2 = fib_smash(s1, s1);
  for (Field k : {Field::Q(), Field::Fp(2)}) {
    CHECK(homology(s2.space.total, k) == std::vector<int>{1, 0, 1});
    CHECK(boundary_squares_to_zero(s2.space.total, k));
  }
}

TEST_CASE("quotient census example") {
  // Delta^2 / horn: 1 vertex, 1 edge, 1 triangle
  SSetPtr d2 = standard(2);
  auto sub = subcomplex(d2, [&](SimplexRef r) {
    const std::string& n = d2->name(r);
    return n != "012" && n != "02";
  });
  QuotientResult q = quotient(d2, sub.incl);
  CHECK(q.space->census() == std::vector<int>{1, 1, 1});
}

TEST_CASE("split cofibre sequence") {
  SSetPtr s1 = circle();
  for (Field k : {Field::Q(), Field::Fp(2)}) {
    CHECK(split_sequence_holds(unit_ret(s1).sp, k));
    CHECK(split_sequence_holds(vertex_plus(s1, s1->by_name("pt")).sp, k));
    CHECK(split_sequence_holds(ret_zero(s1), k));
    auto hy = homology(unit_ret(s1).sp.total, k);
    CHECK(hy == std::vector<int>{2, 2});
    auto hq = rel_quotient_homology(unit_ret(s1).sp, k);
    CHECK(hq == std::vector<int>{1, 1});
    auto hx = homology(vertex_plus(s1, s1->by_name("pt")).sp.total, k);
    CHECK(hx == std::vector<int>{2, 1});
  }
}
