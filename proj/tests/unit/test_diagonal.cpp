#include <doctest.h>

#include "ibistk/bsgs.hpp"
#include "ibistk/catalog.hpp"
#include "ibistk/diagonal.hpp"
#include "ibistk/errors.hpp"
#include "ibistk/orbits.hpp"

using namespace ibistk;

TEST_CASE("socle-only diagonal action over psl2(4)") {
  DiagonalSpec spec;
  spec.t = psl2(4);
  spec.k = 2;
  DiagonalAction act = diagonal_group(spec);
  CHECK(act.group().degree == 60);
  Bsgs b = Bsgs::build(act.group());
  CHECK(b.order() == 3600);
  CHECK(is_transitive(act.group()));
  CHECK(is_primitive(act.group()));

  // the stabilizer of [1,1] inside the socle is the full diagonal copy of T
  long p0 = act.point_of({Perm(5)});
  CHECK(b.stabilizer_of(static_cast<int>(p0)).order() == 60);
}

TEST_CASE("diagonal with top group adjoined") {
  DiagonalSpec spec;
  spec.t = alt_natural(5);
  spec.k = 2;
  spec.top = sym_natural(2);
  DiagonalAction act = diagonal_group(spec);
  CHECK(act.group().degree == 60);
  CHECK(Bsgs::build(act.group()).order() == 7200);
}

TEST_CASE("three-factor diagonal action") {
  DiagonalSpec spec;
  spec.t = alt_natural(5);
  spec.k = 3;
  spec.top = sym_natural(3);
  DiagonalAction act = diagonal_group(spec);
  CHECK(act.group().degree == 3600);
  CHECK(Bsgs::build(act.group()).order() == BigInt(60) * 60 * 60 * 6);
  CHECK(is_primitive(act.group()));
}

TEST_CASE("coset labelling round trip") {
  DiagonalAction act = catalog_diagonal("diag:alt:5:2");
  CHECK(act.num_elements() == 60);
  for (long pt : {0L, 1L, 17L, 59L}) {
    auto tuple = act.tuple_of(pt);
    CHECK(act.point_of(tuple) == pt);
  }
  // [1,1] is point 0 because the identity is enumerated first
  CHECK(act.point_of({Perm(5)}) == 0);
}

TEST_CASE("labelling of k=3 tuples") {
  DiagonalSpec spec;
  spec.t = alt_natural(4);
  spec.k = 3;
  DiagonalAction act = diagonal_group(spec);
  CHECK(act.group().degree == 144);
  auto tuple = act.tuple_of(5 * 12 + 7);
  CHECK(act.element_index(tuple[0]) == 5);
  CHECK(act.element_index(tuple[1]) == 7);
}

TEST_CASE("socle generators alone act transitively") {
  DiagonalSpec spec;
  spec.t = psl2(4);
  spec.k = 2;
  DiagonalAction socle_only = diagonal_group(spec);
  CHECK(is_transitive(socle_only.group()));
}

TEST_CASE("outer automorphism must normalize the socle factor") {
  DiagonalSpec spec;
  spec.t = alt_natural(5);
  spec.k = 2;
  spec.outer.push_back(parse_cycles(5, "(1 2)")); // conjugation by odd element is fine
  CHECK(Bsgs::build(diagonal_group(spec).group()).order() == 7200);

  DiagonalSpec bad;
  bad.t = psl2(8);
  bad.k = 2;
  bad.outer.push_back(parse_cycles(9, "(1 2)")); // does not normalize psl2(8)
  CHECK_THROWS_AS(diagonal_group(bad), InputError);
}

TEST_CASE("twist validation") {
  // (y,y)*swap with y^2 outside the adjoined automorphisms is rejected:
  // over psl2(16), the frobenius square is not inner
  DiagonalSpec bad;
  bad.t = psl2(16);
  bad.k = 2;
  bad.twist = psl2_frobenius(16);
  CHECK_THROWS_AS(diagonal_group(bad), InputError);

  // over psl2(4) the square is the identity, so the twist is consistent
  DiagonalSpec good;
  good.t = psl2(4);
  good.k = 2;
  good.twist = psl2_frobenius(4);
  CHECK(Bsgs::build(diagonal_group(good).group()).order() == 7200);

  DiagonalSpec wrong_k;
  wrong_k.t = alt_natural(5);
  wrong_k.k = 3;
  wrong_k.twist = parse_cycles(5, "(1 2)");
  CHECK_THROWS_AS(diagonal_group(wrong_k), InputError);
}

TEST_CASE("degree cap") {
  DiagonalSpec spec;
  spec.t = alt_natural(5);
  spec.k = 3;
  CHECK_THROWS_AS(diagonal_group(spec, 100), CapacityError);
}

TEST_CASE("catalog diag names cover the twist grammar") {
  CHECK(Bsgs::build(catalog_group("diag:psl2:4:2:frob=1")).order() == 7200);
  CHECK(Bsgs::build(catalog_group("diag:alt:5:2:twist")).order() == 7200);
  CHECK(Bsgs::build(catalog_group("diag:alt:5:2:top=sym:2:frob=1")).order() ==
        14400);
  CHECK(catalog_group("diag:psl2:4:2").label == "diag:psl2:4:2");
}
