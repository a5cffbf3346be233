#include <doctest.h>

#include "ibistk/errors.hpp"
#include "ibistk/perm.hpp"

using namespace ibistk;

namespace {

// Independent image-chasing oracle for products: walk each point through p,
// then q, by table lookup only.
Perm compose_by_hand(const Perm& p, const Perm& q) {
  std::vector<int> out(p.degree());
  for (int i = 0; i < p.degree(); ++i) {
    int mid = p.images()[i];
    out[i] = q.images()[mid];
  }
  return Perm::from_images(out);
}

} // namespace

TEST_CASE("compose identity and transposition") {
  Perm id(4);
  Perm t = parse_cycles(4, "(1 2)");
  CHECK(compose(id, t) == t);
  CHECK(compose(t, id) == t);
}

TEST_CASE("involution squared is the identity") {
  Perm t = parse_cycles(2, "(1 2)");
  CHECK(compose(t, t) == Perm(2));
}

TEST_CASE("3-cycle squared matches the hand oracle") {
  Perm c = parse_cycles(3, "(1 2 3)");
  Perm expected = compose_by_hand(c, c);
  CHECK(compose(c, c) == expected);
  CHECK(compose(c, c) == parse_cycles(3, "(1 3 2)"));
}

TEST_CASE("compose rejects degree mismatch") {
  CHECK_THROWS_AS(compose(Perm(3), Perm(4)), InputError);
}

TEST_CASE("inverse round trip") {
  Perm p = parse_cycles(7, "(1 4 6)(2 3)");
  CHECK(compose(p, p.inverse()) == Perm(7));
  CHECK(compose(p.inverse(), p) == Perm(7));
}

TEST_CASE("cycle text round trip") {
  for (const char* text : {"(1 2)", "(1 2)(3 4 5)", "(2 7)(3 5 6)", "()"}) {
    Perm p = parse_cycles(7, text);
    CHECK(parse_cycles(7, format_cycles(p)) == p);
  }
  CHECK(format_cycles(Perm(5)) == "()");
  CHECK(format_cycles(parse_cycles(5, "(1 2)(3 4 5)")) == "(1 2)(3 4 5)");
}

TEST_CASE("parse rejects malformed cycles") {
  CHECK_THROWS_AS(parse_cycles(4, "(1 5)"), InputError);
  CHECK_THROWS_AS(parse_cycles(4, "(1 1)"), InputError);
  CHECK_THROWS_AS(parse_cycles(4, "(1 2"), InputError);
  CHECK_THROWS_AS(parse_cycles(4, "1 2"), InputError);
  CHECK_THROWS_AS(parse_cycles(4, "(0 1)"), InputError);
  CHECK_THROWS_AS(parse_cycles(4, "(1)"), InputError);
}

TEST_CASE("from_images validates bijections") {
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Perm::from_images({0, 3, 1}), InputError);
  CHECK(Perm::from_images({1, 0, 2}).degree() == 3);
}

TEST_CASE("conjugate matches explicit product") {
  Perm p = parse_cycles(6, "(1 2 3)");
  Perm q = parse_cycles(6, "(2 5)(3 6)");
  Perm expected = compose(compose(q.inverse(), p), q);
  CHECK(conjugate(p, q) == expected);
}

TEST_CASE("order is the lcm of cycle lengths") {
  CHECK(Perm(5).order() == 1);
  CHECK(parse_cycles(5, "(1 2)").order() == 2);
  CHECK(parse_cycles(6, "(1 2)(3 4 5)").order() == 6);
  CHECK(parse_cycles(9, "(1 2 3 4)(5 6 7 8 9)").order() == 20);
}

TEST_CASE("commute agrees with product comparison") {
  Perm a = parse_cycles(5, "(1 2 3)");
  Perm b = parse_cycles(5, "(4 5)");
  Perm c = parse_cycles(5, "(1 2)");
  CHECK(commute(a, b));
  CHECK_FALSE(commute(a, c));
}
