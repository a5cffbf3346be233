#include <doctest.h>

#include "ibistk/actions.hpp"
#include "ibistk/catalog.hpp"
#include "ibistk/errors.hpp"
#include "ibistk/group_io.hpp"
#include "ibistk/orbits.hpp"

using namespace ibistk;

TEST_CASE("direct product acts on the disjoint union") {
  PermGroup g = direct_product(catalog_group("sym:2"), catalog_group("sym:2"));
  CHECK(g.degree == 4);
  CHECK(Bsgs::build(g).order() == 4);

  PermGroup h = direct_product(catalog_group("sym:3"), catalog_group("alt:4"));
  CHECK(h.degree == 7);
  CHECK(Bsgs::build(h).order() == 72);
}

TEST_CASE("imprimitive wreath product") {
  PermGroup w = wreath_imprimitive(catalog_group("sym:3"), 2);
  CHECK(w.degree == 6);
  CHECK(Bsgs::build(w).order() == 72);
  CHECK(is_transitive(w));
  CHECK_FALSE(is_primitive(w));
  CHECK(wreath_imprimitive(catalog_group("sym:3"), 1).degree == 3);
}

TEST_CASE("product action degrees and orders") {
  PermGroup w = wreath_product_action(catalog_group("sym:5"), 2,
                                      catalog_group("sym:2"));
  CHECK(w.degree == 25);
  CHECK(Bsgs::build(w).order() == 28800);

  PermGroup v = wreath_product_action(catalog_group("psl2:4"), 2,
                                      catalog_group("sym:2"));
  CHECK(v.degree == 25);
  CHECK(Bsgs::build(v).order() == 7200);

  CHECK(wreath_product_action(catalog_group("sym:5"), 1,
                              catalog_group("sym:5"))
            .degree == 5);
}

TEST_CASE("product action point encoding uses big-endian strides") {
  // coordinate 0 has stride n: the generator acting in coordinate 0 moves
  // blocks of n points at once
  PermGroup h = catalog_group("sym:3");
  PermGroup w = wreath_product_action(h, 2, catalog_group("sym:2"));
  // the swap generator maps (x, y) -> (y, x): point 3*x+y -> 3*y+x
  bool found_swap = false;
  for (const auto& g : w.generators) {
    bool is_swap = true;
    for (int x = 0; x < 3 && is_swap; ++x)
      for (int y = 0; y < 3 && is_swap; ++y)
        if (g[3 * x + y] != 3 * y + x) is_swap = false;
    if (is_swap) found_swap = true;
  }
  CHECK(found_swap);
}

TEST_CASE("degree caps on constructions") {
  CHECK_THROWS_AS(wreath_product_action(catalog_group("sym:5"), 2,
                                        catalog_group("sym:2"), 20),
                  CapacityError);
  CHECK_THROWS_AS(wreath_imprimitive(catalog_group("sym:5"), 3, 10),
                  CapacityError);
}

TEST_CASE("coset action on a point stabilizer recovers the natural action") {
  Bsgs s3 = Bsgs::build(catalog_group("sym:3"));
  PermGroup h = parse_group_text("degree 3\ngen (1 2)\n");
  CosetAction act = coset_action(s3, h);
  CHECK(act.image.degree == 3);
  CHECK(is_transitive(act.image));
  CHECK(Bsgs::build(act.image).order() == 6);
}

TEST_CASE("coset action degree times subgroup order is the group order") {
  Bsgs a5 = Bsgs::build(catalog_group("alt:5"));
  PermGroup v = parse_group_text("degree 5\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n");
  CosetAction act = coset_action(a5, v);
  CHECK(act.image.degree * 4 == 60);
  CHECK(is_transitive(act.image));
}

TEST_CASE("coset action on the whole group is trivial") {
  Bsgs s4 = Bsgs::build(catalog_group("sym:4"));
  CosetAction act = coset_action(s4, catalog_group("sym:4"));
  CHECK(act.image.degree == 1);
}

TEST_CASE("coset canonicalization is constant on cosets") {
  Bsgs h = Bsgs::build(parse_group_text("degree 6\ngen (1 2 3)\ngen (1 2)\n"));
  Bsgs s6 = Bsgs::build(catalog_group("sym:6"));
  std::vector<Perm> h_elems = all_elements(h);
  auto stream = element_enumeration(s6, 720);
  int checked = 0;
  while (auto g = stream.next()) {
    if (++checked % 37 != 0) continue; // sample the cosets
    Perm canon = h.coset_canonical(*g);
    for (std::size_t i = 0; i < h_elems.size(); i += 2)
      CHECK(h.coset_canonical(compose(h_elems[i], *g)) == canon);
  }
  CHECK(checked == 720);
}

TEST_CASE("coset action rejects non-subgroups") {
  Bsgs a4 = Bsgs::build(catalog_group("alt:4"));
  PermGroup odd = parse_group_text("degree 4\ngen (1 2)\n");
  CHECK_THROWS_AS(coset_action(a4, odd), InputError);
}

TEST_CASE("centralizers by capped enumeration") {
  Bsgs s3 = Bsgs::build(catalog_group("sym:3"));
  Perm c3 = parse_cycles(3, "(1 2 3)");
  PermGroup cent = centralizer_of_element(s3, c3);
  CHECK(Bsgs::build(cent).order() == 3);
  CHECK(Bsgs::build(cent).contains(c3));

  Bsgs a5 = Bsgs::build(catalog_group("alt:5"));
  PermGroup cent2 = centralizer_of_element(a5, parse_cycles(5, "(1 2)(3 4)"));
  CHECK(Bsgs::build(cent2).order() == 4);

  PermGroup whole = centralizer_of_element(s3, Perm(3));
  CHECK(Bsgs::build(whole).order() == 6);

  CHECK_THROWS_AS(centralizer_of_element(s3, parse_cycles(3, "(1 2 3)"), 2),
                  CapacityError);
  CHECK_THROWS_AS(centralizer_of_element(a5, parse_cycles(5, "(1 2)")),
                  InputError);
}

TEST_CASE("centralizer matches a brute-force element filter") {
  Bsgs a5 = Bsgs::build(catalog_group("alt:5"));
  for (const char* t : {"(1 2)(3 4)", "(1 2 3)", "(1 2 3 4 5)"}) {
    Perm x = parse_cycles(5, t);
    long by_filter = 0;
    auto stream = element_enumeration(a5);
    while (auto g = stream.next())
      if (commute(*g, x)) ++by_filter;
    PermGroup cent = centralizer_of_element(a5, x);
    CHECK(Bsgs::build(cent).order() == by_filter);
  }
}

TEST_CASE("centralizer order divides the group order") {
  Bsgs s4 = Bsgs::build(catalog_group("sym:4"));
  for (const char* t : {"(1 2)", "(1 2 3)", "(1 2 3 4)", "(1 2)(3 4)"}) {
    PermGroup cent = centralizer_of_element(s4, parse_cycles(4, t));
    BigInt c = Bsgs::build(cent).order();
    CHECK(24 % c == 0);
  }
}
