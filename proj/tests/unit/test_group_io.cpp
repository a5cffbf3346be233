#include <doctest.h>

#include "ibistk/errors.hpp"
#include "ibistk/group_io.hpp"

using namespace ibistk;

TEST_CASE("parses the documented grammar") {
  PermGroup g = parse_group_text("# a comment\n"
                                 "degree 5\n"
                                 "\n"
                                 "gen (1 2)(3 4 5)   # trailing comment\n"
                                 "gen ()\n");
  CHECK(g.degree == 5);
  // the identity generator is stripped on normalization
  CHECK(g.generators.size() == 1);
  CHECK(g.generators[0] == parse_cycles(5, "(1 2)(3 4 5)"));
}

TEST_CASE("identity-only input keeps one identity generator") {
  PermGroup g = parse_group_text("degree 3\ngen ()\n");
  CHECK(g.generators.size() == 1);
  CHECK(g.generators[0].is_identity());
  CHECK(g.is_trivial());
}

TEST_CASE("format emits the exact grammar and round-trips") {
  PermGroup g = parse_group_text("degree 6\ngen (1 2)\ngen (1 2 3 4 5 6)\n");
  std::string text = format_group(g);
  CHECK(text == "degree 6\ngen (1 2)\ngen (1 2 3 4 5 6)\n");
  PermGroup h = parse_group_text(text);
  CHECK(h.degree == g.degree);
  CHECK(h.generators == g.generators);
}

TEST_CASE("parse errors carry line context") {
  CHECK_THROWS_AS(parse_group_text("gen (1 2)\n"), InputError);
  CHECK_THROWS_AS(parse_group_text("degree 0\n"), InputError);
  CHECK_THROWS_AS(parse_group_text("degree 4\nweird (1 2)\n"), InputError);
  CHECK_THROWS_AS(parse_group_text("degree 4\n"), InputError);
  CHECK_THROWS_AS(parse_group_text("degree 4\ndegree 4\ngen (1 2)\n"),
                  InputError);
  CHECK_THROWS_AS(parse_group_text("degree 4\ngen (1 9)\n"), InputError);
}
