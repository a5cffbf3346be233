#include <doctest.h>

#include <algorithm>

#include "ibistk/actions.hpp"
#include "ibistk/catalog.hpp"
#include "ibistk/errors.hpp"
#include "ibistk/group_io.hpp"
#include "ibistk/orbits.hpp"

using namespace ibistk;

namespace {

// Brute-force primitivity oracle: a transitive group is imprimitive iff some
// proper subset containing 0 with size dividing the degree has a set orbit
// forming a partition.
bool primitive_by_bruteforce(const PermGroup& g) {
  const int n = g.degree;
  if (n <= 2) return true;
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (!(mask & 1)) continue;
    int size = __builtin_popcount(mask);
    if (size < 2 || size == n || n % size != 0) continue;
    std::vector<int> block;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) block.push_back(i);
    // orbit of the set under the generators
    std::vector<std::vector<int>> orbit{block};
    bool is_block = true;
    for (std::size_t qi = 0; qi < orbit.size() && is_block; ++qi) {
      for (const auto& gen : g.generators) {
        std::vector<int> img;
        for (int x : orbit[qi]) img.push_back(gen[x]);
        std::sort(img.begin(), img.end());
        bool seen = false;
        for (const auto& o : orbit) {
          if (o == img) {
            seen = true;
            break;
          }
          std::vector<int> common;
          std::set_intersection(o.begin(), o.end(), img.begin(), img.end(),
                                std::back_inserter(common));
          if (!common.empty()) {
            is_block = false;
            break;
          }
        }
        if (!is_block) break;
        if (!seen) orbit.push_back(std::move(img));
      }
    }
    if (is_block && orbit.size() * block.size() == static_cast<std::size_t>(n))
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("orbit partitions") {
  OrbitPartition p = orbits(catalog_group("sym:4"));
  CHECK(p.reps.size() == 1);
  CHECK(p.orbit_size(0) == 4);

  PermGroup g = parse_group_text("degree 4\ngen (1 2)\n");
  OrbitPartition q = orbits(g);
  CHECK(q.reps == std::vector<int>{0, 2, 3});
  CHECK(q.orbit_of(0) == std::vector<int>{0, 1});
  CHECK(q.orbit_size(2) == 1);

  OrbitPartition a5 = orbits(catalog_group("alt:5"));
  CHECK(a5.reps.size() == 1);
  CHECK(a5.orbit_size(0) == 5);
}

TEST_CASE("restricted orbit partitions") {
  PermGroup g = parse_group_text("degree 5\ngen (1 2)(3 4)\n");
  OrbitPartition p = orbits(g, {0, 1, 4});
  CHECK(p.reps == std::vector<int>{0, 4});
  CHECK(p.orbit_of(0) == std::vector<int>{0, 1});
  CHECK(p.orbit_of(4) == std::vector<int>{4});
}

TEST_CASE("transitivity") {
  CHECK(is_transitive(catalog_group("sym:4")));
  CHECK_FALSE(is_transitive(parse_group_text("degree 4\ngen (1 2)\n")));
}

TEST_CASE("primitivity of the standard examples") {
  CHECK(is_primitive(catalog_group("sym:4")));
  CHECK(is_primitive(catalog_group("sym:6:sets:2")));
  PermGroup c4 = parse_group_text("degree 4\ngen (1 2 3 4)\n");
  CHECK_FALSE(is_primitive(c4));
  CHECK(minimal_block(4, c4.generators, 0, 2) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(is_primitive(parse_group_text("degree 4\ngen (1 2)\n")),
                  PreconditionError);
}

TEST_CASE("primitivity agrees with brute force up to degree 12") {
  std::vector<PermGroup> groups = {
      catalog_group("sym:4"),
      catalog_group("sym:5"),
      catalog_group("alt:6"),
      parse_group_text("degree 4\ngen (1 2 3 4)\n"),
      parse_group_text("degree 6\ngen (1 2 3 4 5 6)\n"),
      parse_group_text("degree 6\ngen (1 2 3 4 5 6)\ngen (2 6)(3 5)\n"),
      parse_group_text("degree 8\ngen (1 2 3 4 5 6 7 8)\ngen (2 8)(3 7)(4 6)\n"),
      parse_group_text("degree 9\ngen (1 2 3)(4 5 6)(7 8 9)\n"
                       "gen (1 4 7)(2 5 8)(3 6 9)\n"),
      catalog_group("agl:2:3"),
      catalog_group("psl2:5"),
      catalog_group("psl2:7"),
      catalog_group("psl2:9"),
      catalog_group("psl2:11"),
      wreath_imprimitive(sym_natural(3), 2),
      wreath_imprimitive(sym_natural(2), 4),
      catalog_group("sym6:partitions"),
  };
  for (const auto& g : groups) {
    if (!is_transitive(g)) continue;
    CHECK(is_primitive(g) == primitive_by_bruteforce(g));
  }
}

TEST_CASE("fixed points and smallest moved point") {
  PermGroup g = parse_group_text("degree 5\ngen (2 3)\ngen (4 5)\n");
  CHECK(fixed_points(5, g.generators) == std::vector<int>{0});
  CHECK(smallest_moved_point(5, g.generators) == 1);
  PermGroup t = parse_group_text("degree 5\ngen ()\n");
  CHECK(smallest_moved_point(5, t.generators) == -1);
}
