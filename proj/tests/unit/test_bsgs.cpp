#include <doctest.h>

#include <unordered_set>

#include "ibistk/bsgs.hpp"
#include "ibistk/catalog.hpp"
#include "ibistk/errors.hpp"
#include "ibistk/group_io.hpp"

using namespace ibistk;

namespace {

// Independent order oracle: breadth-first closure over the generators.
long bfs_order(const PermGroup& g) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue{Perm(g.degree)};
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& gen : g.generators) {
      Perm next = compose(queue[i], gen);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return static_cast<long>(seen.size());
}

int sign(const Perm& p) {
  std::vector<char> done(p.degree(), 0);
  int parity = 0;
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i]) continue;
    int len = 0;
    for (int j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

} // namespace

TEST_CASE("orders of the standard small groups") {
  PermGroup s4 = parse_group_text("degree 4\ngen (1 2)\ngen (1 2 3 4)\n");
  CHECK(Bsgs::build(s4).order() == 24);

  PermGroup a5 = parse_group_text("degree 5\ngen (1 2 3)\ngen (3 4 5)\n");
  CHECK(Bsgs::build(a5).order() == 60);

  PermGroup trivial = parse_group_text("degree 4\ngen ()\n");
  Bsgs t = Bsgs::build(trivial);
  CHECK(t.order() == 1);
  CHECK(t.base().empty());
}

TEST_CASE("construction is deterministic") {
  PermGroup g = catalog_group("psl2:8");
  Bsgs a = Bsgs::build(g);
  Bsgs b = Bsgs::build(g);
  CHECK(a.base() == b.base());
  CHECK(a.order() == b.order());
  CHECK(a.strong_generators().size() == b.strong_generators().size());
}

TEST_CASE("membership by sifting") {
  Bsgs a4 = Bsgs::build(catalog_group("alt:4"));
  CHECK_FALSE(a4.contains(parse_cycles(4, "(1 2)")));
  CHECK(a4.contains(parse_cycles(4, "(1 2 3)")));

  Bsgs s4 = Bsgs::build(catalog_group("sym:4"));
  CHECK(s4.contains(parse_cycles(4, "(1 2)")));
  CHECK(s4.contains(parse_cycles(4, "(1 3)(2 4)")));
  CHECK(s4.contains(Perm(4)));

  for (const auto& g : s4.strong_generators()) CHECK(s4.contains(g));
}

TEST_CASE("order equals the product of fundamental orbit lengths") {
  for (const char* name : {"sym:5", "alt:6", "psl2:7", "agl:2:3"}) {
    Bsgs b = Bsgs::build(catalog_group(name));
    BigInt prod = 1;
    for (int l = 0; l < b.num_levels(); ++l) prod *= b.orbit_length(l);
    CHECK(prod == b.order());
  }
}

TEST_CASE("pointwise stabilizers") {
  Bsgs s4 = Bsgs::build(catalog_group("sym:4"));
  CHECK(s4.pointwise_stabilizer({0, 1, 2}).order() == 1);
  CHECK(s4.pointwise_stabilizer({}).order() == 24);
  CHECK(s4.pointwise_stabilizer({0}).order() == 6);

  Bsgs a4 = Bsgs::build(catalog_group("alt:4"));
  CHECK(a4.pointwise_stabilizer({0, 1}).order() == 1);

  // stabilizing the full base kills the group
  Bsgs p8 = Bsgs::build(catalog_group("psl2:8"));
  CHECK(p8.pointwise_stabilizer(p8.base()).order() == 1);
}

TEST_CASE("stabilizer contents match a direct filter") {
  Bsgs s5 = Bsgs::build(catalog_group("sym:5"));
  Bsgs stab = s5.pointwise_stabilizer({1, 3});
  CHECK(stab.order() == 6);
  auto stream = element_enumeration(stab);
  while (auto p = stream.next()) {
    CHECK((*p)[1] == 1);
    CHECK((*p)[3] == 3);
    CHECK(s5.contains(*p));
  }
}

TEST_CASE("pointwise stabilizer orders match a direct element filter") {
  for (const char* name : {"sym:5", "alt:6", "psl2:7"}) {
    Bsgs b = Bsgs::build(catalog_group(name));
    for (std::vector<int> pts :
         {std::vector<int>{2}, std::vector<int>{1, 3}, std::vector<int>{4, 0}}) {
      long filtered = 0;
      auto stream = element_enumeration(b, 10000);
      while (auto p = stream.next()) {
        bool fixes = true;
        for (int pt : pts)
          if ((*p)[pt] != pt) fixes = false;
        if (fixes) ++filtered;
      }
      CHECK(b.pointwise_stabilizer(pts).order() == filtered);
    }
  }
}

TEST_CASE("membership fails for non-members of a proper subgroup") {
  Bsgs a6 = Bsgs::build(catalog_group("alt:6"));
  CHECK_FALSE(a6.contains(parse_cycles(6, "(1 2)")));
  CHECK_FALSE(a6.contains(parse_cycles(6, "(1 2 3 4)")));
  Bsgs c4 = Bsgs::build(parse_group_text("degree 4\ngen (1 2 3 4)\n"));
  CHECK_FALSE(c4.contains(parse_cycles(4, "(1 2)")));
}

TEST_CASE("element enumeration yields each element exactly once") {
  Bsgs s3 = Bsgs::build(catalog_group("sym:3"));
  std::unordered_set<Perm, PermHash> seen;
  auto stream = element_enumeration(s3);
  while (auto p = stream.next()) CHECK(seen.insert(*p).second);
  CHECK(seen.size() == 6);

  Bsgs trivial = Bsgs::build(parse_group_text("degree 3\ngen ()\n"));
  auto ts = element_enumeration(trivial);
  auto first = ts.next();
  REQUIRE(first.has_value());
  CHECK(first->is_identity());
  CHECK_FALSE(ts.next().has_value());

  Bsgs a4 = Bsgs::build(catalog_group("alt:4"));
  std::unordered_set<Perm, PermHash> elems;
  auto as = element_enumeration(a4);
  while (auto p = as.next()) {
    CHECK(sign(*p) == 1);
    elems.insert(*p);
  }
  CHECK(elems.size() == 12);
}

TEST_CASE("the identity is enumerated first") {
  for (const char* name : {"sym:4", "alt:5", "psl2:4"}) {
    Bsgs b = Bsgs::build(catalog_group(name));
    auto stream = element_enumeration(b);
    CHECK(stream.next()->is_identity());
  }
}

TEST_CASE("enumeration cap is enforced") {
  Bsgs s5 = Bsgs::build(catalog_group("sym:5"));
  CHECK_THROWS_AS(element_enumeration(s5, 100), CapacityError);
}

TEST_CASE("enumeration cardinality matches breadth-first closure") {
  for (const char* name :
       {"sym:4", "sym:6", "sym:7", "alt:5", "agl:1:5", "psl2:4", "psl2:7"}) {
    PermGroup g = catalog_group(name);
    Bsgs b = Bsgs::build(g);
    CHECK(b.order() == bfs_order(g));
    long count = 0;
    auto stream = element_enumeration(b, 10000);
    while (stream.next()) ++count;
    CHECK(BigInt(count) == b.order());
  }
}

TEST_CASE("prescribed base prefixes are honored") {
  Bsgs s6 = Bsgs::build(catalog_group("sym:6"));
  Bsgs rebased = Bsgs::build(6, s6.strong_generators(), {3, 5});
  CHECK(rebased.order() == 720);
  auto base = rebased.base();
  REQUIRE(base.size() >= 2);
  CHECK(base[0] == 3);
  CHECK(base[1] == 5);
}
