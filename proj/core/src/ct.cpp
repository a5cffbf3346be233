#include "ibistk/ct.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "ibistk/catalog.hpp"
#include "ibistk/errors.hpp"

namespace ibistk {

namespace {

std::vector<Perm> nonidentity_elements(const Bsgs& b, long cap) {
  std::vector<Perm> elems = all_elements(b, cap);
  std::vector<Perm> out;
  out.reserve(elems.size());
  for (auto& p : elems)
    if (!p.is_identity()) out.push_back(std::move(p));
  return out;
}

// Commuting nonidentity elements of each element, as index lists.
std::vector<std::vector<int>> commuting_lists(const std::vector<Perm>& elems) {
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> lists(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (commute(elems[i], elems[j])) {
        lists[i].push_back(j);
        lists[j].push_back(i);
      }
  for (auto& l : lists) std::sort(l.begin(), l.end());
  return lists;
}

} // namespace

CtVerdict is_ct_transitivity(const Bsgs& b, long cap) {
  std::vector<Perm> elems = nonidentity_elements(b, cap);
  CtVerdict v;
  v.is_ct = true;
  for (std::size_t ti = 0; ti < elems.size(); ++ti) {
    // collect the commuting set of t, then demand it is pairwise commuting
    std::vector<int> ct;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (i != ti && commute(elems[i], elems[ti])) ct.push_back(static_cast<int>(i));
    for (std::size_t x = 0; x < ct.size(); ++x)
      for (std::size_t y = x + 1; y < ct.size(); ++y)
        if (!commute(elems[ct[x]], elems[ct[y]])) {
          v.is_ct = false;
          v.violation = CtViolation{elems[ct[x]], elems[ti], elems[ct[y]]};
          return v;
        }
  }
  return v;
}

CtVerdict is_ct_centralizer_partition(const Bsgs& b, long cap) {
  std::vector<Perm> elems = nonidentity_elements(b, cap);
  auto lists = commuting_lists(elems);
  const int n = static_cast<int>(elems.size());

  CtVerdict v;
  v.is_ct = true;
  for (int x = 0; x < n && v.is_ct; ++x) {
    for (int y = x + 1; y < n; ++y) {
      // centralizers as sets including the elements themselves
      auto cx = lists[x];
      cx.insert(std::lower_bound(cx.begin(), cx.end(), x), x);
      auto cy = lists[y];
      cy.insert(std::lower_bound(cy.begin(), cy.end(), y), y);
      if (cx == cy) continue;
      std::vector<int> common;
      std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;

      v.is_ct = false;
      // Derive a commuting-chain violation from the failing pair.
      int w = common.front();
      if (!commute(elems[x], elems[y])) {
        v.violation = CtViolation{elems[x], elems[w], elems[y]};
      } else {
        // x and y commute but their centralizers differ; a one-sided member
        // breaks the chain through whichever of x, y it avoids.
        std::vector<int> only;
        std::set_symmetric_difference(cx.begin(), cx.end(), cy.begin(), cy.end(),
                                      std::back_inserter(only));
        int z = only.front();
        bool z_with_x = std::binary_search(cx.begin(), cx.end(), z);
        if (z_with_x)
          v.violation = CtViolation{elems[z], elems[x], elems[y]};
        else
          v.violation = CtViolation{elems[z], elems[y], elems[x]};
      }
      break;
    }
  }
  return v;
}

bool centralizer_abelian_scan(const Bsgs& b, long cap) {
  std::vector<Perm> elems = nonidentity_elements(b, cap);
  for (const auto& t : elems) {
    std::vector<const Perm*> ct;
    for (const auto& x : elems)
      if (commute(x, t)) ct.push_back(&x);
    for (std::size_t i = 0; i < ct.size(); ++i)
      for (std::size_t j = i + 1; j < ct.size(); ++j)
        if (!commute(*ct[i], *ct[j])) return false;
  }
  return true;
}

CtVerdict ct_verdict_combined(const Bsgs& b, long cap) {
  CtVerdict trans = is_ct_transitivity(b, cap);
  CtVerdict part = is_ct_centralizer_partition(b, cap);
  CtVerdict out = trans;
  out.method_agreement = trans.is_ct == part.is_ct;
  if (!out.violation && part.violation) out.violation = part.violation;
  return out;
}

DihedralPair dihedral_trivial_intersection_witness(long q) {
  if (q != 8 && q != 16)
    throw InputError("dihedral intersection witness needs q in {8, 16}");
  PermGroup t = psl2(q);
  Bsgs chain = Bsgs::build(t);

  Perm x1, w1;
  {
    auto stream = element_enumeration(chain);
    bool found = false;
    while (auto g = stream.next())
      if (g->order() == q - 1) {
        x1 = std::move(*g);
        found = true;
        break;
      }
    if (!found) throw InputError("no split torus element found"); // unreachable
  }
  {
    Perm x1_inv = x1.inverse();
    auto stream = element_enumeration(chain);
    bool found = false;
    while (auto g = stream.next())
      if (g->order() == 2 && conjugate(x1, *g) == x1_inv) {
        w1 = std::move(*g);
        found = true;
        break;
      }
    if (!found) throw InputError("no inverting involution found"); // unreachable
  }

  Bsgs k1 = Bsgs::build(t.degree, {x1, w1});
  if (k1.order() != 2 * (q - 1))
    throw InputError("dihedral subgroup has unexpected order"); // unreachable
  std::vector<Perm> k1_elems = all_elements(k1);
  std::unordered_set<Perm, PermHash> k1_set(k1_elems.begin(), k1_elems.end());

  auto stream = element_enumeration(chain);
  while (auto g = stream.next()) {
    long common = 0;
    for (const auto& k : k1_elems)
      if (k1_set.count(conjugate(k, *g))) ++common;
    if (common != 1) continue; // identity always survives

    DihedralPair out;
    out.k1_gens = {x1, w1};
    out.k2_gens = {conjugate(x1, *g), conjugate(w1, *g)};
    out.subgroup_order = 2 * (q - 1);
    out.intersection_order = 1;
    Bsgs k2 = Bsgs::build(t.degree, out.k2_gens);
    if (k2.order() != 2 * (q - 1))
      throw InputError("conjugate subgroup has unexpected order"); // unreachable
    return out;
  }
  throw InputError("no trivially intersecting conjugate found");
}

} // namespace ibistk
