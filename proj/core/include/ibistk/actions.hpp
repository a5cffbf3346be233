#pragma once

#include <vector>

#include "ibistk/bsgs.hpp"
#include "ibistk/perm_group.hpp"
#include "ibistk/types.hpp"

namespace ibistk {

/// g and h acting on the disjoint union of their domains.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

/// h wr Sym(k) in its imprimitive action on k disjoint copies of h's domain.
PermGroup wreath_imprimitive(const PermGroup& h, int k,
                             long degree_cap = kDefaultDegreeCap);

/// h wr top acting on the k-th Cartesian power of h's domain. Coordinate i
/// has stride |domain|^(k-1-i) in the point encoding. top must be a
/// subgroup of Sym(k); k == 1 returns h unchanged.
PermGroup wreath_product_action(const PermGroup& h, int k, const PermGroup& top,
                                long degree_cap = kDefaultDegreeCap);

/// Image of the chain's group acting on the right cosets of the subgroup
/// generated by subgroup_gens, plus the coset representative labelling.
/// The kernel is not removed.
struct CosetAction {
  PermGroup image;
  std::vector<Perm> coset_reps; // canonical representative per point
};
CosetAction coset_action(const Bsgs& b, const PermGroup& subgroup_gens);

/// Centralizer of x, computed by capped full enumeration with on-the-fly
/// membership filtering of redundant generators.
PermGroup centralizer_of_element(const Bsgs& b, const Perm& x,
                                 long cap = kDefaultEnumerationCap);

} // namespace ibistk
