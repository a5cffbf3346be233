#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ibistk/bsgs.hpp"
#include "ibistk/perm_group.hpp"
#include "ibistk/types.hpp"

namespace ibistk {

/// Specification of a diagonal-type action built from a non-abelian simple
/// group T given faithfully. The constructed group acts on the |T|^(k-1)
/// cosets of the diagonal subgroup, labelled [1, t_2, ..., t_k].
struct DiagonalSpec {
  PermGroup t;
  int k = 2;
  /// Coordinate-permuting top group on k points; a trivial group (identity
  /// generators) adjoins nothing. Must be transitive when nontrivial.
  std::optional<PermGroup> top;
  /// Automorphisms of T, as permutations of T's domain normalizing T,
  /// adjoined diagonally.
  std::vector<Perm> outer;
  /// k == 2 only: adjoin the product of the diagonal automorphism pair
  /// (y, y) with the coordinate swap.
  std::optional<Perm> twist;
};

/// The constructed permutation group together with the coset labelling.
class DiagonalAction {
public:
  const PermGroup& group() const { return group_; }
  int k() const { return k_; }
  long num_elements() const { return static_cast<long>(elements_.size()); }

  /// Index of an element of T in the fixed enumeration order.
  int element_index(const Perm& t) const;
  const Perm& element(int index) const { return elements_[index]; }

  /// Point of the coset [1, tuple[0], ..., tuple[k-2]].
  long point_of(const std::vector<Perm>& tuple) const;
  std::vector<Perm> tuple_of(long point) const;

  void relabel(std::string name) { group_.label = std::move(name); }

private:
  friend DiagonalAction diagonal_group(const DiagonalSpec&, long);
  PermGroup group_;
  int k_ = 2;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
};

DiagonalAction diagonal_group(const DiagonalSpec& spec,
                              long degree_cap = kDefaultDegreeCap);

} // namespace ibistk
