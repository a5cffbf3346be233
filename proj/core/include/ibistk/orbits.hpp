#pragma once

#include <optional>
#include <vector>

#include "ibistk/perm.hpp"
#include "ibistk/perm_group.hpp"

namespace ibistk {

/// Orbit partition of {0,...,degree-1}. Representatives are the smallest
/// point of each orbit; orbit point lists are sorted.
struct OrbitPartition {
  int degree = 0;
  std::vector<int> representative;          // point -> orbit representative
  std::vector<std::vector<int>> orbit_of_rep; // indexed by rep (empty for non-reps)
  std::vector<int> reps;                    // sorted representatives

  const std::vector<int>& orbit_of(int rep) const { return orbit_of_rep[rep]; }
  long orbit_size(int rep) const { return static_cast<long>(orbit_of_rep[rep].size()); }
};

OrbitPartition orbit_partition(int degree, const std::vector<Perm>& gens);
/// Restricted to a subset of points; the subset must be union-closed under
/// nothing in particular, orbits are intersected with it after computing on
/// the full domain of points reachable from subset members.
OrbitPartition orbit_partition(int degree, const std::vector<Perm>& gens,
                               const std::vector<int>& subset);

OrbitPartition orbits(const PermGroup& g);
OrbitPartition orbits(const PermGroup& g, const std::vector<int>& subset);

bool is_transitive(const PermGroup& g);

/// Minimal block containing {a, b} for a transitive generator set, as a
/// sorted point list (Atkinson's union-find algorithm).
std::vector<int> minimal_block(int degree, const std::vector<Perm>& gens, int a, int b);

/// Throws PreconditionError when g is not transitive. Degree 1 and 2 actions
/// are primitive; otherwise primitive iff every minimal nontrivial block is
/// the whole domain.
bool is_primitive(const PermGroup& g);

std::vector<int> fixed_points(int degree, const std::vector<Perm>& gens);
/// Smallest point moved by any generator, -1 if all are trivial.
int smallest_moved_point(int degree, const std::vector<Perm>& gens);

} // namespace ibistk
