#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ibistk/bsgs.hpp"
#include "ibistk/spectrum_search.hpp"

namespace ibistk {

/// The matroid attached to an IBIS action: rank of a point set is the length
/// of a maximal irredundant subsequence drawn from it, closure is the fixed
/// point set of its pointwise stabilizer.
struct Matroid {
  int ground_size = 0;
  int rank = 0;
  /// Takes and returns sorted point sets.
  std::function<std::vector<int>(const std::vector<int>&)> closure;
  /// flats_by_rank[r] lists the rank-r flats (sorted sets, sorted order);
  /// empty when the ground set exceeded the enumeration cap.
  std::vector<std::vector<std::vector<int>>> flats_by_rank;

  bool flats_enumerated() const { return !flats_by_rank.empty(); }
};

/// Requires verdict.is_ibis (PreconditionError otherwise). Flats are
/// enumerated when ground_size <= flat_cap.
Matroid matroid_from_ibis(const Bsgs& b, const IbisVerdict& verdict,
                          int flat_cap = 200);

/// Length of a maximal irredundant subsequence drawn from the set (points
/// taken in ascending order; well-defined for IBIS actions).
int matroid_rank_of(const Bsgs& b, const std::vector<int>& set);

struct MatroidCheckResult {
  bool ok = true;
  std::string axiom; // "extensive", "monotone", "idempotent", "exchange"
  std::vector<int> witness_set;
  int witness_x = -1, witness_y = -1;
};

/// Verifies the closure axioms by enumeration over singleton and pair
/// extensions of all flats. Returns the violated axiom and witnesses instead
/// of throwing.
MatroidCheckResult matroid_axiom_check(const Matroid& m);

} // namespace ibistk
