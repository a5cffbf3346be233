#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "ibistk/bsgs.hpp"
#include "ibistk/irredundant.hpp"
#include "ibistk/types.hpp"

namespace ibistk {

struct SearchCaps {
  std::uint64_t node_cap = kDefaultNodeCap;
  double time_cap_seconds = kDefaultTimeCapSeconds;
  int workers = 1;
};

/// The set of sizes of irredundant bases, with one witness per size and the
/// search-effort counter. complete is false when a cap cut the search, in
/// which case sizes is a (correct) subset of the true spectrum.
struct Spectrum {
  std::set<int> sizes;
  std::map<int, IrrSequence> witnesses;
  std::uint64_t node_count = 0;
  bool complete = true;

  int min_size() const { return sizes.empty() ? -1 : *sizes.begin(); }
};

struct IbisVerdict {
  bool is_ibis = false;
  int base_size = 0;
  /// Two irredundant bases of distinct sizes; present iff not IBIS.
  std::optional<std::pair<IrrSequence, IrrSequence>> counterexample;
  /// False when caps cut the search before a verdict was reached.
  bool decided = true;
  std::uint64_t node_count = 0;
};

struct MinimalBase {
  int size = 0;
  IrrSequence witness;
  std::uint64_t node_count = 0;
};

/// Exhaustive depth-first search over orbit representatives of the current
/// stabilizer at each level: points in one orbit give conjugate stabilizers,
/// so one representative per nontrivial orbit sees every achievable
/// completion length. With workers > 1 the subtrees under the root are
/// processed in parallel and merged in tree order, so completed runs do not
/// depend on scheduling.
Spectrum irredundant_spectrum(const Bsgs& b, const SearchCaps& caps = {});

/// Early-exit variant: the DFS stops as soon as two distinct completed sizes
/// are seen. base_size is the exact b(G) (computed by iterative deepening
/// when the group is not IBIS).
IbisVerdict is_ibis(const Bsgs& b, const SearchCaps& caps = {});

/// Exact b(G) with a witness base, by iterative-deepening DFS over orbit
/// representatives. Throws CapacityError (mentioning the best bound so far)
/// when the caps are exhausted.
MinimalBase minimal_base_size(const Bsgs& b, const SearchCaps& caps = {});

} // namespace ibistk
