#pragma once

#include <vector>

#include "ibistk/bsgs.hpp"
#include "ibistk/perm_group.hpp"
#include "ibistk/types.hpp"

namespace ibistk {

/// An irredundant point sequence: every point is moved by the stabilizer of
/// its predecessors, so the chain of stabilizer orders strictly decreases.
/// chain_orders starts with the full group order, one more entry than points.
struct IrrSequence {
  std::vector<int> points;
  std::vector<BigInt> chain_orders;

  int size() const { return static_cast<int>(points.size()); }
  bool is_base() const {
    return !chain_orders.empty() && chain_orders.back() == 1;
  }
};

struct IrredundanceCheck {
  bool irredundant = false;
  int first_redundant_index = -1; // set on rejection
  IrrSequence sequence;           // valid when irredundant
};

/// Accepts iff each successive stabilizer strictly shrinks.
IrredundanceCheck is_irredundant(const Bsgs& b, const std::vector<int>& seq);

/// Appends smallest moved points until the stabilizer is trivial. The prefix
/// must be irredundant (PreconditionError otherwise).
IrrSequence extend_to_irredundant_base(const Bsgs& b,
                                       const std::vector<int>& prefix);

/// True iff seq is irredundant and its final stabilizer is nontrivial.
bool verify_witness_not_base(const Bsgs& b, const std::vector<int>& seq);

struct SocleBoundWitness {
  bool confirmed = false;
  IrrSequence witness;
};

/// For a primitive g with non-abelian socle and a non-regular normal
/// subgroup m containing it, searches m for an irredundant base of size at
/// least 3. Hypothesis violations raise PreconditionError.
SocleBoundWitness socle_irredundant_lower_bound(const PermGroup& g,
                                                const PermGroup& m);

} // namespace ibistk
