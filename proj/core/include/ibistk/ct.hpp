#pragma once

#include <optional>
#include <vector>

#include "ibistk/bsgs.hpp"
#include "ibistk/perm.hpp"

namespace ibistk {

/// A failed commuting chain: a commutes with t, t commutes with b, but a and
/// b do not commute (all nonidentity).
struct CtViolation {
  Perm a, t, b;
};

struct CtVerdict {
  bool is_ct = false;
  std::optional<CtViolation> violation;
  bool method_agreement = true;
};

/// CT by exhaustive check over commuting chains on nonidentity elements;
/// the first violation in element enumeration order is returned.
CtVerdict is_ct_transitivity(const Bsgs& b, long cap = 10'000);

/// CT via the centralizer condition: any two nonidentity elements have equal
/// centralizers or centralizers meeting trivially. Equivalent verdict to the
/// transitivity method; a commuting-chain violation is derived on failure.
CtVerdict is_ct_centralizer_partition(const Bsgs& b, long cap = 10'000);

/// True iff every nonidentity element has an abelian centralizer.
bool centralizer_abelian_scan(const Bsgs& b, long cap = 10'000);

/// Runs both decision methods and records their agreement.
CtVerdict ct_verdict_combined(const Bsgs& b, long cap = 10'000);

/// Two maximal dihedral subgroups of psl2(q) of order 2(q-1) meeting
/// trivially, found by deterministic search. q in {8, 16}.
struct DihedralPair {
  std::vector<Perm> k1_gens, k2_gens;
  long subgroup_order = 0;
  long intersection_order = 0;
};
DihedralPair dihedral_trivial_intersection_witness(long q);

} // namespace ibistk
