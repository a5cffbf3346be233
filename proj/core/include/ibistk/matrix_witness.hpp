#pragma once

#include "ibistk/gf_matrix.hpp"

namespace ibistk {

/// Outcome of the unitriangular witness check in SL(3, p): three commuting-
/// pattern matrices generating a non-abelian group of order p^3 that meets
/// the scalars trivially.
struct HeisenbergCheck {
  bool ok = false;
  long group_order = 0;
  bool pattern_ok = false;   // a,b central with c; a and b do not commute
  bool structure_ok = false; // dihedral of order 8 for p = 2, exponent p odd
  bool scalar_free = false;
};

/// p in {2, 3}.
HeisenbergCheck psl3_heisenberg_witness(int p);

/// Outcome of the unitary witness check in SU(3, q): the subgroup M of
/// unitriangular isometries contains a nontrivial central element c and two
/// non-commuting elements a, b.
struct UnitaryCheck {
  bool ok = false;
  long group_order = 0;
  bool all_unitary = false;
  bool c_central = false;
  bool ab_noncommute = false;
};

/// q = 3 is the case exercised by the suite; any supported prime power with
/// a GF(q^2) context works.
UnitaryCheck psu3_witness(int q);

} // namespace ibistk
