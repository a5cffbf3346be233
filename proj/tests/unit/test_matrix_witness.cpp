#include <doctest.h>

#include "ibistk/errors.hpp"
#include "ibistk/matrix_witness.hpp"

using namespace ibistk;

TEST_CASE("unitriangular witnesses over GF(2) and GF(3)") {
  HeisenbergCheck h2 = psl3_heisenberg_witness(2);
  CHECK(h2.ok);
  CHECK(h2.group_order == 8);
  CHECK(h2.pattern_ok);
  CHECK(h2.structure_ok); // dihedral of order 8

  HeisenbergCheck h3 = psl3_heisenberg_witness(3);
  CHECK(h3.ok);
  CHECK(h3.group_order == 27);
  CHECK(h3.pattern_ok);
  CHECK(h3.structure_ok); // exponent 3

  CHECK_THROWS_AS(psl3_heisenberg_witness(5), InputError);
}

TEST_CASE("unitary witness over GF(9)") {
  UnitaryCheck u = psu3_witness(3);
  CHECK(u.ok);
  CHECK(u.group_order == 27);
  CHECK(u.all_unitary);
  CHECK(u.c_central);
  CHECK(u.ab_noncommute);
}
