#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ibistk/diagonal.hpp"
#include "ibistk/perm_group.hpp"
#include "ibistk/types.hpp"

namespace ibistk {

PermGroup sym_natural(int n);
PermGroup alt_natural(int n);

/// Induced action on m-subsets, points labelled by the subsets in
/// lexicographic order.
PermGroup action_on_m_subsets(const PermGroup& g, int m,
                              long degree_cap = kDefaultDegreeCap);

/// Sym(6) on the 10 partitions of a 6-element set into two triples.
PermGroup sym6_on_triple_partitions();

/// Affine group AGL(d, p) on p^d vectors (coordinate i has stride p^(d-1-i)).
PermGroup agl(int d, int p, long degree_cap = kDefaultDegreeCap);
PermGroup frobenius_agl1(int p);

/// PSL(2, q) and PGL(2, q) on the projective line: points are the field
/// elements in enumeration order followed by the point at infinity.
PermGroup psl2(long q);
PermGroup pgl2(long q);

/// The permutation of the projective line induced by x -> x^p. Supported for
/// q a power of 2 and for q = 9; the result is checked to normalize psl2(q).
Perm psl2_frobenius(long q);

/// PSL(2, q), q in {4, 8, 16}, on the cosets of a dihedral subgroup of order
/// 2(q+1); degree q(q-1)/2.
PermGroup psl2_on_dihedral_cosets(long q);

/// PSL(3, 2) on the 7 points of the projective plane over GF(2).
PermGroup psl3_2_on_7();

/// Alt(7) on the 15 cosets of a subgroup isomorphic to PSL(3, 2).
PermGroup alt7_on_15();

/// Wreath product in product action; h must be primitive and not regular,
/// top transitive on [k]. k == 1 returns h.
PermGroup product_action_group(const PermGroup& h, int k, const PermGroup& top,
                               long degree_cap = kDefaultDegreeCap);

/// Expected facts recorded for a named catalog entry.
struct CatalogExpected {
  long degree = 0;
  BigInt order;
  std::optional<bool> primitive;
  std::optional<int> base_size;
  std::optional<bool> ibis;
  std::string display() const; // e.g. "IBIS, b=2", "not IBIS", ""
};

struct CatalogInfo {
  std::string name;
  CatalogExpected expected;
};

/// The fixed registry behind the `catalog` listing; stable order.
const std::vector<CatalogInfo>& catalog_registry();

/// Resolves any well-formed catalog name, including parameterized ones that
/// are not in the registry. Grammar:
///   sym:<n>  alt:<n>  sym:<n>:sets:<m>  alt:<n>:sets:<m>  sym6:partitions
///   agl:<d>:<p>  psl2:<q>  pgl2:<q>  psl2:<q>:dihedral  psl3_2:7  alt7:15
///   diag:<T>:<k>[:top=<name>][:frob=<i>][:twist]  prod:<H>:<k>
PermGroup catalog_group(const std::string& name,
                        long degree_cap = kDefaultDegreeCap);

/// Like catalog_group for diag:* names, but keeps the coset labelling.
DiagonalAction catalog_diagonal(const std::string& name,
                                long degree_cap = kDefaultDegreeCap);

} // namespace ibistk
