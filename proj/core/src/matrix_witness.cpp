#include "ibistk/matrix_witness.hpp"

#include <vector>

#include "ibistk/errors.hpp"

namespace ibistk {

namespace {

// Closure of the generating set under multiplication, up to cap elements.
std::vector<GfMatrix> group_closure(const std::vector<GfMatrix>& gens, long cap) {
  std::vector<GfMatrix> elems;
  elems.push_back(GfMatrix::identity(gens.front().field(), gens.front().dim()));
  auto find = [&](const GfMatrix& m) {
    for (const auto& e : elems)
      if (e == m) return true;
    return false;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      GfMatrix prod = elems[i] * g;
      if (!find(prod)) {
        elems.push_back(std::move(prod));
        if (static_cast<long>(elems.size()) > cap)
          throw CapacityError("matrix closure exceeds cap");
      }
    }
  }
  return elems;
}

bool is_scalar(const GfMatrix& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j && m.at(i, j) != 0) return false;
  for (int i = 1; i < m.dim(); ++i)
    if (m.at(i, i) != m.at(0, 0)) return false;
  return true;
}

} // namespace

HeisenbergCheck psl3_heisenberg_witness(int p) {
  if (p != 2 && p != 3)
    throw InputError("heisenberg witness supports p in {2, 3}");
  FieldCtx F = FieldCtx::make(p, 1);
  GfMatrix a = GfMatrix::identity(F, 3);
  a.at(0, 1) = F.one();
  GfMatrix b = GfMatrix::identity(F, 3);
  b.at(1, 2) = F.one();
  GfMatrix c = GfMatrix::identity(F, 3);
  c.at(0, 2) = F.one();

  HeisenbergCheck out;
  out.pattern_ok = matrices_commute(a, c) && matrices_commute(b, c) &&
                   !matrices_commute(a, b);

  std::vector<GfMatrix> elems = group_closure({a, b, c}, 64);
  out.group_order = static_cast<long>(elems.size());

  long scalars = 0;
  for (const auto& m : elems)
    if (is_scalar(m)) ++scalars;
  out.scalar_free = scalars == 1;

  if (p == 2) {
    // non-abelian of order 8 with six square roots of the identity: the
    // dihedral group, not the quaternion group
    long sqrt_identity = 0;
    for (const auto& m : elems)
      if ((m * m).is_identity()) ++sqrt_identity;
    out.structure_ok = out.group_order == 8 && sqrt_identity == 6;
  } else {
    bool exponent_p = true;
    for (const auto& m : elems) {
      GfMatrix acc = m;
      for (int i = 1; i < p; ++i) acc = acc * m;
      if (!acc.is_identity()) exponent_p = false;
    }
    out.structure_ok = out.group_order == static_cast<long>(p) * p * p && exponent_p;
  }
  out.ok = out.pattern_ok && out.structure_ok && out.scalar_free &&
           out.group_order == static_cast<long>(p) * p * p;
  return out;
}

UnitaryCheck psu3_witness(int q) {
  // Entries live in GF(q^2); the conjugation x -> x^q is the e-th Frobenius
  // power for q = p^e.
  int p = 0, e = 0;
  for (int cand = 2; cand <= q; ++cand) {
    if (q % cand) continue;
    p = cand;
    long t = q;
    e = 0;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (t != 1) throw InputError("q must be a prime power");
    break;
  }
  if (p == 0) throw InputError("q must be at least 2");
  FieldCtx F = FieldCtx::make(p, 2 * e);
  auto bar = [&](FieldElem x) { return F.frobenius(x, e); };

  GfMatrix J(F, 3);
  J.at(0, 2) = J.at(1, 1) = J.at(2, 0) = F.one();
  auto unitary = [&](const GfMatrix& m) {
    return m.entrywise_frobenius(e).transpose() * J * m == J;
  };
  // Unitriangular isometry with top row (1, -u^q, v); the constraint is
  // tr(v) = -N(u).
  auto make = [&](FieldElem u, FieldElem v) {
    GfMatrix m = GfMatrix::identity(F, 3);
    m.at(0, 1) = F.neg(bar(u));
    m.at(0, 2) = v;
    m.at(1, 2) = u;
    return m;
  };
  auto solve_trace = [&](FieldElem target) {
    for (long v = 0; v < F.q(); ++v)
      if (F.add(static_cast<FieldElem>(v), bar(static_cast<FieldElem>(v))) ==
          target)
        return static_cast<FieldElem>(v);
    throw InputError("trace equation unsolvable"); // trace is surjective
  };

  FieldElem gamma = 0;
  for (long g = 1; g < F.q(); ++g)
    if (F.add(static_cast<FieldElem>(g), bar(static_cast<FieldElem>(g))) == 0) {
      gamma = static_cast<FieldElem>(g);
      break;
    }
  if (gamma == 0) throw InputError("no trace-zero element found");

  FieldElem omega = F.multiplicative_generator();
  GfMatrix c = make(0, gamma);
  GfMatrix a = make(F.one(), solve_trace(F.neg(F.one())));
  GfMatrix b = make(omega, solve_trace(F.neg(F.mul(omega, bar(omega)))));

  UnitaryCheck out;
  out.all_unitary = unitary(a) && unitary(b) && unitary(c);
  out.ab_noncommute = !matrices_commute(a, b);

  std::vector<GfMatrix> elems =
      group_closure({a, b, c}, 2L * q * q * q);
  out.group_order = static_cast<long>(elems.size());
  out.c_central = !c.is_identity();
  for (const auto& m : elems) {
    if (!unitary(m)) out.all_unitary = false;
    if (!matrices_commute(c, m)) out.c_central = false;
  }
  out.ok = out.all_unitary && out.c_central && out.ab_noncommute &&
           out.group_order == static_cast<long>(q) * q * q;
  return out;
}

} // namespace ibistk
