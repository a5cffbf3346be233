#include "ibistk/irredundant.hpp"

#include "ibistk/errors.hpp"
#include "ibistk/orbits.hpp"

namespace ibistk {

IrredundanceCheck is_irredundant(const Bsgs& b, const std::vector<int>& seq) {
  for (int pt : seq)
    if (pt < 0 || pt >= b.degree()) throw InputError("point out of range");
  IrredundanceCheck out;
  out.sequence.chain_orders.push_back(b.order());
  Bsgs cur = b;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    Bsgs next = cur.stabilizer_of(seq[i]);
    if (next.order() == cur.order()) {
      out.irredundant = false;
      out.first_redundant_index = i;
      return out;
    }
    out.sequence.points.push_back(seq[i]);
    out.sequence.chain_orders.push_back(next.order());
    cur = std::move(next);
  }
  out.irredundant = true;
  return out;
}

IrrSequence extend_to_irredundant_base(const Bsgs& b,
                                       const std::vector<int>& prefix) {
  IrredundanceCheck check = is_irredundant(b, prefix);
  if (!check.irredundant)
    throw PreconditionError("prefix is not irredundant (redundant at index " +
                            std::to_string(check.first_redundant_index) + ")");
  IrrSequence seq = std::move(check.sequence);
  Bsgs cur = b.pointwise_stabilizer(prefix);
  while (cur.order() > 1) {
    int pt = smallest_moved_point(b.degree(), cur.generators());
    cur = cur.stabilizer_of(pt);
    seq.points.push_back(pt);
    seq.chain_orders.push_back(cur.order());
  }
  return seq;
}

bool verify_witness_not_base(const Bsgs& b, const std::vector<int>& seq) {
  IrredundanceCheck check = is_irredundant(b, seq);
  return check.irredundant && !check.sequence.is_base();
}

namespace {

bool generators_commute_pairwise(const PermGroup& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j)
      if (!commute(g.generators[i], g.generators[j])) return false;
  return true;
}

// Depth-first search for the first irredundant base of size >= 3, expanding
// one representative per nontrivial orbit of the current stabilizer.
bool find_base_of_size_at_least(const Bsgs& h, int target, int degree,
                                std::vector<int>& prefix,
                                std::vector<BigInt>& orders) {
  auto part = orbit_partition(degree, h.generators());
  for (int rep : part.reps) {
    if (part.orbit_size(rep) < 2) continue;
    BigInt child_order = h.order() / part.orbit_size(rep);
    prefix.push_back(rep);
    orders.push_back(child_order);
    if (child_order == 1) {
      if (static_cast<int>(prefix.size()) >= target) return true;
    } else {
      if (find_base_of_size_at_least(h.stabilizer_of(rep), target, degree,
                                     prefix, orders))
        return true;
    }
    prefix.pop_back();
    orders.pop_back();
  }
  return false;
}

} // namespace

SocleBoundWitness socle_irredundant_lower_bound(const PermGroup& g,
                                                const PermGroup& m) {
  validate(g);
  validate(m);
  if (g.degree != m.degree)
    throw PreconditionError("group and normal subgroup degrees differ");
  if (!is_transitive(g) || !is_primitive(g))
    throw PreconditionError("group is not primitive");
  if (generators_commute_pairwise(m))
    throw PreconditionError("normal subgroup is abelian; the socle hypothesis "
                            "fails");

  Bsgs chain_g = Bsgs::build(g);
  Bsgs chain_m = Bsgs::build(m);
  for (const auto& x : m.generators)
    if (!chain_g.contains(x))
      throw PreconditionError("subgroup generators are not members of the group");
  for (const auto& x : m.generators)
    for (const auto& c : g.generators)
      if (!chain_m.contains(conjugate(x, c)))
        throw PreconditionError("subgroup is not normal in the group");
  if (chain_m.order() == m.degree)
    throw PreconditionError("normal subgroup is regular");

  SocleBoundWitness out;
  std::vector<int> prefix;
  std::vector<BigInt> orders{chain_m.order()};
  if (find_base_of_size_at_least(chain_m, 3, m.degree, prefix, orders)) {
    out.confirmed = true;
    out.witness.points = std::move(prefix);
    out.witness.chain_orders = std::move(orders);
  }
  return out;
}

} // namespace ibistk
