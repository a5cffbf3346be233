#include "ibistk/perm_group.hpp"

#include <unordered_set>

#include "ibistk/errors.hpp"

namespace ibistk {

PermGroup::PermGroup(int deg, std::vector<Perm> gens, std::string lbl)
    : degree(deg), label(std::move(lbl)) {
  if (degree < 1) throw InputError("group degree must be positive");
  std::unordered_set<Perm, PermHash> seen;
  for (auto& g : gens) {
    if (g.degree() != degree)
      throw InputError("generator degree does not match group degree");
    if (g.is_identity()) continue;
    if (seen.insert(g).second) generators.push_back(std::move(g));
  }
  if (generators.empty()) generators.emplace_back(degree);
}

bool PermGroup::is_trivial() const {
  for (const auto& g : generators)
    if (!g.is_identity()) return false;
  return true;
}

void validate(const PermGroup& g) {
  if (g.degree < 1) throw InputError("group degree must be positive");
  if (g.generators.empty()) throw InputError("generator sequence is empty");
  for (const auto& p : g.generators)
    if (p.degree() != g.degree)
      throw InputError("generator degree does not match group degree");
}

} // namespace ibistk
