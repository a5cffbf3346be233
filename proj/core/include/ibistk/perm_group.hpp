#pragma once

#include <string>
#include <vector>

#include "ibistk/perm.hpp"

namespace ibistk {

/// A permutation group given by generators of a common degree.
///
/// Normalization strips identity generators and duplicates; the trivial
/// group keeps a single identity generator so the sequence stays nonempty.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  std::string label;

  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> gens, std::string label = {});

  bool is_trivial() const;
};

/// Throws InputError unless every generator has the group degree.
void validate(const PermGroup& g);

} // namespace ibistk
