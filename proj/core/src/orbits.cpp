#include "ibistk/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "ibistk/errors.hpp"

namespace ibistk {

OrbitPartition orbit_partition(int degree, const std::vector<Perm>& gens) {
  OrbitPartition part;
  part.degree = degree;
  part.representative.assign(degree, -1);
  part.orbit_of_rep.assign(degree, {});
  std::vector<int> stack;
  for (int start = 0; start < degree; ++start) {
    if (part.representative[start] >= 0) continue;
    part.representative[start] = start;
    stack.push_back(start);
    std::vector<int> members{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        int y = g[x];
        if (part.representative[y] < 0) {
          part.representative[y] = start;
          members.push_back(y);
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.orbit_of_rep[start] = std::move(members);
    part.reps.push_back(start);
  }
  return part;
}

OrbitPartition orbit_partition(int degree, const std::vector<Perm>& gens,
                               const std::vector<int>& subset) {
  for (int pt : subset)
    if (pt < 0 || pt >= degree) throw InputError("subset point out of range");
  OrbitPartition full = orbit_partition(degree, gens);
  OrbitPartition part;
  part.degree = degree;
  part.representative.assign(degree, -1);
  part.orbit_of_rep.assign(degree, {});
  std::vector<char> wanted(degree, 0);
  for (int pt : subset) wanted[pt] = 1;
  for (int rep : full.reps) {
    std::vector<int> members;
    for (int pt : full.orbit_of(rep))
      if (wanted[pt]) members.push_back(pt);
    if (members.empty()) continue;
    int r = members.front();
    for (int pt : members) part.representative[pt] = r;
    part.orbit_of_rep[r] = std::move(members);
    part.reps.push_back(r);
  }
  return part;
}

OrbitPartition orbits(const PermGroup& g) {
  validate(g);
  return orbit_partition(g.degree, g.generators);
}

OrbitPartition orbits(const PermGroup& g, const std::vector<int>& subset) {
  validate(g);
  return orbit_partition(g.degree, g.generators, subset);
}

bool is_transitive(const PermGroup& g) {
  validate(g);
  return orbit_partition(g.degree, g.generators).reps.size() == 1;
}

namespace {

int find_rep(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

} // namespace

std::vector<int> minimal_block(int degree, const std::vector<Perm>& gens, int a,
                               int b) {
  if (a < 0 || a >= degree || b < 0 || b >= degree || a == b)
    throw InputError("minimal_block: bad point pair");
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> queue;
  parent[b] = a;
  queue.push_back(b);
  while (!queue.empty()) {
    int nu = queue.back();
    queue.pop_back();
    int kappa = find_rep(parent, nu);
    for (const auto& g : gens) {
      int x = find_rep(parent, g[nu]);
      int y = find_rep(parent, g[kappa]);
      if (x != y) {
        // merge the larger-rep class into the smaller and revisit it
        if (x < y) std::swap(x, y);
        parent[x] = y;
        queue.push_back(x);
      }
    }
  }
  int root = find_rep(parent, a);
  std::vector<int> block;
  for (int p = 0; p < degree; ++p)
    if (find_rep(parent, p) == root) block.push_back(p);
  return block;
}

bool is_primitive(const PermGroup& g) {
  validate(g);
  if (!is_transitive(g))
    throw PreconditionError("is_primitive requires a transitive group");
  if (g.degree <= 2) return true;
  for (int b = 1; b < g.degree; ++b) {
    if (minimal_block(g.degree, g.generators, 0, b).size() !=
        static_cast<std::size_t>(g.degree))
      return false;
  }
  return true;
}

std::vector<int> fixed_points(int degree, const std::vector<Perm>& gens) {
  std::vector<int> out;
  for (int p = 0; p < degree; ++p) {
    bool fixed = true;
    for (const auto& g : gens)
      if (g[p] != p) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(p);
  }
  return out;
}

int smallest_moved_point(int degree, const std::vector<Perm>& gens) {
  for (int p = 0; p < degree; ++p)
    for (const auto& g : gens)
      if (g[p] != p) return p;
  return -1;
}

} // namespace ibistk
