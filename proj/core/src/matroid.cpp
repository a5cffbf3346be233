#include "ibistk/matroid.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "ibistk/errors.hpp"
#include "ibistk/orbits.hpp"

namespace ibistk {

namespace {

std::vector<int> closure_of(const Bsgs& b, const std::vector<int>& set) {
  Bsgs stab = b.pointwise_stabilizer(set);
  return fixed_points(b.degree(), stab.generators());
}

std::vector<int> with_point(const std::vector<int>& set, int x) {
  std::vector<int> out = set;
  out.insert(std::lower_bound(out.begin(), out.end(), x), x);
  return out;
}

bool contains_point(const std::vector<int>& set, int x) {
  return std::binary_search(set.begin(), set.end(), x);
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

int matroid_rank_of(const Bsgs& b, const std::vector<int>& set) {
  std::vector<int> pts = set;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Bsgs cur = b;
  int rank = 0;
  for (int p : pts) {
    if (cur.order() == 1) break;
    bool moved = false;
    for (const auto& g : cur.generators())
      if (g[p] != p) {
        moved = true;
        break;
      }
    if (!moved) continue;
    cur = cur.stabilizer_of(p);
    ++rank;
  }
  return rank;
}

Matroid matroid_from_ibis(const Bsgs& b, const IbisVerdict& verdict,
                          int flat_cap) {
  if (!verdict.decided || !verdict.is_ibis)
    throw PreconditionError("matroid extraction requires an IBIS verdict");
  Matroid m;
  m.ground_size = b.degree();
  m.rank = verdict.base_size;
  auto chain = std::make_shared<Bsgs>(b);
  m.closure = [chain](const std::vector<int>& set) {
    std::vector<int> pts = set;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return closure_of(*chain, pts);
  };

  if (b.degree() > flat_cap) return m;

  // Flats level by level: the rank r+1 flats are exactly the closures of
  // one-point extensions of rank r flats.
  std::vector<std::set<std::vector<int>>> levels;
  levels.emplace_back();
  levels.back().insert(m.closure({}));
  for (int r = 0; r < m.rank; ++r) {
    std::set<std::vector<int>> next;
    for (const auto& flat : levels[r]) {
      for (int x = 0; x < m.ground_size; ++x) {
        if (contains_point(flat, x)) continue;
        next.insert(m.closure(with_point(flat, x)));
      }
    }
    levels.push_back(std::move(next));
  }
  m.flats_by_rank.resize(levels.size());
  for (std::size_t r = 0; r < levels.size(); ++r)
    m.flats_by_rank[r] = {levels[r].begin(), levels[r].end()};
  return m;
}

MatroidCheckResult matroid_axiom_check(const Matroid& m) {
  MatroidCheckResult bad;
  bad.ok = false;

  std::map<std::vector<int>, std::vector<int>> cache;
  auto closure = [&](const std::vector<int>& set) -> const std::vector<int>& {
    auto it = cache.find(set);
    if (it == cache.end()) it = cache.emplace(set, m.closure(set)).first;
    return it->second;
  };

  std::vector<std::vector<int>> flats;
  for (const auto& level : m.flats_by_rank)
    for (const auto& f : level) flats.push_back(f);
  if (flats.empty()) flats.push_back(closure({}));

  for (const auto& flat : flats) {
    if (closure(flat) != flat) {
      bad.axiom = "idempotent";
      bad.witness_set = flat;
      return bad;
    }
    for (int x = 0; x < m.ground_size; ++x) {
      if (contains_point(flat, x)) continue;
      const auto ext = with_point(flat, x);
      const auto& cl_x = closure(ext);
      if (!subset_of(ext, cl_x)) {
        bad.axiom = "extensive";
        bad.witness_set = flat;
        bad.witness_x = x;
        return bad;
      }
      if (closure(cl_x) != cl_x) {
        bad.axiom = "idempotent";
        bad.witness_set = ext;
        return bad;
      }
      for (int y = 0; y < m.ground_size; ++y) {
        if (y == x || contains_point(flat, y)) continue;
        if (!subset_of(cl_x, closure(with_point(ext, y)))) {
          bad.axiom = "monotone";
          bad.witness_set = flat;
          bad.witness_x = x;
          bad.witness_y = y;
          return bad;
        }
        // Mac Lane-Steinitz exchange over the flat: y in cl(F+x) forces
        // x in cl(F+y).
        if (contains_point(cl_x, y) &&
            !contains_point(closure(with_point(flat, y)), x)) {
          bad.axiom = "exchange";
          bad.witness_set = flat;
          bad.witness_x = x;
          bad.witness_y = y;
          return bad;
        }
      }
    }
  }
  return {};
}

} // namespace ibistk
