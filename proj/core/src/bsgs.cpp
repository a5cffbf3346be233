#include "ibistk/bsgs.hpp"

#include <algorithm>
#include <unordered_set>

#include "ibistk/errors.hpp"

namespace ibistk {

Bsgs Bsgs::build(int degree, const std::vector<Perm>& gens,
                 const std::vector<int>& base_prefix) {
  if (degree < 1) throw InputError("degree must be positive");
  Bsgs b;
  b.degree_ = degree;

  std::unordered_set<Perm, PermHash> seen;
  for (const auto& g : gens) {
    if (g.degree() != degree)
      throw InputError("generator degree does not match chain degree");
    if (g.is_identity()) continue;
    if (seen.insert(g).second) {
      b.pool_.push_back(g);
      b.pool_inv_.push_back(g.inverse());
    }
  }

  for (int pt : base_prefix) {
    if (pt < 0 || pt >= degree) throw InputError("base point out of range");
    b.append_level(pt);
  }
  // Every generator has to move some base point, otherwise sifting cannot
  // see it. New base points are the smallest point moved by the generators
  // fixing the base so far.
  while (true) {
    int next = degree;
    for (const auto& g : b.pool_) {
      bool moves_base = false;
      for (const auto& lv : b.levels_)
        if (g[lv.point] != lv.point) {
          moves_base = true;
          break;
        }
      if (!moves_base) next = std::min(next, g.smallest_moved());
    }
    if (next == degree) break;
    b.append_level(next);
  }
  // Register each generator at every level whose base prefix it fixes.
  for (int gi = 0; gi < static_cast<int>(b.pool_.size()); ++gi) {
    for (int l = 0; l < b.num_levels(); ++l) {
      b.levels_[l].gen_ids.push_back(gi);
      if (b.pool_[gi][b.levels_[l].point] != b.levels_[l].point) break;
    }
  }

  for (int l = b.num_levels() - 1; l >= 0; --l) b.schreier_sims_at(l);

  b.recompute_order();
  if (!b.levels_.empty())
    for (int gi : b.levels_[0].gen_ids) b.gens0_.push_back(b.pool_[gi]);
  return b;
}

Bsgs Bsgs::build(const PermGroup& g) {
  validate(g);
  return build(g.degree, g.generators);
}

void Bsgs::append_level(int point) {
  Level lv;
  lv.point = point;
  lv.pos.assign(degree_, -1);
  lv.prev_pt.assign(degree_, -1);
  lv.prev_gen.assign(degree_, -1);
  levels_.push_back(std::move(lv));
}

void Bsgs::recompute_orbit(int level) {
  Level& lv = levels_[level];
  std::fill(lv.pos.begin(), lv.pos.end(), -1);
  lv.orbit.clear();
  lv.orbit.push_back(lv.point);
  lv.pos[lv.point] = 0;
  for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    int x = lv.orbit[qi];
    for (int gi : lv.gen_ids) {
      int y = pool_[gi][x];
      if (lv.pos[y] < 0) {
        lv.pos[y] = static_cast<int>(lv.orbit.size());
        lv.prev_pt[y] = x;
        lv.prev_gen[y] = gi;
        lv.orbit.push_back(y);
      }
    }
  }
}

Perm Bsgs::transversal(int level, int point) const {
  const Level& lv = levels_[level];
  std::vector<int> ids;
  for (int x = point; x != lv.point; x = lv.prev_pt[x]) ids.push_back(lv.prev_gen[x]);
  Perm u(degree_);
  for (auto it = ids.rbegin(); it != ids.rend(); ++it) u = compose(u, pool_[*it]);
  return u;
}

Perm Bsgs::mul_inverse_transversal(int level, int point, Perm p) const {
  const Level& lv = levels_[level];
  for (int x = point; x != lv.point; x = lv.prev_pt[x])
    p = compose(p, pool_inv_[lv.prev_gen[x]]);
  return p;
}

void Bsgs::schreier_sims_at(int level) {
  recompute_orbit(level);
  for (std::size_t oi = 0; oi < levels_[level].orbit.size(); ++oi) {
    const int delta = levels_[level].orbit[oi];
    const Perm u_delta = transversal(level, delta);
    // gen_ids of this level stay fixed here; additions only go deeper.
    for (std::size_t gii = 0; gii < levels_[level].gen_ids.size(); ++gii) {
      const int gi = levels_[level].gen_ids[gii];
      const int gamma = pool_[gi][delta];
      Perm s = mul_inverse_transversal(level, gamma, compose(u_delta, pool_[gi]));
      if (s.is_identity()) continue;

      int stuck = -1;
      for (int m = level + 1; m < num_levels(); ++m) {
        int img = s[levels_[m].point];
        if (levels_[m].pos[img] < 0) {
          stuck = m;
          break;
        }
        if (img != levels_[m].point) s = mul_inverse_transversal(m, img, std::move(s));
      }
      if (stuck < 0) {
        if (s.is_identity()) continue;
        append_level(s.smallest_moved());
        stuck = num_levels() - 1;
      }
      const int rid = static_cast<int>(pool_.size());
      pool_inv_.push_back(s.inverse());
      pool_.push_back(std::move(s));
      for (int m = level + 1; m <= stuck; ++m) levels_[m].gen_ids.push_back(rid);
      for (int m = stuck; m > level; --m) schreier_sims_at(m);
    }
  }
}

void Bsgs::recompute_order() {
  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<long>(lv.orbit.size());
}

std::vector<int> Bsgs::base() const {
  std::vector<int> out;
  out.reserve(levels_.size());
  for (const auto& lv : levels_) out.push_back(lv.point);
  return out;
}

long Bsgs::orbit_length(int level) const {
  return static_cast<long>(levels_[level].orbit.size());
}

Bsgs::SiftResult Bsgs::sift(Perm p) const {
  if (p.degree() != degree_) throw InputError("sift: degree mismatch");
  for (int l = 0; l < num_levels(); ++l) {
    int img = p[levels_[l].point];
    if (levels_[l].pos[img] < 0) return {std::move(p), l};
    if (img != levels_[l].point) p = mul_inverse_transversal(l, img, std::move(p));
  }
  return {std::move(p), num_levels()};
}

bool Bsgs::contains(const Perm& p) const {
  return sift(p).trivial();
}

Bsgs Bsgs::strip_levels(int count) const {
  Bsgs c;
  c.degree_ = degree_;
  // Keep only pool entries the remaining levels reference.
  std::vector<int> remap(pool_.size(), -1);
  for (int l = count; l < num_levels(); ++l)
    for (int gi : levels_[l].gen_ids)
      if (remap[gi] < 0) {
        remap[gi] = static_cast<int>(c.pool_.size());
        c.pool_.push_back(pool_[gi]);
        c.pool_inv_.push_back(pool_inv_[gi]);
      }
  for (int l = count; l < num_levels(); ++l) {
    c.levels_.push_back(levels_[l]);
    Level& lv = c.levels_.back();
    for (int& gi : lv.gen_ids) gi = remap[gi];
    // the Schreier vectors reference pool indices as well
    for (int pt : lv.orbit)
      if (pt != lv.point) lv.prev_gen[pt] = remap[lv.prev_gen[pt]];
  }
  c.recompute_order();
  if (!c.levels_.empty())
    for (int gi : c.levels_[0].gen_ids) c.gens0_.push_back(c.pool_[gi]);
  return c;
}

Bsgs Bsgs::pointwise_stabilizer(const std::vector<int>& pts) const {
  for (int pt : pts)
    if (pt < 0 || pt >= degree_) throw InputError("stabilizer point out of range");
  bool aligned = static_cast<int>(pts.size()) <= num_levels();
  if (aligned)
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (levels_[i].point != pts[i]) {
        aligned = false;
        break;
      }
  if (aligned) return strip_levels(static_cast<int>(pts.size()));
  Bsgs rebuilt = build(degree_, pool_, pts);
  return rebuilt.strip_levels(static_cast<int>(pts.size()));
}

Bsgs Bsgs::stabilizer_of(int pt) const {
  return pointwise_stabilizer({pt});
}

Perm Bsgs::coset_canonical(Perm g) const {
  if (g.degree() != degree_) throw InputError("coset_canonical: degree mismatch");
  for (int l = 0; l < num_levels(); ++l) {
    const Level& lv = levels_[l];
    if (lv.orbit.size() < 2) continue;
    int best = lv.orbit[0];
    int best_img = g[best];
    for (std::size_t i = 1; i < lv.orbit.size(); ++i) {
      int img = g[lv.orbit[i]];
      if (img < best_img) {
        best_img = img;
        best = lv.orbit[i];
      }
    }
    if (best != lv.point) g = compose(transversal(l, best), g);
  }
  return g;
}

PermGroup Bsgs::to_group(std::string label) const {
  return PermGroup(degree_, gens0_, std::move(label));
}

ElementStream::ElementStream(const Bsgs& b) : b_(&b) {
  for (int l = 0; l < b.num_levels(); ++l) {
    const auto& lv = b.levels_[l];
    if (lv.orbit.size() < 2) continue;
    // Enumeration order per level: base point first, then ascending.
    std::vector<int> pts(lv.orbit);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::remove(pts.begin(), pts.end(), lv.point), pts.end());
    pts.insert(pts.begin(), lv.point);
    std::vector<Perm> reps;
    reps.reserve(pts.size());
    for (int pt : pts) reps.push_back(b.transversal(l, pt));
    reps_.push_back(std::move(reps));
  }
  digits_.assign(reps_.size(), 0);
  partial_.resize(reps_.size());
  if (!reps_.empty()) refresh_from(0);
}

void ElementStream::refresh_from(int level) {
  for (int m = level; m < static_cast<int>(reps_.size()); ++m) {
    if (m == 0)
      partial_[0] = reps_[0][digits_[0]];
    else
      partial_[m] = compose(reps_[m][digits_[m]], partial_[m - 1]);
  }
}

std::optional<Perm> ElementStream::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    if (reps_.empty()) {
      done_ = true;
      return Perm(b_->degree());
    }
    return partial_.back();
  }
  int m = static_cast<int>(reps_.size()) - 1;
  while (m >= 0) {
    if (++digits_[m] < static_cast<int>(reps_[m].size())) break;
    digits_[m] = 0;
    --m;
  }
  if (m < 0) {
    done_ = true;
    return std::nullopt;
  }
  refresh_from(m);
  return partial_.back();
}

ElementStream element_enumeration(const Bsgs& b, long cap) {
  if (b.order() > cap)
    throw CapacityError("group order " + b.order().str() +
                        " exceeds enumeration cap " + std::to_string(cap) +
                        "; raise the cap to enumerate");
  return ElementStream(b);
}

std::vector<Perm> all_elements(const Bsgs& b, long cap) {
  auto stream = element_enumeration(b, cap);
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(b.order()));
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

} // namespace ibistk
