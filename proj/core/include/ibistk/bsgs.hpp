#pragma once

#include <optional>
#include <vector>

#include "ibistk/perm.hpp"
#include "ibistk/perm_group.hpp"
#include "ibistk/types.hpp"

namespace ibistk {

class ElementStream;

/// Base and strong generating set with fundamental orbits and Schreier-vector
/// transversals. Construction is the deterministic Schreier-Sims algorithm:
/// base points are the smallest moved point at each level, so identical
/// input always yields an identical chain. Instances are immutable once
/// built; concurrent reads are safe.
class Bsgs {
public:
  /// Builds a chain for <gens>. When base_prefix is given the base starts
  /// with exactly those points (possibly with trivial orbits), which is how
  /// pointwise stabilizers are extracted.
  static Bsgs build(int degree, const std::vector<Perm>& gens,
                    const std::vector<int>& base_prefix = {});
  static Bsgs build(const PermGroup& g);

  int degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::vector<int> base() const;
  int num_levels() const { return static_cast<int>(levels_.size()); }
  long orbit_length(int level) const;

  /// Generators of the whole group (the first level's generator list).
  const std::vector<Perm>& generators() const { return gens0_; }
  /// Every strong generator discovered during construction.
  const std::vector<Perm>& strong_generators() const { return pool_; }

  struct SiftResult {
    Perm residue;
    int stop_level; // num_levels() when the whole chain was traversed
    bool trivial() const { return residue.is_identity(); }
  };
  SiftResult sift(Perm p) const;
  bool contains(const Perm& p) const;

  /// Chain of the subgroup fixing every point of pts, produced by a change
  /// of base so the chain starts with pts.
  Bsgs pointwise_stabilizer(const std::vector<int>& pts) const;
  Bsgs stabilizer_of(int pt) const;

  /// Canonical representative of the right coset (this group) * g; two
  /// permutations get the same result iff they lie in the same coset.
  Perm coset_canonical(Perm g) const;

  PermGroup to_group(std::string label = {}) const;

private:
  friend class ElementStream;

  struct Level {
    int point = -1;
    std::vector<int> gen_ids;          // indices into pool_
    std::vector<int> orbit;            // BFS discovery order, orbit[0] == point
    std::vector<int> pos;              // point -> index in orbit, or -1
    std::vector<int> prev_pt, prev_gen; // Schreier vector
  };

  Bsgs() = default;

  void recompute_orbit(int level);
  Perm transversal(int level, int point) const;
  // p * u^-1 for the transversal u with base^u == point.
  Perm mul_inverse_transversal(int level, int point, Perm p) const;
  void schreier_sims_at(int level);
  void append_level(int point);
  void recompute_order();
  Bsgs strip_levels(int count) const;

  int degree_ = 0;
  std::vector<Perm> pool_, pool_inv_;
  std::vector<Perm> gens0_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Streams each group element exactly once, in transversal product order
/// (the identity comes first). The order is what fixes element indices for
/// everything layered on top, so it must stay stable.
class ElementStream {
public:
  explicit ElementStream(const Bsgs& b);
  std::optional<Perm> next();

private:
  const Bsgs* b_;
  std::vector<std::vector<Perm>> reps_;   // per level, enumeration order
  std::vector<int> digits_;
  std::vector<Perm> partial_;             // partial_[m] = reps[m][d] * ... * reps[0][d]
  bool done_ = false;
  bool first_ = true;
  void refresh_from(int level);
};

/// Throws CapacityError when the group order exceeds cap.
ElementStream element_enumeration(const Bsgs& b, long cap = kDefaultEnumerationCap);
std::vector<Perm> all_elements(const Bsgs& b, long cap = kDefaultEnumerationCap);

} // namespace ibistk
