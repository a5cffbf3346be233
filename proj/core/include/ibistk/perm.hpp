#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ibistk/types.hpp"

namespace ibistk {

/// A permutation of {0,...,n-1}, stored as its image sequence.
///
/// Composition is left-to-right: compose(p, q) maps i to q[p[i]], so points
/// are hit by p first. This matches the right-action convention used
/// everywhere else in the library.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree); // identity

  /// Validating constructor; throws InputError unless images is a bijection.
  static Perm from_images(std::vector<int> images);
  /// Fast path for internally produced image vectors.
  static Perm unchecked(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  /// Multiplicative order, the lcm of the cycle lengths.
  BigInt order() const;
  /// Smallest point with p[i] != i, or -1 for the identity.
  int smallest_moved() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }

private:
  std::vector<int> images_;
};

/// compose(p, q) applies p first, then q. Degrees must match.
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// q^-1 * p * q, the conjugate of p by q.
Perm conjugate(const Perm& p, const Perm& q);

bool commute(const Perm& a, const Perm& b);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

/// Parses disjoint cycle notation with 1-based points, e.g. "(1 2)(3 4 5)".
/// "()" denotes the identity. Throws InputError on malformed text or points
/// outside 1..degree.
Perm parse_cycles(int degree, std::string_view text);

/// Formats as disjoint cycles with 1-based points, smallest cycle entry
/// first, cycles ordered by smallest entry; the identity formats as "()".
std::string format_cycles(const Perm& p);

} // namespace ibistk
