#pragma once

#include <cstdint>
#include <vector>

#include "ibistk/types.hpp"

namespace ibistk {

/// Element of GF(p^f), encoded as base-p digits of its coefficient vector,
/// least-significant coefficient first. The integer value doubles as the
/// enumeration index, which keeps element orderings stable across runs.
using FieldElem = std::uint32_t;

/// Arithmetic context for GF(p^f). Extension fields use a fixed modulus
/// table (GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1);
/// prime fields use the modulus x. Construction verifies that some element
/// has multiplicative order p^f - 1. Contexts are immutable and all
/// operations are pure.
class FieldCtx {
public:
  static FieldCtx make(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem zero() const { return 0; }
  FieldElem one() const { return 1; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  /// Throws DomainError for a == 0.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, long e) const;
  /// a -> a^(p^i), the i-th power of the Frobenius map.
  FieldElem frobenius(FieldElem a, int i) const;

  std::vector<int> coeffs(FieldElem a) const;
  FieldElem from_coeffs(const std::vector<int>& c) const;

  long multiplicative_order(FieldElem a) const;
  /// Smallest element (in enumeration order) of multiplicative order q - 1.
  FieldElem multiplicative_generator() const;
  /// Smallest element of exact order d; throws InputError unless d | q - 1.
  FieldElem element_of_order(long d) const;

private:
  FieldCtx() = default;
  void check_element(FieldElem a) const;
  FieldElem mul_raw(FieldElem a, FieldElem b) const;

  int p_ = 0, f_ = 0;
  long q_ = 0;
  std::vector<int> modulus_;
  std::vector<FieldElem> mul_table_; // populated for extension fields only
  FieldElem generator_ = 0;
};

} // namespace ibistk
