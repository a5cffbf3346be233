#pragma once

#include <vector>

#include "ibistk/gf.hpp"

namespace ibistk {

/// Small dense matrix over a FieldCtx; just enough linear algebra for the
/// classical group constructors and the matrix witness checks.
class GfMatrix {
public:
  GfMatrix(const FieldCtx& F, int n); // zero matrix
  static GfMatrix identity(const FieldCtx& F, int n);

  int dim() const { return n_; }
  const FieldCtx& field() const { return *F_; }

  FieldElem& at(int i, int j) { return a_[i * n_ + j]; }
  FieldElem at(int i, int j) const { return a_[i * n_ + j]; }

  GfMatrix operator*(const GfMatrix& rhs) const;
  bool operator==(const GfMatrix& rhs) const { return a_ == rhs.a_; }
  bool operator!=(const GfMatrix& rhs) const { return !(*this == rhs); }

  GfMatrix transpose() const;
  /// Entry-wise application of the i-th Frobenius power.
  GfMatrix entrywise_frobenius(int i) const;
  bool is_identity() const;

  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const; // v * M

private:
  const FieldCtx* F_;
  int n_;
  std::vector<FieldElem> a_;
};

bool matrices_commute(const GfMatrix& a, const GfMatrix& b);
/// Multiplicative order by iterated multiplication; throws CapacityError
/// past the cap.
long matrix_order(const GfMatrix& m, long cap = 1 << 22);

} // namespace ibistk
