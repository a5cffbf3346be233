#include "ibistk/gf_matrix.hpp"

#include "ibistk/errors.hpp"

namespace ibistk {

GfMatrix::GfMatrix(const FieldCtx& F, int n) : F_(&F), n_(n), a_(n * n, 0) {
  if (n < 1) throw InputError("matrix dimension must be positive");
}

GfMatrix GfMatrix::identity(const FieldCtx& F, int n) {
  GfMatrix m(F, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

GfMatrix GfMatrix::operator*(const GfMatrix& rhs) const {
  GfMatrix out(*F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      FieldElem aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j)
        out.at(i, j) = F_->add(out.at(i, j), F_->mul(aik, rhs.at(k, j)));
    }
  return out;
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix out(*F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

GfMatrix GfMatrix::entrywise_frobenius(int i) const {
  GfMatrix out(*F_, n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) out.at(r, c) = F_->frobenius(at(r, c), i);
  return out;
}

bool GfMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? F_->one() : F_->zero())) return false;
  return true;
}

std::vector<FieldElem> GfMatrix::apply(const std::vector<FieldElem>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw InputError("vector length does not match matrix dimension");
  std::vector<FieldElem> out(n_, 0);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      out[j] = F_->add(out[j], F_->mul(v[i], at(i, j)));
  return out;
}

bool matrices_commute(const GfMatrix& a, const GfMatrix& b) {
  return a * b == b * a;
}

long matrix_order(const GfMatrix& m, long cap) {
  GfMatrix acc = m;
  long n = 1;
  while (!acc.is_identity()) {
    acc = acc * m;
    if (++n > cap) throw CapacityError("matrix order exceeds cap");
  }
  return n;
}

} // namespace ibistk
