#include "ibistk/gf.hpp"

#include <algorithm>

#include "ibistk/errors.hpp"

namespace ibistk {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> divisors_ascending(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

FieldCtx FieldCtx::make(int p, int f) {
  if (!is_prime(p)) throw InputError("field characteristic must be prime");
  if (f < 1) throw InputError("field exponent must be positive");
  long q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > (1L << 20)) throw InputError("field size exceeds 2^20");
  }

  FieldCtx F;
  F.p_ = p;
  F.f_ = f;
  F.q_ = q;
  if (f == 1) {
    F.modulus_ = {0, 1}; // x
  } else if (q == 4) {
    F.modulus_ = {1, 1, 1}; // x^2 + x + 1
  } else if (q == 8) {
    F.modulus_ = {1, 1, 0, 1}; // x^3 + x + 1
  } else if (q == 9) {
    F.modulus_ = {1, 0, 1}; // x^2 + 1
  } else if (q == 16) {
    F.modulus_ = {1, 1, 0, 0, 1}; // x^4 + x + 1
  } else {
    throw InputError("unsupported extension field GF(" + std::to_string(p) + "^" +
                     std::to_string(f) + ")");
  }

  if (f > 1) {
    F.mul_table_.assign(static_cast<std::size_t>(q) * q, 0);
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b)
        F.mul_table_[a * q + b] =
            F.mul_raw(static_cast<FieldElem>(a), static_cast<FieldElem>(b));
  }

  // A generator of order q - 1 certifies the multiplicative group size.
  F.generator_ = F.element_of_order(q - 1);
  return F;
}

void FieldCtx::check_element(FieldElem a) const {
  if (static_cast<long>(a) >= q_)
    throw InputError("field element out of range");
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  check_element(a);
  check_element(b);
  if (f_ == 1) return static_cast<FieldElem>((a + b) % p_);
  FieldElem out = 0;
  FieldElem scale = 1;
  for (int i = 0; i < f_; ++i) {
    int ca = static_cast<int>(a % p_), cb = static_cast<int>(b % p_);
    out += static_cast<FieldElem>((ca + cb) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FieldElem FieldCtx::neg(FieldElem a) const {
  check_element(a);
  if (f_ == 1) return static_cast<FieldElem>((p_ - a % p_) % p_);
  FieldElem out = 0;
  FieldElem scale = 1;
  for (int i = 0; i < f_; ++i) {
    int c = static_cast<int>(a % p_);
    out += static_cast<FieldElem>((p_ - c) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const {
  return add(a, neg(b));
}

FieldElem FieldCtx::mul_raw(FieldElem a, FieldElem b) const {
  if (f_ == 1)
    return static_cast<FieldElem>((static_cast<long>(a) * b) % p_);
  // Polynomial product with reduction by the monic modulus.
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  std::vector<int> prod(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  for (int d = 2 * f_ - 2; d >= f_; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^(d-f) * (x^f mod modulus)
    for (int i = 0; i < f_; ++i) {
      int m = (p_ - modulus_[i]) % p_;
      prod[d - f_ + i] = (prod[d - f_ + i] + c * m) % p_;
    }
  }
  FieldElem out = 0;
  FieldElem scale = 1;
  for (int i = 0; i < f_; ++i) {
    out += static_cast<FieldElem>(prod[i]) * scale;
    scale *= p_;
  }
  return out;
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  check_element(a);
  check_element(b);
  if (!mul_table_.empty()) return mul_table_[static_cast<long>(a) * q_ + b];
  return mul_raw(a, b);
}

FieldElem FieldCtx::pow(FieldElem a, long e) const {
  check_element(a);
  if (e < 0) return pow(inv(a), -e);
  if (a == 0) return e == 0 ? one() : 0;
  e %= (q_ - 1);
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  check_element(a);
  if (a == 0) throw DomainError("inversion of zero");
  return pow(a, q_ - 2);
}

FieldElem FieldCtx::frobenius(FieldElem a, int i) const {
  check_element(a);
  if (i < 0) throw InputError("frobenius power must be non-negative");
  if (a == 0 || q_ == 2) return a;
  long e = 1;
  for (int j = 0; j < i; ++j) e = (e * p_) % (q_ - 1);
  if (e == 0) e = q_ - 1;
  return pow(a, e);
}

std::vector<int> FieldCtx::coeffs(FieldElem a) const {
  check_element(a);
  std::vector<int> out(f_);
  for (int i = 0; i < f_; ++i) {
    out[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return out;
}

FieldElem FieldCtx::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != f_)
    throw InputError("coefficient vector has wrong length");
  FieldElem out = 0;
  FieldElem scale = 1;
  for (int i = 0; i < f_; ++i) {
    if (c[i] < 0 || c[i] >= p_) throw InputError("coefficient out of range");
    out += static_cast<FieldElem>(c[i]) * scale;
    scale *= p_;
  }
  return out;
}

long FieldCtx::multiplicative_order(FieldElem a) const {
  check_element(a);
  if (a == 0) throw DomainError("zero has no multiplicative order");
  for (long d : divisors_ascending(q_ - 1))
    if (pow(a, d) == one()) return d;
  throw InputError("element order not dividing q-1; modulus is not irreducible");
}

FieldElem FieldCtx::multiplicative_generator() const {
  return generator_;
}

FieldElem FieldCtx::element_of_order(long d) const {
  if (d < 1 || (q_ - 1) % d != 0)
    throw InputError("requested order does not divide q-1");
  for (long a = 1; a < q_; ++a)
    if (multiplicative_order(static_cast<FieldElem>(a)) == d)
      return static_cast<FieldElem>(a);
  throw InputError("no element of the requested order; modulus is not irreducible");
}

} // namespace ibistk
