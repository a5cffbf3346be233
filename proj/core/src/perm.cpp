#include "ibistk/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ibistk/errors.hpp"

namespace ibistk {

Perm::Perm(int degree) {
  if (degree < 0) throw InputError("permutation degree must be non-negative");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[v])
      throw InputError("image sequence is not a bijection");
    seen[v] = 1;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::unchecked(std::vector<int> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return unchecked(std::move(inv));
}

BigInt Perm::order() const {
  BigInt result = 1;
  std::vector<char> done(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (done[i]) continue;
    long len = 0;
    for (int j = i; !done[j]; j = images_[j]) {
      done[j] = 1;
      ++len;
    }
    result = boost::multiprecision::lcm(result, BigInt(len));
  }
  return result;
}

int Perm::smallest_moved() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw InputError("compose: degree mismatch");
  std::vector<int> out(p.degree());
  for (int i = 0; i < p.degree(); ++i) out[i] = q[p[i]];
  return Perm::unchecked(std::move(out));
}

Perm conjugate(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw InputError("conjugate: degree mismatch");
  // (q^-1 p q)[i] computed without building intermediate products.
  std::vector<int> out(p.degree());
  for (int i = 0; i < p.degree(); ++i) out[q[i]] = q[p[i]];
  return Perm::unchecked(std::move(out));
}

bool commute(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw InputError("commute: degree mismatch");
  for (int i = 0; i < a.degree(); ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image sequence.
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Perm parse_cycles(int degree, std::string_view text) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InputError("empty cycle expression");

  std::vector<char> used(degree, 0);
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw InputError("expected '(' in cycle expression");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw InputError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("expected point or ')' in cycle");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw InputError("point exceeds degree");
        ++i;
      }
      if (v < 1) throw InputError("points are 1-based");
      int pt = static_cast<int>(v - 1);
      if (used[pt]) throw InputError("point repeated across cycles");
      used[pt] = 1;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i; // tolerate comma separators
    }
    any_cycle = true;
    if (cycle.size() == 1)
      throw InputError("length-1 cycles are not allowed; omit fixed points");
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j)
      images[cycle[j]] = cycle[j + 1];
    if (!cycle.empty()) images[cycle.back()] = cycle.front();
  }
  if (!any_cycle) throw InputError("no cycles found");
  return Perm::unchecked(std::move(images));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> done(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

} // namespace ibistk
