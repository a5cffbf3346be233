#include "ibistk/actions.hpp"

#include <unordered_map>

#include "ibistk/errors.hpp"

namespace ibistk {

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  validate(g);
  validate(h);
  const int n = g.degree, m = h.degree;
  std::vector<Perm> gens;
  for (const auto& p : g.generators) {
    std::vector<int> img(n + m);
    for (int i = 0; i < n; ++i) img[i] = p[i];
    for (int i = 0; i < m; ++i) img[n + i] = n + i;
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  for (const auto& p : h.generators) {
    std::vector<int> img(n + m);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (int i = 0; i < m; ++i) img[n + i] = n + p[i];
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(n + m, std::move(gens),
                   g.label.empty() || h.label.empty() ? std::string{}
                                                      : g.label + " x " + h.label);
}

PermGroup wreath_imprimitive(const PermGroup& h, int k, long degree_cap) {
  validate(h);
  if (k < 1) throw InputError("wreath: k must be positive");
  const long n = h.degree;
  if (n * static_cast<long>(k) > degree_cap)
    throw CapacityError("imprimitive wreath degree exceeds cap");
  if (k == 1) return h;
  const int deg = static_cast<int>(n * k);
  std::vector<Perm> gens;
  for (const auto& p : h.generators) {
    std::vector<int> img(deg);
    for (int i = 0; i < deg; ++i) img[i] = i;
    for (int i = 0; i < n; ++i) img[i] = p[i];
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  auto block_perm = [&](const Perm& pi) {
    std::vector<int> img(deg);
    for (int b = 0; b < k; ++b)
      for (int j = 0; j < n; ++j) img[b * n + j] = pi[b] * static_cast<int>(n) + j;
    return Perm::unchecked(std::move(img));
  };
  // Sym(k) on the blocks.
  {
    std::vector<int> swap01(k), cyc(k);
    for (int i = 0; i < k; ++i) swap01[i] = cyc[i] = i;
    swap01[0] = 1;
    swap01[1] = 0;
    for (int i = 0; i < k; ++i) cyc[i] = (i + 1) % k;
    gens.push_back(block_perm(Perm::unchecked(swap01)));
    if (k > 2) gens.push_back(block_perm(Perm::unchecked(cyc)));
  }
  return PermGroup(deg, std::move(gens));
}

namespace {

long power_with_cap(long base, int exp, long cap) {
  long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / base)
      throw CapacityError("product action degree exceeds cap");
    v *= base;
  }
  return v;
}

} // namespace

PermGroup wreath_product_action(const PermGroup& h, int k, const PermGroup& top,
                                long degree_cap) {
  validate(h);
  if (k < 1) throw InputError("product action: k must be positive");
  if (k == 1) return h;
  validate(top);
  if (top.degree != k)
    throw InputError("product action: top group degree must equal k");
  const long n = h.degree;
  const long deg_long = power_with_cap(n, k, degree_cap);
  const int deg = static_cast<int>(deg_long);

  std::vector<long> stride(k);
  stride[k - 1] = 1;
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * n;

  auto decode = [&](long pt, std::vector<int>& coords) {
    for (int i = 0; i < k; ++i) {
      coords[i] = static_cast<int>(pt / stride[i]);
      pt %= stride[i];
    }
  };
  auto encode = [&](const std::vector<int>& coords) {
    long pt = 0;
    for (int i = 0; i < k; ++i) pt += coords[i] * stride[i];
    return pt;
  };

  std::vector<Perm> gens;
  std::vector<int> coords(k);
  for (int c = 0; c < k; ++c) {
    for (const auto& p : h.generators) {
      std::vector<int> img(deg);
      for (long pt = 0; pt < deg_long; ++pt) {
        decode(pt, coords);
        coords[c] = p[coords[c]];
        img[pt] = static_cast<int>(encode(coords));
      }
      gens.push_back(Perm::unchecked(std::move(img)));
    }
  }
  std::vector<int> moved(k);
  for (const auto& pi : top.generators) {
    std::vector<int> img(deg);
    for (long pt = 0; pt < deg_long; ++pt) {
      decode(pt, coords);
      for (int i = 0; i < k; ++i) moved[pi[i]] = coords[i];
      img[pt] = static_cast<int>(encode(moved));
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(deg, std::move(gens));
}

CosetAction coset_action(const Bsgs& b, const PermGroup& subgroup_gens) {
  validate(subgroup_gens);
  if (subgroup_gens.degree != b.degree())
    throw InputError("coset_action: degree mismatch");
  for (const auto& p : subgroup_gens.generators)
    if (!b.contains(p))
      throw InputError("coset_action: subgroup is not contained in the group");

  Bsgs sub = Bsgs::build(subgroup_gens);
  BigInt index_big = b.order() / sub.order();
  if (index_big > kDefaultDegreeCap)
    throw CapacityError("coset action degree exceeds cap");
  const int index = static_cast<int>(index_big);

  std::vector<Perm> reps;
  std::unordered_map<Perm, int, PermHash> idx;
  reps.push_back(sub.coset_canonical(Perm(b.degree())));
  idx.emplace(reps[0], 0);
  const auto& group_gens = b.generators();
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    for (const auto& x : group_gens) {
      Perm c = sub.coset_canonical(compose(reps[i], x));
      if (idx.emplace(c, static_cast<int>(reps.size())).second)
        reps.push_back(std::move(c));
    }
  }
  if (static_cast<int>(reps.size()) != index)
    throw InputError("coset enumeration mismatch"); // unreachable for valid input

  std::vector<Perm> images;
  for (const auto& x : group_gens) {
    std::vector<int> img(index);
    for (int i = 0; i < index; ++i)
      img[i] = idx.at(sub.coset_canonical(compose(reps[i], x)));
    images.push_back(Perm::unchecked(std::move(img)));
  }
  CosetAction out;
  out.image = PermGroup(index, std::move(images));
  out.coset_reps = std::move(reps);
  return out;
}

PermGroup centralizer_of_element(const Bsgs& b, const Perm& x, long cap) {
  if (x.degree() != b.degree())
    throw InputError("centralizer: degree mismatch");
  if (!b.contains(x))
    throw InputError("centralizer: element is not a group member");
  auto stream = element_enumeration(b, cap);
  std::vector<Perm> cgens;
  Bsgs chain = Bsgs::build(b.degree(), {});
  while (auto g = stream.next()) {
    if (g->is_identity() || !commute(*g, x)) continue;
    if (chain.contains(*g)) continue;
    cgens.push_back(std::move(*g));
    chain = Bsgs::build(b.degree(), cgens);
  }
  return PermGroup(b.degree(), std::move(cgens));
}

} // namespace ibistk
