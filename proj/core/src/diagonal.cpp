#include "ibistk/diagonal.hpp"

#include "ibistk/errors.hpp"
#include "ibistk/orbits.hpp"

namespace ibistk {

int DiagonalAction::element_index(const Perm& t) const {
  auto it = index_.find(t);
  if (it == index_.end())
    throw InputError("permutation is not an element of the socle factor");
  return it->second;
}

long DiagonalAction::point_of(const std::vector<Perm>& tuple) const {
  if (static_cast<int>(tuple.size()) != k_ - 1)
    throw InputError("coset tuple must have k-1 entries");
  long pt = 0;
  for (const auto& t : tuple) pt = pt * num_elements() + element_index(t);
  return pt;
}

std::vector<Perm> DiagonalAction::tuple_of(long point) const {
  std::vector<Perm> out(k_ - 1);
  for (int j = k_ - 2; j >= 0; --j) {
    out[j] = elements_[point % num_elements()];
    point /= num_elements();
  }
  return out;
}

namespace {

bool normalizes(const Bsgs& chain_t, const PermGroup& t, const Perm& a) {
  for (const auto& g : t.generators)
    if (!chain_t.contains(conjugate(g, a))) return false;
  return true;
}

} // namespace

DiagonalAction diagonal_group(const DiagonalSpec& spec, long degree_cap) {
  validate(spec.t);
  if (spec.k < 2) throw InputError("diagonal type needs k >= 2");
  if (spec.t.is_trivial()) throw InputError("socle factor is trivial");

  Bsgs chain_t = Bsgs::build(spec.t);
  if (chain_t.order() > kDefaultEnumerationCap)
    throw CapacityError("socle factor too large to enumerate");
  const long m = static_cast<long>(chain_t.order());

  long degree_long = 1;
  for (int i = 0; i < spec.k - 1; ++i) {
    if (degree_long > degree_cap / m)
      throw CapacityError("diagonal action degree exceeds cap");
    degree_long *= m;
  }
  const int degree = static_cast<int>(degree_long);
  const int n = spec.t.degree;
  const int k = spec.k;

  if (spec.top) {
    validate(*spec.top);
    if (spec.top->degree != k)
      throw InputError("top group degree must equal k");
    if (!spec.top->is_trivial() && !is_transitive(*spec.top))
      throw InputError("nontrivial top group must be transitive");
  }
  for (const auto& a : spec.outer) {
    if (a.degree() != n) throw InputError("outer element degree mismatch");
    if (!normalizes(chain_t, spec.t, a))
      throw InputError("outer element does not normalize the socle factor");
  }
  if (spec.twist) {
    if (k != 2) throw InputError("sigma twist requires k == 2");
    if (spec.twist->degree() != n) throw InputError("twist degree mismatch");
    if (!normalizes(chain_t, spec.t, *spec.twist))
      throw InputError("twist element does not normalize the socle factor");
    // y^2 must land in the group of diagonal automorphisms present.
    std::vector<Perm> hgens = spec.t.generators;
    for (const auto& a : spec.outer) hgens.push_back(a);
    Bsgs chain_h = Bsgs::build(n, hgens);
    if (!chain_h.contains(compose(*spec.twist, *spec.twist)))
      throw InputError("twist inconsistent: y^2 lies outside the adjoined "
                       "automorphism group");
  }

  DiagonalAction act;
  act.k_ = k;
  act.elements_ = all_elements(chain_t, kDefaultEnumerationCap);
  for (int i = 0; i < static_cast<int>(act.elements_.size()); ++i)
    act.index_.emplace(act.elements_[i], i);

  auto idx_of = [&](const Perm& p) {
    auto it = act.index_.find(p);
    if (it == act.index_.end())
      throw InputError("product left the socle factor; generators inconsistent");
    return static_cast<long>(it->second);
  };

  std::vector<long> digits(k - 1);
  auto decode = [&](long pt) {
    for (int j = k - 2; j >= 0; --j) {
      digits[j] = pt % m;
      pt /= m;
    }
  };
  auto encode = [&] {
    long pt = 0;
    for (int j = 0; j < k - 1; ++j) pt = pt * m + digits[j];
    return pt;
  };

  std::vector<Perm> gens;

  // Socle generators: s placed in one coordinate at a time. In coordinate 1
  // the coset map multiplies every entry by s^-1 on the left, in coordinate
  // j >= 2 it multiplies entry j by s on the right.
  for (const auto& s : spec.t.generators) {
    const Perm s_inv = s.inverse();
    {
      std::vector<int> img(degree);
      for (long pt = 0; pt < degree_long; ++pt) {
        decode(pt);
        for (int j = 0; j < k - 1; ++j)
          digits[j] = idx_of(compose(s_inv, act.elements_[digits[j]]));
        img[pt] = static_cast<int>(encode());
      }
      gens.push_back(Perm::unchecked(std::move(img)));
    }
    for (int c = 1; c < k; ++c) {
      std::vector<int> img(degree);
      for (long pt = 0; pt < degree_long; ++pt) {
        decode(pt);
        digits[c - 1] = idx_of(compose(act.elements_[digits[c - 1]], s));
        img[pt] = static_cast<int>(encode());
      }
      gens.push_back(Perm::unchecked(std::move(img)));
    }
  }

  // Top generators: permute coordinates, then renormalize so the first
  // entry is the identity again.
  if (spec.top) {
    std::vector<Perm> tuple(k);
    for (const auto& pi : spec.top->generators) {
      if (pi.is_identity()) continue;
      const Perm pi_inv = pi.inverse();
      std::vector<int> img(degree);
      for (long pt = 0; pt < degree_long; ++pt) {
        decode(pt);
        tuple[0] = Perm(n);
        for (int j = 1; j < k; ++j) tuple[j] = act.elements_[digits[j - 1]];
        const Perm x_inv = tuple[pi_inv[0]].inverse();
        for (int j = 1; j < k; ++j)
          digits[j - 1] = idx_of(compose(x_inv, tuple[pi_inv[j]]));
        img[pt] = static_cast<int>(encode());
      }
      gens.push_back(Perm::unchecked(std::move(img)));
    }
  }

  // Outer automorphisms act diagonally, conjugating every entry.
  for (const auto& a : spec.outer) {
    std::vector<int> img(degree);
    for (long pt = 0; pt < degree_long; ++pt) {
      decode(pt);
      for (int j = 0; j < k - 1; ++j)
        digits[j] = idx_of(conjugate(act.elements_[digits[j]], a));
      img[pt] = static_cast<int>(encode());
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }

  // The sigma twist (y, y) followed by the swap: [1, t] -> [1, (t^y)^-1].
  if (spec.twist) {
    std::vector<int> img(degree);
    for (long pt = 0; pt < degree_long; ++pt) {
      Perm t = conjugate(act.elements_[pt], *spec.twist);
      img[pt] = static_cast<int>(idx_of(t.inverse()));
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }

  act.group_ = PermGroup(degree, std::move(gens), spec.t.label);
  if (!is_transitive(act.group_))
    throw InputError("diagonal action is not transitive; spec inconsistent");
  return act;
}

} // namespace ibistk
