#include "ibistk/catalog.hpp"

#include <algorithm>
#include <map>

#include "ibistk/actions.hpp"
#include "ibistk/bsgs.hpp"
#include "ibistk/errors.hpp"
#include "ibistk/gf.hpp"
#include "ibistk/gf_matrix.hpp"
#include "ibistk/orbits.hpp"

namespace ibistk {

PermGroup sym_natural(int n) {
  if (n < 1) throw InputError("sym: n must be at least 1");
  std::string label = "sym:" + std::to_string(n);
  if (n == 1) return PermGroup(1, {Perm(1)}, label);
  std::vector<Perm> gens;
  {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::swap(img[0], img[1]);
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  if (n > 2) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(n, std::move(gens), label);
}

PermGroup alt_natural(int n) {
  if (n < 3) throw InputError("alt: n must be at least 3");
  std::string label = "alt:" + std::to_string(n);
  std::vector<Perm> gens;
  {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    img[0] = 1;
    img[1] = 2;
    img[2] = 0;
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  if (n > 3) {
    std::vector<int> img(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    } else {
      img[0] = 0;
      for (int i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(n, std::move(gens), label);
}

PermGroup action_on_m_subsets(const PermGroup& g, int m, long degree_cap) {
  validate(g);
  const int n = g.degree;
  if (m < 1 || m > n - 1) throw InputError("subset size out of range");

  // All m-subsets in lexicographic order.
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur(m);
  for (int i = 0; i < m; ++i) cur[i] = i;
  while (true) {
    subsets.push_back(cur);
    if (static_cast<long>(subsets.size()) > degree_cap)
      throw CapacityError("subset action degree exceeds cap");
    int i = m - 1;
    while (i >= 0 && cur[i] == n - m + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(subsets.size()); ++i)
    index.emplace(subsets[i], i);

  const int deg = static_cast<int>(subsets.size());
  std::vector<Perm> gens;
  std::vector<int> moved(m);
  for (const auto& p : g.generators) {
    std::vector<int> img(deg);
    for (int i = 0; i < deg; ++i) {
      for (int j = 0; j < m; ++j) moved[j] = p[subsets[i][j]];
      std::sort(moved.begin(), moved.end());
      img[i] = index.at(moved);
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  std::string label = g.label.empty() ? std::string{}
                                      : g.label + ":sets:" + std::to_string(m);
  return PermGroup(deg, std::move(gens), label);
}

PermGroup sym6_on_triple_partitions() {
  PermGroup s6 = sym_natural(6);
  // A partition into two triples is canonically the triple containing 0;
  // order the 10 points by that triple lexicographically.
  std::vector<std::vector<int>> parts;
  for (int a = 1; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) parts.push_back({0, a, b});
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    index.emplace(parts[i], i);

  std::vector<Perm> gens;
  for (const auto& p : s6.generators) {
    std::vector<int> img(10);
    for (int i = 0; i < 10; ++i) {
      std::vector<char> in(6, 0);
      for (int x : parts[i]) in[p[x]] = 1;
      if (!in[0])
        for (int x = 0; x < 6; ++x) in[x] = !in[x];
      std::vector<int> key;
      for (int x = 0; x < 6; ++x)
        if (in[x]) key.push_back(x);
      img[i] = index.at(key);
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(10, std::move(gens), "sym6:partitions");
}

namespace {

// Companion matrix (row-vector convention) of x^d + c[d-1] x^(d-1) + ... + c[0].
GfMatrix companion(const FieldCtx& F, const std::vector<int>& c) {
  const int d = static_cast<int>(c.size());
  GfMatrix M(F, d);
  for (int i = 0; i + 1 < d; ++i) M.at(i, i + 1) = F.one();
  for (int j = 0; j < d; ++j)
    M.at(d - 1, j) = F.neg(static_cast<FieldElem>(c[j]));
  return M;
}

// Companion matrix of the first primitive polynomial of degree d over GF(p),
// in coefficient enumeration order.
GfMatrix primitive_companion(const FieldCtx& F, int d, long q_ext) {
  const int p = F.p();
  std::vector<int> c(d);
  for (long v = 0; v < q_ext; ++v) {
    long t = v;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<int>(t % p);
      t /= p;
    }
    if (c[0] == 0) continue; // divisible by x
    GfMatrix M = companion(F, c);
    long order = 1;
    GfMatrix acc = M;
    bool singular_cycle = false;
    while (!acc.is_identity()) {
      acc = acc * M;
      if (++order > q_ext) {
        singular_cycle = true;
        break;
      }
    }
    if (!singular_cycle && order == q_ext - 1) return M;
  }
  throw InputError("no primitive polynomial found");
}

} // namespace

PermGroup agl(int d, int p, long degree_cap) {
  if (d < 1) throw InputError("agl: dimension must be positive");
  FieldCtx F = FieldCtx::make(p, 1); // validates primality
  long deg_long = 1;
  for (int i = 0; i < d; ++i) {
    if (deg_long > degree_cap / p)
      throw CapacityError("affine group degree exceeds cap");
    deg_long *= p;
  }
  const int deg = static_cast<int>(deg_long);
  std::string label = "agl:" + std::to_string(d) + ":" + std::to_string(p);

  std::vector<long> stride(d);
  stride[d - 1] = 1;
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * p;
  std::vector<FieldElem> v(d);
  auto decode = [&](long pt) {
    for (int i = 0; i < d; ++i) {
      v[i] = static_cast<FieldElem>(pt / stride[i]);
      pt %= stride[i];
    }
  };
  auto encode = [&](const std::vector<FieldElem>& w) {
    long pt = 0;
    for (int i = 0; i < d; ++i) pt += static_cast<long>(w[i]) * stride[i];
    return pt;
  };

  std::vector<Perm> gens;
  for (int c = 0; c < d; ++c) {
    std::vector<int> img(deg);
    for (long pt = 0; pt < deg_long; ++pt) {
      decode(pt);
      v[c] = F.add(v[c], F.one());
      img[pt] = static_cast<int>(encode(v));
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }

  std::vector<GfMatrix> linear;
  if (d == 1) {
    if (p > 2) {
      GfMatrix M(F, 1);
      M.at(0, 0) = F.multiplicative_generator();
      linear.push_back(M);
    }
  } else {
    GfMatrix T = GfMatrix::identity(F, d);
    T.at(0, 1) = F.one();
    linear.push_back(T);
    linear.push_back(primitive_companion(F, d, deg_long));
  }
  for (const auto& M : linear) {
    std::vector<int> img(deg);
    for (long pt = 0; pt < deg_long; ++pt) {
      decode(pt);
      img[pt] = static_cast<int>(encode(M.apply(v)));
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(deg, std::move(gens), label);
}

PermGroup frobenius_agl1(int p) {
  return agl(1, p);
}

namespace {

struct PrimePower {
  int p;
  int f;
};

PrimePower factor_prime_power(long q) {
  if (q < 2) throw InputError("q must be a prime power at least 2");
  int p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = static_cast<int>(d);
      break;
    }
  if (p == 0) return {static_cast<int>(q), 1};
  int f = 0;
  long t = q;
  while (t % p == 0) {
    t /= p;
    ++f;
  }
  if (t != 1) throw InputError(std::to_string(q) + " is not a prime power");
  return {p, f};
}

// Generators of the projective-line action: x -> x+1, x -> c x, x -> -1/x.
PermGroup projective_line_group(const FieldCtx& F, FieldElem c, std::string label) {
  const long q = F.q();
  const int deg = static_cast<int>(q + 1);
  const int inf = static_cast<int>(q);
  std::vector<Perm> gens;
  {
    std::vector<int> img(deg);
    for (long x = 0; x < q; ++x)
      img[x] = static_cast<int>(F.add(static_cast<FieldElem>(x), F.one()));
    img[inf] = inf;
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  {
    std::vector<int> img(deg);
    for (long x = 0; x < q; ++x)
      img[x] = static_cast<int>(F.mul(c, static_cast<FieldElem>(x)));
    img[inf] = inf;
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  {
    std::vector<int> img(deg);
    img[0] = inf;
    img[inf] = 0;
    for (long x = 1; x < q; ++x)
      img[x] = static_cast<int>(F.neg(F.inv(static_cast<FieldElem>(x))));
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(deg, std::move(gens), std::move(label));
}

} // namespace

PermGroup psl2(long q) {
  if (q < 4) throw InputError("psl2 requires q >= 4");
  auto [p, f] = factor_prime_power(q);
  FieldCtx F = FieldCtx::make(p, f);
  FieldElem g = F.multiplicative_generator();
  FieldElem c = (p == 2) ? g : F.mul(g, g);
  return projective_line_group(F, c, "psl2:" + std::to_string(q));
}

PermGroup pgl2(long q) {
  if (q < 3) throw InputError("pgl2 requires q >= 3");
  auto [p, f] = factor_prime_power(q);
  FieldCtx F = FieldCtx::make(p, f);
  return projective_line_group(F, F.multiplicative_generator(),
                               "pgl2:" + std::to_string(q));
}

Perm psl2_frobenius(long q) {
  auto [p, f] = factor_prime_power(q);
  if (!(p == 2 || q == 9))
    throw InputError("psl2_frobenius supports q = 2^f and q = 9");
  if (f < 2) throw InputError("psl2_frobenius needs a proper extension field");
  FieldCtx F = FieldCtx::make(p, f);
  const int deg = static_cast<int>(q + 1);
  std::vector<int> img(deg);
  for (long x = 0; x < q; ++x)
    img[x] = static_cast<int>(F.frobenius(static_cast<FieldElem>(x), 1));
  img[q] = static_cast<int>(q);
  Perm phi = Perm::unchecked(std::move(img));

  PermGroup t = psl2(q);
  Bsgs chain = Bsgs::build(t);
  for (const auto& gen : t.generators)
    if (!chain.contains(conjugate(gen, phi)))
      throw InputError("frobenius map fails to normalize psl2"); // unreachable
  return phi;
}

PermGroup psl2_on_dihedral_cosets(long q) {
  if (q != 4 && q != 8 && q != 16)
    throw InputError("dihedral coset action supports q in {4, 8, 16}");
  PermGroup t = psl2(q);
  Bsgs chain = Bsgs::build(t);

  // First element of order q+1 spans the non-split torus.
  Perm x;
  {
    auto stream = element_enumeration(chain);
    bool found = false;
    while (auto g = stream.next()) {
      if (g->order() == q + 1) {
        x = std::move(*g);
        found = true;
        break;
      }
    }
    if (!found) throw InputError("no element of order q+1 found"); // unreachable
  }
  // First involution inverting it closes the dihedral subgroup.
  Perm x_inv = x.inverse();
  Perm w;
  {
    auto stream = element_enumeration(chain);
    bool found = false;
    while (auto g = stream.next()) {
      if (g->order() == 2 && conjugate(x, *g) == x_inv) {
        w = std::move(*g);
        found = true;
        break;
      }
    }
    if (!found) throw InputError("no inverting involution found"); // unreachable
  }
  PermGroup dihedral(t.degree, {x, w});
  auto action = coset_action(chain, dihedral);
  action.image.label = "psl2:" + std::to_string(q) + ":dihedral";
  return action.image;
}

PermGroup psl3_2_on_7() {
  FieldCtx F = FieldCtx::make(2, 1);
  GfMatrix T = GfMatrix::identity(F, 3);
  T.at(0, 1) = F.one();
  GfMatrix C = primitive_companion(F, 3, 8);

  auto vec_point = [&](const std::vector<FieldElem>& v) {
    long val = static_cast<long>(v[0]) * 4 + v[1] * 2 + v[2];
    return static_cast<int>(val - 1);
  };
  std::vector<Perm> gens;
  for (const auto& M : {T, C}) {
    std::vector<int> img(7);
    for (long val = 1; val < 8; ++val) {
      std::vector<FieldElem> v{static_cast<FieldElem>((val >> 2) & 1),
                               static_cast<FieldElem>((val >> 1) & 1),
                               static_cast<FieldElem>(val & 1)};
      img[val - 1] = vec_point(M.apply(v));
    }
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(7, std::move(gens), "psl3_2:7");
}

PermGroup alt7_on_15() {
  PermGroup a7 = alt_natural(7);
  Bsgs chain = Bsgs::build(a7);
  // The degree-7 copy of PSL(3, 2) consists of even permutations, so it
  // already sits inside Alt(7).
  PermGroup h = psl3_2_on_7();
  h.label.clear();
  auto action = coset_action(chain, h);
  action.image.label = "alt7:15";
  return action.image;
}

PermGroup product_action_group(const PermGroup& h, int k, const PermGroup& top,
                               long degree_cap) {
  validate(h);
  if (k < 1) throw InputError("product action: k must be positive");
  if (k == 1) return h;
  if (!is_primitive(h))
    throw PreconditionError("product action requires a primitive factor");
  Bsgs chain = Bsgs::build(h);
  if (chain.order() == h.degree)
    throw PreconditionError("product action requires a non-regular factor");
  if (!is_transitive(top))
    throw PreconditionError("product action requires a transitive top group");
  PermGroup w = wreath_product_action(h, k, top, degree_cap);
  if (w.degree <= 10000 && !is_primitive(w))
    throw InputError("product action unexpectedly imprimitive"); // unreachable
  return w;
}

std::string CatalogExpected::display() const {
  std::string out;
  if (ibis.has_value()) out = *ibis ? "IBIS" : "not IBIS";
  if (base_size.has_value()) {
    if (!out.empty()) out += ", ";
    out += "b=" + std::to_string(*base_size);
  }
  return out;
}

namespace {

CatalogExpected expect(long degree, BigInt order, std::optional<bool> primitive,
                       std::optional<bool> ibis = std::nullopt,
                       std::optional<int> base_size = std::nullopt) {
  CatalogExpected e;
  e.degree = degree;
  e.order = std::move(order);
  e.primitive = primitive;
  e.ibis = ibis;
  e.base_size = base_size;
  return e;
}

std::vector<CatalogInfo> build_registry() {
  std::vector<CatalogInfo> r;
  auto add = [&](std::string name, CatalogExpected e) {
    r.push_back({std::move(name), std::move(e)});
  };
  BigInt f4 = 24, f5 = 120, f6 = 720, f7 = 5040, f8 = 40320;
  add("sym:4", expect(4, f4, true, true, 3));
  add("sym:5", expect(5, f5, true, true, 4));
  add("sym:6", expect(6, f6, true, true, 5));
  add("sym:7", expect(7, f7, true, true, 6));
  add("sym:8", expect(8, f8, true, true, 7));
  add("alt:4", expect(4, f4 / 2, true, true, 2));
  add("alt:5", expect(5, f5 / 2, true, true, 3));
  add("alt:6", expect(6, f6 / 2, true, true, 4));
  add("alt:7", expect(7, f7 / 2, true, true, 5));
  add("alt:8", expect(8, f8 / 2, true, true, 6));
  add("sym:6:sets:2", expect(15, f6, true, true));
  add("sym6:partitions", expect(10, f6, true, true));
  add("agl:1:3", expect(3, 6, true, true, 2));
  add("agl:1:5", expect(5, 20, true, true, 2));
  add("agl:1:7", expect(7, 42, true, true, 2));
  add("agl:1:11", expect(11, 110, true, true, 2));
  add("agl:2:3", expect(9, 432, true, true, 3));
  add("psl2:4", expect(5, 60, true, true));
  add("psl2:5", expect(6, 60, true, true));
  add("psl2:7", expect(8, 168, true, true));
  add("psl2:8", expect(9, 504, true, true));
  add("psl2:9", expect(10, 360, true, true));
  add("psl2:11", expect(12, 660, true, true));
  add("psl2:13", expect(14, 1092, true, true));
  add("psl2:16", expect(17, 4080, true, true));
  add("pgl2:4", expect(5, 60, true, true));
  add("pgl2:5", expect(6, 120, true, true));
  add("pgl2:7", expect(8, 336, true, true));
  add("pgl2:8", expect(9, 504, true, true));
  add("pgl2:9", expect(10, 720, true, true));
  add("psl2:4:dihedral", expect(6, 60, true, true));
  add("psl2:8:dihedral", expect(28, 504, true, true));
  add("psl2:16:dihedral", expect(120, 4080, true, true));
  add("psl3_2:7", expect(7, 168, true, true));
  add("alt7:15", expect(15, 2520, true, true));
  add("diag:psl2:4:2", expect(60, 3600, true, true, 3));
  add("diag:psl2:8:2", expect(504, 254016, true, true, 3));
  add("diag:psl2:7:2", expect(168, 28224, true, false));
  add("diag:psl2:4:2:frob=1", expect(60, 7200, true, false));
  add("diag:alt:5:2:top=sym:2", expect(60, 7200, true, false));
  add("diag:alt:5:2:twist", expect(60, 7200, true, false));
  add("diag:alt:5:2:top=sym:2:frob=1", expect(60, 14400, true, false));
  add("diag:psl2:8:2:top=sym:2", expect(504, 508032, true, false));
  add("diag:alt:7:2:top=sym:2", expect(2520, BigInt(2520) * 2520 * 2, true, false));
  add("diag:alt:5:3:top=sym:3", expect(3600, BigInt(60) * 60 * 60 * 6, true, false));
  add("prod:sym:5:2", expect(25, 28800, true, false));
  add("prod:psl2:4:2", expect(25, 7200, true, false));
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

long parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw InputError("");
    return v;
  } catch (...) {
    throw InputError("bad " + what + " in catalog name: '" + tok + "'");
  }
}

bool is_option_token(const std::string& tok) {
  return tok == "twist" || tok.rfind("top=", 0) == 0 || tok.rfind("frob=", 0) == 0;
}

DiagonalSpec parse_diagonal_spec(const std::string& name,
                                 const std::vector<std::string>& toks,
                                 long degree_cap);

} // namespace

const std::vector<CatalogInfo>& catalog_registry() {
  static const std::vector<CatalogInfo> registry = build_registry();
  return registry;
}

DiagonalAction catalog_diagonal(const std::string& name, long degree_cap) {
  auto toks = split(name, ':');
  if (toks.empty() || toks[0] != "diag")
    throw InputError("not a diagonal catalog name: " + name);
  DiagonalSpec spec =
      parse_diagonal_spec(name, {toks.begin() + 1, toks.end()}, degree_cap);
  DiagonalAction act = diagonal_group(spec, degree_cap);
  act.relabel(name);
  return act;
}

namespace {

DiagonalSpec parse_diagonal_spec(const std::string& name,
                                 const std::vector<std::string>& toks,
                                 long degree_cap) {
  // Option values may contain ':' themselves (top=sym:2), so locate the
  // first option token and re-join what follows it option by option.
  std::size_t opt_start = toks.size();
  for (std::size_t i = 0; i < toks.size(); ++i)
    if (is_option_token(toks[i])) {
      opt_start = i;
      break;
    }
  std::string top_name;
  int frob = 0;
  bool twist = false;
  for (std::size_t i = opt_start; i < toks.size(); ++i) {
    if (toks[i] == "twist") {
      twist = true;
    } else if (toks[i].rfind("top=", 0) == 0) {
      top_name = toks[i].substr(4);
      while (i + 1 < toks.size() && !is_option_token(toks[i + 1]))
        top_name += ":" + toks[++i];
    } else if (toks[i].rfind("frob=", 0) == 0) {
      frob = static_cast<int>(parse_int(toks[i].substr(5), "frob exponent"));
    } else {
      throw InputError("bad diag option '" + toks[i] + "' in " + name);
    }
  }
  std::vector<std::string> rest(toks.begin(), toks.begin() + opt_start);
  if (rest.size() < 2)
    throw InputError("diag name needs a socle factor and k: " + name);
  const int k = static_cast<int>(parse_int(rest.back(), "k"));
  rest.pop_back();
  std::string t_name = rest[0];
  for (std::size_t i = 1; i < rest.size(); ++i) t_name += ":" + rest[i];

  DiagonalSpec spec;
  spec.t = catalog_group(t_name, degree_cap);
  spec.k = k;
  if (!top_name.empty()) {
    spec.top = catalog_group(top_name, degree_cap);
    if (spec.top->degree != k)
      throw InputError("top group degree must equal k in " + name);
  }

  // The standard outer automorphism: the field automorphism for psl2:q,
  // conjugation by a transposition for alt:n.
  Perm outer;
  if (frob > 0 || twist) {
    auto t_toks = split(t_name, ':');
    if (t_toks[0] == "psl2" && t_toks.size() == 2) {
      Perm phi = psl2_frobenius(parse_int(t_toks[1], "q"));
      outer = phi;
      int e = frob > 0 ? frob : 1;
      for (int i = 1; i < e; ++i) outer = compose(outer, phi);
    } else if (t_toks[0] == "alt" && t_toks.size() == 2) {
      std::vector<int> img(spec.t.degree);
      for (int i = 0; i < spec.t.degree; ++i) img[i] = i;
      std::swap(img[0], img[1]);
      outer = Perm::unchecked(std::move(img));
      if (frob > 1 && frob % 2 == 0) outer = Perm(spec.t.degree);
    } else {
      throw InputError("frob/twist options are available for psl2:q and alt:n only");
    }
  }
  if (twist)
    spec.twist = outer;
  else if (frob > 0)
    spec.outer.push_back(outer);
  return spec;
}

} // namespace

PermGroup catalog_group(const std::string& name, long degree_cap) {
  auto toks = split(name, ':');
  if (toks.empty()) throw InputError("empty catalog name");
  const std::string& head = toks[0];
  try {
    if (head == "sym" || head == "alt") {
      if (toks.size() == 2) {
        int n = static_cast<int>(parse_int(toks[1], "n"));
        return head == "sym" ? sym_natural(n) : alt_natural(n);
      }
      if (toks.size() == 4 && toks[2] == "sets") {
        int n = static_cast<int>(parse_int(toks[1], "n"));
        int m = static_cast<int>(parse_int(toks[3], "m"));
        PermGroup base = head == "sym" ? sym_natural(n) : alt_natural(n);
        PermGroup out = action_on_m_subsets(base, m, degree_cap);
        out.label = name;
        return out;
      }
    } else if (head == "sym6" && toks.size() == 2 && toks[1] == "partitions") {
      return sym6_on_triple_partitions();
    } else if (head == "agl" && toks.size() == 3) {
      return agl(static_cast<int>(parse_int(toks[1], "d")),
                 static_cast<int>(parse_int(toks[2], "p")), degree_cap);
    } else if (head == "psl2" && toks.size() == 2) {
      return psl2(parse_int(toks[1], "q"));
    } else if (head == "psl2" && toks.size() == 3 && toks[2] == "dihedral") {
      return psl2_on_dihedral_cosets(parse_int(toks[1], "q"));
    } else if (head == "pgl2" && toks.size() == 2) {
      return pgl2(parse_int(toks[1], "q"));
    } else if (head == "psl3_2" && toks.size() == 2 && toks[1] == "7") {
      return psl3_2_on_7();
    } else if (head == "alt7" && toks.size() == 2 && toks[1] == "15") {
      return alt7_on_15();
    } else if (head == "diag") {
      return catalog_diagonal(name, degree_cap).group();
    } else if (head == "prod" && toks.size() >= 3) {
      const int k = static_cast<int>(parse_int(toks.back(), "k"));
      std::string h_name = toks[1];
      for (std::size_t i = 2; i + 1 < toks.size(); ++i) h_name += ":" + toks[i];
      PermGroup h = catalog_group(h_name, degree_cap);
      PermGroup out = product_action_group(h, k, sym_natural(k), degree_cap);
      out.label = name;
      return out;
    }
  } catch (const InputError&) {
    throw;
  } catch (const CapacityError&) {
    throw;
  }
  throw InputError("unknown catalog name: " + name);
}

} // namespace ibistk
