#include "semiprimal/variety.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semiprimal {

int BaseAlgebra::sub_id_of(const std::vector<int>& sorted_elements) const {
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].elements == sorted_elements) return static_cast<int>(i);
  }
  return -1;
}

int BaseAlgebra::smallest_sub_id() const {
  std::vector<int> seed{reduct.bot, reduct.top};
  SubUniverse s = subuniverse_closure(alg, seed);
  int id = sub_id_of(s.elements);
  if (id < 0) throw std::logic_error("smallest subalgebra missing from enumeration");
  return id;
}

int BaseAlgebra::full_sub_id() const {
  return static_cast<int>(subs.size()) - 1;  // sorted by size; the full one is last
}

bool BaseAlgebra::sub_leq(int s, int t) const {
  const auto& se = subs[s].elements;
  const auto& te = subs[t].elements;
  return std::includes(te.begin(), te.end(), se.begin(), se.end());
}

BasePtr certify_base(const AlgebraPtr& alg, std::optional<LatticeHints> hints) {
  auto base = std::make_shared<BaseAlgebra>();
  base->alg = alg;
  base->reduct = detect_lattice(alg, std::move(hints));
  base->verdict = is_semi_primal(alg, base->reduct, SemiRoute::All);
  if (base->verdict.level != PrimalityLevel::semi_primal) {
    throw NotSemiPrimalBase("base algebra '" + alg->name() + "' is " +
                            to_string(base->verdict.level));
  }
  base->subs = enumerate_subuniverses(alg);
  if (base->subs.size() == 1) base->verdict.level = PrimalityLevel::primal;
  return base;
}

int VarietyAlgebra::index_of(const std::vector<int>& tuple) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), tuple);
  if (it == carrier.end() || *it != tuple) return -1;
  return static_cast<int>(it - carrier.begin());
}

namespace {

// concrete tables by transport along a bijection inv: new index -> old element
AlgebraPtr transport_tables(const FiniteAlgebra& a, const std::vector<int>& inv,
                            const std::vector<int>& fwd, const std::string& name) {
  int n = static_cast<int>(inv.size());
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < a.num_ops(); ++op) {
    int k = a.arity(op);
    std::size_t len = 1;
    for (int t = 0; t < k; ++t) len *= n;
    std::vector<int> tab(len);
    std::vector<int> args(k, 0), pargs(k, 0);
    std::size_t idx = 0;
    while (true) {
      for (int t = 0; t < k; ++t) pargs[t] = inv[args[t]];
      tab[idx] = fwd[a.apply(op, pargs)];
      ++idx;
      if (idx == len) break;
      int t = k - 1;
      while (t >= 0 && ++args[t] == n) args[t--] = 0;
      if (t < 0) break;
    }
    tables.push_back(std::move(tab));
  }
  return make_algebra(n, a.signature(), std::move(tables), name);
}

}  // namespace

VarietyAlgebra canonicalize(const AlgebraPtr& a, const BasePtr& base,
                            std::vector<int>* eval_index) {
  if (a->signature() != base->alg->signature()) throw SignatureMismatch("canonicalize");
  std::vector<Homomorphism> homs = enumerate_homomorphisms(a, base->alg);

  int n = a->size();
  std::vector<std::vector<int>> tuples(n, std::vector<int>(homs.size()));
  for (std::size_t h = 0; h < homs.size(); ++h) {
    for (int e = 0; e < n; ++e) tuples[e][h] = homs[h].map[e];
  }

  std::vector<std::vector<int>> sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<int>(sorted.size()) != n) {
    throw NotInVariety("evaluation map collapses elements; not a member of the variety");
  }

  VarietyAlgebra v;
  v.base = base;
  for (const Homomorphism& h : homs) {
    int id = base->sub_id_of(h.image());
    if (id < 0) throw std::logic_error("hom image is not a known subuniverse");
    v.factors.push_back(id);
  }
  v.carrier = std::move(sorted);

  std::size_t prod = 1;
  for (int f : v.factors) prod *= v.base->subs[f].elements.size();
  v.full_product = (v.carrier.size() == prod);

  std::vector<int> fwd(n);
  std::vector<int> inv(n);
  for (int e = 0; e < n; ++e) {
    auto it = std::lower_bound(v.carrier.begin(), v.carrier.end(), tuples[e]);
    fwd[e] = static_cast<int>(it - v.carrier.begin());
    inv[fwd[e]] = e;
  }
  if (eval_index) *eval_index = fwd;
  v.concrete = transport_tables(*a, inv, fwd, a->name().empty() ? "canonical" : a->name());
  return v;
}

VarietyAlgebra full_product_variety(const BasePtr& base, std::vector<int> factor_ids,
                                    std::size_t cap) {
  VarietyAlgebra v;
  v.base = base;
  v.factors = std::move(factor_ids);
  v.full_product = true;

  std::size_t total = 1;
  for (int f : v.factors) {
    if (f < 0 || f >= static_cast<int>(base->subs.size())) {
      throw InvalidInput("full_product_variety: bad subuniverse id");
    }
    total *= base->subs[f].elements.size();
    if (total > cap) throw SizeCapExceeded("product exceeds cap");
  }

  int m = v.num_factors();
  std::vector<int> pos(m, 0);
  while (true) {
    std::vector<int> tuple(m);
    for (int i = 0; i < m; ++i) tuple[i] = base->subs[v.factors[i]].elements[pos[i]];
    v.carrier.push_back(std::move(tuple));
    if (m == 0) break;
    int t = m - 1;
    while (t >= 0 &&
           ++pos[t] == static_cast<int>(base->subs[v.factors[t]].elements.size())) {
      pos[t--] = 0;
    }
    if (t < 0) break;
  }

  // componentwise tables over the carrier
  const FiniteAlgebra& L = *base->alg;
  int n = v.size();
  std::vector<std::vector<int>> tables;
  for (int op = 0; op < L.num_ops(); ++op) {
    int k = L.arity(op);
    std::size_t len = 1;
    for (int t = 0; t < k; ++t) len *= n;
    std::vector<int> tab(len);
    std::vector<int> args(k, 0), cargs(k, 0);
    std::size_t idx = 0;
    std::vector<int> tuple(m);
    while (true) {
      for (int i = 0; i < m; ++i) {
        for (int t = 0; t < k; ++t) cargs[t] = v.carrier[args[t]][i];
        tuple[i] = L.apply(op, std::span<const int>(cargs.data(), k));
      }
      int enc = v.index_of(tuple);
      if (enc < 0) throw std::logic_error("carrier is not closed componentwise");
      tab[idx] = enc;
      ++idx;
      if (idx == len) break;
      int t = k - 1;
      while (t >= 0 && ++args[t] == n) args[t--] = 0;
      if (t < 0) break;
    }
    tables.push_back(std::move(tab));
  }
  v.concrete = make_algebra(n, L.signature(), std::move(tables), "product");
  return v;
}

SkeletonResult skeleton(const VarietyAlgebra& a) {
  const BaseAlgebra& base = *a.base;
  int m = a.num_factors();
  int bot = base.bot(), top = base.top();

  // skeleton = carrier tuples valued in {0,1}, as factor bitsets
  std::vector<std::pair<std::uint64_t, int>> skel_elems;  // (bits, carrier index)
  for (int e = 0; e < a.size(); ++e) {
    std::uint64_t bits = 0;
    bool in = true;
    for (int i = 0; i < m; ++i) {
      int x = a.carrier[e][i];
      if (x == top) {
        bits |= std::uint64_t(1) << i;
      } else if (x != bot) {
        in = false;
        break;
      }
    }
    if (in) skel_elems.emplace_back(bits, e);
  }

  // atoms = minimal nonzero bitsets
  std::vector<std::uint64_t> atoms;
  for (auto [bits, e] : skel_elems) {
    if (bits == 0) continue;
    bool minimal = true;
    for (auto [other, e2] : skel_elems) {
      if (other != 0 && other != bits && (other & bits) == other) {
        minimal = false;
        break;
      }
    }
    if (minimal) atoms.push_back(bits);
  }
  std::sort(atoms.begin(), atoms.end());

  int k = static_cast<int>(atoms.size());
  if (skel_elems.size() != (std::size_t(1) << k)) {
    throw std::logic_error("skeleton is not a finite Boolean algebra");
  }

  SkeletonResult out;
  out.skeleton = FiniteBooleanAlgebra{k};
  out.atom_factor_bits = atoms;
  out.inclusion.assign(std::size_t(1) << k, -1);
  out.mask_of_carrier.assign(a.size(), -1);

  std::map<std::uint64_t, int> by_bits;
  for (auto [bits, e] : skel_elems) by_bits[bits] = e;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
    std::uint64_t bits = 0;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) bits |= atoms[i];
    }
    auto it = by_bits.find(bits);
    if (it == by_bits.end()) throw std::logic_error("skeleton not closed under joins of atoms");
    out.inclusion[mask] = it->second;
    out.mask_of_carrier[it->second] = static_cast<int>(mask);
  }
  return out;
}

BooleanPower boolean_power(const AlgebraPtr& m, const FiniteBooleanAlgebra& b, std::size_t cap) {
  int nm = m->size();
  int k = b.atoms;
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::size_t>(nm);
    if (total > cap) throw SizeCapExceeded("boolean power exceeds cap");
  }
  int n = static_cast<int>(total);

  BooleanPower pw;
  pw.base_m = m;
  pw.b = b;

  // xi per element, precomputed
  std::vector<std::vector<std::uint64_t>> xis(n, std::vector<std::uint64_t>(nm, 0));
  for (int e = 0; e < n; ++e) {
    int rest = e;
    for (int i = k - 1; i >= 0; --i) {
      int digit = rest % nm;
      rest /= nm;
      xis[e][digit] |= std::uint64_t(1) << i;
    }
  }

  auto encode_xi = [&](const std::vector<std::uint64_t>& xi) -> int {
    int e = 0;
    for (int i = 0; i < k; ++i) {
      int digit = -1;
      for (int ell = 0; ell < nm; ++ell) {
        if (xi[ell] >> i & 1) {
          digit = ell;
          break;
        }
      }
      if (digit < 0) throw std::logic_error("partition of unity violated");
      e = e * nm + digit;
    }
    return e;
  };

  const FiniteAlgebra& M = *m;
  std::vector<std::vector<int>> tables;
  std::vector<std::uint64_t> out_xi(nm);
  for (int op = 0; op < M.num_ops(); ++op) {
    int r = M.arity(op);
    std::size_t len = 1;
    for (int t = 0; t < r; ++t) len *= n;
    std::vector<int> tab(len);
    if (r == 0) {
      std::fill(out_xi.begin(), out_xi.end(), 0);
      out_xi[M.apply0(op)] = b.one();
      tab[0] = k == 0 ? 0 : encode_xi(out_xi);
      tables.push_back(std::move(tab));
      continue;
    }
    std::vector<int> args(r, 0), ells(r, 0);
    std::size_t idx = 0;
    while (true) {
      std::fill(out_xi.begin(), out_xi.end(), 0);
      // o(xi_1..xi_r)(ell) = join over o(l_1..l_r)=ell of xi_1(l_1) /\ ... /\ xi_r(l_r)
      std::fill(ells.begin(), ells.end(), 0);
      while (true) {
        std::uint64_t w = ~std::uint64_t(0);
        for (int t = 0; t < r && w; ++t) w &= xis[args[t]][ells[t]];
        if (w) out_xi[M.apply(op, ells)] |= w & b.one();
        int t = r - 1;
        while (t >= 0 && ++ells[t] == nm) ells[t--] = 0;
        if (t < 0) break;
      }
      tab[idx] = (k == 0) ? 0 : encode_xi(out_xi);
      ++idx;
      if (idx == len) break;
      int t = r - 1;
      while (t >= 0 && ++args[t] == n) args[t--] = 0;
      if (t < 0) break;
    }
    tables.push_back(std::move(tab));
  }

  pw.algebra = make_algebra(n, M.signature(), std::move(tables),
                            (M.name().empty() ? "M" : M.name()) + "[2^" + std::to_string(k) + "]");
  return pw;
}

std::vector<int> BooleanPower::digits(int e) const {
  int k = b.atoms, nm = base_m->size();
  std::vector<int> d(k);
  for (int i = k - 1; i >= 0; --i) {
    d[i] = e % nm;
    e /= nm;
  }
  return d;
}

int BooleanPower::index_of_digits(std::span<const int> d) const {
  int nm = base_m->size();
  int e = 0;
  for (int x : d) e = e * nm + x;
  return e;
}

std::vector<std::uint64_t> BooleanPower::xi(int e) const {
  // atom i is digit position i and bit i of the masks
  std::vector<std::uint64_t> x(base_m->size(), 0);
  std::vector<int> d = digits(e);
  for (int i = 0; i < b.atoms; ++i) x[d[i]] |= std::uint64_t(1) << i;
  return x;
}

int BooleanPower::index_of_xi(std::span<const std::uint64_t> x) const {
  int k = b.atoms, nm = base_m->size();
  std::vector<int> d(k, -1);
  for (int ell = 0; ell < nm; ++ell) {
    for (int i = 0; i < k; ++i) {
      if (x[ell] >> i & 1) {
        if (d[i] >= 0) throw InvalidInput("index_of_xi: overlapping assignment");
        d[i] = ell;
      }
    }
  }
  for (int v : d) {
    if (v < 0) throw InvalidInput("index_of_xi: atoms not covered");
  }
  return index_of_digits(d);
}

VarietyAlgebra power_as_variety(const BasePtr& base, const FiniteBooleanAlgebra& b,
                                std::size_t cap) {
  BooleanPower pw = boolean_power(base->alg, b, cap);
  return canonicalize(pw.algebra, base);
}

UnitEmbedding unit_embedding(const VarietyAlgebra& a) {
  const BaseAlgebra& base = *a.base;
  UnitEmbedding out{skeleton(a), {}, {}};
  out.power = boolean_power(base.alg, out.skel.skeleton);

  int nl = base.n();
  int m = a.num_factors();
  std::vector<int> map(a.size());
  std::vector<std::uint64_t> xi(nl);
  std::vector<int> t_tuple(m);
  for (int e = 0; e < a.size(); ++e) {
    std::fill(xi.begin(), xi.end(), 0);
    for (int ell = 0; ell < nl; ++ell) {
      for (int i = 0; i < m; ++i) {
        t_tuple[i] = (a.carrier[e][i] == ell) ? base.top() : base.bot();
      }
      int ci = a.index_of(t_tuple);
      if (ci < 0) throw std::logic_error("T_ell tuple escapes the carrier");
      int mask = out.skel.mask_of_carrier[ci];
      if (mask < 0) throw std::logic_error("T_ell tuple is not a skeleton element");
      // skeleton atoms are the power's atoms, in the same order
      xi[ell] = static_cast<std::uint64_t>(mask);
    }
    map[e] = out.power.index_of_xi(xi);
  }

  Homomorphism h{a.concrete, out.power.algebra, std::move(map)};
  if (!is_homomorphism(*h.dom, *h.cod, h.map) || !h.is_injective()) {
    throw std::logic_error("unit embedding failed to verify");
  }
  out.embedding = std::move(h);
  return out;
}

TransposeResult transpose(const VarietyAlgebra& a, const FiniteBooleanAlgebra& b,
                          TransposeDirection dir) {
  (void)dir;  // both directions are needed for the verification either way
  const BaseAlgebra& base = *a.base;
  TransposeResult out{{}, {}, {}, {}, skeleton(a), {}};
  out.power = boolean_power(base.alg, b);
  out.boolean_homs = enumerate_boolean_homs(out.skel.skeleton, b);
  out.algebra_homs = enumerate_homomorphisms(a.concrete, out.power.algebra);

  std::map<std::vector<int>, int> ahom_index;
  for (std::size_t i = 0; i < out.algebra_homs.size(); ++i) {
    ahom_index[out.algebra_homs[i].map] = static_cast<int>(i);
  }

  int nl = base.n();
  int m = a.num_factors();
  int ka = out.skel.skeleton.atoms;

  // forward: phi |-> (a |-> phi o T_(.)(a))
  out.forward.assign(out.boolean_homs.size(), -1);
  std::vector<int> t_tuple(m);
  for (std::size_t pi = 0; pi < out.boolean_homs.size(); ++pi) {
    const BooleanHom& phi = out.boolean_homs[pi];
    std::vector<int> map(a.size());
    std::vector<std::uint64_t> px(nl);
    for (int e = 0; e < a.size(); ++e) {
      std::fill(px.begin(), px.end(), 0);
      for (int ell = 0; ell < nl; ++ell) {
        for (int i = 0; i < m; ++i) {
          t_tuple[i] = (a.carrier[e][i] == ell) ? base.top() : base.bot();
        }
        int ci = a.index_of(t_tuple);
        int mask = ci >= 0 ? out.skel.mask_of_carrier[ci] : -1;
        if (mask < 0) throw std::logic_error("transpose: missing skeleton element");
        px[ell] = phi.apply(static_cast<std::uint64_t>(mask));
      }
      map[e] = out.power.index_of_xi(px);
    }
    auto it = ahom_index.find(map);
    if (it == ahom_index.end()) {
      throw BijectionFailure("transpose forward image is not a homomorphism");
    }
    out.forward[pi] = it->second;
  }

  // backward: h |-> restriction to the skeleton
  out.backward.assign(out.algebra_homs.size(), -1);
  std::map<std::vector<int>, int> bhom_index;
  for (std::size_t i = 0; i < out.boolean_homs.size(); ++i) {
    bhom_index[out.boolean_homs[i].atom_map] = static_cast<int>(i);
  }
  for (std::size_t hi = 0; hi < out.algebra_homs.size(); ++hi) {
    const Homomorphism& h = out.algebra_homs[hi];
    // mask-level map S(A) -> B via xi(h(incl))(top)
    std::vector<std::uint64_t> f(std::size_t(1) << ka);
    for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
      int pe = h.map[out.skel.inclusion[mask]];
      f[mask] = out.power.xi(pe)[base.top()];
    }
    std::vector<int> atom_map(b.atoms, -1);
    for (int j = 0; j < b.atoms; ++j) {
      for (int i = 0; i < ka; ++i) {
        if (f[std::uint64_t(1) << i] >> j & 1) {
          if (atom_map[j] >= 0) throw BijectionFailure("transpose restriction is not a hom");
          atom_map[j] = i;
        }
      }
      if (atom_map[j] < 0) throw BijectionFailure("transpose restriction misses an atom");
    }
    auto it = bhom_index.find(atom_map);
    if (it == bhom_index.end()) throw BijectionFailure("transpose backward not enumerated");
    out.backward[hi] = it->second;
  }

  if (out.boolean_homs.size() != out.algebra_homs.size()) {
    throw BijectionFailure("transpose hom-sets differ in size");
  }
  for (std::size_t i = 0; i < out.forward.size(); ++i) {
    if (out.backward[out.forward[i]] != static_cast<int>(i)) {
      throw BijectionFailure("transpose composites are not the identity");
    }
  }
  for (std::size_t i = 0; i < out.backward.size(); ++i) {
    if (out.forward[out.backward[i]] != static_cast<int>(i)) {
      throw BijectionFailure("transpose composites are not the identity");
    }
  }
  return out;
}

SkeletonHomBijection skeleton_hom_bijection(const VarietyAlgebra& a) {
  const BaseAlgebra& base = *a.base;
  SkeletonHomBijection out{enumerate_homomorphisms(a.concrete, base.alg), skeleton(a), {}};
  int ka = out.skel.skeleton.atoms;

  out.hom_to_atom.assign(out.homs_to_base.size(), -1);
  for (std::size_t hi = 0; hi < out.homs_to_base.size(); ++hi) {
    const Homomorphism& h = out.homs_to_base[hi];
    int chosen = -1;
    for (int i = 0; i < ka; ++i) {
      int v = h.map[out.skel.inclusion[std::uint64_t(1) << i]];
      if (v == base.top()) {
        if (chosen >= 0) throw BijectionFailure("restriction maps two atoms to 1");
        chosen = i;
      } else if (v != base.bot()) {
        throw BijectionFailure("restriction leaves the two-element algebra");
      }
    }
    if (chosen < 0) throw BijectionFailure("restriction maps no atom to 1");
    out.hom_to_atom[hi] = chosen;
  }

  if (out.homs_to_base.size() != static_cast<std::size_t>(ka)) {
    throw BijectionFailure("skeleton bijection: counts differ");
  }
  std::vector<uint8_t> seen(ka, 0);
  for (int x : out.hom_to_atom) {
    if (seen[x]) throw BijectionFailure("skeleton bijection: restriction not injective");
    seen[x] = 1;
  }

  // the inverse construction must reproduce each hom
  int m = a.num_factors();
  int nl = base.n();
  std::vector<int> t_tuple(m);
  for (std::size_t hi = 0; hi < out.homs_to_base.size(); ++hi) {
    int atom = out.hom_to_atom[hi];
    for (int e = 0; e < a.size(); ++e) {
      int found = -1;
      for (int ell = 0; ell < nl && found < 0; ++ell) {
        for (int i = 0; i < m; ++i) {
          t_tuple[i] = (a.carrier[e][i] == ell) ? base.top() : base.bot();
        }
        int ci = a.index_of(t_tuple);
        int mask = ci >= 0 ? out.skel.mask_of_carrier[ci] : -1;
        if (mask < 0) throw std::logic_error("skeleton bijection: missing T tuple");
        if (mask >> atom & 1) found = ell;
      }
      if (found != out.homs_to_base[hi].map[e]) {
        throw BijectionFailure("inverse construction disagrees with the restriction");
      }
    }
  }
  return out;
}

QuotientFunctorResult quotient_functor(const VarietyAlgebra& a, int sub_id) {
  const BasePtr& base_ptr = a.base;
  const BaseAlgebra& base = *base_ptr;
  if (sub_id < 0 || sub_id >= static_cast<int>(base.subs.size())) {
    throw InvalidInput("quotient_functor: bad subuniverse id");
  }
  const SubUniverse& s = base.subs[sub_id];
  std::vector<uint8_t> in_s(base.n(), 0);
  for (int e : s.elements) in_s[e] = 1;

  int m = a.num_factors();
  std::vector<int> top_tuple(m, base.top());
  int top_idx = a.index_of(top_tuple);
  if (top_idx < 0) throw std::logic_error("carrier misses the top tuple");

  std::vector<std::pair<int, int>> pairs;
  std::vector<int> chi(m);
  for (int e = 0; e < a.size(); ++e) {
    for (int i = 0; i < m; ++i) {
      chi[i] = in_s[a.carrier[e][i]] ? base.top() : base.bot();
    }
    int ci = a.index_of(chi);
    if (ci < 0) throw std::logic_error("chi_S tuple escapes the carrier");
    pairs.emplace_back(ci, top_idx);
  }

  Congruence theta = congruence_generated(a.concrete, pairs);
  Quotient q = quotient(a.concrete, theta);

  std::vector<int> eval_index;
  QuotientFunctorResult out{canonicalize(q.algebra, base_ptr, &eval_index), {}};

  // the result lives in the subvariety of S
  for (int f : out.algebra.factors) {
    if (!base.sub_leq(f, sub_id)) throw std::logic_error("quotient escaped the subvariety");
  }
  for (const auto& tuple : out.algebra.carrier) {
    for (int x : tuple) {
      if (!in_s[x]) throw std::logic_error("quotient carrier escaped S");
    }
  }

  std::vector<int> map(a.size());
  for (int e = 0; e < a.size(); ++e) map[e] = eval_index[q.surjection.map[e]];
  out.surjection = {a.concrete, out.algebra.concrete, std::move(map)};
  return out;
}

VarietyAlgebra inclusion_functor(const BasePtr& base, const FiniteBooleanAlgebra& b, int sub_id,
                                 std::size_t cap) {
  if (sub_id < 0 || sub_id >= static_cast<int>(base->subs.size())) {
    throw InvalidInput("inclusion_functor: bad subuniverse id");
  }
  AlgebraPtr s_alg = sub_algebra(base->subs[sub_id]);
  BooleanPower pw = boolean_power(s_alg, b, cap);
  return canonicalize(pw.algebra, base);
}

}  // namespace semiprimal
