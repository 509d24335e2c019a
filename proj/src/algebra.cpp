#include "semiprimal/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace semiprimal {

namespace {

std::size_t checked_pow(std::size_t base, int exp, std::size_t limit) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

int Signature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

void Signature::check() const {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].arity < 0) throw InvalidInput("ops[" + std::to_string(i) + "].arity: negative");
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (ops[i].name == ops[j].name) {
        throw InvalidInput("ops: duplicate name '" + ops[i].name + "'");
      }
    }
  }
}

FiniteAlgebra::FiniteAlgebra(int size, Signature sig, std::vector<std::vector<int>> tables,
                             std::string name, std::vector<std::string> element_names)
    : size_(size),
      sig_(std::move(sig)),
      tables_(std::move(tables)),
      name_(std::move(name)),
      element_names_(std::move(element_names)) {
  if (size_ < 1) throw InvalidInput("size: must be >= 1");
  sig_.check();
  if (tables_.size() != sig_.ops.size()) {
    throw InvalidInput("ops: expected " + std::to_string(sig_.ops.size()) + " tables, got " +
                       std::to_string(tables_.size()));
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    std::size_t want = checked_pow(static_cast<std::size_t>(size_), sig_.ops[i].arity,
                                   std::size_t(1) << 62);
    if (tables_[i].size() != want) {
      throw InvalidInput("ops[" + std::to_string(i) + "].table: wrong length");
    }
    for (int v : tables_[i]) {
      if (v < 0 || v >= size_) {
        throw InvalidInput("ops[" + std::to_string(i) + "].table: entry " + std::to_string(v) +
                           " out of range");
      }
    }
  }
  if (!element_names_.empty() && element_names_.size() != static_cast<std::size_t>(size_)) {
    throw InvalidInput("element_names: wrong length");
  }
}

std::string FiniteAlgebra::element_name(int e) const {
  if (!element_names_.empty()) return element_names_[e];
  return std::to_string(e);
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const {
  std::size_t idx = 0;
  for (int a : args) idx = idx * size_ + a;
  return tables_[op][idx];
}

AlgebraPtr make_algebra(int size, Signature sig, std::vector<std::vector<int>> tables,
                        std::string name, std::vector<std::string> element_names) {
  return std::make_shared<const FiniteAlgebra>(size, std::move(sig), std::move(tables),
                                               std::move(name), std::move(element_names));
}

AlgebraPtr trivial_algebra(const Signature& sig) {
  std::vector<std::vector<int>> tables(sig.ops.size(), std::vector<int>{0});
  return make_algebra(1, sig, std::move(tables), "trivial");
}

bool SubUniverse::contains(int e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

bool Homomorphism::is_injective() const {
  std::vector<uint8_t> seen(cod->size(), 0);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<uint8_t> seen(cod->size(), 0);
  int hit = 0;
  for (int v : map) {
    if (!seen[v]) {
      seen[v] = 1;
      ++hit;
    }
  }
  return hit == cod->size();
}

std::vector<int> Homomorphism::image() const {
  std::vector<int> img(map.begin(), map.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

std::vector<int> nullary_values(const FiniteAlgebra& a) {
  std::vector<int> vals;
  for (int op = 0; op < a.num_ops(); ++op) {
    if (a.arity(op) == 0) vals.push_back(a.apply0(op));
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

namespace {

// Worklist closure of members[closed_prefix..].  Tuples are enumerated so
// that each tuple over the closure is applied exactly once: when processing
// the element at position p, it takes the role of the last occurrence in the
// tuple, earlier coordinates range over positions 0..p and later ones over
// 0..p-1.
void close_in_place(const FiniteAlgebra& a, std::vector<int>& members,
                    std::vector<uint8_t>& in_set, std::size_t closed_prefix,
                    std::vector<DerivationStep>* steps, std::size_t cap) {
  auto add = [&](int v, int op, std::vector<int>&& args) {
    if (in_set[v]) return;
    in_set[v] = 1;
    members.push_back(v);
    if (members.size() > cap) throw SizeCapExceeded("closure exceeds cap");
    if (steps) steps->push_back({op, std::move(args), v});
  };

  std::vector<int> args;
  for (std::size_t p = closed_prefix; p < members.size(); ++p) {
    int x = members[p];
    for (int op = 0; op < a.num_ops(); ++op) {
      int k = a.arity(op);
      if (k == 0) continue;
      if (k == 1) {
        add(a.apply1(op, x), op, {x});
        continue;
      }
      for (int j = 0; j < k; ++j) {
        // odometer over the other k-1 coordinates
        std::vector<std::size_t> pos(k, 0);
        std::vector<std::size_t> lim(k);
        for (int t = 0; t < k; ++t) lim[t] = (t < j) ? p + 1 : p;  // before j: 0..p, after: 0..p-1
        lim[j] = 1;
        bool done = false;
        while (!done) {
          args.assign(k, 0);
          for (int t = 0; t < k; ++t) args[t] = (t == j) ? x : members[pos[t]];
          add(a.apply(op, args), op, std::vector<int>(args));
          int t = k - 1;
          while (t >= 0) {
            if (t == j) {
              --t;
              continue;
            }
            if (++pos[t] < lim[t]) break;
            pos[t] = 0;
            --t;
          }
          if (t < 0) done = true;
        }
        if (p == 0 && j > 0) break;  // no earlier elements: only j = 0 yields tuples
      }
    }
  }
}

void seed_constants(const FiniteAlgebra& a, std::vector<int>& members,
                    std::vector<uint8_t>& in_set, std::vector<DerivationStep>* steps) {
  for (int op = 0; op < a.num_ops(); ++op) {
    if (a.arity(op) != 0) continue;
    int v = a.apply0(op);
    if (!in_set[v]) {
      in_set[v] = 1;
      members.push_back(v);
      if (steps) steps->push_back({op, {}, v});
    }
  }
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

SubUniverse subuniverse_closure(const AlgebraPtr& a, std::span<const int> seed, std::size_t cap) {
  std::vector<int> members;
  std::vector<uint8_t> in_set(a->size(), 0);
  seed_constants(*a, members, in_set, nullptr);
  for (int s : seed) {
    if (s < 0 || s >= a->size()) throw InvalidInput("seed element out of range");
    if (!in_set[s]) {
      in_set[s] = 1;
      members.push_back(s);
    }
  }
  close_in_place(*a, members, in_set, 0, nullptr, cap);
  return {a, sorted_copy(members)};
}

std::vector<SubUniverse> enumerate_subuniverses(const AlgebraPtr& a) {
  int n = a->size();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;

  std::vector<int> members;
  std::vector<uint8_t> in_set(n, 0);
  seed_constants(*a, members, in_set, nullptr);
  close_in_place(*a, members, in_set, 0, nullptr, kDefaultSizeCap);
  std::vector<int> base = sorted_copy(members);
  seen.insert(base);
  queue.push_back(base);

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> u = queue[qi];
    std::vector<uint8_t> u_set(n, 0);
    for (int e : u) u_set[e] = 1;
    for (int x = 0; x < n; ++x) {
      if (u_set[x]) continue;
      std::vector<int> m = u;
      std::vector<uint8_t> s = u_set;
      m.push_back(x);
      s[x] = 1;
      close_in_place(*a, m, s, u.size(), nullptr, kDefaultSizeCap);
      std::vector<int> v = sorted_copy(m);
      if (seen.insert(v).second) queue.push_back(v);
    }
  }

  std::vector<SubUniverse> out;
  out.reserve(seen.size());
  for (const auto& e : seen) out.push_back({a, e});
  std::sort(out.begin(), out.end(), [](const SubUniverse& l, const SubUniverse& r) {
    if (l.elements.size() != r.elements.size()) return l.elements.size() < r.elements.size();
    return l.elements < r.elements;
  });
  return out;
}

GeneratingPlan generating_plan(const FiniteAlgebra& a) {
  int n = a.size();
  GeneratingPlan plan;
  std::vector<int> members;
  std::vector<uint8_t> in_set(n, 0);
  seed_constants(a, members, in_set, &plan.steps);
  close_in_place(a, members, in_set, 0, &plan.steps, kDefaultSizeCap);

  while (static_cast<int>(members.size()) < n) {
    int best = -1;
    std::size_t best_size = 0;
    for (int x = 0; x < n; ++x) {
      if (in_set[x]) continue;
      std::vector<int> m = members;
      std::vector<uint8_t> s = in_set;
      m.push_back(x);
      s[x] = 1;
      close_in_place(a, m, s, members.size(), nullptr, kDefaultSizeCap);
      if (m.size() > best_size) {
        best_size = m.size();
        best = x;
      }
      if (m.size() == static_cast<std::size_t>(n)) break;
    }
    plan.generators.push_back(best);
    plan.steps.push_back({-1, {}, best});
    std::size_t prefix = members.size();
    members.push_back(best);
    in_set[best] = 1;
    close_in_place(a, members, in_set, prefix, &plan.steps, kDefaultSizeCap);
  }
  return plan;
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const int> map) {
  int n = a.size();
  for (int op = 0; op < a.num_ops(); ++op) {
    int k = a.arity(op);
    if (k == 0) {
      if (map[a.apply0(op)] != b.apply0(op)) return false;
    } else if (k == 1) {
      for (int x = 0; x < n; ++x) {
        if (map[a.apply1(op, x)] != b.apply1(op, map[x])) return false;
      }
    } else if (k == 2) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (map[a.apply2(op, x, y)] != b.apply2(op, map[x], map[y])) return false;
        }
      }
    } else {
      std::vector<int> args(k, 0), margs(k, 0);
      while (true) {
        for (int t = 0; t < k; ++t) margs[t] = map[args[t]];
        if (map[a.apply(op, args)] != b.apply(op, margs)) return false;
        int t = k - 1;
        while (t >= 0 && ++args[t] == n) args[t--] = 0;
        if (t < 0) break;
      }
    }
  }
  return true;
}

namespace {

// Shared search core: replays a generating plan for every assignment of
// generator images and keeps the maps that verify as homomorphisms.
// `injective_only` prunes non-injective assignments (for isomorphism search),
// `first_only` stops at the first hit.
std::vector<std::vector<int>> search_homs(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                          bool injective_only, bool first_only) {
  GeneratingPlan plan = generating_plan(a);
  int ng = static_cast<int>(plan.generators.size());
  int nb = b.size();
  std::vector<std::vector<int>> found;
  std::vector<int> genvals(ng, 0);
  std::vector<int> img(a.size(), -1);
  std::vector<int> args;

  auto replay = [&]() -> bool {
    std::fill(img.begin(), img.end(), -1);
    std::vector<int> inv;
    if (injective_only) inv.assign(nb, -1);
    int gi = 0;
    for (const DerivationStep& st : plan.steps) {
      int v;
      if (st.op < 0) {
        v = genvals[gi++];
      } else {
        args.clear();
        for (int e : st.args) args.push_back(img[e]);
        v = b.apply(st.op, args);
      }
      if (injective_only) {
        if (inv[v] >= 0) return false;
        inv[v] = st.result;
      }
      img[st.result] = v;
    }
    return is_homomorphism(a, b, img);
  };

  std::vector<int> stack(ng, 0);
  bool done = false;
  while (!done) {
    for (int t = 0; t < ng; ++t) genvals[t] = stack[t];
    if (replay()) {
      found.push_back(img);
      if (first_only) return found;
    }
    if (ng == 0) break;
    int t = ng - 1;
    while (t >= 0 && ++stack[t] == nb) stack[t--] = 0;
    if (t < 0) done = true;
  }
  return found;
}

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->signature() != b->signature()) throw SignatureMismatch("enumerate_homomorphisms");
  std::vector<std::vector<int>> maps = search_homs(*a, *b, false, false);
  std::sort(maps.begin(), maps.end());
  std::vector<Homomorphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back({a, b, std::move(m)});
  return out;
}

std::optional<Homomorphism> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->signature() != b->signature()) throw SignatureMismatch("find_isomorphism");
  if (a->size() != b->size()) return std::nullopt;
  std::vector<std::vector<int>> maps = search_homs(*a, *b, true, true);
  if (maps.empty()) return std::nullopt;
  return Homomorphism{a, b, std::move(maps.front())};
}

AlgebraPtr sub_algebra(const SubUniverse& s) {
  const FiniteAlgebra& a = *s.parent;
  int m = s.size();
  std::vector<int> local(a.size(), -1);
  for (int i = 0; i < m; ++i) local[s.elements[i]] = i;

  std::vector<std::vector<int>> tables;
  for (int op = 0; op < a.num_ops(); ++op) {
    int k = a.arity(op);
    std::size_t len = 1;
    for (int t = 0; t < k; ++t) len *= m;
    std::vector<int> tab(len);
    std::vector<int> args(k, 0), pargs(k, 0);
    std::size_t idx = 0;
    while (true) {
      for (int t = 0; t < k; ++t) pargs[t] = s.elements[args[t]];
      int v = a.apply(op, pargs);
      if (local[v] < 0) throw InvalidInput("sub_algebra: element set is not closed");
      tab[idx] = local[v];
      ++idx;
      int t = k - 1;
      while (t >= 0 && ++args[t] == m) args[t--] = 0;
      if (t < 0) break;
    }
    tables.push_back(std::move(tab));
  }

  std::vector<std::string> names;
  if (!a.element_names().empty()) {
    for (int e : s.elements) names.push_back(a.element_names()[e]);
  }
  return make_algebra(m, a.signature(), std::move(tables), a.name() + "|sub", std::move(names));
}

bool InternalIso::is_identity() const {
  if (dom.elements != cod.elements) return false;
  for (std::size_t i = 0; i < dom.elements.size(); ++i) {
    if (map[i] != dom.elements[i]) return false;
  }
  return true;
}

std::vector<InternalIso> internal_isomorphisms(const AlgebraPtr& a) {
  std::vector<SubUniverse> subs = enumerate_subuniverses(a);
  std::vector<InternalIso> out;
  for (const SubUniverse& s1 : subs) {
    if (s1.elements.empty()) continue;  // no algebra on the empty set
    AlgebraPtr a1 = sub_algebra(s1);
    for (const SubUniverse& s2 : subs) {
      if (s2.size() != s1.size()) continue;
      AlgebraPtr a2 = sub_algebra(s2);
      for (const Homomorphism& h : enumerate_homomorphisms(a1, a2)) {
        if (!h.is_injective()) continue;
        std::vector<int> map(s1.size());
        for (int i = 0; i < s1.size(); ++i) map[i] = s2.elements[h.map[i]];
        out.push_back({s1, s2, std::move(map)});
      }
    }
  }
  return out;
}

Product direct_product(std::vector<AlgebraPtr> factors, const Signature& sig_if_empty,
                       std::size_t cap) {
  const Signature& sig = factors.empty() ? sig_if_empty : factors.front()->signature();
  for (const auto& f : factors) {
    if (f->signature() != sig) throw SignatureMismatch("direct_product");
  }

  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= static_cast<std::size_t>(f->size());
    if (total > cap) throw SizeCapExceeded("product exceeds cap");
  }
  int n = static_cast<int>(total);
  int m = static_cast<int>(factors.size());

  // digits[e*m + i]: coordinate of element e in factor i (leftmost most significant)
  std::vector<int> digits(static_cast<std::size_t>(n) * std::max(m, 1));
  for (int e = 0; e < n; ++e) {
    int rest = e;
    for (int i = m - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(e) * m + i] = rest % factors[i]->size();
      rest /= factors[i]->size();
    }
  }

  std::vector<std::vector<int>> tables;
  for (std::size_t op = 0; op < sig.ops.size(); ++op) {
    int k = sig.ops[op].arity;
    std::size_t len = checked_pow(total, k, std::size_t(1) << 62);
    std::vector<int> tab(len);
    std::vector<int> args(k, 0);
    std::size_t idx = 0;
    std::vector<int> fargs(std::max(k, 1));
    while (true) {
      int enc = 0;
      for (int i = 0; i < m; ++i) {
        for (int t = 0; t < k; ++t) {
          fargs[t] = digits[static_cast<std::size_t>(args[t]) * m + i];
        }
        int v = factors[i]->apply(static_cast<int>(op), std::span<const int>(fargs.data(), k));
        enc = enc * factors[i]->size() + v;
      }
      tab[idx] = enc;
      ++idx;
      if (idx == len) break;
      int t = k - 1;
      while (t >= 0 && ++args[t] == n) args[t--] = 0;
      if (t < 0) break;
    }
    tables.push_back(std::move(tab));
  }

  std::string pname;
  for (const auto& f : factors) {
    if (!pname.empty()) pname += "x";
    pname += f->name().empty() ? "?" : f->name();
  }
  Product p;
  p.algebra = make_algebra(n, sig, std::move(tables), pname.empty() ? "1" : pname);
  p.factors = std::move(factors);
  return p;
}

Product direct_product(std::vector<AlgebraPtr> factors, std::size_t cap) {
  if (factors.empty()) throw InvalidInput("direct_product: empty list needs a signature");
  const Signature sig = factors.front()->signature();
  return direct_product(std::move(factors), sig, cap);
}

std::vector<int> Product::decode(int e) const {
  std::vector<int> d(factors.size());
  int rest = e;
  for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
    d[i] = rest % factors[i]->size();
    rest /= factors[i]->size();
  }
  return d;
}

int Product::encode(std::span<const int> digits) const {
  int e = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) e = e * factors[i]->size() + digits[i];
  return e;
}

Homomorphism Product::projection(int i) const {
  std::vector<int> map(algebra->size());
  for (int e = 0; e < algebra->size(); ++e) map[e] = decode(e)[i];
  return {algebra, factors[i], std::move(map)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns the pair of roots that were distinct, or nullopt
  std::optional<std::pair<int, int>> merge(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return std::nullopt;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;
    return std::make_pair(rx, ry);
  }
};

}  // namespace

Congruence congruence_generated(const AlgebraPtr& a, std::span<const std::pair<int, int>> pairs) {
  int n = a->size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> queue;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) throw InvalidInput("congruence pair out of range");
    if (auto m = uf.merge(x, y)) queue.push_back(*m);
  }

  std::vector<int> args;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto [x, y] = queue[qi];
    for (int op = 0; op < a->num_ops(); ++op) {
      int k = a->arity(op);
      if (k == 0) continue;
      args.assign(k, 0);
      for (int j = 0; j < k; ++j) {
        // odometer over the other coordinates
        std::vector<int> other(k, 0);
        while (true) {
          int u, v;
          args = other;
          args[j] = x;
          u = a->apply(op, args);
          args[j] = y;
          v = a->apply(op, args);
          if (auto m = uf.merge(u, v)) queue.push_back(*m);
          int t = k - 1;
          while (t >= 0) {
            if (t == j) {
              --t;
              continue;
            }
            if (++other[t] < n) break;
            other[t] = 0;
            --t;
          }
          if (t < 0) break;
        }
      }
    }
  }

  Congruence c;
  c.parent = a;
  c.block_of.assign(n, -1);
  int next = 0;
  std::vector<int> root_block(n, -1);
  for (int e = 0; e < n; ++e) {
    int r = uf.find(e);
    if (root_block[r] < 0) root_block[r] = next++;
    c.block_of[e] = root_block[r];
  }
  c.num_blocks = next;
  return c;
}

bool congruence_compatible(const FiniteAlgebra& a, std::span<const int> block_of) {
  int n = a.size();
  // single-coordinate substitution suffices for operation tables
  std::vector<int> args;
  for (int op = 0; op < a.num_ops(); ++op) {
    int k = a.arity(op);
    if (k == 0) continue;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (block_of[x] != block_of[y]) continue;
        for (int j = 0; j < k; ++j) {
          std::vector<int> other(k, 0);
          while (true) {
            args = other;
            args[j] = x;
            int u = a.apply(op, args);
            args[j] = y;
            int v = a.apply(op, args);
            if (block_of[u] != block_of[v]) return false;
            int t = k - 1;
            while (t >= 0) {
              if (t == j) {
                --t;
                continue;
              }
              if (++other[t] < n) break;
              other[t] = 0;
              --t;
            }
            if (t < 0) break;
          }
        }
      }
    }
  }
  return true;
}

Quotient quotient(const AlgebraPtr& a, const Congruence& theta) {
  if (theta.parent.get() != a.get()) throw InvalidInput("quotient: congruence of a different algebra");
  if (!congruence_compatible(*a, theta.block_of)) {
    throw InvalidInput("quotient: partition is not compatible");
  }
  int nb = theta.num_blocks;
  std::vector<int> rep(nb, -1);
  for (int e = 0; e < a->size(); ++e) {
    if (rep[theta.block_of[e]] < 0) rep[theta.block_of[e]] = e;
  }

  std::vector<std::vector<int>> tables;
  for (int op = 0; op < a->num_ops(); ++op) {
    int k = a->arity(op);
    std::size_t len = checked_pow(static_cast<std::size_t>(nb), k, std::size_t(1) << 62);
    std::vector<int> tab(len);
    std::vector<int> args(k, 0), pargs(k, 0);
    std::size_t idx = 0;
    while (true) {
      for (int t = 0; t < k; ++t) pargs[t] = rep[args[t]];
      tab[idx] = theta.block_of[a->apply(op, pargs)];
      ++idx;
      if (idx == len) break;
      int t = k - 1;
      while (t >= 0 && ++args[t] == nb) args[t--] = 0;
      if (t < 0) break;
    }
    tables.push_back(std::move(tab));
  }

  Quotient q;
  q.algebra = make_algebra(nb, a->signature(), std::move(tables), a->name() + "/theta");
  q.surjection = {a, q.algebra, theta.block_of};
  return q;
}

}  // namespace semiprimal
