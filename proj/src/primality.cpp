#include "semiprimal/primality.hpp"

#include <algorithm>
#include <map>

namespace semiprimal {

std::string to_string(PrimalityLevel level) {
  switch (level) {
    case PrimalityLevel::primal: return "primal";
    case PrimalityLevel::semi_primal: return "semi-primal";
    case PrimalityLevel::quasi_primal_only: return "quasi-primal-only";
    case PrimalityLevel::none: return "none";
  }
  return "?";
}

SemiRoute route_from_string(const std::string& s) {
  if (s == "T" || s == "t") return SemiRoute::T;
  if (s == "square") return SemiRoute::Square;
  if (s == "discriminator") return SemiRoute::Discriminator;
  if (s == "all") return SemiRoute::All;
  throw InvalidInput("--route: expected one of T, square, discriminator, all");
}

std::string to_string(SemiRoute r) {
  switch (r) {
    case SemiRoute::T: return "T";
    case SemiRoute::Square: return "square";
    case SemiRoute::Discriminator: return "discriminator";
    case SemiRoute::All: return "all";
  }
  return "?";
}

std::optional<std::vector<int>> preserves_subuniverses(const AlgebraPtr& a,
                                                       const std::vector<int>& f_table,
                                                       int arity) {
  int n = a->size();
  std::size_t want = 1;
  for (int i = 0; i < arity; ++i) want *= n;
  if (f_table.size() != want) throw InvalidInput("preserves_subuniverses: table length");

  // closures depend only on the argument set
  std::map<std::vector<int>, std::vector<uint8_t>> memo;
  std::vector<int> args(arity, 0);
  std::size_t idx = 0;
  while (true) {
    std::vector<int> key(args.begin(), args.end());
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = memo.find(key);
    if (it == memo.end()) {
      SubUniverse s = subuniverse_closure(a, key);
      std::vector<uint8_t> mask(n, 0);
      for (int e : s.elements) mask[e] = 1;
      it = memo.emplace(std::move(key), std::move(mask)).first;
    }
    if (!it->second[f_table[idx]]) return args;
    ++idx;
    int t = arity - 1;
    while (t >= 0 && ++args[t] == n) args[t--] = 0;
    if (t < 0) break;
  }
  return std::nullopt;
}

SquareSubs square_subuniverses(const AlgebraPtr& a) {
  SquareSubs ctx{direct_product({a, a}), {}, {}};
  ctx.subs = enumerate_subuniverses(ctx.square.algebra);
  int n = a->size();
  for (const SubUniverse& u : ctx.subs) {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(u.elements.size());
    for (int code : u.elements) ps.emplace_back(code / n, code % n);
    ctx.pairs.push_back(std::move(ps));
  }
  return ctx;
}

std::vector<int> literal_discriminator_table(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        t[(static_cast<std::size_t>(x) * n + y) * n + z] = (x == y) ? z : x;
      }
    }
  }
  return t;
}

namespace {

// Does the k-ary function given by `f` preserve the subuniverse (as pairs)?
// Returns the first violating tuple of pairs.
std::optional<std::vector<std::pair<int, int>>> preserves_pairs(
    const std::vector<int>& f, int k, int n, const std::vector<std::pair<int, int>>& u,
    const std::vector<uint8_t>& member) {
  std::size_t m = u.size();
  if (m == 0) return std::nullopt;  // nothing to violate on the empty subuniverse
  std::vector<std::size_t> pos(k, 0);
  while (true) {
    std::size_t ia = 0, ib = 0;
    for (int t = 0; t < k; ++t) {
      ia = ia * n + u[pos[t]].first;
      ib = ib * n + u[pos[t]].second;
    }
    int va = f[ia], vb = f[ib];
    if (!member[static_cast<std::size_t>(va) * n + vb]) {
      std::vector<std::pair<int, int>> tuple(k);
      for (int t = 0; t < k; ++t) tuple[t] = u[pos[t]];
      return tuple;
    }
    int t = k - 1;
    while (t >= 0 && ++pos[t] == m) pos[t--] = 0;
    if (t < 0) break;
  }
  return std::nullopt;
}

std::vector<uint8_t> member_mask(const std::vector<std::pair<int, int>>& u, int n) {
  std::vector<uint8_t> mask(static_cast<std::size_t>(n) * n, 0);
  for (auto [a, b] : u) mask[static_cast<std::size_t>(a) * n + b] = 1;
  return mask;
}

struct RouteOutcome {
  bool semi = true;
  Witness witness;
};

RouteOutcome run_t_route(const AlgebraPtr& a, const LatticeReduct& r, const SquareSubs& ctx) {
  int n = a->size();
  for (int ell = 0; ell < n; ++ell) {
    std::vector<int> t = derived_unary(r, UnaryKind::T, ell).table;
    for (std::size_t ui = 0; ui < ctx.pairs.size(); ++ui) {
      std::vector<uint8_t> mask = member_mask(ctx.pairs[ui], n);
      if (auto bad = preserves_pairs(t, 1, n, ctx.pairs[ui], mask)) {
        RouteOutcome out;
        out.semi = false;
        out.witness.kind = Witness::Kind::t_function;
        out.witness.t_element = ell;
        out.witness.square_sub = ctx.pairs[ui];
        out.witness.violating_tuple = *bad;
        return out;
      }
    }
  }
  return {};
}

RouteOutcome run_square_route(const AlgebraPtr& a, const SquareSubs& ctx) {
  (void)a;
  for (std::size_t ui = 0; ui < ctx.pairs.size(); ++ui) {
    const auto& u = ctx.pairs[ui];
    if (u.empty()) continue;
    bool diagonal = true;
    for (auto [x, y] : u) {
      if (x != y) {
        diagonal = false;
        break;
      }
    }
    if (diagonal) continue;
    std::vector<int> s1, s2;
    for (auto [x, y] : u) {
      s1.push_back(x);
      s2.push_back(y);
    }
    std::sort(s1.begin(), s1.end());
    s1.erase(std::unique(s1.begin(), s1.end()), s1.end());
    std::sort(s2.begin(), s2.end());
    s2.erase(std::unique(s2.begin(), s2.end()), s2.end());
    if (u.size() != s1.size() * s2.size()) {
      RouteOutcome out;
      out.semi = false;
      out.witness.kind = Witness::Kind::square;
      out.witness.square_sub = u;
      return out;
    }
  }
  return {};
}

RouteOutcome run_discriminator_route(const AlgebraPtr& a, const LatticeReduct& r,
                                     const SquareSubs& ctx) {
  QuasiPrimalResult q = is_quasi_primal(a, r, &ctx);
  if (!q.quasi_primal) return {false, q.witness};
  for (const InternalIso& iso : internal_isomorphisms(a)) {
    if (!iso.is_identity()) {
      RouteOutcome out;
      out.semi = false;
      out.witness.kind = Witness::Kind::internal_iso;
      out.witness.iso = iso;
      return out;
    }
  }
  return {};
}

}  // namespace

QuasiPrimalResult is_quasi_primal(const AlgebraPtr& a, const LatticeReduct& r,
                                  const SquareSubs* ctx) {
  (void)r;  // the lattice reduct supplies the majority term required by the criterion
  SquareSubs local;
  if (!ctx) {
    local = square_subuniverses(a);
    ctx = &local;
  }
  int n = a->size();
  std::vector<int> t = literal_discriminator_table(n);
  for (std::size_t ui = 0; ui < ctx->pairs.size(); ++ui) {
    std::vector<uint8_t> mask = member_mask(ctx->pairs[ui], n);
    if (auto bad = preserves_pairs(t, 3, n, ctx->pairs[ui], mask)) {
      QuasiPrimalResult out;
      out.quasi_primal = false;
      out.witness.kind = Witness::Kind::discriminator;
      out.witness.square_sub = ctx->pairs[ui];
      out.witness.violating_tuple = *bad;
      return out;
    }
  }
  return {true, {}};
}

PrimalityVerdict is_semi_primal(const AlgebraPtr& a, const LatticeReduct& r, SemiRoute route) {
  SquareSubs ctx = square_subuniverses(a);

  std::optional<RouteOutcome> t_out, sq_out, disc_out;
  if (route == SemiRoute::T || route == SemiRoute::All) t_out = run_t_route(a, r, ctx);
  if (route == SemiRoute::Square || route == SemiRoute::All) sq_out = run_square_route(a, ctx);
  if (route == SemiRoute::Discriminator || route == SemiRoute::All) {
    disc_out = run_discriminator_route(a, r, ctx);
  }

  if (route == SemiRoute::All) {
    if (t_out->semi != sq_out->semi || sq_out->semi != disc_out->semi) {
      throw RouteDisagreement("semi-primality routes disagree: T=" +
                              std::to_string(t_out->semi) + " square=" +
                              std::to_string(sq_out->semi) + " discriminator=" +
                              std::to_string(disc_out->semi));
    }
  }

  auto pick = [&]() -> const RouteOutcome& {
    if (route == SemiRoute::T) return *t_out;
    if (route == SemiRoute::Square) return *sq_out;
    if (route == SemiRoute::Discriminator) return *disc_out;
    // all three agree; prefer the most telling witness on failure
    if (!disc_out->semi && disc_out->witness.kind == Witness::Kind::internal_iso) return *disc_out;
    if (!sq_out->semi) return *sq_out;
    if (!disc_out->semi) return *disc_out;
    return *t_out;
  };
  const RouteOutcome& picked = pick();

  PrimalityVerdict v;
  v.route = to_string(route);
  if (picked.semi) {
    v.level = PrimalityLevel::semi_primal;
  } else {
    v.witness = picked.witness;
    bool quasi = disc_out ? (disc_out->witness.kind != Witness::Kind::discriminator)
                          : is_quasi_primal(a, r, &ctx).quasi_primal;
    v.level = quasi ? PrimalityLevel::quasi_primal_only : PrimalityLevel::none;
  }
  return v;
}

PrimalityVerdict is_primal(const AlgebraPtr& a, const LatticeReduct& r, SemiRoute route) {
  PrimalityVerdict v = is_semi_primal(a, r, route);
  if (v.level == PrimalityLevel::semi_primal) {
    if (enumerate_subuniverses(a).size() == 1) v.level = PrimalityLevel::primal;
  }
  return v;
}

std::vector<int> idempotent_elements(const AlgebraPtr& a, int prod_op) {
  if (prod_op < 0 || prod_op >= a->num_ops() || a->arity(prod_op) != 2) {
    throw InvalidInput("idempotent_elements: not a binary operation");
  }
  std::vector<int> out;
  for (int x = 0; x < a->size(); ++x) {
    if (a->apply2(prod_op, x, x) == x) out.push_back(x);
  }
  return out;
}

std::vector<int> validate_flew(const AlgebraPtr& a, const LatticeReduct& r, int prod_op) {
  int n = a->size();
  if (prod_op < 0 || prod_op >= a->num_ops() || a->arity(prod_op) != 2) {
    throw NotFLew("product operation missing");
  }
  for (int x = 0; x < n; ++x) {
    if (a->apply2(prod_op, x, r.top) != x || a->apply2(prod_op, r.top, x) != x) {
      throw NotFLew("monoid unit is not the top element");
    }
    for (int y = 0; y < n; ++y) {
      if (a->apply2(prod_op, x, y) != a->apply2(prod_op, y, x)) {
        throw NotFLew("product is not commutative");
      }
      for (int z = 0; z < n; ++z) {
        if (a->apply2(prod_op, a->apply2(prod_op, x, y), z) !=
            a->apply2(prod_op, x, a->apply2(prod_op, y, z))) {
          throw NotFLew("product is not associative");
        }
      }
    }
  }
  try {
    return residuum_from_monoid(r, prod_op);
  } catch (const NotResiduated& e) {
    throw NotFLew(std::string("residuation fails: ") + e.what());
  }
}

std::optional<int> flew_quasiprimal_witness(const AlgebraPtr& a, const LatticeReduct& r,
                                            int prod_op, int max_n) {
  std::vector<int> res = validate_flew(a, r, prod_op);
  int n = a->size();
  auto neg = [&](int x) { return res[static_cast<std::size_t>(x) * n + r.bot]; };

  std::vector<int> power(n);
  for (int x = 0; x < n; ++x) power[x] = x;  // x^1
  for (int exp = 1; exp <= max_n; ++exp) {
    bool all = true;
    for (int x = 0; x < n; ++x) {
      if (r.join(x, neg(power[x])) != r.top) {
        all = false;
        break;
      }
    }
    if (all) return exp;
    for (int x = 0; x < n; ++x) power[x] = a->apply2(prod_op, power[x], x);
  }
  return std::nullopt;
}

std::vector<int> build_discriminator_from_T(const AlgebraPtr& a, const LatticeReduct& r) {
  int n = a->size();
  std::vector<std::vector<int>> t_tables(n);
  for (int ell = 0; ell < n; ++ell) t_tables[ell] = derived_unary(r, UnaryKind::T, ell).table;
  const std::vector<int>& t0 = t_tables[r.bot];

  std::vector<int> out(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int c = r.bot;
      for (int ell = 0; ell < n; ++ell) {
        c = r.join(c, r.meet(t_tables[ell][x], t_tables[ell][y]));
      }
      int d = t0[c];
      for (int z = 0; z < n; ++z) {
        out[(static_cast<std::size_t>(x) * n + y) * n + z] = r.join(r.meet(d, x), r.meet(c, z));
      }
    }
  }
  return out;
}

}  // namespace semiprimal
