#include "semiprimal/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace semiprimal::catalog {

namespace {

std::string frac_name(int i, int n) {
  if (i == 0) return "0";
  if (i == n) return "1";
  int g = std::gcd(i, n);
  return std::to_string(i / g) + "/" + std::to_string(n / g);
}

std::vector<std::string> chain_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(frac_name(i, n));
  return names;
}

std::vector<int> chain_meet(int n) {
  std::vector<int> t((n + 1) * (n + 1));
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= n; ++y) t[x * (n + 1) + y] = std::min(x, y);
  }
  return t;
}

std::vector<int> chain_join(int n) {
  std::vector<int> t((n + 1) * (n + 1));
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= n; ++y) t[x * (n + 1) + y] = std::max(x, y);
  }
  return t;
}

// meet/join tables computed as greatest lower / least upper bounds; the order
// must actually be a lattice with extremes
std::pair<std::vector<int>, std::vector<int>> lattice_tables_from_leq(
    const std::vector<uint8_t>& leq, int n) {
  auto le = [&](int x, int y) { return leq[static_cast<std::size_t>(x) * n + y] != 0; };
  std::vector<int> meet(static_cast<std::size_t>(n) * n, -1), join(meet);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int glb = -1, lub = -1;
      for (int z = 0; z < n; ++z) {
        if (le(z, x) && le(z, y)) {
          if (glb < 0 || le(glb, z)) glb = z;
        }
        if (le(x, z) && le(y, z)) {
          if (lub < 0 || le(z, lub)) lub = z;
        }
      }
      // confirm the candidates really bound every other candidate
      for (int z = 0; z < n; ++z) {
        if (le(z, x) && le(z, y) && !le(z, glb)) glb = -2;
        if (le(x, z) && le(y, z) && !le(lub, z)) lub = -2;
      }
      if (glb < 0 || lub < 0) throw InvalidInput("order is not a lattice");
      meet[static_cast<std::size_t>(x) * n + y] = glb;
      join[static_cast<std::size_t>(x) * n + y] = lub;
    }
  }
  return {meet, join};
}

std::vector<uint8_t> leq_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  std::vector<uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) leq[static_cast<std::size_t>(x) * n + x] = 1;
  for (auto [lo, hi] : covers) leq[static_cast<std::size_t>(lo) * n + hi] = 1;
  for (int k = 0; k < n; ++k) {  // transitive closure
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (leq[static_cast<std::size_t>(x) * n + k] && leq[static_cast<std::size_t>(k) * n + y]) {
          leq[static_cast<std::size_t>(x) * n + y] = 1;
        }
      }
    }
  }
  return leq;
}

int count_divisors(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) ++c;
  }
  return c;
}

Entry make_chain_entry(const std::string& key, int n, Signature sig,
                       std::vector<std::vector<int>> tables, Expected expected,
                       std::optional<std::string> prod = {}) {
  Entry e;
  e.key = key;
  e.param = n;
  e.algebra = make_algebra(n + 1, std::move(sig), std::move(tables),
                           key + std::to_string(n), chain_names(n));
  e.prod_op = std::move(prod);
  e.expected = std::move(expected);
  return e;
}

Entry build_tchain(int n) {
  Signature sig{{{"meet", 2}, {"join", 2}, {"0", 0}, {"1", 0}}};
  std::vector<std::vector<int>> tables{chain_meet(n), chain_join(n), {0}, {n}};
  for (int i = 0; i <= n; ++i) {
    sig.ops.push_back({"T" + std::to_string(i), 1});
    std::vector<int> t(n + 1, 0);
    t[i] = n;
    tables.push_back(std::move(t));
  }
  Expected exp{n == 1 ? "primal" : "semi-primal", 1 << std::max(0, n - 1), {},
               "general semi-primal chain"};
  return make_chain_entry("tchain", n, std::move(sig), std::move(tables), std::move(exp));
}

Entry build_constchain(int n) {
  // the other way to rigidify a chain: one constant per element. No proper
  // subalgebras remain, but the order survives inside the square, so not
  // even the discriminator is term-definable.
  Signature sig{{{"meet", 2}, {"join", 2}}};
  std::vector<std::vector<int>> tables{chain_meet(n), chain_join(n)};
  for (int i = 0; i <= n; ++i) {
    sig.ops.push_back({"c" + std::to_string(i), 0});
    tables.push_back({i});
  }
  Expected exp{"none", 1, {}, "bounded chain with all constants"};
  return make_chain_entry("constchain", n, std::move(sig), std::move(tables), std::move(exp));
}

Entry build_moisil(int n) {
  Signature sig{{{"meet", 2}, {"join", 2}, {"neg", 1}, {"0", 0}, {"1", 0}}};
  std::vector<int> neg(n + 1);
  for (int i = 0; i <= n; ++i) neg[i] = n - i;
  std::vector<std::vector<int>> tables{chain_meet(n), chain_join(n), std::move(neg), {0}, {n}};
  for (int i = 1; i <= n; ++i) {
    sig.ops.push_back({"tau" + std::to_string(i), 1});
    std::vector<int> t(n + 1, 0);
    for (int x = i; x <= n; ++x) t[x] = n;
    tables.push_back(std::move(t));
  }
  // subuniverses are the symmetric subsets containing {0,1}: 2^(n/2) of them
  Expected exp{n == 1 ? "primal" : "semi-primal", 1 << (n / 2), {}, "Lukasiewicz-Moisil chain"};
  return make_chain_entry("moisil", n, std::move(sig), std::move(tables), std::move(exp));
}

Entry build_lukasiewicz(int n) {
  Signature sig{{{"meet", 2}, {"join", 2}, {"oplus", 2}, {"otimes", 2}, {"neg", 1},
                 {"0", 0}, {"1", 0}}};
  int m = n + 1;
  std::vector<int> oplus(m * m), otimes(m * m), neg(m);
  for (int x = 0; x <= n; ++x) {
    neg[x] = n - x;
    for (int y = 0; y <= n; ++y) {
      oplus[x * m + y] = std::min(x + y, n);
      otimes[x * m + y] = std::max(x + y - n, 0);
    }
  }
  std::vector<std::vector<int>> tables{chain_meet(n), chain_join(n), std::move(oplus),
                                       std::move(otimes), std::move(neg), {0}, {n}};
  Expected exp{n == 1 ? "primal" : "semi-primal", count_divisors(n), {},
               "Lukasiewicz chain (MV-algebra)"};
  return make_chain_entry("lukasiewicz", n, std::move(sig), std::move(tables), std::move(exp),
                          "otimes");
}

Entry build_cornish(int n) {
  Signature sig{{{"meet", 2}, {"join", 2}, {"neg", 1}, {"f", 1}, {"0", 0}, {"1", 0}}};
  std::vector<int> neg(n + 1), f(n + 1);
  for (int i = 0; i <= n; ++i) neg[i] = n - i;
  f[0] = 0;
  f[n] = n;
  for (int i = 1; i <= n - 1; ++i) f[i] = i + 1;
  std::vector<std::vector<int>> tables{chain_meet(n), chain_join(n), std::move(neg),
                                       std::move(f), {0}, {n}};
  Expected exp{n == 1 ? "primal" : "semi-primal", n == 1 ? 1 : 2, {},
               "semi-primal Cornish chain"};
  return make_chain_entry("cornish", n, std::move(sig), std::move(tables), std::move(exp));
}

Entry build_post(int n) {
  Signature sig{{{"meet", 2}, {"join", 2}, {"succ", 1}, {"0", 0}, {"1", 0}}};
  std::vector<int> succ(n + 1);
  for (int i = 0; i < n; ++i) succ[i] = i + 1;
  succ[n] = 0;
  std::vector<std::vector<int>> tables{chain_meet(n), chain_join(n), std::move(succ), {0}, {n}};
  Expected exp{"primal", 1, {}, "Post chain"};
  return make_chain_entry("post", n, std::move(sig), std::move(tables), std::move(exp));
}

struct PseudoSpec {
  int size;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  std::vector<int> pneg;
};

Entry build_pseudologic(int which) {
  PseudoSpec spec;
  switch (which) {
    case 1:
      spec = {5, {"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
              {4, 2, 3, 1, 0}};
      break;
    case 2:
      spec = {6, {"0", "a", "b", "c", "d", "1"},
              {{0, 1}, {1, 3}, {3, 5}, {0, 2}, {2, 4}, {4, 5}},
              {5, 3, 1, 4, 2, 0}};
      break;
    case 3:
      spec = {7, {"0", "a", "b", "c", "d", "e", "1"},
              {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}},
              {6, 4, 1, 2, 5, 3, 0}};
      break;
    default:
      throw InvalidInput("pseudologic: parameter must be 1, 2 or 3");
  }
  std::vector<uint8_t> leq = leq_from_covers(spec.size, spec.covers);
  auto [meet, join] = lattice_tables_from_leq(leq, spec.size);
  Signature sig{{{"meet", 2}, {"join", 2}, {"pneg", 1}, {"0", 0}, {"1", 0}}};
  std::vector<std::vector<int>> tables{std::move(meet), std::move(join), spec.pneg,
                                       {0}, {spec.size - 1}};
  Entry e;
  e.key = "pseudologic";
  e.param = which;
  e.algebra = make_algebra(spec.size, std::move(sig), std::move(tables),
                           "pseudologic" + std::to_string(which), spec.names);
  e.expected = {"semi-primal", 2, {}, "pseudo-logic"};
  return e;
}

struct ResiduatedSpec {
  std::string key;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::array<int, 3>> products;  // x*y = z
  int unit;                                  // monoid unit
  std::vector<int> invol;                    // optional involution table
  bool with_e_constant = false;
  Expected expected;
};

Entry build_residuated(const ResiduatedSpec& spec) {
  int n = static_cast<int>(spec.names.size());
  std::vector<uint8_t> leq = leq_from_covers(n, spec.covers);
  auto [meet, join] = lattice_tables_from_leq(leq, n);

  std::vector<std::vector<int>> completions =
      complete_monoid_tables(n, leq, spec.unit, spec.products);
  if (completions.size() != 1) {
    throw ConstructionAmbiguous(spec.key + ": " + std::to_string(completions.size()) +
                                " monoid completions satisfy the constraints");
  }
  std::vector<int> otimes = completions.front();

  // derive -> from the validated monoid on a staging algebra
  Signature stage_sig{{{"meet", 2}, {"join", 2}, {"otimes", 2}, {"0", 0}, {"1", 0}}};
  AlgebraPtr stage = make_algebra(n, stage_sig, {meet, join, otimes, {0}, {n - 1}});
  LatticeReduct reduct = detect_lattice(stage, LatticeHints{"meet", "join"});
  std::vector<int> impl = residuum_from_monoid(reduct, "otimes");

  Signature sig{{{"meet", 2}, {"join", 2}, {"otimes", 2}, {"impl", 2}, {"0", 0}, {"1", 0}}};
  std::vector<std::vector<int>> tables{std::move(meet), std::move(join), std::move(otimes),
                                       std::move(impl), {0}, {n - 1}};
  if (!spec.invol.empty()) {
    sig.ops.push_back({"invol", 1});
    tables.push_back(spec.invol);
  }
  if (spec.with_e_constant) {
    sig.ops.push_back({"e", 0});
    tables.push_back({spec.unit});
  }

  Entry e;
  e.key = spec.key;
  e.algebra = make_algebra(n, std::move(sig), std::move(tables), spec.key, spec.names);
  e.prod_op = "otimes";
  e.expected = spec.expected;
  return e;
}

// element order of the five-element chains: 0 < c < b < a < 1
const std::vector<std::string> kChain5Names{"0", "c", "b", "a", "1"};
const std::vector<std::pair<int, int>> kChain5Covers{{0, 1}, {1, 2}, {2, 3}, {3, 4}};

ResiduatedSpec flew_spec(const std::string& key) {
  auto chain5 = [&](std::vector<std::array<int, 3>> products, Expected exp) {
    return ResiduatedSpec{key, kChain5Names, kChain5Covers, std::move(products), 4, {}, false,
                          std::move(exp)};
  };
  const std::string src = "Galatos-Jipsen finite residuated lattice ";
  if (key == "R_5_1_17") {
    return chain5({{3, 3, 0}},
                  {"quasi-primal-only", 5,
                   {{"0", "1"}, {"0", "a", "1"}, {"0", "c", "a", "1"}, {"0", "b", "a", "1"},
                    {"0", "c", "b", "a", "1"}},
                   src + "R^{5,1}_{1,17}"});
  }
  if (key == "R_5_1_18") {
    return chain5({{3, 3, 1}, {3, 2, 0}},
                  {"semi-primal", 2, {{"0", "1"}, {"0", "c", "b", "a", "1"}},
                   src + "R^{5,1}_{1,18}"});
  }
  if (key == "R_5_1_19") {
    return chain5({{3, 3, 2}, {3, 2, 0}},
                  {"semi-primal", 3,
                   {{"0", "1"}, {"0", "b", "a", "1"}, {"0", "c", "b", "a", "1"}},
                   src + "R^{5,1}_{1,19}"});
  }
  if (key == "R_5_1_20") {
    return chain5({{3, 3, 1}, {3, 2, 1}, {2, 2, 0}, {3, 1, 0}},
                  {"semi-primal", 4,
                   {{"0", "1"}, {"0", "b", "1"}, {"0", "c", "a", "1"},
                    {"0", "c", "b", "a", "1"}},
                   src + "R^{5,1}_{1,20}"});
  }
  if (key == "R_5_1_21") {
    return chain5({{3, 3, 2}, {3, 2, 1}, {2, 2, 0}, {3, 1, 0}},
                  {"semi-primal", 3,
                   {{"0", "1"}, {"0", "b", "1"}, {"0", "c", "b", "a", "1"}},
                   src + "R^{5,1}_{1,21} (the Lukasiewicz chain L4)"});
  }
  if (key == "R_5_1_22") {
    return chain5({{3, 3, 1}, {2, 2, 1}, {3, 1, 0}},
                  {"semi-primal", 3,
                   {{"0", "1"}, {"0", "c", "a", "1"}, {"0", "c", "b", "a", "1"}},
                   src + "R^{5,1}_{1,22}"});
  }
  if (key == "R_6_2_11") {
    // 0 < c,d < b < a < 1 with c and d incomparable
    return {key,
            {"0", "c", "d", "b", "a", "1"},
            {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}},
            {{4, 4, 1}, {4, 3, 0}},
            5,
            {},
            false,
            {"semi-primal", 3,
             {{"0", "1"}, {"0", "c", "b", "a", "1"}, {"0", "c", "d", "b", "a", "1"}},
             src + "R^{6,2}_{1,11}"}};
  }
  if (key == "R_6_3_9") {
    // 0 < d < b,c < a < 1 with b and c incomparable
    return {key,
            {"0", "d", "b", "c", "a", "1"},
            {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}},
            {{4, 4, 1}, {3, 3, 1}, {4, 2, 0}, {2, 3, 0}},
            5,
            {},
            false,
            {"semi-primal", 3,
             {{"0", "1"}, {"0", "d", "b", "a", "1"}, {"0", "d", "b", "c", "a", "1"}},
             src + "R^{6,3}_{1,9}"}};
  }
  throw InvalidInput("unknown FL_ew catalog key '" + key + "'");
}

ResiduatedSpec demorgan_spec(const std::string& key) {
  bool with_e = key.find("_noe") == std::string::npos;
  std::string stem = with_e ? key : key.substr(0, key.size() - 4);
  Expected exp;
  if (with_e) {
    exp = {"primal", 1, {{"0", "e", "a", "1"}}, "bounded De Morgan monoid " + stem};
  } else {
    exp = {"semi-primal", 2, {{"0", "1"}, {"0", "e", "a", "1"}},
           "bounded De Morgan monoid " + stem + ", e-free reduct"};
  }
  if (stem == "demorgan_C4") {
    return {key, {"0", "e", "a", "1"}, {{0, 1}, {1, 2}, {2, 3}}, {{2, 2, 3}}, 1,
            {3, 2, 1, 0}, with_e, std::move(exp)};
  }
  if (stem == "demorgan_D4") {
    return {key, {"0", "e", "a", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {{2, 2, 3}}, 1,
            {3, 2, 1, 0}, with_e, std::move(exp)};
  }
  throw InvalidInput("unknown De Morgan catalog key '" + key + "'");
}

bool is_flew_key(const std::string& key) {
  static const std::vector<std::string> keys{"R_5_1_17", "R_5_1_18", "R_5_1_19", "R_5_1_20",
                                             "R_5_1_21", "R_5_1_22", "R_6_2_11", "R_6_3_9"};
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

bool is_demorgan_key(const std::string& key) {
  return key == "demorgan_C4" || key == "demorgan_C4_noe" || key == "demorgan_D4" ||
         key == "demorgan_D4_noe";
}

}  // namespace

std::vector<std::vector<int>> complete_monoid_tables(
    int n, const std::vector<uint8_t>& leq, int unit,
    const std::vector<std::array<int, 3>>& fixed) {
  auto le = [&](int x, int y) { return leq[static_cast<std::size_t>(x) * n + y] != 0; };

  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  auto at = [&](int x, int y) -> int& { return table[static_cast<std::size_t>(x) * n + y]; };
  auto set = [&](int x, int y, int v) -> bool {
    if (at(x, y) >= 0 && at(x, y) != v) return false;
    at(x, y) = v;
    at(y, x) = v;
    return true;
  };

  for (int x = 0; x < n; ++x) {
    if (!set(unit, x, x)) return {};
  }
  for (const auto& [x, y, z] : fixed) {
    if (!set(x, y, z)) return {};
  }

  std::vector<std::pair<int, int>> unknown;
  for (int x = n - 1; x >= 0; --x) {
    for (int y = x; y >= 0; --y) {
      if (at(x, y) < 0) unknown.emplace_back(x, y);
    }
  }

  auto monotone_ok = [&](int x, int y, int v) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        int w = at(p, q);
        if (w < 0) continue;
        if (le(p, x) && le(q, y) && !le(w, v)) return false;
        if (le(x, p) && le(y, q) && !le(v, w)) return false;
      }
    }
    return true;
  };

  std::vector<std::vector<int>> solutions;
  auto validate = [&]() {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (at(at(x, y), z) != at(x, at(y, z))) return false;
        }
      }
    }
    // every residual max{z : x*z <= y} must exist
    std::vector<int> zs;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        zs.clear();
        for (int z = 0; z < n; ++z) {
          if (le(at(x, z), y)) zs.push_back(z);
        }
        bool has_max = false;
        for (int m : zs) {
          bool dominates = true;
          for (int z : zs) {
            if (!le(z, m)) {
              dominates = false;
              break;
            }
          }
          if (dominates) {
            has_max = true;
            break;
          }
        }
        if (!has_max) return false;
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == unknown.size()) {
      if (validate()) solutions.push_back(table);
      return;
    }
    auto [x, y] = unknown[i];
    if (at(x, y) >= 0) {  // can happen only through symmetric aliasing
      self(self, i + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!monotone_ok(x, y, v)) continue;
      at(x, y) = v;
      at(y, x) = v;
      self(self, i + 1);
      at(x, y) = -1;
      at(y, x) = -1;
    }
  };
  dfs(dfs, 0);
  return solutions;
}

Entry build(const std::string& key, int n) {
  if (key == "tchain" || key == "moisil" || key == "lukasiewicz" || key == "cornish" ||
      key == "post" || key == "constchain") {
    if (n < 1) throw InvalidInput(key + ": parameter n >= 1 required");
    if (key == "tchain") return build_tchain(n);
    if (key == "constchain") return build_constchain(n);
    if (key == "moisil") return build_moisil(n);
    if (key == "lukasiewicz") return build_lukasiewicz(n);
    if (key == "cornish") return build_cornish(n);
    return build_post(n);
  }
  if (key == "pseudologic") return build_pseudologic(n);
  if (is_flew_key(key)) return build_residuated(flew_spec(key));
  if (is_demorgan_key(key)) return build_residuated(demorgan_spec(key));
  throw InvalidInput("unknown catalog key '" + key + "'");
}

std::vector<KeyInfo> list() {
  std::vector<KeyInfo> out{
      {"tchain", true, "n >= 1", "bounded chain with all T_i; semi-primal, 2^(n-1) subalgebras"},
      {"constchain", true, "n >= 1",
       "bounded chain with all constants; subalgebra-free but not quasi-primal"},
      {"moisil", true, "n >= 1", "Lukasiewicz-Moisil chain; semi-primal"},
      {"lukasiewicz", true, "n >= 1", "Lukasiewicz chain; semi-primal, one subalgebra per divisor"},
      {"cornish", true, "n >= 1", "Cornish chain; semi-primal, only proper subalgebra {0,1}"},
      {"post", true, "n >= 1", "Post chain; primal"},
      {"pseudologic", true, "1..3", "bounded lattice with pseudo-negation; semi-primal"},
  };
  for (const char* k : {"R_5_1_17", "R_5_1_18", "R_5_1_19", "R_5_1_20", "R_5_1_21", "R_5_1_22",
                        "R_6_2_11", "R_6_3_9"}) {
    std::string summary = std::string(k) == "R_5_1_17"
                              ? "FL_ew chain; quasi-primal but not semi-primal"
                              : "FL_ew algebra; semi-primal";
    out.push_back({k, false, "", summary});
  }
  out.push_back({"demorgan_C4", false, "", "De Morgan monoid chain; primal"});
  out.push_back({"demorgan_C4_noe", false, "", "e-free reduct; semi-primal"});
  out.push_back({"demorgan_D4", false, "", "De Morgan monoid diamond; primal"});
  out.push_back({"demorgan_D4_noe", false, "", "e-free reduct; semi-primal"});
  return out;
}

}  // namespace semiprimal::catalog
