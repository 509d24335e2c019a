#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "semiprimal/catalog.hpp"
#include "semiprimal/json_io.hpp"
#include "semiprimal/primality.hpp"

using namespace semiprimal;

namespace {

std::vector<std::vector<std::string>> named_subuniverses(const catalog::Entry& e) {
  std::vector<std::vector<std::string>> out;
  for (const SubUniverse& s : enumerate_subuniverses(e.algebra)) {
    std::vector<std::string> names;
    for (int x : s.elements) names.push_back(e.algebra->element_name(x));
    out.push_back(std::move(names));
  }
  return out;
}

PrimalityLevel computed_level(const catalog::Entry& e) {
  LatticeReduct r = detect_lattice(e.algebra, e.lattice);
  return is_primal(e.algebra, r).level;
}

}  // namespace

TEST_CASE("catalog list contains the documented keys") {
  auto keys = catalog::list();
  auto has = [&](const std::string& k) {
    return std::any_of(keys.begin(), keys.end(),
                       [&](const catalog::KeyInfo& i) { return i.key == k; });
  };
  for (const char* k : {"post", "moisil", "cornish", "lukasiewicz", "tchain", "pseudologic",
                        "R_5_1_17", "R_5_1_18", "R_5_1_19", "R_5_1_20", "R_5_1_21", "R_5_1_22",
                        "R_6_2_11", "R_6_3_9", "demorgan_C4", "demorgan_C4_noe", "demorgan_D4",
                        "demorgan_D4_noe"}) {
    CHECK(has(k));
  }
  CHECK_THROWS_AS(catalog::build("nonsense"), InvalidInput);
  CHECK_THROWS_AS(catalog::build("lukasiewicz", 0), InvalidInput);
}

TEST_CASE("family entries match their expected verdict and subuniverse count") {
  std::vector<catalog::Entry> entries;
  for (int n : {1, 2, 3, 4}) {
    for (const char* key : {"tchain", "moisil", "lukasiewicz", "cornish", "post",
                            "constchain"}) {
      entries.push_back(catalog::build(key, n));
    }
  }
  entries.push_back(catalog::build("lukasiewicz", 6));
  for (int k : {1, 2, 3}) entries.push_back(catalog::build("pseudologic", k));

  for (const auto& e : entries) {
    CAPTURE(e.key);
    CAPTURE(e.param);
    CHECK(to_string(computed_level(e)) == e.expected.level);
    REQUIRE(e.expected.subuniverse_count.has_value());
    CHECK(static_cast<int>(enumerate_subuniverses(e.algebra).size()) ==
          *e.expected.subuniverse_count);
  }
}

TEST_CASE("appendix entries: verdicts and exact subuniverse lists") {
  for (const char* key : {"R_5_1_17", "R_5_1_18", "R_5_1_19", "R_5_1_20", "R_5_1_21",
                          "R_5_1_22", "R_6_2_11", "R_6_3_9"}) {
    catalog::Entry e = catalog::build(key);
    CAPTURE(key);
    CHECK(to_string(computed_level(e)) == e.expected.level);
    CHECK(named_subuniverses(e) == e.expected.subuniverses);
    // and the enumeration is confirmed by the independent subset scan
    auto brute = oracles::brute_force_subuniverses(e.algebra);
    auto fast = enumerate_subuniverses(e.algebra);
    REQUIRE(brute.size() == fast.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == fast[i].elements);
  }
}

TEST_CASE("De Morgan monoids: unique tables, primal, e-free semi-primal") {
  for (const char* key : {"demorgan_C4", "demorgan_D4"}) {
    catalog::Entry e = catalog::build(key);
    CHECK(to_string(computed_level(e)) == "primal");
    CHECK(enumerate_subuniverses(e.algebra).size() == 1);

    catalog::Entry f = catalog::build(std::string(key) + "_noe");
    CHECK(to_string(computed_level(f)) == "semi-primal");
    CHECK(named_subuniverses(f) ==
          std::vector<std::vector<std::string>>{{"0", "1"}, {"0", "e", "a", "1"}});
  }
}

TEST_CASE("constraint search rejects over- and under-constrained inputs") {
  // a 3-chain with no product constraints has several monoid completions
  std::vector<uint8_t> leq{1, 1, 1, 0, 1, 1, 0, 0, 1};
  auto sols = catalog::complete_monoid_tables(3, leq, 2, {});
  CHECK(sols.size() > 1);
  // contradictory constraints have none
  auto none = catalog::complete_monoid_tables(3, leq, 2, {{{0, 0, 1}}});
  CHECK(none.empty());
}

TEST_CASE("R_5_1_21 is the FL_ew reduct of the Lukasiewicz 4-chain") {
  catalog::Entry l4 = catalog::build("lukasiewicz", 4);
  const FiniteAlgebra& a = *l4.algebra;
  LatticeReduct r = detect_lattice(l4.algebra, l4.lattice);
  std::vector<int> impl = residuum_from_monoid(r, "otimes");
  Signature sig{{{"meet", 2}, {"join", 2}, {"otimes", 2}, {"impl", 2}, {"0", 0}, {"1", 0}}};
  AlgebraPtr reduct = make_algebra(
      5, sig,
      {a.table(a.signature().index_of("meet")), a.table(a.signature().index_of("join")),
       a.table(a.signature().index_of("otimes")), impl, {0}, {4}});
  catalog::Entry r21 = catalog::build("R_5_1_21");
  auto iso = find_isomorphism(reduct, r21.algebra);
  REQUIRE(iso.has_value());
  for (int e = 0; e < 5; ++e) CHECK(iso->map[e] == e);  // even element-by-element
}

TEST_CASE("Lukasiewicz subuniverses are exactly the divisor sub-chains") {
  for (int n : {4, 6, 12}) {
    catalog::Entry e = catalog::build("lukasiewicz", n);
    auto subs = enumerate_subuniverses(e.algebra);
    std::vector<std::vector<int>> expected;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      int k = n / d;
      std::vector<int> chain;
      for (int i = 0; i <= d; ++i) chain.push_back(i * k);
      expected.push_back(std::move(chain));
    }
    std::sort(expected.begin(), expected.end(), [](const auto& l, const auto& r) {
      if (l.size() != r.size()) return l.size() < r.size();
      return l < r;
    });
    REQUIRE(subs.size() == expected.size());
    for (std::size_t i = 0; i < subs.size(); ++i) CHECK(subs[i].elements == expected[i]);
  }
}

TEST_CASE("Moisil identities: T1 = tau1 and T0 = T1 o neg") {
  for (int n : {2, 3, 4, 5}) {
    catalog::Entry e = catalog::build("moisil", n);
    LatticeReduct r = detect_lattice(e.algebra, e.lattice);
    std::vector<int> t1 = derived_unary(r, UnaryKind::T, r.top).table;
    std::vector<int> tau1 = derived_unary(r, UnaryKind::Tau, r.top).table;
    CHECK(t1 == tau1);
    std::vector<int> t0 = derived_unary(r, UnaryKind::T, r.bot).table;
    int neg = e.algebra->signature().index_of("neg");
    for (int x = 0; x <= n; ++x) {
      CHECK(t0[x] == t1[e.algebra->apply1(neg, x)]);
    }
  }
}

TEST_CASE("pseudo-logic sufficient conditions hold for the three examples") {
  for (int k : {1, 2, 3}) {
    catalog::Entry e = catalog::build("pseudologic", k);
    const FiniteAlgebra& a = *e.algebra;
    int p = a.signature().index_of("pneg");
    int n = a.size();
    int bot = 0, top = n - 1;
    // (1) only the bottom maps to the top
    for (int x = 0; x < n; ++x) {
      if (x != bot) CHECK(a.apply1(p, x) != top);
    }
    // (2) every x below the top meets some even iterate at the bottom
    LatticeReduct r = detect_lattice(e.algebra, e.lattice);
    for (int x = 0; x < n - 1; ++x) {
      int it = x;
      bool found = false;
      for (int step = 1; step <= 2 * n && !found; ++step) {
        it = a.apply1(p, it);
        if (step % 2 == 0 && r.meet(x, it) == bot) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("the versioned golden file matches the built entries") {
  json golden = load_json_file(std::string(SEMIPRIMAL_SOURCE_DIR) + "/data/catalog_expected.json");
  REQUIRE(golden.is_array());
  REQUIRE(golden.size() >= 41);
  for (const auto& g : golden) {
    std::string key = g["key"].get<std::string>();
    int param = g.value("param", 0);
    CAPTURE(key);
    CAPTURE(param);
    catalog::Entry e = catalog::build(key, param);
    const json& exp = g["expected"];
    CHECK(e.expected.level == exp["level"].get<std::string>());
    CHECK(e.expected.source == exp["source"].get<std::string>());
    if (exp.contains("subuniverse_count")) {
      REQUIRE(e.expected.subuniverse_count.has_value());
      CHECK(*e.expected.subuniverse_count == exp["subuniverse_count"].get<int>());
      CHECK(static_cast<int>(enumerate_subuniverses(e.algebra).size()) ==
            exp["subuniverse_count"].get<int>());
    }
    if (exp.contains("subuniverses")) {
      CHECK(named_subuniverses(e) ==
            exp["subuniverses"].get<std::vector<std::vector<std::string>>>());
    }
    CHECK(to_string(computed_level(e)) == exp["level"].get<std::string>());
  }
}

TEST_CASE("expected metadata carries a source for every entry") {
  for (const auto& info : catalog::list()) {
    catalog::Entry e = info.parametric ? catalog::build(info.key, info.key == "pseudologic" ? 2 : 3)
                                       : catalog::build(info.key);
    CHECK(!e.expected.source.empty());
    CHECK(!e.expected.level.empty());
  }
}
