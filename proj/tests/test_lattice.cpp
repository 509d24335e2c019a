#include "doctest.h"
#include "semiprimal/catalog.hpp"
#include "semiprimal/lattice.hpp"

using namespace semiprimal;

namespace {

AlgebraPtr luk4() { return catalog::build("lukasiewicz", 4).algebra; }

std::vector<catalog::Entry> small_catalog() {
  std::vector<catalog::Entry> out;
  for (int n : {1, 2, 3, 4}) {
    for (const char* key : {"tchain", "moisil", "lukasiewicz", "cornish", "post"}) {
      out.push_back(catalog::build(key, n));
    }
  }
  for (int k : {1, 2, 3}) out.push_back(catalog::build("pseudologic", k));
  for (const char* key : {"R_5_1_17", "R_5_1_18", "R_5_1_19", "R_5_1_20", "R_5_1_21",
                          "R_5_1_22", "R_6_2_11", "R_6_3_9", "demorgan_C4", "demorgan_C4_noe",
                          "demorgan_D4", "demorgan_D4_noe"}) {
    out.push_back(catalog::build(key));
  }
  return out;
}

}  // namespace

TEST_CASE("lattice detection: hints, failure, non-chain example") {
  LatticeReduct r = detect_lattice(luk4(), LatticeHints{"meet", "join"});
  CHECK(r.bot == 0);
  CHECK(r.top == 4);
  CHECK(!r.ambiguous);

  // no valid pair in sight
  Signature sig{{{"meet", 2}, {"join", 2}}};
  std::vector<int> bad{0, 1, 1, 0};
  std::vector<int> maxt{0, 1, 1, 1};
  CHECK_THROWS_AS(detect_lattice(make_algebra(2, sig, {bad, maxt})), NoLatticeReduct);

  LatticeReduct mid = detect_lattice(catalog::build("pseudologic", 2).algebra);
  CHECK(mid.n() == 6);
  CHECK(mid.bot == 0);
  CHECK(mid.top == 5);
}

TEST_CASE("a second unrelated lattice pair is reported as ambiguous") {
  // two chain orders on four elements: 0<1<2<3 and 0<2<1<3
  int n = 4;
  auto chain_pair = [&](std::vector<int> rank) {
    std::vector<int> meet(n * n), join(n * n);
    std::vector<int> by_rank(n);
    for (int x = 0; x < n; ++x) by_rank[rank[x]] = x;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        meet[x * n + y] = by_rank[std::min(rank[x], rank[y])];
        join[x * n + y] = by_rank[std::max(rank[x], rank[y])];
      }
    }
    return std::make_pair(meet, join);
  };
  auto [m1, j1] = chain_pair({0, 1, 2, 3});
  auto [m2, j2] = chain_pair({0, 2, 1, 3});
  Signature sig{{{"m1", 2}, {"j1", 2}, {"m2", 2}, {"j2", 2}}};
  LatticeReduct r = detect_lattice(make_algebra(4, sig, {m1, j1, m2, j2}));
  CHECK(r.ambiguous);
  CHECK(r.meet_op == 0);  // first match wins
}

TEST_CASE("every catalog entry detects its hinted lattice") {
  for (const auto& e : small_catalog()) {
    LatticeReduct r = detect_lattice(e.algebra, e.lattice);
    CHECK(r.bot == 0);
    CHECK(r.top == e.algebra->size() - 1);
  }
}

TEST_CASE("induced order: chain, diamond, two-element lattice") {
  LatticeReduct chain = detect_lattice(luk4());
  for (int x = 0; x <= 4; ++x) {
    for (int y = 0; y <= 4; ++y) CHECK(chain.le(x, y) == (x <= y));
  }

  LatticeReduct d4 = detect_lattice(catalog::build("demorgan_D4").algebra);
  int e = 1, a = 2;
  CHECK(!d4.le(e, a));
  CHECK(!d4.le(a, e));

  LatticeReduct two = detect_lattice(catalog::build("lukasiewicz", 1).algebra);
  CHECK(two.le(0, 1));
  CHECK(!two.le(1, 0));
}

TEST_CASE("derived unary maps on the Lukasiewicz chain") {
  LatticeReduct r = detect_lattice(luk4());
  CHECK(derived_unary(r, UnaryKind::T, 2).table == std::vector<int>{0, 0, 4, 0, 0});
  CHECK(derived_unary(r, UnaryKind::Tau, 2).table == std::vector<int>{0, 0, 4, 4, 4});
  CHECK(derived_unary_chi(r, {0, 2, 4}).table == std::vector<int>{4, 0, 4, 0, 4});
}

TEST_CASE("T maps are disjoint and jointly cover; interdefinability with tau") {
  for (const auto& entry : small_catalog()) {
    LatticeReduct r = detect_lattice(entry.algebra, entry.lattice);
    int n = r.n();
    std::vector<std::vector<int>> t(n), tau(n);
    for (int ell = 0; ell < n; ++ell) {
      t[ell] = derived_unary(r, UnaryKind::T, ell).table;
      tau[ell] = derived_unary(r, UnaryKind::Tau, ell).table;
    }
    for (int x = 0; x < n; ++x) {
      int cover = r.bot;
      for (int ell = 0; ell < n; ++ell) {
        cover = r.join(cover, t[ell][x]);
        for (int ell2 = ell + 1; ell2 < n; ++ell2) {
          CHECK(r.meet(t[ell][x], t[ell2][x]) == r.bot);
        }
      }
      CHECK(cover == r.top);
    }
    // tau_l = join of T_{l'} over l' >= l
    for (int ell = 0; ell < n; ++ell) {
      for (int x = 0; x < n; ++x) {
        int acc = r.bot;
        for (int l2 = 0; l2 < n; ++l2) {
          if (r.le(ell, l2)) acc = r.join(acc, t[l2][x]);
        }
        CHECK(acc == tau[ell][x]);
      }
    }
    // T_l = tau_l /\ meet of T_0(tau_{l'}) over l' > l
    const std::vector<int>& t0 = t[r.bot];
    for (int ell = 0; ell < n; ++ell) {
      for (int x = 0; x < n; ++x) {
        int acc = tau[ell][x];
        for (int l2 = 0; l2 < n; ++l2) {
          if (r.le(ell, l2) && l2 != ell) acc = r.meet(acc, t0[tau[l2][x]]);
        }
        CHECK(acc == t[ell][x]);
      }
    }
  }
}

TEST_CASE("median term satisfies the majority equations everywhere") {
  for (const auto& entry : small_catalog()) {
    LatticeReduct r = detect_lattice(entry.algebra, entry.lattice);
    int n = r.n();
    std::vector<int> med = median_eval(r);
    auto m = [&](int x, int y, int z) {
      return med[(static_cast<std::size_t>(x) * n + y) * n + z];
    };
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        CHECK(m(x, x, y) == x);
        CHECK(m(x, y, x) == x);
        CHECK(m(y, x, x) == x);
      }
    }
  }

  LatticeReduct l4 = detect_lattice(luk4());
  CHECK(median_eval(l4)[(0 * 5 + 2) * 5 + 4] == 2);

  LatticeReduct d4 = detect_lattice(catalog::build("demorgan_D4").algebra);
  CHECK(median_eval(d4)[(1 * 4 + 2) * 4 + 0] == 0);  // m(e, a, 0) = 0
}

TEST_CASE("residuum: Lukasiewicz implication, classical implication, failure") {
  AlgebraPtr l4 = luk4();
  LatticeReduct r = detect_lattice(l4);
  std::vector<int> res = residuum_from_monoid(r, "otimes");
  for (int x = 0; x <= 4; ++x) {
    for (int y = 0; y <= 4; ++y) CHECK(res[x * 5 + y] == std::min(4, 4 - x + y));
  }
  // the full residuation biconditional
  int ot = l4->signature().index_of("otimes");
  for (int x = 0; x <= 4; ++x) {
    for (int y = 0; y <= 4; ++y) {
      for (int z = 0; z <= 4; ++z) {
        bool lhs = r.le(l4->apply2(ot, x, y), z);
        CHECK(lhs == r.le(x, res[y * 5 + z]));
      }
    }
  }

  // 2-element lattice with meet as the monoid gives classical implication
  Signature sig{{{"meet", 2}, {"join", 2}, {"0", 0}, {"1", 0}}};
  AlgebraPtr two = make_algebra(2, sig, {{0, 0, 0, 1}, {0, 1, 1, 1}, {0}, {1}});
  LatticeReduct r2 = detect_lattice(two);
  CHECK(residuum_from_monoid(r2, "meet") == std::vector<int>{1, 1, 0, 1});

  // non-monotone operation
  Signature sig3{{{"meet", 2}, {"join", 2}, {"g", 2}, {"0", 0}, {"1", 0}}};
  AlgebraPtr bad = make_algebra(2, sig3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {0}, {1}});
  CHECK_THROWS_AS(residuum_from_monoid(detect_lattice(bad, LatticeHints{"meet", "join"}), "g"),
                  NotResiduated);
}
