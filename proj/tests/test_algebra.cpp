#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "semiprimal/algebra.hpp"
#include "semiprimal/boolean.hpp"
#include "semiprimal/catalog.hpp"
#include "semiprimal/experiments.hpp"

using namespace semiprimal;

namespace {

AlgebraPtr luk(int n) { return catalog::build("lukasiewicz", n).algebra; }

Congruence kernel_of(const Homomorphism& h) {
  Congruence c;
  c.parent = h.dom;
  c.block_of.assign(h.map.size(), -1);
  std::vector<int> val_block(h.cod->size(), -1);
  int next = 0;
  for (std::size_t e = 0; e < h.map.size(); ++e) {
    if (val_block[h.map[e]] < 0) val_block[h.map[e]] = next++;
    c.block_of[e] = val_block[h.map[e]];
  }
  c.num_blocks = next;
  return c;
}

}  // namespace

TEST_CASE("subuniverse closure on the Lukasiewicz chain") {
  AlgebraPtr l4 = luk(4);
  // 1/4 generates everything
  std::vector<int> seed{1};
  CHECK(subuniverse_closure(l4, seed).elements == std::vector<int>{0, 1, 2, 3, 4});
  // constants only
  CHECK(subuniverse_closure(l4, {}).elements == std::vector<int>{0, 4});
  // 1/2 generates the copy of L2
  seed = {2};
  CHECK(subuniverse_closure(l4, seed).elements == std::vector<int>{0, 2, 4});
}

TEST_CASE("subuniverse enumeration matches the families") {
  CHECK(enumerate_subuniverses(luk(4)).size() == 3);
  CHECK(enumerate_subuniverses(catalog::build("tchain", 3).algebra).size() == 4);
  CHECK(enumerate_subuniverses(catalog::build("cornish", 4).algebra).size() == 2);
}

TEST_CASE("subuniverse enumeration agrees with the subset scan") {
  for (const char* key : {"lukasiewicz", "tchain", "moisil", "post"}) {
    AlgebraPtr a = catalog::build(key, 3).algebra;
    auto got = enumerate_subuniverses(a);
    auto want = oracles::brute_force_subuniverses(a);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].elements == want[i]);
  }
}

TEST_CASE("every enumerated subuniverse is closed under all operations") {
  AlgebraPtr a = catalog::build("pseudologic", 2).algebra;
  for (const SubUniverse& s : enumerate_subuniverses(a)) {
    SubUniverse again = subuniverse_closure(a, s.elements);
    CHECK(again.elements == s.elements);
  }
}

TEST_CASE("homomorphism enumeration: projections, identity, none") {
  AlgebraPtr l2 = luk(2), l4 = luk(4);
  Product p = direct_product({l2, l4});

  auto homs = enumerate_homomorphisms(p.algebra, l4);
  REQUIRE(homs.size() == 2);
  std::vector<std::vector<int>> proj{p.projection(0).map, p.projection(1).map};
  // the L2-coordinate lands in L4 as {0, 1/2, 1} = indices {0, 2, 4}
  for (auto& m : proj[0]) m *= 2;
  std::sort(proj.begin(), proj.end());
  CHECK(homs[0].map == proj[0]);
  CHECK(homs[1].map == proj[1]);

  auto endo = enumerate_homomorphisms(l4, l4);
  REQUIRE(endo.size() == 1);
  for (int e = 0; e < 5; ++e) CHECK(endo[0].map[e] == e);

  CHECK(enumerate_homomorphisms(l4, l2).empty());
}

TEST_CASE("homomorphism enumeration agrees with the brute-force scan") {
  std::vector<std::pair<AlgebraPtr, AlgebraPtr>> cases;
  cases.emplace_back(luk(2), luk(4));
  cases.emplace_back(luk(2), luk(2));
  cases.emplace_back(catalog::build("tchain", 2).algebra, catalog::build("tchain", 2).algebra);
  cases.emplace_back(catalog::build("cornish", 2).algebra, catalog::build("cornish", 4).algebra);
  cases.emplace_back(catalog::build("moisil", 3).algebra, catalog::build("moisil", 3).algebra);
  AlgebraPtr pl = catalog::build("pseudologic", 1).algebra;
  cases.emplace_back(pl, pl);
  for (auto& [a, b] : cases) {
    auto got = enumerate_homomorphisms(a, b);
    auto want = oracles::brute_force_homs(a, b);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].map == want[i]);
  }
}

TEST_CASE("signature mismatch is an error") {
  CHECK_THROWS_AS(enumerate_homomorphisms(luk(2), catalog::build("post", 2).algebra),
                  SignatureMismatch);
  CHECK_THROWS_AS(find_isomorphism(luk(2), catalog::build("post", 2).algebra),
                  SignatureMismatch);
}

TEST_CASE("internal isomorphisms of rigid algebras are the identities") {
  auto isos = internal_isomorphisms(luk(4));
  REQUIRE(isos.size() == 3);
  for (const auto& iso : isos) CHECK(iso.is_identity());

  auto bool2 = internal_isomorphisms(as_finite_algebra(bool_algebra(1)));
  REQUIRE(bool2.size() == 1);
  CHECK(bool2[0].is_identity());
}

TEST_CASE("direct products: sizes, projections, decoding") {
  AlgebraPtr l2 = luk(2), l4 = luk(4);

  Product empty = direct_product({}, l2->signature());
  CHECK(empty.algebra->size() == 1);

  Product sq = direct_product({l2, l2});
  CHECK(sq.algebra->size() == 9);

  Product p = direct_product({l2, l4});
  CHECK(p.algebra->size() == 15);
  CHECK(enumerate_homomorphisms(p.algebra, l4).size() == 2);

  for (int i = 0; i < 2; ++i) {
    Homomorphism pr = p.projection(i);
    CHECK(is_homomorphism(*pr.dom, *pr.cod, pr.map));
  }
  for (int e = 0; e < p.algebra->size(); ++e) {
    CHECK(p.encode(p.decode(e)) == e);
  }
  CHECK_THROWS_AS(direct_product({l4, l4, l4, l4, l4, l4, l4, l4}), SizeCapExceeded);
}

TEST_CASE("congruence generation: simple algebra collapses, empty seed stays") {
  AlgebraPtr l4 = luk(4);
  std::vector<std::pair<int, int>> pairs{{0, 4}};
  CHECK(congruence_generated(l4, pairs).num_blocks == 1);

  Congruence id = congruence_generated(l4, {});
  CHECK(id.num_blocks == 5);

  AlgebraPtr sq = direct_product({luk(2), luk(2)}).algebra;
  // glue (0,0) with (0,1): the kernel of the first projection
  pairs = {{0, 2}};
  Congruence ker = congruence_generated(sq, pairs);
  CHECK(ker.num_blocks == 3);
  for (int e = 0; e < 9; ++e) CHECK(ker.block_of[e] == e / 3);
}

TEST_CASE("generated congruence is the least compatible one containing the seed") {
  std::vector<AlgebraPtr> cases{catalog::build("lukasiewicz", 3).algebra,
                                catalog::build("tchain", 3).algebra,
                                catalog::build("lukasiewicz", 4).algebra,  // five elements
                                direct_product({catalog::build("lukasiewicz", 1).algebra,
                                                catalog::build("lukasiewicz", 1).algebra})
                                    .algebra};
  for (const AlgebraPtr& a : cases) {
    auto all = oracles::brute_force_congruences(a);
    for (int x = 0; x < a->size(); ++x) {
      for (int y = x + 1; y < a->size(); ++y) {
        std::vector<std::pair<int, int>> seed{{x, y}};
        Congruence gen = congruence_generated(a, seed);
        CHECK(congruence_compatible(*a, gen.block_of));
        for (const auto& other : all) {
          if (other[x] != other[y]) continue;
          // gen <= other: gen-blocks refine other-blocks
          for (int p = 0; p < a->size(); ++p) {
            for (int q = p + 1; q < a->size(); ++q) {
              if (gen.block_of[p] == gen.block_of[q]) CHECK(other[p] == other[q]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("quotients: identity, full, first isomorphism theorem") {
  AlgebraPtr l4 = luk(4);
  Quotient q_id = quotient(l4, congruence_generated(l4, {}));
  CHECK(q_id.algebra->size() == 5);
  CHECK(find_isomorphism(q_id.algebra, l4).has_value());

  std::vector<std::pair<int, int>> pairs{{0, 4}};
  Quotient q_full = quotient(l4, congruence_generated(l4, pairs));
  CHECK(q_full.algebra->size() == 1);

  AlgebraPtr sq = direct_product({luk(2), luk(2)}).algebra;
  pairs = {{0, 2}};
  Quotient q = quotient(sq, congruence_generated(sq, pairs));
  CHECK(find_isomorphism(q.algebra, luk(2)).has_value());

  // quotient by a kernel is isomorphic to the image, for every hom
  AlgebraPtr dom = direct_product({luk(2), luk(4)}).algebra;
  for (const Homomorphism& h : enumerate_homomorphisms(dom, luk(4))) {
    Quotient qk = quotient(dom, kernel_of(h));
    SubUniverse img{h.cod, h.image()};
    CHECK(find_isomorphism(qk.algebra, sub_algebra(img)).has_value());
  }
}

TEST_CASE("find_isomorphism basics and the Boolean-power square") {
  AlgebraPtr l4 = luk(4);
  auto id = find_isomorphism(l4, l4);
  REQUIRE(id.has_value());
  for (int e = 0; e < 5; ++e) CHECK(id->map[e] == e);

  CHECK(!find_isomorphism(l4, luk(2)).has_value());
}

TEST_CASE("random expansions: closure enumeration agrees with the subset scan") {
  for (int i = 0; i < 30; ++i) {
    AlgebraPtr a = murskii_instance(4, {2}, 555, i);
    auto fast = enumerate_subuniverses(a);
    auto slow = oracles::brute_force_subuniverses(a);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t s = 0; s < fast.size(); ++s) CHECK(fast[s].elements == slow[s]);
  }
}

TEST_CASE("ternary operations go through the same machinery correctly") {
  for (int i = 0; i < 12; ++i) {
    AlgebraPtr a = murskii_instance(3, {3}, 777, i);  // one random ternary op

    auto fast = enumerate_subuniverses(a);
    auto slow = oracles::brute_force_subuniverses(a);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t s = 0; s < fast.size(); ++s) CHECK(fast[s].elements == slow[s]);

    auto homs = enumerate_homomorphisms(a, a);
    auto want = oracles::brute_force_homs(a, a);
    REQUIRE(homs.size() == want.size());
    for (std::size_t h = 0; h < homs.size(); ++h) CHECK(homs[h].map == want[h]);

    // least-congruence property against the full partition scan
    auto all = oracles::brute_force_congruences(a);
    for (int x = 0; x < a->size(); ++x) {
      for (int y = x + 1; y < a->size(); ++y) {
        std::vector<std::pair<int, int>> seed{{x, y}};
        Congruence gen = congruence_generated(a, seed);
        CHECK(congruence_compatible(*a, gen.block_of));
        for (const auto& other : all) {
          if (other[x] != other[y]) continue;
          for (int p = 0; p < a->size(); ++p) {
            for (int q = p + 1; q < a->size(); ++q) {
              if (gen.block_of[p] == gen.block_of[q]) CHECK(other[p] == other[q]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("trivial algebra has no homomorphism into a nontrivial one") {
  AlgebraPtr l4 = luk(4);
  AlgebraPtr one = trivial_algebra(l4->signature());
  CHECK(enumerate_homomorphisms(one, l4).empty());
  CHECK(enumerate_homomorphisms(l4, one).size() == 1);
}
