#include "doctest.h"
#include "oracles.hpp"
#include "semiprimal/boolean.hpp"

using namespace semiprimal;

TEST_CASE("bool_algebra sizes and ultrafilters") {
  CHECK(bool_algebra(0).size() == 1);
  CHECK(bool_algebra(1).size() == 2);
  CHECK(bool_algebra(3).size() == 8);
  CHECK(bool_algebra(3).atoms == 3);
  CHECK_THROWS_AS(bool_algebra(40), SizeCapExceeded);

  CHECK(ultrafilters(bool_algebra(2)).size() == 2);
  CHECK(ultrafilters(bool_algebra(1)).size() == 1);
  CHECK(ultrafilters(bool_algebra(0)).empty());
}

TEST_CASE("Boolean hom counts") {
  CHECK(enumerate_boolean_homs(bool_algebra(2), bool_algebra(2)).size() == 4);
  CHECK(enumerate_boolean_homs(bool_algebra(1), bool_algebra(3)).size() == 1);
  CHECK(enumerate_boolean_homs(bool_algebra(2), bool_algebra(1)).size() == 2);
  CHECK(enumerate_boolean_homs(bool_algebra(0), bool_algebra(1)).empty());
  CHECK(enumerate_boolean_homs(bool_algebra(2), bool_algebra(0)).size() == 1);
}

TEST_CASE("Boolean homs act as lattice homomorphisms on masks") {
  FiniteBooleanAlgebra b1 = bool_algebra(3), b2 = bool_algebra(2);
  for (const BooleanHom& h : enumerate_boolean_homs(b1, b2)) {
    for (std::uint64_t x = 0; x < b1.size(); ++x) {
      for (std::uint64_t y = 0; y < b1.size(); ++y) {
        CHECK(h.apply(x & y) == (h.apply(x) & h.apply(y)));
        CHECK(h.apply(x | y) == (h.apply(x) | h.apply(y)));
      }
      CHECK(h.apply(~x & b1.one()) == (~h.apply(x) & b2.one()));
    }
    CHECK(h.apply(0) == 0);
    CHECK(h.apply(b1.one()) == b2.one());
  }
}

TEST_CASE("hom enumeration agrees with the algebra kernel") {
  for (int k1 : {1, 2, 3}) {
    for (int k2 : {0, 1, 2, 3}) {
      AlgebraPtr a1 = as_finite_algebra(bool_algebra(k1));
      AlgebraPtr a2 = as_finite_algebra(bool_algebra(k2));
      auto fast = enumerate_boolean_homs(bool_algebra(k1), bool_algebra(k2));
      auto slow = enumerate_homomorphisms(a1, a2);
      REQUIRE(fast.size() == slow.size());
      // same set of mask maps
      std::vector<std::vector<int>> fast_maps;
      for (const BooleanHom& h : fast) {
        std::vector<int> m(a1->size());
        for (int x = 0; x < a1->size(); ++x) {
          m[x] = static_cast<int>(h.apply(static_cast<std::uint64_t>(x)));
        }
        fast_maps.push_back(std::move(m));
      }
      std::sort(fast_maps.begin(), fast_maps.end());
      for (std::size_t i = 0; i < slow.size(); ++i) CHECK(fast_maps[i] == slow[i].map);
    }
  }
}

TEST_CASE("finite Stone round trip") {
  for (int k = 0; k <= 4; ++k) {
    FiniteBooleanAlgebra b = bool_algebra(k);
    auto ufs = ultrafilters(b);
    CHECK(static_cast<int>(ufs.size()) == b.atoms);
    // clopen algebra of the discrete ultrafilter space is 2^k again
    FiniteBooleanAlgebra clopens = bool_algebra(static_cast<int>(ufs.size()));
    CHECK(clopens == b);
    if (k <= 3) {
      CHECK(find_isomorphism(as_finite_algebra(clopens), as_finite_algebra(b)).has_value());
    }
  }
}

TEST_CASE("round trip through the algebra form recovers the atoms") {
  AlgebraPtr a = as_finite_algebra(bool_algebra(2));
  // atoms = elements covering 0: exactly the singletons {1, 2}
  auto subs = enumerate_subuniverses(a);
  CHECK(subs.back().size() == 4);
}
