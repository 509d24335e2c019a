#include <random>

#include "doctest.h"
#include "semiprimal/experiments.hpp"
#include "semiprimal/lattice.hpp"
#include "semiprimal/primality.hpp"

using namespace semiprimal;

TEST_CASE("sampler: shape, determinism, errors") {
  SampleReport r = murskii_sample(2, {2}, 60, 42);
  CHECK(r.samples == 60);
  CHECK(r.fraction >= 0.0);
  CHECK(r.fraction <= 1.0);
  CHECK(r.wilson_low <= r.fraction);
  CHECK(r.fraction <= r.wilson_high);
  CHECK(r.wilson_low >= 0.0);
  CHECK(r.wilson_high <= 1.0);

  SampleReport again = murskii_sample(2, {2}, 60, 42);
  CHECK(again.semi_primal == r.semi_primal);
  CHECK(again.fraction == r.fraction);

  SampleReport other = murskii_sample(2, {2}, 60, 43);
  CHECK((other.semi_primal != r.semi_primal || true));  // may coincide; only determinism matters

  CHECK_THROWS_AS(murskii_sample(2, {2}, 0, 1), EmptySample);
  CHECK_THROWS_AS(murskii_sample(9, {2}, 10, 1), InvalidInput);
  CHECK_THROWS_AS(murskii_sample(3, {2}, 100000, 1, std::chrono::milliseconds(0)),
                  BudgetExceeded);
}

TEST_CASE("per-sample streams are independent of the total sample count") {
  // sample i sees the same algebra no matter how many samples run
  for (int i : {0, 5, 17}) {
    AlgebraPtr a = murskii_instance(3, {2}, 7, i);
    AlgebraPtr b = murskii_instance(3, {2}, 7, i);
    for (int op = 0; op < a->num_ops(); ++op) CHECK(a->table(op) == b->table(op));
  }
}

TEST_CASE("route fuzzing finds no disagreements") {
  CHECK(route_fuzz(2, {2}, 150, 42) == 0);
  CHECK(route_fuzz(3, {2}, 120, 42) == 0);
  CHECK(route_fuzz(4, {2}, 60, 42) == 0);
  CHECK(route_fuzz(3, {1, 2}, 60, 1) == 0);
}

TEST_CASE("routes also agree on random expansions of the diamond lattice") {
  // 0 < a,b < 1 with a and b incomparable: richer square subuniverses than chains
  std::vector<int> meet{0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3};
  std::vector<int> join{0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3};
  std::mt19937_64 rng(2468);
  std::uniform_int_distribution<int> value(0, 3);
  for (int i = 0; i < 60; ++i) {
    Signature sig{{{"meet", 2}, {"join", 2}, {"g", 2}, {"u", 1}, {"0", 0}, {"1", 0}}};
    std::vector<int> g(16), u(4);
    for (auto& v : g) v = value(rng);
    for (auto& v : u) v = value(rng);
    AlgebraPtr a = make_algebra(4, sig, {meet, join, g, u, {0}, {3}});
    LatticeReduct r = detect_lattice(a, LatticeHints{"meet", "join"});
    bool t = is_semi_primal(a, r, SemiRoute::T).level == PrimalityLevel::semi_primal;
    bool sq = is_semi_primal(a, r, SemiRoute::Square).level == PrimalityLevel::semi_primal;
    bool d =
        is_semi_primal(a, r, SemiRoute::Discriminator).level == PrimalityLevel::semi_primal;
    CHECK(t == sq);
    CHECK(sq == d);
  }
}
