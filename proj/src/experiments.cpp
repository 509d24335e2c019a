#include "semiprimal/experiments.hpp"

#include <cmath>
#include <random>

#include "semiprimal/lattice.hpp"
#include "semiprimal/primality.hpp"

namespace semiprimal {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_params(int chain_size, const std::vector<int>& extra_arities) {
  if (chain_size < 2 || chain_size > 5) throw InvalidInput("chain size must be in 2..5");
  for (int a : extra_arities) {
    if (a < 1 || a > 3) throw InvalidInput("extra op arity must be in 1..3");
  }
}

}  // namespace

AlgebraPtr murskii_instance(int chain_size, const std::vector<int>& extra_arities,
                            std::uint64_t seed, int i) {
  check_params(chain_size, extra_arities);
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i) + 1)));
  int n = chain_size;

  Signature sig{{{"meet", 2}, {"join", 2}, {"0", 0}, {"1", 0}}};
  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(meet.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      meet[static_cast<std::size_t>(x) * n + y] = std::min(x, y);
      join[static_cast<std::size_t>(x) * n + y] = std::max(x, y);
    }
  }
  std::vector<std::vector<int>> tables{std::move(meet), std::move(join), {0}, {n - 1}};

  std::uniform_int_distribution<int> value(0, n - 1);
  for (std::size_t j = 0; j < extra_arities.size(); ++j) {
    int k = extra_arities[j];
    sig.ops.push_back({"g" + std::to_string(j), k});
    std::size_t len = 1;
    for (int t = 0; t < k; ++t) len *= n;
    std::vector<int> tab(len);
    for (auto& v : tab) v = value(rng);
    tables.push_back(std::move(tab));
  }
  return make_algebra(n, std::move(sig), std::move(tables), "sample" + std::to_string(i));
}

std::pair<double, double> wilson_interval(int hits, int samples, double z) {
  double s = samples;
  double p = hits / s;
  double z2 = z * z;
  double denom = 1.0 + z2 / s;
  double center = (p + z2 / (2 * s)) / denom;
  double half = z * std::sqrt(p * (1 - p) / s + z2 / (4 * s * s)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

SampleReport murskii_sample(int chain_size, const std::vector<int>& extra_arities, int samples,
                            std::uint64_t seed,
                            std::optional<std::chrono::milliseconds> budget) {
  check_params(chain_size, extra_arities);
  if (samples <= 0) throw EmptySample("samples must be positive");

  auto start = std::chrono::steady_clock::now();
  SampleReport rep;
  rep.chain_size = chain_size;
  rep.extra_arities = extra_arities;
  rep.samples = samples;
  rep.seed = seed;

  for (int i = 0; i < samples; ++i) {
    if (budget && std::chrono::steady_clock::now() - start > *budget) {
      throw BudgetExceeded("sampling exceeded the wall-clock budget after " +
                           std::to_string(i) + " samples");
    }
    AlgebraPtr a = murskii_instance(chain_size, extra_arities, seed, i);
    LatticeReduct r = detect_lattice(a, LatticeHints{"meet", "join"});
    if (is_semi_primal(a, r, SemiRoute::T).level == PrimalityLevel::semi_primal) {
      ++rep.semi_primal;
    }
  }
  rep.fraction = static_cast<double>(rep.semi_primal) / samples;
  auto [lo, hi] = wilson_interval(rep.semi_primal, samples);
  rep.wilson_low = lo;
  rep.wilson_high = hi;
  return rep;
}

int route_fuzz(int chain_size, const std::vector<int>& extra_arities, int samples,
               std::uint64_t seed) {
  check_params(chain_size, extra_arities);
  if (samples <= 0) throw EmptySample("samples must be positive");
  int disagreements = 0;
  for (int i = 0; i < samples; ++i) {
    AlgebraPtr a = murskii_instance(chain_size, extra_arities, seed, i);
    LatticeReduct r = detect_lattice(a, LatticeHints{"meet", "join"});
    bool t = is_semi_primal(a, r, SemiRoute::T).level == PrimalityLevel::semi_primal;
    bool sq = is_semi_primal(a, r, SemiRoute::Square).level == PrimalityLevel::semi_primal;
    bool d = is_semi_primal(a, r, SemiRoute::Discriminator).level == PrimalityLevel::semi_primal;
    if (t != sq || sq != d) ++disagreements;
  }
  return disagreements;
}

}  // namespace semiprimal
