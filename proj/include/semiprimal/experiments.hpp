#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "semiprimal/algebra.hpp"

namespace semiprimal {

struct SampleReport {
  int chain_size = 0;
  std::vector<int> extra_arities;
  int samples = 0;
  int semi_primal = 0;
  double fraction = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
  std::uint64_t seed = 0;
};

/// Random bounded-chain expansions: the chain lattice plus uniform random
/// tables for the extra operations, semi-primality decided by the T-route.
/// Reproducible: sample i draws from a stream derived from (seed, i).
SampleReport murskii_sample(int chain_size, const std::vector<int>& extra_arities, int samples,
                            std::uint64_t seed,
                            std::optional<std::chrono::milliseconds> budget = {});

/// Runs all three semi-primality routes per sample; returns the number of
/// disagreements (zero unless the implementation is wrong).
int route_fuzz(int chain_size, const std::vector<int>& extra_arities, int samples,
               std::uint64_t seed);

/// The random algebra a sampler run sees at index `i` (for reproducing cases).
AlgebraPtr murskii_instance(int chain_size, const std::vector<int>& extra_arities,
                            std::uint64_t seed, int i);

std::pair<double, double> wilson_interval(int hits, int samples, double z = 1.959964);

}  // namespace semiprimal
