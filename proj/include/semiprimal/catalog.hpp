#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semiprimal/algebra.hpp"
#include "semiprimal/lattice.hpp"

namespace semiprimal::catalog {

struct Expected {
  std::string level;  // "primal" | "semi-primal" | "quasi-primal-only"
  std::optional<int> subuniverse_count;
  std::vector<std::vector<std::string>> subuniverses;  // by element name, when pinned
  std::string source;
};

struct Entry {
  std::string key;
  int param = 0;
  AlgebraPtr algebra;
  LatticeHints lattice{"meet", "join"};
  std::optional<std::string> prod_op;  // monoid operation for residuated entries
  Expected expected;
};

/// Builds a catalog algebra.  Parametric keys: tchain, moisil, lukasiewicz,
/// cornish, post (n >= 1) and pseudologic (1..3).  Fixed keys: the eight
/// Galatos-Jipsen entries R_5_1_17 .. R_5_1_22, R_6_2_11, R_6_3_9 and the
/// De Morgan monoids demorgan_C4, demorgan_D4 (with _noe variants).
Entry build(const std::string& key, int n = 0);

struct KeyInfo {
  std::string key;
  bool parametric = false;
  std::string params_hint;
  std::string summary;
};

std::vector<KeyInfo> list();

/// All commutative, associative, order-monotone tables with the given unit
/// that extend the fixed entries and admit all residuals.
std::vector<std::vector<int>> complete_monoid_tables(
    int n, const std::vector<uint8_t>& leq, int unit,
    const std::vector<std::array<int, 3>>& fixed);

}  // namespace semiprimal::catalog
