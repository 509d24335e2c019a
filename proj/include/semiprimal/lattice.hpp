#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiprimal/algebra.hpp"

namespace semiprimal {

/// A validated bounded-lattice reduct of an algebra: a pair of operation
/// symbols forming a lattice, with the induced order and its extremes.
struct LatticeReduct {
  AlgebraPtr algebra;
  int meet_op = -1;
  int join_op = -1;
  int bot = 0;
  int top = 0;
  std::vector<uint8_t> leq_table;  // n*n, row-major
  bool ambiguous = false;          // another valid op pair exists; first match won

  int n() const { return algebra->size(); }
  bool le(int x, int y) const { return leq_table[static_cast<std::size_t>(x) * n() + y] != 0; }
  int meet(int x, int y) const { return algebra->apply2(meet_op, x, y); }
  int join(int x, int y) const { return algebra->apply2(join_op, x, y); }
};

struct LatticeHints {
  std::string meet;
  std::string join;
};

LatticeReduct detect_lattice(const AlgebraPtr& a, std::optional<LatticeHints> hints = {});

/// n*n boolean table of the induced order, x <= y iff x /\ y = x.
std::vector<uint8_t> order_leq(const LatticeReduct& r);

enum class UnaryKind { T, Tau, Chi };

struct DerivedUnary {
  UnaryKind kind;
  int param_element = -1;            // for T / Tau
  std::vector<int> param_elements;   // for Chi
  std::vector<int> table;
};

DerivedUnary derived_unary(const LatticeReduct& r, UnaryKind kind, int element);
DerivedUnary derived_unary_chi(const LatticeReduct& r, const std::vector<int>& subset);

/// Ternary table of the median (x/\y) \/ (x/\z) \/ (y/\z).
std::vector<int> median_eval(const LatticeReduct& r);

/// x -> y := max{z : x*z <= y}, validated against the full residuation
/// biconditional.  Throws NotResiduated when the max is missing for some pair,
/// when the law fails, or when prod_op is not a commutative monotone operation.
std::vector<int> residuum_from_monoid(const LatticeReduct& r, int prod_op);
std::vector<int> residuum_from_monoid(const LatticeReduct& r, const std::string& prod_name);

}  // namespace semiprimal
