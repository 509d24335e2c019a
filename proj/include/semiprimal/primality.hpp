#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiprimal/algebra.hpp"
#include "semiprimal/lattice.hpp"

namespace semiprimal {

enum class PrimalityLevel { primal, semi_primal, quasi_primal_only, none };

std::string to_string(PrimalityLevel level);

struct Witness {
  enum class Kind { none, square, t_function, internal_iso, discriminator };
  Kind kind = Kind::none;
  std::vector<std::pair<int, int>> square_sub;        // offending subuniverse of A^2
  int t_element = -1;                                 // which T_ell failed
  std::vector<std::pair<int, int>> violating_tuple;   // arguments that escaped
  std::optional<InternalIso> iso;                     // non-identity internal isomorphism
};

struct PrimalityVerdict {
  PrimalityLevel level = PrimalityLevel::none;
  std::string route;
  Witness witness;
};

enum class SemiRoute { T, Square, Discriminator, All };

SemiRoute route_from_string(const std::string& s);
std::string to_string(SemiRoute r);

/// nullopt when f preserves every generated subalgebra, otherwise the first
/// violating argument tuple in lexicographic order.
std::optional<std::vector<int>> preserves_subuniverses(const AlgebraPtr& a,
                                                       const std::vector<int>& f_table, int arity);

/// A^2 together with its subuniverses, decoded to pair form.  Shared by the
/// three semi-primality routes.
struct SquareSubs {
  Product square;
  std::vector<SubUniverse> subs;
  std::vector<std::vector<std::pair<int, int>>> pairs;  // per subuniverse
};

SquareSubs square_subuniverses(const AlgebraPtr& a);

std::vector<int> literal_discriminator_table(int n);

struct QuasiPrimalResult {
  bool quasi_primal = false;
  Witness witness;
};

QuasiPrimalResult is_quasi_primal(const AlgebraPtr& a, const LatticeReduct& r,
                                  const SquareSubs* ctx = nullptr);

PrimalityVerdict is_semi_primal(const AlgebraPtr& a, const LatticeReduct& r,
                                SemiRoute route = SemiRoute::All);

PrimalityVerdict is_primal(const AlgebraPtr& a, const LatticeReduct& r,
                           SemiRoute route = SemiRoute::All);

std::vector<int> idempotent_elements(const AlgebraPtr& a, int prod_op);

/// Commutative-monoid-with-unit-top and residuation checks; returns the
/// residuum table.  Throws NotFLew when any axiom fails.
std::vector<int> validate_flew(const AlgebraPtr& a, const LatticeReduct& r, int prod_op);

/// Least n <= max_n with  x \/ neg(x^n) = 1  for all x, where neg x = x -> 0.
std::optional<int> flew_quasiprimal_witness(const AlgebraPtr& a, const LatticeReduct& r,
                                            int prod_op, int max_n);

/// The composite  t(x,y,z) = (d(x,y) /\ x) \/ (c(x,y) /\ z)  built from the
/// T_ell tables; equals the literal discriminator when the algebra is
/// semi-primal.
std::vector<int> build_discriminator_from_T(const AlgebraPtr& a, const LatticeReduct& r);

}  // namespace semiprimal
