#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semiprimal/algebra.hpp"
#include "semiprimal/boolean.hpp"
#include "semiprimal/lattice.hpp"
#include "semiprimal/primality.hpp"

namespace semiprimal {

/// A base algebra L certified semi-primal, with its lattice reduct and the
/// canonical subuniverse enumeration that factor/variety ids refer to.
struct BaseAlgebra {
  AlgebraPtr alg;
  LatticeReduct reduct;
  std::vector<SubUniverse> subs;
  PrimalityVerdict verdict;

  int n() const { return alg->size(); }
  int bot() const { return reduct.bot; }
  int top() const { return reduct.top; }
  int sub_id_of(const std::vector<int>& sorted_elements) const;  // -1 when absent
  int smallest_sub_id() const;                                   // <0,1>
  int full_sub_id() const;
  bool sub_leq(int s, int t) const;  // containment of subuniverses
};

using BasePtr = std::shared_ptr<const BaseAlgebra>;

/// Validates semi-primality (all three routes) and freezes the subuniverse
/// order.  Throws NotSemiPrimalBase otherwise.
BasePtr certify_base(const AlgebraPtr& alg, std::optional<LatticeHints> hints = {});

/// A finite member of the variety generated by the base, in canonical form:
/// an explicit set of tuples inside a product of subalgebras of L.
struct VarietyAlgebra {
  BasePtr base;
  std::vector<int> factors;                // subuniverse ids of the base
  std::vector<std::vector<int>> carrier;   // sorted tuples of base elements
  bool full_product = true;
  AlgebraPtr concrete;                     // carrier[i] is element i

  int size() const { return static_cast<int>(carrier.size()); }
  int num_factors() const { return static_cast<int>(factors.size()); }
  int index_of(const std::vector<int>& tuple) const;  // -1 when absent
};

/// Normal form via the evaluation map a |-> (h(a))_h over Hom(A, L).  Throws
/// NotInVariety when the evaluation is not injective.  `eval_index`, when
/// given, receives the carrier index of every element of `a`.
VarietyAlgebra canonicalize(const AlgebraPtr& a, const BasePtr& base,
                            std::vector<int>* eval_index = nullptr);

VarietyAlgebra full_product_variety(const BasePtr& base, std::vector<int> factor_ids,
                                    std::size_t cap = kDefaultSizeCap);

struct SkeletonResult {
  FiniteBooleanAlgebra skeleton;
  std::vector<int> inclusion;        // inclusion[mask] = carrier index
  std::vector<int> mask_of_carrier;  // -1 outside the skeleton
  std::vector<std::uint64_t> atom_factor_bits;  // atom i as a factor bitset
};

/// Boolean skeleton {a : T_1(a) = a}, atom-normalized.
SkeletonResult skeleton(const VarietyAlgebra& a);

/// The Boolean power M[B]: partition-of-unity maps M -> B with operations by
/// the join-of-meets formula.
struct BooleanPower {
  AlgebraPtr algebra;  // |M|^atoms elements
  AlgebraPtr base_m;
  FiniteBooleanAlgebra b;

  std::vector<int> digits(int e) const;  // value at each atom
  int index_of_digits(std::span<const int> d) const;
  std::vector<std::uint64_t> xi(int e) const;  // atom mask per element of M
  int index_of_xi(std::span<const std::uint64_t> x) const;
};

BooleanPower boolean_power(const AlgebraPtr& m, const FiniteBooleanAlgebra& b,
                           std::size_t cap = kDefaultSizeCap);

/// Boolean power of the base, put into canonical variety form.
VarietyAlgebra power_as_variety(const BasePtr& base, const FiniteBooleanAlgebra& b,
                                std::size_t cap = kDefaultSizeCap);

struct UnitEmbedding {
  SkeletonResult skel;
  BooleanPower power;      // L[S(A)]
  Homomorphism embedding;  // injective; restriction to the skeleton is an iso
};

/// The unit a |-> T_(.)(a) of the skeleton/power adjunction.
UnitEmbedding unit_embedding(const VarietyAlgebra& a);

enum class TransposeDirection { forward, backward, both };

struct TransposeResult {
  std::vector<BooleanHom> boolean_homs;    // S(A) -> B
  std::vector<Homomorphism> algebra_homs;  // A -> L[B]
  std::vector<int> forward;                // index bijection, boolean -> algebra
  std::vector<int> backward;
  SkeletonResult skel;
  BooleanPower power;
};

/// The adjunction transposes, computed in both directions by enumeration and
/// verified mutually inverse.  Throws BijectionFailure otherwise.
TransposeResult transpose(const VarietyAlgebra& a, const FiniteBooleanAlgebra& b,
                          TransposeDirection dir = TransposeDirection::both);

struct SkeletonHomBijection {
  std::vector<Homomorphism> homs_to_base;  // A -> L
  SkeletonResult skel;
  std::vector<int> hom_to_atom;  // restriction h -> the atom its kernel picks
};

/// Hom(A, L) <-> BA(S(A), 2), by restriction; inverse checked against the
/// construction  h(a) = ell  iff  h(T_ell(a)) = 1.
SkeletonHomBijection skeleton_hom_bijection(const VarietyAlgebra& a);

struct QuotientFunctorResult {
  VarietyAlgebra algebra;
  Homomorphism surjection;  // from a.concrete
};

/// Largest quotient satisfying chi_S(x) = 1, by congruence generation.
QuotientFunctorResult quotient_functor(const VarietyAlgebra& a, int sub_id);

/// The Boolean power over the subalgebra S, viewed inside the variety of L.
VarietyAlgebra inclusion_functor(const BasePtr& base, const FiniteBooleanAlgebra& b, int sub_id,
                                 std::size_t cap = kDefaultSizeCap);

}  // namespace semiprimal
