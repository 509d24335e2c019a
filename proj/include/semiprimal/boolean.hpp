#pragma once

#include <cstdint>
#include <vector>

#include "semiprimal/algebra.hpp"

namespace semiprimal {

/// The Boolean algebra 2^k in atom form: elements are the k-bit masks.
struct FiniteBooleanAlgebra {
  int atoms = 0;

  std::uint64_t size() const { return std::uint64_t(1) << atoms; }
  std::uint64_t one() const { return size() - 1; }
  bool operator==(const FiniteBooleanAlgebra&) const = default;
};

FiniteBooleanAlgebra bool_algebra(int k, std::size_t cap = kDefaultSizeCap);

/// Principal ultrafilters, one per atom, in atom order.
std::vector<int> ultrafilters(const FiniteBooleanAlgebra& b);

/// A homomorphism dom -> cod, stored by its dual map atoms(cod) -> atoms(dom):
/// bit j of apply(x) is bit atom_map[j] of x.
struct BooleanHom {
  FiniteBooleanAlgebra dom;
  FiniteBooleanAlgebra cod;
  std::vector<int> atom_map;

  std::uint64_t apply(std::uint64_t x) const;
};

/// All homomorphisms b1 -> b2; there are k1^k2 of them for k1 >= 1.
std::vector<BooleanHom> enumerate_boolean_homs(const FiniteBooleanAlgebra& b1,
                                               const FiniteBooleanAlgebra& b2);

/// Bridge to the algebra kernel: signature (meet, join, neg, 0, 1) over masks.
AlgebraPtr as_finite_algebra(const FiniteBooleanAlgebra& b, std::size_t cap = kDefaultSizeCap);

const Signature& boolean_signature();

}  // namespace semiprimal
