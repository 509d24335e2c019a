#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semiprimal/errors.hpp"

namespace semiprimal {

inline constexpr std::size_t kDefaultSizeCap = 100000;

struct OpSymbol {
  std::string name;
  int arity = 0;
  bool operator==(const OpSymbol&) const = default;
};

struct Signature {
  std::vector<OpSymbol> ops;

  bool operator==(const Signature&) const = default;
  int index_of(std::string_view name) const;
  void check() const;  // unique names, arities >= 0
};

/// A finite algebra on the carrier {0, ..., size-1} with one total operation
/// table per symbol.  Tables are flattened row-major by argument order.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(int size, Signature sig, std::vector<std::vector<int>> tables,
                std::string name = {}, std::vector<std::string> element_names = {});

  int size() const { return size_; }
  const Signature& signature() const { return sig_; }
  int num_ops() const { return static_cast<int>(sig_.ops.size()); }
  int arity(int op) const { return sig_.ops[op].arity; }
  const std::string& op_name(int op) const { return sig_.ops[op].name; }
  const std::vector<int>& table(int op) const { return tables_[op]; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& element_names() const { return element_names_; }
  std::string element_name(int e) const;

  int apply(int op, std::span<const int> args) const;
  int apply0(int op) const { return tables_[op][0]; }
  int apply1(int op, int a) const { return tables_[op][a]; }
  int apply2(int op, int a, int b) const { return tables_[op][a * size_ + b]; }
  int apply3(int op, int a, int b, int c) const {
    return tables_[op][(a * size_ + b) * size_ + c];
  }

 private:
  int size_ = 1;
  Signature sig_;
  std::vector<std::vector<int>> tables_;
  std::string name_;
  std::vector<std::string> element_names_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

AlgebraPtr make_algebra(int size, Signature sig, std::vector<std::vector<int>> tables,
                        std::string name = {}, std::vector<std::string> element_names = {});

/// One-element algebra over `sig`; every operation returns 0.
AlgebraPtr trivial_algebra(const Signature& sig);

struct SubUniverse {
  AlgebraPtr parent;
  std::vector<int> elements;  // sorted, closed under all operations of parent

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int e) const;
  bool operator==(const SubUniverse& o) const { return elements == o.elements; }
};

struct Homomorphism {
  AlgebraPtr dom;
  AlgebraPtr cod;
  std::vector<int> map;  // length |dom|

  int operator()(int e) const { return map[e]; }
  bool is_injective() const;
  bool is_surjective() const;
  std::vector<int> image() const;  // sorted
};

struct Congruence {
  AlgebraPtr parent;
  std::vector<int> block_of;  // block ids, numbered by first occurrence
  int num_blocks = 0;
};

// -- operations ---------------------------------------------------------

std::vector<int> nullary_values(const FiniteAlgebra& a);

/// Smallest subuniverse containing `seed` (plus all nullary-operation values).
SubUniverse subuniverse_closure(const AlgebraPtr& a, std::span<const int> seed,
                                std::size_t cap = kDefaultSizeCap);

/// All subuniverses, sorted by (size, lexicographic elements).  The empty
/// subuniverse appears only when the signature has no nullary symbols.
std::vector<SubUniverse> enumerate_subuniverses(const AlgebraPtr& a);

std::vector<Homomorphism> enumerate_homomorphisms(const AlgebraPtr& a, const AlgebraPtr& b);

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const int> map);

struct InternalIso {
  SubUniverse dom;
  SubUniverse cod;
  std::vector<int> map;  // map[i] = image of dom.elements[i]

  bool is_identity() const;
};

/// All isomorphisms between subalgebras, identities included.
std::vector<InternalIso> internal_isomorphisms(const AlgebraPtr& a);

struct Product {
  AlgebraPtr algebra;
  std::vector<AlgebraPtr> factors;

  std::vector<int> decode(int e) const;
  int encode(std::span<const int> digits) const;
  Homomorphism projection(int i) const;
};

Product direct_product(std::vector<AlgebraPtr> factors, std::size_t cap = kDefaultSizeCap);
Product direct_product(std::vector<AlgebraPtr> factors, const Signature& sig_if_empty,
                       std::size_t cap = kDefaultSizeCap);

/// Smallest congruence containing `pairs`, by union-find fixpoint.
Congruence congruence_generated(const AlgebraPtr& a,
                                std::span<const std::pair<int, int>> pairs);

bool congruence_compatible(const FiniteAlgebra& a, std::span<const int> block_of);

struct Quotient {
  AlgebraPtr algebra;         // carrier = blocks
  Homomorphism surjection;    // canonical map
};

Quotient quotient(const AlgebraPtr& a, const Congruence& theta);

std::optional<Homomorphism> find_isomorphism(const AlgebraPtr& a, const AlgebraPtr& b);

/// The subuniverse as an algebra of its own, with `elements[i] -> i`.
AlgebraPtr sub_algebra(const SubUniverse& s);

// -- internals shared with other modules --------------------------------

/// How each element of an algebra is first obtained from generators: `op < 0`
/// marks a generator, otherwise `result = op(args)`.
struct DerivationStep {
  int op = -1;
  std::vector<int> args;
  int result = 0;
};

struct GeneratingPlan {
  std::vector<int> generators;
  std::vector<DerivationStep> steps;  // covers every element exactly once
};

/// Greedy generating set: repeatedly adds the element whose closure grows most.
GeneratingPlan generating_plan(const FiniteAlgebra& a);

}  // namespace semiprimal
