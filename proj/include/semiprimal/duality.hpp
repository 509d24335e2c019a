#pragma once

#include <vector>

#include "semiprimal/variety.hpp"

namespace semiprimal {

/// A finite dual-category object: points labelled by subuniverse ids of L.
struct StoneLObject {
  BasePtr base;
  std::vector<int> v;  // one subuniverse id per point

  int points() const { return static_cast<int>(v.size()); }
};

/// map with  v_cod(m(x)) <= v_dom(x)  for all points x.
struct StoneLMorphism {
  StoneLObject dom;
  StoneLObject cod;
  std::vector<int> map;
};

StoneLMorphism make_stonel_morphism(StoneLObject dom, StoneLObject cod, std::vector<int> map);

struct SigmaResult {
  StoneLObject object;
  std::vector<Homomorphism> homs;  // the points, in enumeration order
};

/// Sigma_L(A) = (Hom(A, L), im).
SigmaResult sigma_obj(const VarietyAlgebra& a);

/// Sigma_L f : Sigma(A2) -> Sigma(A1) by precomposition, for f : A1 -> A2.
StoneLMorphism sigma_mor(const Homomorphism& f, const SigmaResult& sigma_dom,
                         const SigmaResult& sigma_cod);

/// Pi_L(X, v) = product of the labelled subalgebras.
VarietyAlgebra pi_obj(const StoneLObject& x, std::size_t cap = kDefaultSizeCap);

/// Pi_L m : Pi(Y) -> Pi(X) by precomposition.
Homomorphism pi_mor(const StoneLMorphism& m, const VarietyAlgebra& pi_dom,
                    const VarietyAlgebra& pi_cod, std::size_t cap = kDefaultSizeCap);

/// The evaluation isomorphism A = Pi_L Sigma_L (A); throws RoundTripFailure.
Homomorphism roundtrip_algebra(const VarietyAlgebra& a);

struct SpaceRoundTrip {
  std::vector<int> point_map;  // x -> index of pr_x among Hom(Pi(X), L)
  SigmaResult sigma_of_pi;
};

/// The bijection X = Sigma_L Pi_L (X) matching labels; throws RoundTripFailure.
SpaceRoundTrip roundtrip_space(const StoneLObject& x, std::size_t cap = kDefaultSizeCap);

// the functors between Set_L and Set at finite level
StoneLObject vtop_obj(const BasePtr& base, int points);
StoneLObject vbot_obj(const BasePtr& base, int points);
StoneLObject vs_obj(const BasePtr& base, int points, int sub_id);
std::vector<int> c_points(const StoneLObject& x);                  // v(x) = <0,1>
std::vector<int> cs_points(const StoneLObject& x, int sub_id);     // v(x) <= S
StoneLObject restrict_object(const StoneLObject& x, const std::vector<int>& points);

/// The action of C / C_S on a morphism: the plain map between the selected
/// point sets (selected points always map into selected points).
std::vector<int> restrict_morphism(const StoneLMorphism& m, const std::vector<int>& dom_points,
                                   const std::vector<int>& cod_points);

/// All maps dom -> cod satisfying the label condition; the finite hom-set.
std::vector<StoneLMorphism> enumerate_stonel_morphisms(const StoneLObject& dom,
                                                       const StoneLObject& cod);

}  // namespace semiprimal
