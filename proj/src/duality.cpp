#include "semiprimal/duality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semiprimal {

StoneLMorphism make_stonel_morphism(StoneLObject dom, StoneLObject cod, std::vector<int> map) {
  if (map.size() != static_cast<std::size_t>(dom.points())) {
    throw InvalidInput("stonel morphism: map length");
  }
  const BaseAlgebra& base = *dom.base;
  for (int x = 0; x < dom.points(); ++x) {
    if (map[x] < 0 || map[x] >= cod.points()) throw InvalidInput("stonel morphism: range");
    if (!base.sub_leq(cod.v[map[x]], dom.v[x])) {
      throw InvalidInput("stonel morphism: label condition w(m(x)) <= v(x) fails");
    }
  }
  return {std::move(dom), std::move(cod), std::move(map)};
}

SigmaResult sigma_obj(const VarietyAlgebra& a) {
  SigmaResult out;
  out.homs = enumerate_homomorphisms(a.concrete, a.base->alg);
  out.object.base = a.base;
  for (const Homomorphism& h : out.homs) {
    int id = a.base->sub_id_of(h.image());
    if (id < 0) throw std::logic_error("sigma_obj: hom image is not a subuniverse");
    out.object.v.push_back(id);
  }
  return out;
}

StoneLMorphism sigma_mor(const Homomorphism& f, const SigmaResult& sigma_dom,
                         const SigmaResult& sigma_cod) {
  // f : A1 -> A2 gives Sigma(A2) -> Sigma(A1), h |-> h o f
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < sigma_dom.homs.size(); ++i) {
    index[sigma_dom.homs[i].map] = static_cast<int>(i);
  }
  std::vector<int> map(sigma_cod.homs.size());
  for (std::size_t j = 0; j < sigma_cod.homs.size(); ++j) {
    const Homomorphism& h = sigma_cod.homs[j];
    std::vector<int> comp(f.map.size());
    for (std::size_t e = 0; e < f.map.size(); ++e) comp[e] = h.map[f.map[e]];
    auto it = index.find(comp);
    if (it == index.end()) throw std::logic_error("sigma_mor: composite not enumerated");
    map[j] = it->second;
  }
  return make_stonel_morphism(sigma_cod.object, sigma_dom.object, std::move(map));
}

VarietyAlgebra pi_obj(const StoneLObject& x, std::size_t cap) {
  return full_product_variety(x.base, x.v, cap);
}

Homomorphism pi_mor(const StoneLMorphism& m, const VarietyAlgebra& pi_dom,
                    const VarietyAlgebra& pi_cod, std::size_t cap) {
  (void)cap;
  // contravariant: from the product over m.cod to the product over m.dom
  if (pi_dom.factors != m.cod.v || pi_cod.factors != m.dom.v) {
    throw InvalidInput("pi_mor: products do not match the morphism");
  }
  std::vector<int> map(pi_dom.size());
  std::vector<int> tuple(m.dom.points());
  for (int g = 0; g < pi_dom.size(); ++g) {
    for (int x = 0; x < m.dom.points(); ++x) tuple[x] = pi_dom.carrier[g][m.map[x]];
    int idx = pi_cod.index_of(tuple);
    if (idx < 0) throw std::logic_error("pi_mor: image tuple escapes the carrier");
    map[g] = idx;
  }
  Homomorphism h{pi_dom.concrete, pi_cod.concrete, std::move(map)};
  if (!is_homomorphism(*h.dom, *h.cod, h.map)) {
    throw std::logic_error("pi_mor: composite is not a homomorphism");
  }
  return h;
}

Homomorphism roundtrip_algebra(const VarietyAlgebra& a) {
  SigmaResult sigma = sigma_obj(a);
  VarietyAlgebra pi = pi_obj(sigma.object);

  std::vector<int> map(a.size());
  std::vector<int> tuple(sigma.homs.size());
  for (int e = 0; e < a.size(); ++e) {
    for (std::size_t h = 0; h < sigma.homs.size(); ++h) tuple[h] = sigma.homs[h].map[e];
    int idx = pi.index_of(tuple);
    if (idx < 0) throw RoundTripFailure("evaluation tuple escapes Pi Sigma (A)");
    map[e] = idx;
  }

  Homomorphism h{a.concrete, pi.concrete, std::move(map)};
  if (!h.is_injective() || a.size() != pi.size()) {
    throw RoundTripFailure("evaluation is not bijective onto Pi Sigma (A)");
  }
  if (!is_homomorphism(*h.dom, *h.cod, h.map)) {
    throw RoundTripFailure("evaluation is not a homomorphism");
  }
  return h;
}

SpaceRoundTrip roundtrip_space(const StoneLObject& x, std::size_t cap) {
  VarietyAlgebra pi = pi_obj(x, cap);
  SpaceRoundTrip out{{}, sigma_obj(pi)};

  if (out.sigma_of_pi.object.points() != x.points()) {
    throw RoundTripFailure("Sigma Pi (X) has a different number of points");
  }

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < out.sigma_of_pi.homs.size(); ++i) {
    index[out.sigma_of_pi.homs[i].map] = static_cast<int>(i);
  }

  out.point_map.assign(x.points(), -1);
  std::vector<uint8_t> used(x.points(), 0);
  for (int p = 0; p < x.points(); ++p) {
    std::vector<int> pr(pi.size());
    for (int e = 0; e < pi.size(); ++e) pr[e] = pi.carrier[e][p];
    auto it = index.find(pr);
    if (it == index.end()) throw RoundTripFailure("projection missing from Sigma Pi (X)");
    if (used[it->second]) throw RoundTripFailure("two points map to one projection");
    used[it->second] = 1;
    if (out.sigma_of_pi.object.v[it->second] != x.v[p]) {
      throw RoundTripFailure("projection image disagrees with the label");
    }
    out.point_map[p] = it->second;
  }
  return out;
}

StoneLObject vtop_obj(const BasePtr& base, int points) {
  return {base, std::vector<int>(points, base->full_sub_id())};
}

StoneLObject vbot_obj(const BasePtr& base, int points) {
  return {base, std::vector<int>(points, base->smallest_sub_id())};
}

StoneLObject vs_obj(const BasePtr& base, int points, int sub_id) {
  if (sub_id < 0 || sub_id >= static_cast<int>(base->subs.size())) {
    throw InvalidInput("vs_obj: bad subuniverse id");
  }
  return {base, std::vector<int>(points, sub_id)};
}

std::vector<int> cs_points(const StoneLObject& x, int sub_id) {
  std::vector<int> out;
  for (int p = 0; p < x.points(); ++p) {
    if (x.base->sub_leq(x.v[p], sub_id)) out.push_back(p);
  }
  return out;
}

std::vector<int> c_points(const StoneLObject& x) {
  return cs_points(x, x.base->smallest_sub_id());
}

StoneLObject restrict_object(const StoneLObject& x, const std::vector<int>& points) {
  StoneLObject out{x.base, {}};
  for (int p : points) {
    if (p < 0 || p >= x.points()) throw InvalidInput("restrict_object: point out of range");
    out.v.push_back(x.v[p]);
  }
  return out;
}

std::vector<int> restrict_morphism(const StoneLMorphism& m, const std::vector<int>& dom_points,
                                   const std::vector<int>& cod_points) {
  std::vector<int> cod_pos(m.cod.points(), -1);
  for (std::size_t i = 0; i < cod_points.size(); ++i) cod_pos[cod_points[i]] = static_cast<int>(i);
  std::vector<int> out;
  for (int p : dom_points) {
    int q = cod_pos[m.map[p]];
    if (q < 0) throw InvalidInput("restrict_morphism: image leaves the selected points");
    out.push_back(q);
  }
  return out;
}

std::vector<StoneLMorphism> enumerate_stonel_morphisms(const StoneLObject& dom,
                                                       const StoneLObject& cod) {
  std::vector<StoneLMorphism> out;
  int m = dom.points(), n = cod.points();
  if (m == 0) {
    out.push_back({dom, cod, {}});
    return out;
  }
  if (n == 0) return out;  // nowhere to send points
  std::vector<int> map(m, 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x) ok = dom.base->sub_leq(cod.v[map[x]], dom.v[x]);
    if (ok) out.push_back({dom, cod, map});
    int t = m - 1;
    while (t >= 0 && ++map[t] == n) map[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

}  // namespace semiprimal
