#include "semiprimal/boolean.hpp"

namespace semiprimal {

FiniteBooleanAlgebra bool_algebra(int k, std::size_t cap) {
  if (k < 0) throw InvalidInput("bool_algebra: negative atom count");
  if (k >= 60 || (std::size_t(1) << k) > cap) throw SizeCapExceeded("bool_algebra");
  return {k};
}

std::vector<int> ultrafilters(const FiniteBooleanAlgebra& b) {
  std::vector<int> out(b.atoms);
  for (int i = 0; i < b.atoms; ++i) out[i] = i;
  return out;
}

std::uint64_t BooleanHom::apply(std::uint64_t x) const {
  std::uint64_t y = 0;
  for (int j = 0; j < cod.atoms; ++j) {
    if (x >> atom_map[j] & 1) y |= std::uint64_t(1) << j;
  }
  return y;
}

std::vector<BooleanHom> enumerate_boolean_homs(const FiniteBooleanAlgebra& b1,
                                               const FiniteBooleanAlgebra& b2) {
  // a degenerate domain only maps to a degenerate codomain
  if (b1.atoms == 0 && b2.atoms > 0) return {};
  std::vector<BooleanHom> out;
  std::vector<int> atom_map(b2.atoms, 0);
  while (true) {
    out.push_back({b1, b2, atom_map});
    int t = b2.atoms - 1;
    while (t >= 0 && ++atom_map[t] == b1.atoms) atom_map[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

const Signature& boolean_signature() {
  static const Signature sig{{{"meet", 2}, {"join", 2}, {"neg", 1}, {"0", 0}, {"1", 0}}};
  return sig;
}

AlgebraPtr as_finite_algebra(const FiniteBooleanAlgebra& b, std::size_t cap) {
  if (b.size() > cap) throw SizeCapExceeded("as_finite_algebra");
  int n = static_cast<int>(b.size());
  std::uint64_t one = b.one();

  std::vector<int> meet(static_cast<std::size_t>(n) * n), join(meet.size()), neg(n);
  for (int x = 0; x < n; ++x) {
    neg[x] = static_cast<int>(~static_cast<std::uint64_t>(x) & one);
    for (int y = 0; y < n; ++y) {
      meet[static_cast<std::size_t>(x) * n + y] = x & y;
      join[static_cast<std::size_t>(x) * n + y] = x | y;
    }
  }
  return make_algebra(n, boolean_signature(),
                      {std::move(meet), std::move(join), std::move(neg), {0}, {static_cast<int>(one)}},
                      "2^" + std::to_string(b.atoms));
}

}  // namespace semiprimal
