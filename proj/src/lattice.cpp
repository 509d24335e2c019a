#include "semiprimal/lattice.hpp"

#include <algorithm>

namespace semiprimal {

namespace {

bool is_semilattice(const FiniteAlgebra& a, int op) {
  int n = a.size();
  for (int x = 0; x < n; ++x) {
    if (a.apply2(op, x, x) != x) return false;
    for (int y = 0; y < n; ++y) {
      if (a.apply2(op, x, y) != a.apply2(op, y, x)) return false;
      for (int z = 0; z < n; ++z) {
        if (a.apply2(op, a.apply2(op, x, y), z) != a.apply2(op, x, a.apply2(op, y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool absorption_holds(const FiniteAlgebra& a, int meet, int join) {
  int n = a.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a.apply2(meet, x, a.apply2(join, x, y)) != x) return false;
      if (a.apply2(join, x, a.apply2(meet, x, y)) != x) return false;
    }
  }
  return true;
}

// Validates the pair and fills in order/bounds; fails if bot == top.
std::optional<LatticeReduct> try_pair(const AlgebraPtr& a, int meet, int join) {
  if (!is_semilattice(*a, meet) || !is_semilattice(*a, join)) return std::nullopt;
  if (!absorption_holds(*a, meet, join)) return std::nullopt;

  LatticeReduct r;
  r.algebra = a;
  r.meet_op = meet;
  r.join_op = join;
  int n = a->size();
  r.leq_table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      r.leq_table[static_cast<std::size_t>(x) * n + y] = (a->apply2(meet, x, y) == x);
    }
  }
  int bot = 0, top = 0;
  for (int x = 1; x < n; ++x) {
    bot = a->apply2(meet, bot, x);
    top = a->apply2(join, top, x);
  }
  r.bot = bot;
  r.top = top;
  if (bot == top) return std::nullopt;
  return r;
}

bool preferred_meet_name(const std::string& s) {
  return s == "meet" || s == "∧" || s == "and" || s == "min";
}
bool preferred_join_name(const std::string& s) {
  return s == "join" || s == "∨" || s == "or" || s == "max";
}

}  // namespace

LatticeReduct detect_lattice(const AlgebraPtr& a, std::optional<LatticeHints> hints) {
  std::vector<int> binary;
  for (int op = 0; op < a->num_ops(); ++op) {
    if (a->arity(op) == 2) binary.push_back(op);
  }

  std::vector<std::pair<int, int>> candidates;
  if (hints) {
    int m = a->signature().index_of(hints->meet);
    int j = a->signature().index_of(hints->join);
    if (m < 0 || j < 0) throw InvalidInput("lattice hint names an unknown operation");
    candidates.emplace_back(m, j);
  } else {
    for (int m : binary) {
      for (int j : binary) {
        if (m == j) continue;
        if (preferred_meet_name(a->op_name(m)) && preferred_join_name(a->op_name(j))) {
          candidates.emplace_back(m, j);
        }
      }
    }
    for (int m : binary) {
      for (int j : binary) {
        if (m != j) candidates.emplace_back(m, j);
      }
    }
  }

  std::optional<LatticeReduct> found;
  for (auto [m, j] : candidates) {
    if (found) {
      // the swapped pair is just the dual order, not a genuine second reduct
      bool same = (m == found->meet_op && j == found->join_op);
      bool swapped = (m == found->join_op && j == found->meet_op);
      if (same || swapped) continue;
    }
    if (auto r = try_pair(a, m, j)) {
      if (!found) {
        found = std::move(r);
        if (hints) break;  // hinted pair validated; no ambiguity scan
      } else {
        found->ambiguous = true;
        break;
      }
    }
  }
  if (!found) throw NoLatticeReduct("no binary operation pair validates as a bounded lattice");
  return *found;
}

std::vector<uint8_t> order_leq(const LatticeReduct& r) { return r.leq_table; }

DerivedUnary derived_unary(const LatticeReduct& r, UnaryKind kind, int element) {
  int n = r.n();
  if (element < 0 || element >= n) throw InvalidInput("derived_unary: element out of range");
  DerivedUnary d;
  d.kind = kind;
  d.param_element = element;
  d.table.resize(n);
  for (int x = 0; x < n; ++x) {
    bool hit = kind == UnaryKind::T ? (x == element) : r.le(element, x);
    d.table[x] = hit ? r.top : r.bot;
  }
  return d;
}

DerivedUnary derived_unary_chi(const LatticeReduct& r, const std::vector<int>& subset) {
  int n = r.n();
  DerivedUnary d;
  d.kind = UnaryKind::Chi;
  d.param_elements = subset;
  d.table.assign(n, r.bot);
  for (int s : subset) {
    if (s < 0 || s >= n) throw InvalidInput("derived_unary_chi: element out of range");
    d.table[s] = r.top;
  }
  return d;
}

std::vector<int> median_eval(const LatticeReduct& r) {
  int n = r.n();
  std::vector<int> table(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = r.meet(x, y);
      for (int z = 0; z < n; ++z) {
        table[(static_cast<std::size_t>(x) * n + y) * n + z] =
            r.join(r.join(xy, r.meet(x, z)), r.meet(y, z));
      }
    }
  }
  return table;
}

std::vector<int> residuum_from_monoid(const LatticeReduct& r, int prod_op) {
  const FiniteAlgebra& a = *r.algebra;
  int n = a.size();
  if (prod_op < 0 || prod_op >= a.num_ops() || a.arity(prod_op) != 2) {
    throw InvalidInput("residuum_from_monoid: not a binary operation");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a.apply2(prod_op, x, y) != a.apply2(prod_op, y, x)) {
        throw NotResiduated("product is not commutative");
      }
      for (int z = 0; z < n; ++z) {
        if (r.le(x, y) && !r.le(a.apply2(prod_op, x, z), a.apply2(prod_op, y, z))) {
          throw NotResiduated("product is not monotone");
        }
      }
    }
  }

  std::vector<int> res(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // max{z : x*z <= y}
      std::vector<int> zs;
      for (int z = 0; z < n; ++z) {
        if (r.le(a.apply2(prod_op, x, z), y)) zs.push_back(z);
      }
      int best = -1;
      for (int m : zs) {
        bool top_of_all = true;
        for (int z : zs) {
          if (!r.le(z, m)) {
            top_of_all = false;
            break;
          }
        }
        if (top_of_all) {
          best = m;
          break;
        }
      }
      if (best < 0) throw NotResiduated("max{z : x*z <= y} does not exist");
      res[static_cast<std::size_t>(x) * n + y] = best;
    }
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        bool lhs = r.le(a.apply2(prod_op, x, y), z);
        bool rhs = r.le(x, res[static_cast<std::size_t>(y) * n + z]);
        if (lhs != rhs) throw NotResiduated("residuation law fails");
      }
    }
  }
  return res;
}

std::vector<int> residuum_from_monoid(const LatticeReduct& r, const std::string& prod_name) {
  int op = r.algebra->signature().index_of(prod_name);
  if (op < 0) throw InvalidInput("residuum_from_monoid: unknown operation '" + prod_name + "'");
  return residuum_from_monoid(r, op);
}

}  // namespace semiprimal
