#include "semiprimal/json_io.hpp"

#include <fstream>

namespace semiprimal {

namespace {

json table_to_nested(const std::vector<int>& table, int n, int arity) {
  if (arity == 0) return table[0];
  if (arity == 1) return json(table);
  std::size_t chunk = table.size() / n;
  json out = json::array();
  for (int x = 0; x < n; ++x) {
    std::vector<int> sub(table.begin() + x * chunk, table.begin() + (x + 1) * chunk);
    out.push_back(table_to_nested(sub, n, arity - 1));
  }
  return out;
}

void nested_to_table(const json& j, int n, int arity, std::vector<int>& out,
                     const std::string& path) {
  if (arity == 0) {
    if (!j.is_number_integer()) throw InvalidInput(path + ": expected an integer");
    out.push_back(j.get<int>());
    return;
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput(path + ": expected an array of length " + std::to_string(n));
  }
  for (int x = 0; x < n; ++x) {
    nested_to_table(j[x], n, arity - 1, out, path + "[" + std::to_string(x) + "]");
  }
}

json pair_list(const std::vector<std::pair<int, int>>& pairs, const FiniteAlgebra& a) {
  json out = json::array();
  for (auto [x, y] : pairs) out.push_back({a.element_name(x), a.element_name(y)});
  return out;
}

}  // namespace

json algebra_to_json(const FiniteAlgebra& a, std::optional<LatticeHints> hints) {
  json j;
  j["name"] = a.name();
  j["size"] = a.size();
  j["ops"] = json::array();
  for (int op = 0; op < a.num_ops(); ++op) {
    j["ops"].push_back({{"name", a.op_name(op)},
                        {"arity", a.arity(op)},
                        {"table", table_to_nested(a.table(op), a.size(), a.arity(op))}});
  }
  if (!a.element_names().empty()) j["element_names"] = a.element_names();
  if (hints) j["lattice"] = {{"meet", hints->meet}, {"join", hints->join}};
  return j;
}

AlgebraPtr algebra_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("algebra: expected an object");
  if (!j.contains("size") || !j["size"].is_number_integer()) {
    throw InvalidInput("size: required integer");
  }
  int n = j["size"].get<int>();
  if (!j.contains("ops") || !j["ops"].is_array()) throw InvalidInput("ops: required array");

  Signature sig;
  std::vector<std::vector<int>> tables;
  int i = 0;
  for (const auto& opj : j["ops"]) {
    std::string path = "ops[" + std::to_string(i) + "]";
    if (!opj.is_object()) throw InvalidInput(path + ": expected an object");
    if (!opj.contains("name") || !opj["name"].is_string()) {
      throw InvalidInput(path + ".name: required string");
    }
    if (!opj.contains("arity") || !opj["arity"].is_number_integer()) {
      throw InvalidInput(path + ".arity: required integer");
    }
    if (!opj.contains("table")) throw InvalidInput(path + ".table: required");
    int arity = opj["arity"].get<int>();
    if (arity < 0) throw InvalidInput(path + ".arity: negative");
    sig.ops.push_back({opj["name"].get<std::string>(), arity});
    std::vector<int> table;
    nested_to_table(opj["table"], n, arity, table, path + ".table");
    tables.push_back(std::move(table));
    ++i;
  }

  std::string name = j.value("name", std::string{});
  std::vector<std::string> element_names;
  if (j.contains("element_names")) {
    if (!j["element_names"].is_array()) throw InvalidInput("element_names: expected array");
    for (const auto& e : j["element_names"]) {
      if (!e.is_string()) throw InvalidInput("element_names: expected strings");
      element_names.push_back(e.get<std::string>());
    }
  }
  return make_algebra(n, std::move(sig), std::move(tables), std::move(name),
                      std::move(element_names));
}

std::optional<LatticeHints> hints_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lattice")) return std::nullopt;
  const json& l = j["lattice"];
  if (!l.is_object() || !l.contains("meet") || !l.contains("join")) {
    throw InvalidInput("lattice: expected {\"meet\": str, \"join\": str}");
  }
  return LatticeHints{l["meet"].get<std::string>(), l["join"].get<std::string>()};
}

json subuniverse_to_json(const SubUniverse& s) {
  json j;
  j["elements"] = s.elements;
  json names = json::array();
  for (int e : s.elements) names.push_back(s.parent->element_name(e));
  j["names"] = names;
  return j;
}

json homomorphism_to_json(const Homomorphism& h) {
  json j;
  j["map"] = h.map;
  return j;
}

json verdict_to_json(const PrimalityVerdict& v, const FiniteAlgebra& a) {
  json j;
  j["level"] = to_string(v.level);
  j["route"] = v.route;
  switch (v.witness.kind) {
    case Witness::Kind::none:
      j["witness"] = nullptr;
      break;
    case Witness::Kind::square:
      j["witness"] = {{"kind", "square-subuniverse"},
                      {"subuniverse", pair_list(v.witness.square_sub, a)}};
      break;
    case Witness::Kind::t_function:
      j["witness"] = {{"kind", "T-not-preserved"},
                      {"element", a.element_name(v.witness.t_element)},
                      {"subuniverse", pair_list(v.witness.square_sub, a)},
                      {"violating", pair_list(v.witness.violating_tuple, a)}};
      break;
    case Witness::Kind::discriminator:
      j["witness"] = {{"kind", "discriminator-not-preserved"},
                      {"subuniverse", pair_list(v.witness.square_sub, a)},
                      {"violating", pair_list(v.witness.violating_tuple, a)}};
      break;
    case Witness::Kind::internal_iso: {
      const InternalIso& iso = *v.witness.iso;
      json map = json::array();
      for (std::size_t i = 0; i < iso.map.size(); ++i) {
        map.push_back({a.element_name(iso.dom.elements[i]), a.element_name(iso.map[i])});
      }
      json dom = json::array(), cod = json::array();
      for (int e : iso.dom.elements) dom.push_back(a.element_name(e));
      for (int e : iso.cod.elements) cod.push_back(a.element_name(e));
      j["witness"] = {{"kind", "internal-isomorphism"}, {"dom", dom}, {"cod", cod}, {"map", map}};
      break;
    }
  }
  return j;
}

json variety_to_json(const VarietyAlgebra& v) {
  json j;
  j["base"] = algebra_to_json(*v.base->alg);
  j["factors"] = v.factors;
  if (v.full_product) {
    j["carrier"] = "full";
  } else {
    j["carrier"] = v.carrier;
  }
  return j;
}

json stonel_to_json(const StoneLObject& x) {
  json j;
  j["base"] = algebra_to_json(*x.base->alg);
  j["points"] = x.points();
  j["v"] = x.v;
  return j;
}

StoneLObject stonel_from_json(const json& j, const BasePtr& base) {
  if (!j.is_object()) throw InvalidInput("stonel object: expected an object");
  if (!j.contains("v") || !j["v"].is_array()) throw InvalidInput("v: required array");
  StoneLObject x{base, {}};
  for (const auto& e : j["v"]) {
    if (!e.is_number_integer()) throw InvalidInput("v: expected subuniverse ids");
    int id = e.get<int>();
    if (id < 0 || id >= static_cast<int>(base->subs.size())) {
      throw InvalidInput("v: subuniverse id " + std::to_string(id) + " out of range");
    }
    x.v.push_back(id);
  }
  if (j.contains("points") && j["points"].get<int>() != x.points()) {
    throw InvalidInput("points: does not match the length of v");
  }
  return x;
}

json report_to_json(const SampleReport& r) {
  json j;
  j["chain_size"] = r.chain_size;
  j["extra_arities"] = r.extra_arities;
  j["samples"] = r.samples;
  j["semi_primal"] = r.semi_primal;
  j["fraction"] = r.fraction;
  j["wilson95"] = {r.wilson_low, r.wilson_high};
  j["seed"] = r.seed;
  return j;
}

json catalog_entry_to_json(const catalog::Entry& e) {
  json j;
  j["key"] = e.key;
  if (e.param > 0) j["param"] = e.param;
  j["algebra"] = algebra_to_json(*e.algebra, e.lattice);
  if (e.prod_op) j["prod_op"] = *e.prod_op;
  json exp;
  exp["level"] = e.expected.level;
  if (e.expected.subuniverse_count) exp["subuniverse_count"] = *e.expected.subuniverse_count;
  if (!e.expected.subuniverses.empty()) exp["subuniverses"] = e.expected.subuniverses;
  exp["source"] = e.expected.source;
  j["expected"] = exp;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput("parse error in '" + path + "': " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace semiprimal
