#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "semiprimal/algebra.hpp"
#include "semiprimal/catalog.hpp"
#include "semiprimal/duality.hpp"
#include "semiprimal/experiments.hpp"
#include "semiprimal/lattice.hpp"
#include "semiprimal/primality.hpp"
#include "semiprimal/variety.hpp"

namespace semiprimal {

using nlohmann::json;

// {"name", "size", "ops": [{"name","arity","table"}], "element_names"?, "lattice"?}
json algebra_to_json(const FiniteAlgebra& a, std::optional<LatticeHints> hints = {});
AlgebraPtr algebra_from_json(const json& j);
std::optional<LatticeHints> hints_from_json(const json& j);

json subuniverse_to_json(const SubUniverse& s);
json homomorphism_to_json(const Homomorphism& h);
json verdict_to_json(const PrimalityVerdict& v, const FiniteAlgebra& a);

// {"base", "factors", "carrier": [[...]] | "full"}
json variety_to_json(const VarietyAlgebra& v);

// {"base", "points", "v"}
json stonel_to_json(const StoneLObject& x);
StoneLObject stonel_from_json(const json& j, const BasePtr& base);

json report_to_json(const SampleReport& r);
json catalog_entry_to_json(const catalog::Entry& e);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace semiprimal
