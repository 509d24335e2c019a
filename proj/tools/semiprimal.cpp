// Command-line front end: verdicts, functors, duals, round trips and the
// sampling experiments, all over the JSON algebra format.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "semiprimal/json_io.hpp"

using namespace semiprimal;

namespace {

struct Options {
  bool json = false;
  std::size_t cap = kDefaultSizeCap;
  std::string out;
};

void emit(const Options& opt, const json& payload, const std::string& human) {
  if (!opt.out.empty()) {
    save_json_file(opt.out, payload);
    if (!opt.json) std::cout << "wrote " << opt.out << "\n";
    return;
  }
  if (opt.json) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

// accept either a bare algebra document or an {"algebra": ...} wrapper
json load_algebra_doc(const std::string& path) {
  json j = load_json_file(path);
  if (j.is_object() && !j.contains("size") && j.contains("algebra")) return j["algebra"];
  return j;
}

AlgebraPtr load_algebra(const std::string& path) {
  return algebra_from_json(load_algebra_doc(path));
}

LatticeReduct load_reduct(const AlgebraPtr& a, const std::string& path) {
  return detect_lattice(a, hints_from_json(load_algebra_doc(path)));
}

BasePtr load_base(const std::string& path) {
  json j = load_algebra_doc(path);
  return certify_base(algebra_from_json(j), hints_from_json(j));
}

// space documents may embed their base; an explicit --base wins
BasePtr base_for_space(const json& space_doc, const std::string& base_file) {
  if (!base_file.empty()) return load_base(base_file);
  if (space_doc.is_object() && space_doc.contains("base")) {
    const json& b = space_doc["base"];
    return certify_base(algebra_from_json(b), hints_from_json(b));
  }
  throw InvalidInput("--base: required (the space document embeds no base algebra)");
}

std::string describe_witness(const PrimalityVerdict& v, const FiniteAlgebra& a) {
  const Witness& w = v.witness;
  switch (w.kind) {
    case Witness::Kind::none:
      return "";
    case Witness::Kind::internal_iso: {
      std::string s = "witness: non-identity internal isomorphism {";
      for (std::size_t i = 0; i < w.iso->dom.elements.size(); ++i) {
        if (i) s += ",";
        s += a.element_name(w.iso->dom.elements[i]);
      }
      s += "} -> {";
      for (std::size_t i = 0; i < w.iso->cod.elements.size(); ++i) {
        if (i) s += ",";
        s += a.element_name(w.iso->cod.elements[i]);
      }
      return s + "}\n";
    }
    case Witness::Kind::square:
      return "witness: a subuniverse of the square that is neither a product nor a diagonal (" +
             std::to_string(w.square_sub.size()) + " pairs)\n";
    case Witness::Kind::t_function:
      return "witness: T_" + a.element_name(w.t_element) +
             " does not preserve a subuniverse of the square\n";
    case Witness::Kind::discriminator:
      return "witness: the discriminator does not preserve a subuniverse of the square\n";
  }
  return "";
}

int resolve_sub(const BasePtr& base, const std::string& spec) {
  if (spec.find(',') == std::string::npos) {
    try {
      int id = std::stoi(spec);
      if (id < 0 || id >= static_cast<int>(base->subs.size())) {
        throw InvalidInput("--sub: id out of range (0.." +
                           std::to_string(base->subs.size() - 1) + ")");
      }
      return id;
    } catch (const std::invalid_argument&) {
      throw InvalidInput("--sub: expected an id or a comma-separated element list");
    } catch (const std::out_of_range&) {
      throw InvalidInput("--sub: id out of range");
    }
  }
  std::vector<int> elems;
  std::string token;
  for (char c : spec + ",") {
    if (c == ',') {
      if (!token.empty()) elems.push_back(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  std::sort(elems.begin(), elems.end());
  int id = base->sub_id_of(elems);
  if (id < 0) throw InvalidInput("--sub: the given set is not a subuniverse of the base");
  return id;
}

std::vector<int> parse_arities(const std::string& s) {
  std::vector<int> out;
  std::string token;
  for (char c : s + ",") {
    if (c == ',') {
      if (!token.empty()) out.push_back(std::stoi(token));
      token.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      token += c;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semi-primal algebra toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit one JSON document on stdout");
  app.add_option("--cap", opt.cap, "size cap for products/powers/closures");

  std::string check_kind, check_file, check_route = "all";
  auto* check = app.add_subcommand("check", "decide primality / semi-primality");
  check->add_option("kind", check_kind)->required()->check(
      CLI::IsMember({"primal", "semiprimal", "quasiprimal"}));
  check->add_option("file", check_file)->required();
  check->add_option("--route", check_route, "T | square | discriminator | all");

  std::string in_file, in_b, base_file, kind, sub_spec;
  int atoms = 1;

  auto* subalgebras = app.add_subcommand("subalgebras", "enumerate all subuniverses");
  subalgebras->add_option("file", in_file)->required();

  auto* homs = app.add_subcommand("homs", "enumerate homomorphisms A -> B");
  homs->add_option("A", in_file)->required();
  homs->add_option("B", in_b)->required();

  auto* skeleton_cmd = app.add_subcommand("skeleton", "Boolean skeleton of A over the base");
  skeleton_cmd->add_option("A", in_file)->required();
  skeleton_cmd->add_option("--base", base_file)->required();

  auto* boolpower = app.add_subcommand("boolpower", "Boolean power L[2^k]");
  boolpower->add_option("--base", base_file)->required();
  boolpower->add_option("--atoms", atoms)->required();
  boolpower->add_option("--out", opt.out);

  auto* dual = app.add_subcommand("dual", "apply Sigma_L (algebra) or Pi_L (space)");
  dual->add_option("kind", kind)->required()->check(CLI::IsMember({"algebra", "space"}));
  dual->add_option("file", in_file)->required();
  dual->add_option("--base", base_file, "base algebra (spaces may embed theirs)");
  dual->add_option("--out", opt.out);

  auto* roundtrip = app.add_subcommand("roundtrip", "verify the duality round trip");
  roundtrip->add_option("kind", kind)->required()->check(CLI::IsMember({"algebra", "space"}));
  roundtrip->add_option("file", in_file)->required();
  roundtrip->add_option("--base", base_file, "base algebra (spaces may embed theirs)");

  auto* adjoint = app.add_subcommand("adjoint-check", "verify the skeleton/power adjunction");
  adjoint->add_option("A", in_file)->required();
  adjoint->add_option("--base", base_file)->required();
  adjoint->add_option("--atoms", atoms, "atom count of the Boolean side (default 1)");

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient functor Q_S");
  quotient_cmd->add_option("A", in_file)->required();
  quotient_cmd->add_option("--base", base_file)->required();
  quotient_cmd->add_option("--sub", sub_spec, "subuniverse id or element list")->required();
  quotient_cmd->add_option("--out", opt.out);

  auto* cat = app.add_subcommand("catalog", "built-in example algebras");
  auto* cat_list = cat->add_subcommand("list", "list keys");
  std::string cat_key;
  int cat_n = 0;
  auto* cat_build = cat->add_subcommand("build", "build an entry");
  cat_build->add_option("key", cat_key)->required();
  cat_build->add_option("n", cat_n);
  cat_build->add_option("--out", opt.out);

  auto* exp = app.add_subcommand("experiments", "random sampling");
  int chain = 3, samples = 100;
  std::uint64_t seed = 0;
  std::string ops_spec = "2";
  long budget_ms = -1;
  auto* murskii = exp->add_subcommand("murskii", "semi-primal fraction of random expansions");
  murskii->add_option("--chain", chain)->required();
  murskii->add_option("--ops", ops_spec, "comma-separated arities of the extra operations");
  murskii->add_option("--samples", samples)->required();
  murskii->add_option("--seed", seed)->required();
  murskii->add_option("--budget-ms", budget_ms);
  auto* fuzz = exp->add_subcommand("fuzz", "route agreement fuzzing");
  fuzz->add_option("--chain", chain)->required();
  fuzz->add_option("--ops", ops_spec);
  fuzz->add_option("--samples", samples)->required();
  fuzz->add_option("--seed", seed)->required();

  // allow the global --json / --cap flags after a subcommand as well
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* subsub : sub->get_subcommands({})) subsub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the diagnostic; 0 for --help/--version
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      AlgebraPtr a = load_algebra(check_file);
      LatticeReduct r = load_reduct(a, check_file);
      SemiRoute route = route_from_string(check_route);
      PrimalityVerdict v;
      if (check_kind == "primal") {
        v = is_primal(a, r, route);
      } else if (check_kind == "semiprimal") {
        v = is_semi_primal(a, r, route);
      } else {
        QuasiPrimalResult q = is_quasi_primal(a, r);
        v.level = q.quasi_primal ? PrimalityLevel::quasi_primal_only : PrimalityLevel::none;
        v.route = "discriminator";
        v.witness = q.witness;
        if (q.quasi_primal) {
          emit(opt, verdict_to_json(v, *a), "level: quasi-primal (at least)\n");
          return 0;
        }
      }
      std::string human = "level: " + to_string(v.level) + "\nroute: " + v.route + "\n" +
                          describe_witness(v, *a);
      emit(opt, verdict_to_json(v, *a), human);
      return 0;
    }

    if (*subalgebras) {
      AlgebraPtr a = load_algebra(in_file);
      auto subs = enumerate_subuniverses(a);
      json j;
      j["count"] = subs.size();
      j["subuniverses"] = json::array();
      std::string human = std::to_string(subs.size()) + " subuniverses\n";
      for (const SubUniverse& s : subs) {
        j["subuniverses"].push_back(subuniverse_to_json(s));
        human += "  {";
        for (int i = 0; i < s.size(); ++i) {
          if (i) human += ",";
          human += a->element_name(s.elements[i]);
        }
        human += "}\n";
      }
      emit(opt, j, human);
      return 0;
    }

    if (*homs) {
      AlgebraPtr a = load_algebra(in_file), b = load_algebra(in_b);
      auto hs = enumerate_homomorphisms(a, b);
      json j;
      j["count"] = hs.size();
      j["homs"] = json::array();
      for (const Homomorphism& h : hs) j["homs"].push_back(homomorphism_to_json(h));
      emit(opt, j, std::to_string(hs.size()) + " homomorphisms\n");
      return 0;
    }

    if (*skeleton_cmd) {
      BasePtr base = load_base(base_file);
      VarietyAlgebra v = canonicalize(load_algebra(in_file), base);
      SkeletonResult s = skeleton(v);
      json j;
      j["atoms"] = s.skeleton.atoms;
      j["elements"] = json::array();
      for (std::uint64_t mask = 0; mask < s.skeleton.size(); ++mask) {
        j["elements"].push_back(v.carrier[s.inclusion[mask]]);
      }
      emit(opt, j,
           "skeleton: 2^" + std::to_string(s.skeleton.atoms) + " (" +
               std::to_string(s.skeleton.size()) + " elements)\n");
      return 0;
    }

    if (*boolpower) {
      BasePtr base = load_base(base_file);
      BooleanPower pw = boolean_power(base->alg, bool_algebra(atoms, opt.cap), opt.cap);
      emit(opt, algebra_to_json(*pw.algebra),
           "built " + pw.algebra->name() + " with " + std::to_string(pw.algebra->size()) +
               " elements\n");
      return 0;
    }

    if (*dual) {
      if (kind == "algebra") {
        if (base_file.empty()) throw InvalidInput("--base: required for algebras");
        BasePtr base = load_base(base_file);
        VarietyAlgebra v = canonicalize(load_algebra(in_file), base);
        SigmaResult s = sigma_obj(v);
        emit(opt, stonel_to_json(s.object),
             "dual space: " + std::to_string(s.object.points()) + " points\n");
      } else {
        json doc = load_json_file(in_file);
        BasePtr base = base_for_space(doc, base_file);
        StoneLObject x = stonel_from_json(doc, base);
        VarietyAlgebra v = pi_obj(x, opt.cap);
        json j = variety_to_json(v);
        j["algebra"] = algebra_to_json(*v.concrete);
        emit(opt, j, "dual algebra: " + std::to_string(v.size()) + " elements\n");
      }
      return 0;
    }

    if (*roundtrip) {
      // both round trips run on every invocation: the given object and its dual
      if (kind == "algebra") {
        if (base_file.empty()) throw InvalidInput("--base: required for algebras");
        BasePtr base = load_base(base_file);
        VarietyAlgebra v = canonicalize(load_algebra(in_file), base);
        Homomorphism h = roundtrip_algebra(v);
        SpaceRoundTrip rt = roundtrip_space(sigma_obj(v).object, opt.cap);
        json j{{"verified", true},
               {"size", h.dom->size()},
               {"dual_points", rt.point_map.size()}};
        emit(opt, j,
             "iso verified (" + std::to_string(h.dom->size()) + " elements, dual space of " +
                 std::to_string(rt.point_map.size()) + " points verified too)\n");
      } else {
        json doc = load_json_file(in_file);
        BasePtr base = base_for_space(doc, base_file);
        StoneLObject x = stonel_from_json(doc, base);
        SpaceRoundTrip rt = roundtrip_space(x, opt.cap);
        Homomorphism h = roundtrip_algebra(pi_obj(x, opt.cap));
        json j{{"verified", true},
               {"points", x.points()},
               {"point_map", rt.point_map},
               {"dual_size", h.dom->size()}};
        emit(opt, j,
             "iso verified (" + std::to_string(x.points()) + " points, dual algebra of " +
                 std::to_string(h.dom->size()) + " elements verified too)\n");
      }
      return 0;
    }

    if (*adjoint) {
      BasePtr base = load_base(base_file);
      VarietyAlgebra v = canonicalize(load_algebra(in_file), base);
      TransposeResult t = transpose(v, bool_algebra(atoms, opt.cap));
      SkeletonHomBijection b = skeleton_hom_bijection(v);
      UnitEmbedding u = unit_embedding(v);
      json j;
      j["transpose"] = {{"boolean_homs", t.boolean_homs.size()},
                        {"algebra_homs", t.algebra_homs.size()},
                        {"verified", true}};
      j["skeleton_bijection"] = {{"homs_to_base", b.homs_to_base.size()},
                                 {"atoms", b.skel.skeleton.atoms},
                                 {"verified", true}};
      j["unit_embedding"] = {{"injective", true}, {"power_size", u.power.algebra->size()}};
      emit(opt, j,
           "transpose bijection: " + std::to_string(t.boolean_homs.size()) + " <-> " +
               std::to_string(t.algebra_homs.size()) + " verified\nskeleton bijection: " +
               std::to_string(b.homs_to_base.size()) + " homs <-> " +
               std::to_string(b.skel.skeleton.atoms) + " atoms verified\nunit embedding: " +
               "injective into " + std::to_string(u.power.algebra->size()) + " elements\n");
      return 0;
    }

    if (*quotient_cmd) {
      BasePtr base = load_base(base_file);
      VarietyAlgebra v = canonicalize(load_algebra(in_file), base);
      int sub_id = resolve_sub(base, sub_spec);
      QuotientFunctorResult q = quotient_functor(v, sub_id);
      json j = variety_to_json(q.algebra);
      j["algebra"] = algebra_to_json(*q.algebra.concrete);
      j["surjection"] = q.surjection.map;
      emit(opt, j,
           "quotient has " + std::to_string(q.algebra.size()) + " elements, " +
               std::to_string(q.algebra.num_factors()) + " factors\n");
      return 0;
    }

    if (*cat) {
      if (*cat_list || !*cat_build) {
        json j = json::array();
        std::string human;
        for (const auto& info : catalog::list()) {
          j.push_back({{"key", info.key},
                       {"parametric", info.parametric},
                       {"params", info.params_hint},
                       {"summary", info.summary}});
          human += info.key;
          if (info.parametric) human += " <" + info.params_hint + ">";
          human += "  -- " + info.summary + "\n";
        }
        emit(opt, j, human);
        return 0;
      }
      catalog::Entry e = catalog::build(cat_key, cat_n);
      if (!opt.out.empty()) {
        // write a plain algebra document, directly usable by the other commands
        save_json_file(opt.out, algebra_to_json(*e.algebra, e.lattice));
        if (!opt.json) std::cout << "wrote " << opt.out << "\n";
        return 0;
      }
      emit(opt, catalog_entry_to_json(e),
           "built " + e.algebra->name() + " (" + std::to_string(e.algebra->size()) +
               " elements), expected: " + e.expected.level + "\n");
      return 0;
    }

    if (*exp) {
      std::vector<int> arities = parse_arities(ops_spec);
      if (*murskii) {
        std::optional<std::chrono::milliseconds> budget;
        if (budget_ms >= 0) budget = std::chrono::milliseconds(budget_ms);
        SampleReport rep = murskii_sample(chain, arities, samples, seed, budget);
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%d/%d semi-primal (fraction %.4f, wilson95 [%.4f, %.4f])\n",
                      rep.semi_primal, rep.samples, rep.fraction, rep.wilson_low,
                      rep.wilson_high);
        emit(opt, report_to_json(rep), buf);
      } else if (*fuzz) {
        int d = route_fuzz(chain, arities, samples, seed);
        json j{{"samples", samples}, {"disagreements", d}};
        emit(opt, j, std::to_string(d) + " disagreements in " + std::to_string(samples) +
                         " samples\n");
        return d == 0 ? 0 : 1;
      } else {
        throw InvalidInput("experiments: expected a subcommand (murskii | fuzz)");
      }
      return 0;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SignatureMismatch& e) {
    std::cerr << "input error: signature mismatch (" << e.what() << ")\n";
    return 2;
  } catch (const SizeCapExceeded& e) {
    std::cerr << "input error: " << e.what() << " (raise --cap?)\n";
    return 2;
  } catch (const NoLatticeReduct& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
