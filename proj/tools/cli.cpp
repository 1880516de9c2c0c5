#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "chorediv/ef1fpo.hpp"
#include "chorediv/ef_exist.hpp"
#include "chorediv/efx.hpp"
#include "chorediv/errors.hpp"

namespace chorediv::cli {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& object, const char* key,
                  const std::string& where) {
  if (!object.is_object()) throw ValidationError(where + ": expected an object");
  const auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError(where + "." + key + ": missing field");
  }
  return *it;
}

std::int64_t integer(const json& value, const std::string& where) {
  if (value.is_number_float()) {
    throw ValidationError(where +
                          ": expected an integer (scale rational inputs to "
                          "integers first)");
  }
  if (!value.is_number_integer()) {
    throw ValidationError(where + ": expected an integer");
  }
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ValidationError(where + ": integer out of range");
  }
  return value.get<std::int64_t>();
}

const json& array_field(const json& object, const char* key,
                        const std::string& where) {
  const json& value = field(object, key, where);
  if (!value.is_array()) {
    throw ValidationError(where + "." + key + ": expected an array");
  }
  return value;
}

json bundles_json(const Allocation& X) {
  json bundles = json::array();
  for (const auto& b : X.bundles) {
    bundles.push_back({{"alpha", b.alpha}, {"beta", b.beta}});
  }
  return json{{"bundles", bundles}};
}

json witness_json(const std::optional<EnvyWitness>& w) {
  if (!w) return nullptr;
  return json{{"envier", w->envier}, {"envied", w->envied}};
}

json report_json(const PropertyReport& r) {
  json out;
  out["complete"] = r.complete;
  out["EF"] = r.envy.ef;
  out["EF1"] = r.envy.ef1;
  out["EFX"] = r.envy.efx;
  out["witnesses"] = {{"EF", witness_json(r.envy.efWitness)},
                      {"EF1", witness_json(r.envy.ef1Witness)},
                      {"EFX", witness_json(r.envy.efxWitness)}};
  out["fPO-structure"] =
      r.fpoStructure ? json(*r.fpoStructure) : json(nullptr);
  if (r.fpoStructure && *r.fpoStructure) out["pivotAgents"] = r.pivotAgents;
  if (r.structureViolation) {
    out["structureViolation"] = {{"j", r.structureViolation->j},
                                 {"k", r.structureViolation->k}};
  }
  if (r.improvement) {
    out["improvement"] = {{"from", r.improvement->from_j},
                          {"to", r.improvement->to_k},
                          {"epsilon", r.improvement->epsilon.str()},
                          {"bRate", r.improvement->bRate.str()}};
  }
  if (r.poIntegral) out["PO-integral"] = *r.poIntegral;
  return out;
}

json instance_json(const Instance& instance) {
  json agents = json::array();
  for (const auto& v : instance.agents) {
    agents.push_back({{"vA", v.a}, {"vB", v.b}});
  }
  return json{{"agents", agents},
              {"countA", instance.countA},
              {"countB", instance.countB}};
}

json fixture_json(const FixtureReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return json{{"fixture", report.name},
              {"passed", report.passed()},
              {"instance", instance_json(report.instance)},
              {"checks", checks}};
}

std::string witness_plain(const std::optional<EnvyWitness>& w) {
  if (!w) return "";
  return " (agent " + std::to_string(w->envier) + " -> agent " +
         std::to_string(w->envied) + ")";
}

struct Common {
  std::string output = "json";
  std::size_t budget = EnumerationBudget{}.maxStates;
};

void add_common(CLI::App* command, Common& common, const char* output_default) {
  common.output = output_default;
  command->add_option("--output", common.output, "Output format")
      ->check(CLI::IsMember({"json", "plain"}))
      ->capture_default_str();
  command
      ->add_option("--budget", common.budget,
                   "Maximum number of allocations brute force may enumerate")
      ->capture_default_str();
}

Instance load_instance(const std::string& path) {
  return parse_instance(read_text(path));
}

void print_existence(std::ostream& out, const Common& common,
                     const std::optional<Allocation>& found,
                     const json& extra = json::object()) {
  if (common.output == "plain") {
    out << (found ? "YES" : "NO") << '\n';
    if (found) out << to_json(*found) << '\n';
    return;
  }
  json doc = extra;
  doc["exists"] = found.has_value();
  doc["allocation"] = found ? bundles_json(*found) : json(nullptr);
  out << doc.dump(2) << '\n';
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  const json& agents = array_field(doc, "agents", "instance");
  Instance instance;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    instance.agents.push_back({integer(field(agents[i], "vA", where), where + ".vA"),
                               integer(field(agents[i], "vB", where), where + ".vB")});
  }
  instance.countA = integer(field(doc, "countA", "instance"), "countA");
  instance.countB = integer(field(doc, "countB", "instance"), "countB");
  try {
    validate(instance);
  } catch (const ArithmeticError& e) {
    throw ValidationError(e.what());
  }
  return instance;
}

Allocation parse_allocation(std::string_view text) {
  const json doc = parse_json(text);
  const json& bundles = array_field(doc, "bundles", "allocation");
  Allocation X;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const std::string where = "bundles[" + std::to_string(i) + "]";
    const Count alpha = integer(field(bundles[i], "alpha", where), where + ".alpha");
    const Count beta = integer(field(bundles[i], "beta", where), where + ".beta");
    if (alpha < 0 || beta < 0) {
      throw ValidationError(where + ": counts must be non-negative");
    }
    X.bundles.push_back({alpha, beta});
  }
  return X;
}

std::string to_json(const Instance& instance) {
  return instance_json(instance).dump();
}

std::string to_json(const Allocation& X) { return bundles_json(X).dump(); }

std::string to_json(const PropertyReport& report) {
  return report_json(report).dump();
}

std::string to_json(const FixtureReport& report) {
  return fixture_json(report).dump();
}

std::string to_plain(const Allocation& X) {
  std::ostringstream out;
  out << "allocation:";
  for (const auto& b : X.bundles) out << " (" << b.alpha << ',' << b.beta << ')';
  return out.str();
}

std::string to_plain(const PropertyReport& r) {
  std::ostringstream out;
  const auto yes = [](bool v) { return v ? "true" : "false"; };
  out << "complete: " << yes(r.complete) << '\n';
  out << "EF: " << yes(r.envy.ef) << witness_plain(r.envy.efWitness) << '\n';
  out << "EF1: " << yes(r.envy.ef1) << witness_plain(r.envy.ef1Witness) << '\n';
  out << "EFX: " << yes(r.envy.efx) << witness_plain(r.envy.efxWitness) << '\n';
  if (r.fpoStructure) {
    out << "fPO-structure: " << yes(*r.fpoStructure);
    if (r.structureViolation) {
      out << " (agent " << r.structureViolation->j << " holds B, agent "
          << r.structureViolation->k << " holds A)";
    }
    out << '\n';
  } else {
    out << "fPO-structure: n/a (zero valuation present)\n";
  }
  if (r.improvement) {
    out << "improvement: move " << r.improvement->epsilon.str()
        << " A from agent " << r.improvement->to_k << " to agent "
        << r.improvement->from_j << " and " << r.improvement->bRate.str()
        << " B back\n";
  }
  if (r.poIntegral) out << "PO-integral: " << yes(*r.poIntegral) << '\n';
  return out.str();
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fair allocation of two types of indivisible chores"};
  app.require_subcommand(1);

  Common solve_opts;
  std::string method;
  std::string solve_instance;
  auto* solve = app.add_subcommand("solve", "Compute an EF1+fPO or EFX allocation");
  solve->add_option("--method", method, "Solver")
      ->required()
      ->check(CLI::IsMember({"ef1fpo", "efx"}));
  solve->add_option("instance", solve_instance, "Instance JSON file")->required();
  add_common(solve, solve_opts, "json");

  Common check_opts;
  std::string check_instance;
  std::string check_allocation;
  bool check_po = false;
  auto* check = app.add_subcommand("check", "Report fairness and efficiency of an allocation");
  check->add_option("instance", check_instance, "Instance JSON file")->required();
  check->add_option("allocation", check_allocation, "Allocation JSON file")->required();
  check->add_flag("--fpo", check_po,
                  "Also decide integral Pareto optimality by enumeration");
  add_common(check, check_opts, "json");

  Common ef_opts;
  std::string ef_instance;
  auto* ef = app.add_subcommand("ef-exists", "Decide whether an envy-free allocation exists");
  ef->add_option("instance", ef_instance, "Instance JSON file")->required();
  add_common(ef, ef_opts, "plain");

  Common oracle_opts;
  std::string oracle_instance;
  std::string property;
  std::string fixture;
  auto* oracle = app.add_subcommand("oracle", "Brute-force existence queries and published fixtures");
  oracle->add_option("instance", oracle_instance, "Instance JSON file");
  auto* exists_opt =
      oracle->add_option("--exists", property, "Property to search for")
          ->check(CLI::IsMember({"ef", "ef1", "efx", "efx-and-fpo"}));
  auto* fixture_opt =
      oracle->add_option("--fixture", fixture, "Fixture name, or 'all'");
  exists_opt->excludes(fixture_opt);
  add_common(oracle, oracle_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (*solve) {
      const Instance instance = load_instance(solve_instance);
      const Allocation X =
          method == "efx"
              ? solve_efx(instance, EfxOptions{solve_opts.budget})
              : solve_ef1_fpo(instance);
      const PropertyReport r = analyze(instance, X);
      if (solve_opts.output == "plain") {
        out << to_plain(X) << '\n' << to_plain(r);
      } else {
        out << json{{"method", method},
                    {"allocation", bundles_json(X)},
                    {"report", report_json(r)}}
                   .dump(2)
            << '\n';
      }
      return kOk;
    }
    if (*check) {
      const Instance instance = load_instance(check_instance);
      const Allocation X = parse_allocation(read_text(check_allocation));
      ReportOptions options;
      options.integralPo = check_po;
      options.budget.maxStates = check_opts.budget;
      const PropertyReport r = analyze(instance, X, options);
      if (check_opts.output == "plain") {
        out << to_plain(r);
      } else {
        out << report_json(r).dump(2) << '\n';
      }
      return kOk;
    }
    if (*ef) {
      const Instance instance = load_instance(ef_instance);
      print_existence(out, ef_opts, ef_exists(instance));
      return kOk;
    }
    if (*oracle) {
      const EnumerationBudget budget{oracle_opts.budget};
      if (!fixture.empty()) {
        const std::vector<std::string> names =
            fixture == "all" ? fixture_names() : std::vector<std::string>{fixture};
        bool all_passed = true;
        json reports = json::array();
        for (const auto& name : names) {
          const FixtureReport report = run_fixture(name, budget);
          all_passed = all_passed && report.passed();
          if (oracle_opts.output == "plain") {
            out << report.name << ": " << (report.passed() ? "PASS" : "FAIL")
                << '\n';
            for (const auto& c : report.checks) {
              out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.claim;
              if (!c.detail.empty()) out << " (" << c.detail << ')';
              out << '\n';
            }
          } else {
            reports.push_back(fixture_json(report));
          }
        }
        if (oracle_opts.output == "json") {
          out << (names.size() == 1 ? reports[0] : reports).dump(2) << '\n';
        }
        return all_passed ? kOk : kInternalError;
      }
      if (property.empty()) {
        err << "oracle: one of --exists or --fixture is required\n";
        return kValidationError;
      }
      if (oracle_instance.empty()) {
        err << "oracle --exists: an instance file is required\n";
        return kValidationError;
      }
      const Instance instance = load_instance(oracle_instance);
      const CanonicalInstance ci = canonicalize(instance);
      const auto found = exists_named(ci, property, budget);
      print_existence(out, oracle_opts,
                      found ? std::optional(to_original(ci, *found))
                            : std::nullopt,
                      json{{"property", property}});
      return kOk;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetOrConstruction;
  } catch (const CannotConstruct& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetOrConstruction;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kValidationError;
}

}  // namespace chorediv::cli
