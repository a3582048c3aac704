#include "pargroupoid/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pargroupoid/element_io.hpp"
#include "pargroupoid/partial_action.hpp"
#include "pargroupoid/suites.hpp"

namespace pargroupoid::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::size_t bound = 0;  // 0: not given on the command line
  std::string group;
  std::string scalar = "qnn";
  std::string suite = "all";
  std::string file;
  bool lambda = false;
};

/// A problem with the input data rather than with the invocation.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t effective_bound(const Config& config) {
  if (config.bound != 0) return config.bound;
  if (const char* env = std::getenv("PARGROUPOID_BOUND"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof() || value == 0) {
      throw std::invalid_argument(std::string("PARGROUPOID_BOUND must be a positive integer, got '") + env + "'");
    }
    return value;
  }
  return kDefaultOrderBound;
}

FiniteGroup build_group(const std::string& spec, std::size_t bound) {
  auto group = make_group(spec);
  if (group.order() > bound) {
    throw BoundExceeded("group " + spec + " has order " + std::to_string(group.order()) + ", bound is " +
                        std::to_string(bound));
  }
  return group;
}

Json subset_json(const FiniteGroup& group, Subset subset) {
  Json out = Json::array();
  for (auto g : subset.elements()) out.push_back(group.label(g));
  return out;
}

Json checks_json(const CheckReport& report) {
  Json out = Json::array();
  for (const auto& r : report.results()) {
    Json item;
    item["id"] = r.id;
    item["passed"] = r.passed;
    item["checked"] = r.checked;
    if (!r.passed) item["counterexample"] = r.counterexample;
    out.push_back(std::move(item));
  }
  return out;
}

void print_checks_text(std::ostream& out, const CheckReport& report) {
  for (const auto& r : report.results()) {
    out << (r.passed ? "PASS " : "FAIL ") << r.id << " (" << r.checked << " checked)";
    if (!r.passed) out << ": " << r.counterexample;
    out << "\n";
  }
}

void report_first_failure(std::ostream& err, const CheckReport& report) {
  if (const auto* f = report.first_failure()) err << "FAIL " << f->id << ": " << f->counterexample << "\n";
}

int cmd_gamma(const Config& config, std::ostream& out) {
  const auto group = build_group(config.group, effective_bound(config));
  const auto gamma = std::make_shared<const Gamma>(group, effective_bound(config));
  if (config.format == "text") {
    out << "Gamma(" << group.name() << "): " << gamma->size() << " elements\n";
    for (const auto& x : gamma->elements()) out << "  " << gamma->format(x) << "\n";
    out << "units:\n";
    for (auto v : gamma->vertices()) out << "  " << gamma->format({v, 0}) << "\n";
    if (config.lambda) {
      const auto lambda = lambda_p<NatSemiring>(gamma);
      out << "lambda_p:\n";
      for (Element g = 0; g < group.order(); ++g) {
        out << "  " << group.label(g) << " -> " << lambda.algebra.describe(lambda(g)) << "\n";
      }
    }
    return kExitPass;
  }
  Json doc;
  doc["group"] = group.name();
  doc["order"] = group.order();
  doc["gamma_size"] = gamma->size();
  Json elements = Json::array();
  for (const auto& x : gamma->elements()) elements.push_back({{"I", subset_json(group, x.subset)}, {"g", group.label(x.g)}});
  doc["elements"] = std::move(elements);
  Json units = Json::array();
  for (auto v : gamma->vertices()) units.push_back({{"I", subset_json(group, v)}, {"g", group.label(0)}});
  doc["units"] = std::move(units);
  Json components = Json::array();
  for (const auto& c : connected_components(*gamma)) {
    Json item;
    item["base"] = subset_json(group, c.base());
    item["m"] = c.m();
    item["H_order"] = c.isotropy.order();
    components.push_back(std::move(item));
  }
  doc["components"] = std::move(components);
  if (config.lambda) {
    const auto lambda = lambda_p<NatSemiring>(gamma);
    Json images = Json::array();
    for (Element g = 0; g < group.order(); ++g) {
      images.push_back({{"g", group.label(g)}, {"element", to_json(lambda.algebra, lambda(g))}});
    }
    doc["lambda_p"] = std::move(images);
  }
  out << doc.dump(2) << "\n";
  return kExitPass;
}

DecompositionSummary decompose_with(const std::string& scalar, const FiniteGroup& group, const DecomposeOptions& options) {
  if (scalar == "qnn") return decompose<QnnSemiring>(group, options);
  if (scalar == "nat") return decompose<NatSemiring>(group, options);
  return decompose<QnnDelta>(group, options);
}

int cmd_decompose(const Config& config, std::ostream& out) {
  const auto bound = effective_bound(config);
  const auto group = build_group(config.group, bound);
  DecomposeOptions options;
  options.bound = bound;
  auto summary = decompose_with(config.scalar, group, options);
  summary.scalar = config.scalar;
  if (config.format == "text") {
    out << "K Gamma(" << summary.group << ") over " << summary.scalar << ", |Gamma| = " << summary.gamma_size << "\n";
    for (const auto& b : summary.blocks) {
      out << "  " << b.c << " x M_" << b.m << "(KH), |H| = " << b.subgroup_order() << ", H = <";
      for (std::size_t k = 0; k < b.generators.size(); ++k) out << (k ? "," : "") << b.generators[k];
      out << ">\n";
    }
    out << "audit " << summary.audit.lhs << " = " << summary.audit.rhs << (summary.audit.ok() ? " ok" : " MISMATCH")
        << "\n";
    out << "recursion diagnostic (|H|, m, enumerated, reading, closed form):\n";
    for (const auto& r : summary.recursion_diff) {
      out << "  " << r.subgroup_order << " " << r.m << " " << r.enumerated << " " << r.recursion << " " << r.closed_form
          << "\n";
    }
    return summary.audit.ok() ? kExitPass : kExitFail;
  }
  Json doc;
  doc["group"] = summary.group;
  doc["scalar"] = summary.scalar;
  doc["gamma_size"] = summary.gamma_size;
  Json blocks = Json::array();
  for (const auto& b : summary.blocks) {
    Json item;
    item["H_order"] = b.subgroup_order();
    item["H_gens"] = b.generators;
    item["m"] = b.m;
    item["c"] = b.c;
    blocks.push_back(std::move(item));
  }
  doc["blocks"] = std::move(blocks);
  doc["audit"] = {{"lhs", summary.audit.lhs}, {"rhs", summary.audit.rhs}, {"ok", summary.audit.ok()}};
  Json diff = Json::array();
  for (const auto& r : summary.recursion_diff) {
    Json item;
    item["H_order"] = r.subgroup_order;
    item["H_gens"] = r.generators;
    item["m"] = r.m;
    item["enumerated"] = r.enumerated;
    item["recursion"] = r.recursion;
    item["closed_form"] = r.closed_form;
    item["recursion_agrees"] = r.recursion_agrees;
    item["closed_form_agrees"] = r.closed_form_agrees;
    diff.push_back(std::move(item));
  }
  doc["recursion_diff"] = std::move(diff);
  out << doc.dump(2) << "\n";
  return summary.audit.ok() ? kExitPass : kExitFail;
}

int cmd_verify(const Config& config, std::ostream& out, std::ostream& err) {
  const auto bound = effective_bound(config);
  const auto group = build_group(config.group, bound);
  SuiteOptions options;
  options.seed = config.seed;
  options.bound = bound;
  const auto report = run_suite(config.suite, group, options);
  if (config.format == "text") {
    out << "verify " << config.suite << " on " << group.name() << "\n";
    print_checks_text(out, report);
  } else {
    Json doc;
    doc["group"] = group.name();
    doc["suite"] = config.suite;
    doc["seed"] = config.seed;
    doc["passed"] = report.all_passed();
    doc["checks"] = checks_json(report);
    out << doc.dump(2) << "\n";
  }
  report_first_failure(err, report);
  return report.all_passed() ? kExitPass : kExitFail;
}

int cmd_action_check(const Config& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.file);
  if (!in) throw InputError("cannot open '" + config.file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto text = buffer.str();
  std::string spec = config.group;
  if (spec.empty()) {
    const auto doc = nlohmann::json::parse(text, nullptr, false);
    if (!doc.is_discarded() && doc.is_object() && doc.contains("group") && doc["group"].is_string()) {
      spec = doc["group"].get<std::string>();
    }
  }
  if (spec.empty()) throw std::invalid_argument("action-check needs --group or a \"group\" key in the file");
  const auto group = build_group(spec, effective_bound(config));
  const auto action = parse_partial_action(group, text);
  const auto report = verify_partial_action(action);
  if (config.format == "text") {
    out << "partial action of " << group.name() << " on " << action.ground_size << " points\n";
    print_checks_text(out, report);
  } else {
    Json doc;
    doc["group"] = group.name();
    doc["X"] = action.ground_size;
    doc["passed"] = report.all_passed();
    doc["checks"] = checks_json(report);
    out << doc.dump(2) << "\n";
  }
  report_first_failure(err, report);
  return report.all_passed() ? kExitPass : kExitFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Groupoid semialgebras of finite groups: build, decompose, verify."};
  app.name("pargroupoid");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", config.seed, "Seed for sampled checks");
  app.add_option("--bound", config.bound, "Largest accepted group order (default 16, or PARGROUPOID_BOUND)")
      ->check(CLI::PositiveNumber);

  auto* gamma = app.add_subcommand("gamma", "List the elements and units of Gamma(G)");
  gamma->add_option("--group", config.group, "Group spec")->required();
  gamma->add_flag("--lambda", config.lambda, "Also print lambda_p(g) for every g");

  auto* decompose_cmd = app.add_subcommand("decompose", "Block decomposition of K Gamma(G)");
  decompose_cmd->add_option("--group", config.group, "Group spec")->required();
  decompose_cmd->add_option("--scalar", config.scalar, "Scalars")->check(CLI::IsMember({"qnn", "nat", "qnn-delta"}));

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--group", config.group, "Group spec")->required();
  std::vector<std::string> suites = suite_names();
  suites.insert(suites.begin(), "all");
  verify->add_option("--suite", config.suite, "Suite to run")->check(CLI::IsMember(suites));

  auto* action = app.add_subcommand("action-check", "Verify a partial action read from JSON");
  action->add_option("--file", config.file, "Partial action JSON")->required();
  action->add_option("--group", config.group, "Group spec (overrides a \"group\" key in the file)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gamma->parsed()) return cmd_gamma(config, out);
    if (decompose_cmd->parsed()) return cmd_decompose(config, out);
    if (verify->parsed()) return cmd_verify(config, out, err);
    return cmd_action_check(config, out, err);
  } catch (const GroupValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const MalformedPartialAction& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pargroupoid::cli
