#include "pargroupoid/suites.hpp"

#include <stdexcept>

namespace pargroupoid {

namespace {

void append_prefixed(CheckReport& into, const std::string& prefix, const CheckReport& from) {
  for (auto r : from.results()) {
    r.id = prefix + r.id;
    into.add(std::move(r));
  }
}

void add_prefixed(CheckReport& into, const std::string& prefix, CheckResult r) {
  r.id = prefix + r.id;
  into.add(std::move(r));
}

constexpr std::size_t kLawBudget = 20000;

template <Semiring S>
CheckResult law_gate(std::uint64_t seed) {
  const auto report = check_semiring_laws<S>(kLawBudget, seed);
  CheckResult out{S::name(), semiring_claims_hold<S>(report), 0, ""};
  for (const auto& r : report.results()) out.checked += r.checked;
  if (!out.passed) {
    for (const auto& r : report.results()) {
      const bool claimed = !((r.id == "cancellative" && !S::additively_cancellative) ||
                             (r.id == "semifield" && !S::semifield));
      if (claimed && !r.passed) {
        out.counterexample = r.id + ": " + r.counterexample;
        break;
      }
    }
  }
  return out;
}

CheckReport laws_suite(const SuiteOptions& options) {
  CheckReport report;
  report.add(law_gate<NatSemiring>(options.seed));
  report.add(law_gate<QnnSemiring>(options.seed));
  report.add(law_gate<BoolSemiring>(options.seed));
  report.add(law_gate<NatDelta>(options.seed));
  report.add(law_gate<QnnDelta>(options.seed));
  // Bool must be turned away by the cancellation gate.
  const auto bool_report = check_semiring_laws<BoolSemiring>(kLawBudget, options.seed);
  const auto* cancel = bool_report.find("cancellative");
  CheckResult rejected{"bool_rejected", cancel != nullptr && !cancel->passed, 1, ""};
  if (!rejected.passed) rejected.counterexample = "bool passed the cancellation check";
  report.add(rejected);
  return report;
}

CheckReport assoc_suite(const std::shared_ptr<const Gamma>& gamma, const SuiteOptions& options) {
  return check_gamma_algebra_laws<QnnSemiring>(gamma, options);
}

CheckReport partialrep_suite(const std::shared_ptr<const Gamma>& gamma) {
  CheckReport report;
  const auto lambda = lambda_p<NatSemiring>(gamma);
  append_prefixed(report, "lambda_p.", verify_partial_rep(lambda));
  append_prefixed(report, "lambda_p.", check_epsilon_calculus(lambda));
  append_prefixed(report, "kpar.", verify_kpar_relations(gamma));
  return report;
}

CheckReport extension_suite(const std::shared_ptr<const Gamma>& gamma, const SuiteOptions& options) {
  CheckReport report;
  FactorizationOptions fopts;
  fopts.exhaustive_order = options.exhaustive_order;
  fopts.seed = options.seed;

  const auto lambda = lambda_p<QnnSemiring>(gamma);
  const auto ext = extend_to_gamma_hom(lambda, gamma);
  add_prefixed(report, "lambda_p.", ext.membership);
  CheckAccumulator identity("identity_on_basis");
  for (std::size_t x = 0; x < gamma->size(); ++x) {
    identity.record(lambda.algebra.equal(ext.hom.images[x], lambda.algebra.basis_element(x)),
                    [&] { return gamma->format((*gamma)[x]) + " -> " + lambda.algebra.describe(ext.hom.images[x]); });
  }
  add_prefixed(report, "lambda_p.", identity.finish());
  append_prefixed(report, "lambda_p.", verify_factorization(lambda, ext.hom, fopts));

  const auto regular = regular_representation<QnnSemiring>(gamma->group());
  append_prefixed(report, "regular.", verify_partial_rep(regular));
  const auto reg_ext = extend_to_gamma_hom(regular, gamma);
  add_prefixed(report, "regular.", reg_ext.membership);
  append_prefixed(report, "regular.", verify_factorization(regular, reg_ext.hom, fopts));
  return report;
}

CheckReport tensor_suite(const FiniteGroup& group, const SuiteOptions& options) {
  CheckReport report;
  const auto trivial = std::make_shared<const FiniteGroup>(cyclic_group(1));
  const auto whole = std::make_shared<const FiniteGroup>(group);
  const auto samples = std::max<std::size_t>(options.samples / 10, 1);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& h : {trivial, whole}) {
      append_prefixed(report, "m" + std::to_string(m) + "." + (h == trivial ? "trivial." : "group."),
                      check_tensor_lemma<QnnSemiring>(m, h, samples, options.seed + m));
    }
  }
  return report;
}

CheckReport delta_suite(const std::shared_ptr<const Gamma>& gamma, const SuiteOptions& options) {
  CheckReport report;
  const auto samples = std::max<std::size_t>(options.samples / 5, 1);
  append_prefixed(report, "nat.", check_delta_extension<NatSemiring>(gamma, samples, options.seed));
  append_prefixed(report, "qnn.", check_delta_extension<QnnSemiring>(gamma, samples, options.seed));
  return report;
}

CheckReport structure_suite(const FiniteGroup& group, const std::shared_ptr<const Gamma>& gamma,
                            const SuiteOptions& options) {
  CheckReport report;
  DecomposeOptions dopts;
  dopts.bound = options.bound;
  dopts.verify_isos = true;
  const auto summary = decompose<QnnSemiring>(group, dopts);
  report.append(summary.iso_checks);
  CheckResult audit{"dimension_audit", summary.audit.ok(), 1, ""};
  if (!audit.passed) {
    audit.counterexample = std::to_string(summary.audit.lhs) + " != " + std::to_string(summary.audit.rhs);
  }
  report.add(audit);
  CheckResult size{"gamma_size", summary.gamma_size == summary.audit.rhs, 1, ""};
  if (!size.passed) size.counterexample = std::to_string(summary.gamma_size) + " elements built";
  report.add(size);

  SubgroupLattice lattice(group, options.bound);
  report.add(multiplicity_enumeration(*gamma, lattice).vertex_identity);
  report.add(check_coset_count_identity(group, lattice));
  report.add(check_components_orthogonal(*gamma));

  dopts.verify_isos = false;
  const auto over_delta = decompose<QnnDelta>(group, dopts);
  CheckResult delta{"delta_compatible", block_table(over_delta) == block_table(summary), 1, ""};
  if (!delta.passed) delta.counterexample = "block tables differ between qnn and its ring of differences";
  report.add(delta);
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"laws",  "assoc", "partialrep", "extension",
                                              "tensor", "delta", "structure"};
  return names;
}

CheckReport run_suite(std::string_view suite, const FiniteGroup& group, const SuiteOptions& options) {
  if (suite == "all") {
    CheckReport report;
    for (const auto& name : suite_names()) report.append(run_suite(name, group, options));
    return report;
  }
  const std::string prefix = std::string(suite) + ".";
  if (suite == "laws") {
    CheckReport report;
    append_prefixed(report, prefix, laws_suite(options));
    return report;
  }
  if (suite == "tensor") {
    CheckReport report;
    append_prefixed(report, prefix, tensor_suite(group, options));
    return report;
  }
  const auto gamma = std::make_shared<const Gamma>(group, options.bound);
  CheckReport body;
  if (suite == "assoc") {
    body = assoc_suite(gamma, options);
  } else if (suite == "partialrep") {
    body = partialrep_suite(gamma);
  } else if (suite == "extension") {
    body = extension_suite(gamma, options);
  } else if (suite == "delta") {
    body = delta_suite(gamma, options);
  } else if (suite == "structure") {
    body = structure_suite(group, gamma, options);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  CheckReport report;
  append_prefixed(report, prefix, body);
  return report;
}

}  // namespace pargroupoid
