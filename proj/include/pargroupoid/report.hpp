#ifndef PARGROUPOID_REPORT_HPP
#define PARGROUPOID_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pargroupoid {

/// One universally quantified check: did it hold on every instance that was
/// tried, how many instances were tried, and the first counterexample if not.
struct CheckResult {
  std::string id;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

/// Ordered list of check results. Used for semiring law reports, partial
/// action / partial representation axiom reports and the CLI verify suites.
class CheckReport {
 public:
  CheckReport() = default;

  void add(CheckResult result) { results_.push_back(std::move(result)); }

  void append(const CheckReport& other) {
    results_.insert(results_.end(), other.results_.begin(), other.results_.end());
  }

  [[nodiscard]] const std::vector<CheckResult>& results() const { return results_; }

  [[nodiscard]] bool all_passed() const {
    for (const auto& r : results_) {
      if (!r.passed) return false;
    }
    return true;
  }

  [[nodiscard]] const CheckResult* find(std::string_view id) const {
    for (const auto& r : results_) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }

  [[nodiscard]] const CheckResult* first_failure() const {
    for (const auto& r : results_) {
      if (!r.passed) return &r;
    }
    return nullptr;
  }

 private:
  std::vector<CheckResult> results_;
};

using LawReport = CheckReport;
using AxiomReport = CheckReport;

/// Accumulates a single CheckResult while iterating over instances.
class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string id) { result_.id = std::move(id); }

  /// Records one instance. Only the first failure's witness is kept.
  template <class WitnessFn>
  void record(bool ok, WitnessFn&& witness) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = witness();
    }
  }

  [[nodiscard]] bool failed() const { return !result_.passed; }
  [[nodiscard]] CheckResult finish() const { return result_; }

 private:
  CheckResult result_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

using Rng = std::mt19937_64;

/// Uniform-ish draw in [0, bound). Standard distributions are
/// implementation-defined, so reports would differ between standard
/// libraries; a plain modulus keeps every platform on the same sequence.
inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

}  // namespace pargroupoid

#endif
