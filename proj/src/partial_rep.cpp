#include "pargroupoid/partial_rep.hpp"

#include <deque>
#include <set>

namespace pargroupoid {

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp > 0) {
    if (exp & 1U) result = result * base % kPrime;
    base = base * base % kPrime;
    exp >>= 1U;
  }
  return result;
}

/// Incremental row echelon form over Z/p.
class RankTracker {
 public:
  explicit RankTracker(std::size_t dim) : dim_(dim), pivot_row_(dim, kNone) {}

  /// Adds v (0/1 entries given as sorted indices); true if the rank grew.
  bool insert(const std::vector<std::size_t>& support) {
    std::vector<std::uint64_t> v(dim_, 0);
    for (auto k : support) v[k] = 1;
    for (std::size_t col = 0; col < dim_; ++col) {
      if (v[col] == 0) continue;
      const auto row = pivot_row_[col];
      if (row == kNone) {
        const auto inv = pow_mod(v[col], kPrime - 2);
        for (auto& x : v) x = x * inv % kPrime;
        pivot_row_[col] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
      }
      const auto factor = v[col];
      const auto& r = rows_[row];
      for (std::size_t k = col; k < dim_; ++k) {
        if (r[k] != 0) v[k] = (v[k] + (kPrime - factor) * r[k]) % kPrime;
      }
    }
    return false;
  }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t dim_;
  std::vector<std::size_t> pivot_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

std::size_t lambda_word_span_dimension(const std::shared_ptr<const Gamma>& gamma) {
  const auto& G = gamma->group();
  // Words are 0/1 combinations of Γ(G); w·λ_p(g) = Σ_{(J,h) ∈ w, g ∈ J} (g^-1 J, hg).
  auto times_generator = [&](const std::vector<std::size_t>& w, Element g) {
    std::vector<std::size_t> out;
    for (auto index : w) {
      const auto& x = (*gamma)[index];
      if (!x.subset.contains(g)) continue;
      out.push_back(gamma->index_of({G.left_translate(G.inverse(g), x.subset), G.mul(x.g, g)}));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  RankTracker rank(gamma->size());
  std::set<std::vector<std::size_t>> seen;
  std::deque<std::vector<std::size_t>> queue;
  std::vector<std::size_t> unit;
  for (auto v : gamma->vertices()) unit.push_back(gamma->unit_index(v));
  std::sort(unit.begin(), unit.end());
  seen.insert(unit);
  queue.push_back(unit);
  rank.insert(unit);
  while (!queue.empty() && rank.rank() < gamma->size()) {
    auto w = std::move(queue.front());
    queue.pop_front();
    for (Element g = 0; g < G.order(); ++g) {
      auto next = times_generator(w, g);
      if (next.empty() || !seen.insert(next).second) continue;
      rank.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return rank.rank();
}

AxiomReport verify_kpar_relations(const std::shared_ptr<const Gamma>& gamma) {
  auto report = verify_partial_rep(lambda_p<NatSemiring>(gamma));
  CheckResult span{"span_dimension", true, 1, ""};
  const auto dim = lambda_word_span_dimension(gamma);
  if (dim != gamma->size()) {
    span.passed = false;
    span.counterexample = "span dimension " + std::to_string(dim) + ", |Gamma| = " + std::to_string(gamma->size());
  }
  report.add(span);
  return report;
}

CheckResult check_basis_generated_by_lambda(const std::shared_ptr<const Gamma>& gamma) {
  const auto lambda = lambda_p<NatSemiring>(gamma);
  const auto ext = extend_to_gamma_hom(lambda, gamma);
  CheckAccumulator acc("basis_generated");
  if (!ext.membership.passed) acc.record(false, [&] { return ext.membership.counterexample; });
  for (std::size_t x = 0; x < gamma->size(); ++x) {
    acc.record(lambda.algebra.equal(ext.hom.images[x], lambda.algebra.basis_element(x)), [&] {
      return "idempotent product for " + gamma->format((*gamma)[x]) + " gives " +
             lambda.algebra.describe(ext.hom.images[x]);
    });
  }
  return acc.finish();
}

}  // namespace pargroupoid
