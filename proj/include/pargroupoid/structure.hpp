#ifndef PARGROUPOID_STRUCTURE_HPP
#define PARGROUPOID_STRUCTURE_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "pargroupoid/groupoid.hpp"
#include "pargroupoid/report.hpp"
#include "pargroupoid/semialgebra.hpp"

namespace pargroupoid {

/// KΓ_c ≅ M_m(KH) for one component c: (h, i, j) ↦ h at position (i, j).
class ComponentIso {
 public:
  ComponentIso(std::shared_ptr<const Gamma> gamma, ComponentReport component);

  [[nodiscard]] const ComponentNormalForm& normal_form() const { return normal_form_; }
  [[nodiscard]] std::size_t m() const { return normal_form_.m(); }
  [[nodiscard]] const std::shared_ptr<const FiniteGroup>& isotropy_group() const { return isotropy_; }
  [[nodiscard]] bool contains(const GammaElement& x) const;

  template <Semiring S>
  [[nodiscard]] MatrixAlgebra<S> target() const {
    return MatrixAlgebra<S>(m(), isotropy_);
  }

  /// Image of the component part of x; terms outside the component are
  /// dropped (they lie in other summands).
  template <Semiring S>
  [[nodiscard]] MatrixElement<S> apply(const MatrixAlgebra<S>& target, const SparseElement<S>& x) const {
    auto out = target.zero();
    for (const auto& [index, coeff] : x.terms()) {
      const auto& element = (*gamma_)[index];
      if (!contains(element)) continue;
      const auto s = normal_form_.to_standard(element);
      out = target.add(out, target.unit(s.i, s.j, s.h, coeff));
    }
    return out;
  }

  template <Semiring S>
  [[nodiscard]] SparseElement<S> invert(const GammaAlgebra<S>& source, const MatrixElement<S>& x) const {
    std::vector<typename SparseElement<S>::Term> terms;
    for (std::size_t i = 0; i < x.m; ++i) {
      for (std::size_t j = 0; j < x.m; ++j) {
        for (const auto& [h, coeff] : x.at(i, j).terms()) {
          terms.emplace_back(gamma_->index_of(normal_form_.from_standard({static_cast<Element>(h), i, j})), coeff);
        }
      }
    }
    return SparseElement<S>::from_terms(source.basis(), std::move(terms));
  }

  /// Basis-level checks: the map is a bijection onto Γ_m^H (sizes and round
  /// trips), products are defined on exactly the same pairs and agree, and
  /// units go to diagonal units.
  [[nodiscard]] CheckReport verify_combinatorial() const;

  /// The same map over scalars S: every basis pair multiplied in KΓ(G) and
  /// in M_m(KH) gives corresponding results.
  template <Semiring S>
  [[nodiscard]] CheckResult verify_over() const {
    GammaAlgebra<S> source(gamma_);
    const auto target_alg = target<S>();
    const auto basis = normal_form_.elements();
    CheckAccumulator acc("iso_multiplicative." + S::name());
    for (const auto& x : basis) {
      const auto ex = source.element(x);
      const auto mx = apply(target_alg, ex);
      for (const auto& y : basis) {
        const auto ey = source.element(y);
        const auto lhs = apply(target_alg, source.mul(ex, ey));
        const auto rhs = target_alg.mul(mx, apply(target_alg, ey));
        acc.record(target_alg.equal(lhs, rhs), [&] { return gamma_->format(x) + " * " + gamma_->format(y); });
      }
    }
    return acc.finish();
  }

 private:
  std::shared_ptr<const Gamma> gamma_;
  ComponentNormalForm normal_form_;
  std::shared_ptr<const FiniteGroup> isotropy_;
};

/// One summand family c · M_m(KH), H standing for its conjugacy class.
struct BlockDescriptor {
  std::size_t class_index = 0;          // index into SubgroupLattice::classes()
  Subset representative;                // least-mask member of the class
  std::vector<std::string> generators;  // labels of a generating set
  std::size_t m = 0;
  std::size_t c = 0;

  [[nodiscard]] std::size_t subgroup_order() const { return representative.size(); }
  /// c · m^2 · |H|.
  [[nodiscard]] std::size_t dimension() const { return c * m * m * representative.size(); }
};

struct DimensionAudit {
  std::size_t lhs = 0;  // Σ c m^2 |H|
  std::size_t rhs = 0;  // Σ_{I ∋ e} |I|
  [[nodiscard]] bool ok() const { return lhs == rhs; }
};

/// Enumeration versus recursion for one (class, m).
struct RecursionRow {
  std::size_t class_index = 0;
  std::size_t subgroup_order = 0;
  std::vector<std::string> generators;
  std::size_t m = 0;
  std::size_t enumerated = 0;
  /// Top-down reading N(H,m) = C((G:H)-1, m-1) - Σ_{B > H, (B:H) | m} N(B, m/(B:H)),
  /// c = |class| N(H,m) / m. Stored as a rational string in case the
  /// division is not exact.
  std::string recursion;
  /// Closed form C((G:H)-1, m-1) - m Σ_B C(c_m(B), (B:H)) / (B:H), with c_m(B)
  /// taken at the same m, evaluated as a rational with generalized binomials.
  std::string closed_form;
  bool recursion_agrees = false;
  bool closed_form_agrees = false;
};

struct DecompositionSummary {
  std::string group;
  std::string scalar;
  std::size_t gamma_size = 0;
  std::vector<BlockDescriptor> blocks;
  DimensionAudit audit;
  std::vector<RecursionRow> recursion_diff;
  /// Component iso checks; empty unless requested.
  CheckReport iso_checks;
};

/// Multiplicity table c_m(H) keyed by (class index, m), plus the
/// vertex-counting identity c m = Σ_{H' ~ H} #{I ∋ e : S(I) = H', |I| = m |H'|}.
struct MultiplicityTable {
  struct Entry {
    std::size_t class_index = 0;
    std::size_t m = 0;
    std::size_t c = 0;
  };
  std::vector<Entry> entries;  // only nonzero c, ordered by (class, m)
  CheckResult vertex_identity;

  [[nodiscard]] std::size_t at(std::size_t class_index, std::size_t m) const;
};

/// Counts components of Γ(G) by (isotropy class, vertex count).
MultiplicityTable multiplicity_enumeration(const Gamma& gamma, const SubgroupLattice& lattice);

/// N(B, k) = #{I ∋ e : S(I) = B, |I| = k |B|} for every subgroup B, by
/// enumerating subsets. Indexed [subgroup index][k].
std::vector<std::vector<std::size_t>> stabilizer_counts(const FiniteGroup& group, const SubgroupLattice& lattice);

/// Σ_{B ⊇ H, (B:H) | m} N(B, m/(B:H)) = C((G:H)-1, m-1) for every subgroup
/// H and 1 <= m <= (G:H).
CheckResult check_coset_count_identity(const FiniteGroup& group, const SubgroupLattice& lattice);

/// The recursion diagnostic next to the enumerated table.
std::vector<RecursionRow> multiplicity_recursion(const FiniteGroup& group, const SubgroupLattice& lattice,
                                                 const MultiplicityTable& enumerated);

/// Σ_{I ∋ e} |I| counted by popcount over all subsets containing e.
std::size_t gamma_size_by_popcount(const FiniteGroup& group);

struct DecomposeOptions {
  std::size_t bound = kDefaultOrderBound;
  /// Verify every component iso combinatorially.
  bool verify_isos = false;
  /// Also multiply every basis pair over the scalars, up to this order.
  std::size_t scalar_iso_order = 8;
};

namespace detail {

DecompositionSummary decompose_blocks(const FiniteGroup& group, const std::shared_ptr<const Gamma>& gamma,
                                      const SubgroupLattice& lattice, std::string scalar);

}  // namespace detail

/// Blocks of KΓ(G) over scalars S, in (|H|, m, representative mask) order,
/// with the dimension audit and the recursion diagnostic.
template <Semiring S>
DecompositionSummary decompose(const FiniteGroup& group, const DecomposeOptions& options = {}) {
  auto gamma = std::make_shared<const Gamma>(group, options.bound);
  SubgroupLattice lattice(group, options.bound);
  auto summary = detail::decompose_blocks(group, gamma, lattice, S::name());
  if (options.verify_isos) {
    for (auto component : connected_components(*gamma)) {
      ComponentIso iso(gamma, std::move(component));
      summary.iso_checks.append(iso.verify_combinatorial());
      if (group.order() <= options.scalar_iso_order) summary.iso_checks.add(iso.template verify_over<S>());
    }
  }
  return summary;
}

/// Products of basis elements from different components are zero.
CheckResult check_components_orthogonal(const Gamma& gamma);

/// The block table as (|H|, m, c) triples, for comparing decompositions.
std::vector<std::array<std::size_t, 3>> block_table(const DecompositionSummary& summary);

}  // namespace pargroupoid

#endif
