#ifndef PARGROUPOID_SUITES_HPP
#define PARGROUPOID_SUITES_HPP

// Invariant suites shared by the command-line verifier and the tests.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pargroupoid/partial_rep.hpp"
#include "pargroupoid/semialgebra.hpp"
#include "pargroupoid/structure.hpp"

namespace pargroupoid {

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t bound = kDefaultOrderBound;
  /// Exhaustive over basis pairs/triples up to this group order.
  std::size_t exhaustive_order = 4;
  std::size_t samples = 1000;
};

/// Associativity (basis triples, or random element triples), two-sided
/// distributivity (random), the unit on every basis element, and the units
/// as orthogonal idempotents.
template <Semiring S>
CheckReport check_gamma_algebra_laws(const std::shared_ptr<const Gamma>& gamma, const SuiteOptions& options) {
  GammaAlgebra<S> alg(gamma);
  const auto n = gamma->size();
  CheckAccumulator assoc("associative");
  if (gamma->group().order() <= options.exhaustive_order) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const auto xy = gamma->product_index(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          const auto yz = gamma->product_index(y, z);
          const auto left = xy ? gamma->product_index(*xy, z) : std::nullopt;
          const auto right = yz ? gamma->product_index(x, *yz) : std::nullopt;
          assoc.record(left == right, [&] {
            return gamma->format((*gamma)[x]) + ", " + gamma->format((*gamma)[y]) + ", " + gamma->format((*gamma)[z]);
          });
        }
      }
    }
  }
  Rng rng(options.seed);
  CheckAccumulator distributive("distributive");
  for (std::size_t k = 0; k < options.samples; ++k) {
    const auto x = alg.random(rng, 4);
    const auto y = alg.random(rng, 4);
    const auto z = alg.random(rng, 4);
    if (gamma->group().order() > options.exhaustive_order) {
      assoc.record(alg.equal(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z))),
                   [&] { return alg.describe(x) + " | " + alg.describe(y) + " | " + alg.describe(z); });
    }
    if (k < options.samples / 4) {
      distributive.record(alg.equal(alg.mul(x, alg.add(y, z)), alg.add(alg.mul(x, y), alg.mul(x, z))) &&
                              alg.equal(alg.mul(alg.add(x, y), z), alg.add(alg.mul(x, z), alg.mul(y, z))),
                          [&] { return alg.describe(x) + " | " + alg.describe(y) + " | " + alg.describe(z); });
    }
  }
  CheckAccumulator unit("unit");
  const auto one = alg.one();
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = alg.basis_element(x);
    unit.record(alg.equal(alg.mul(one, ex), ex) && alg.equal(alg.mul(ex, one), ex),
                [&] { return gamma->format((*gamma)[x]); });
  }
  CheckAccumulator orthogonal("orthogonal_units");
  const auto vertices = gamma->vertices();
  for (auto a : vertices) {
    const auto ua = alg.basis_element(gamma->unit_index(a));
    for (auto b : vertices) {
      const auto ub = alg.basis_element(gamma->unit_index(b));
      const auto expected = a == b ? ua : alg.zero();
      orthogonal.record(alg.equal(alg.mul(ua, ub), expected),
                        [&] { return gamma->group().format(a) + " vs " + gamma->group().format(b); });
    }
  }
  CheckReport report;
  for (auto* acc : {&assoc, &distributive, &unit, &orthogonal}) report.add(acc->finish());
  return report;
}

/// phi and varphi between M_m(KH) and the tensor basis: both round trips are
/// the identity, phi is additive and multiplicative, and phi(A ⊗ w) has
/// entries A_ij w.
template <Semiring S>
CheckReport check_tensor_lemma(std::size_t m, const std::shared_ptr<const FiniteGroup>& h, std::size_t samples,
                               std::uint64_t seed) {
  MatrixAlgebra<S> matrices(m, h);
  TensorAlgebra<S> tensors(m, h);
  GroupAlgebra<S> kh(h);
  Rng rng(seed);
  const auto where = [&] { return "m=" + std::to_string(m) + ", H=" + h->name() + ": "; };
  CheckAccumulator round_matrix("phi_varphi_identity");
  CheckAccumulator round_tensor("varphi_phi_identity");
  CheckAccumulator additive("phi_additive");
  CheckAccumulator multiplicative("phi_multiplicative");
  CheckAccumulator pure("phi_pure_tensor");
  for (std::size_t k = 0; k < samples; ++k) {
    const auto x = matrices.random(rng, 2);
    round_matrix.record(matrices.equal(tensor_phi(matrices, tensor_varphi(tensors, x)), x),
                        [&] { return where() + matrices.describe(x); });
    const auto s = random_sparse<S>(tensors.basis(), rng, 2 * m);
    const auto t = random_sparse<S>(tensors.basis(), rng, 2 * m);
    round_tensor.record(tensors.equal(tensor_varphi(tensors, tensor_phi(matrices, s)), s),
                        [&] { return where() + tensors.describe(s); });
    additive.record(matrices.equal(tensor_phi(matrices, tensors.add(s, t)),
                                   matrices.add(tensor_phi(matrices, s), tensor_phi(matrices, t))),
                    [&] { return where() + tensors.describe(s) + " | " + tensors.describe(t); });
    multiplicative.record(matrices.equal(tensor_phi(matrices, tensors.mul(s, t)),
                                         matrices.mul(tensor_phi(matrices, s), tensor_phi(matrices, t))),
                          [&] { return where() + tensors.describe(s) + " | " + tensors.describe(t); });
    std::vector<typename S::value_type> scalars;
    for (std::size_t c = 0; c < m * m; ++c) scalars.push_back(S::sample(rng));
    const auto w = kh.random(rng, 3);
    pure.record(matrices.equal(tensor_phi(matrices, scalars, w), tensor_phi(matrices, tensor_pure(tensors, scalars, w))),
                [&] { return where() + kh.describe(w); });
  }
  CheckReport report;
  for (auto* acc : {&round_matrix, &round_tensor, &additive, &multiplicative, &pure}) report.add(acc->finish());
  return report;
}

/// The map f from K^ΔΓ(G) to (KΓ(G))^Δ: both composites with its inverse
/// are the identity, f is additive and multiplicative, f(0) = 0.
template <CancellativeSemiring S>
CheckReport check_delta_extension(const std::shared_ptr<const Gamma>& gamma, std::size_t samples, std::uint64_t seed) {
  using D = DeltaSemiring<S>;
  GammaAlgebra<D> delta_alg(gamma);
  DifferenceAlgebra<GammaAlgebra<S>> pairs{GammaAlgebra<S>(gamma)};
  Rng rng(seed);
  const auto prefix = gamma->group().name() + "/" + D::name() + ": ";
  CheckAccumulator inverse_left("f_inverse_f");
  CheckAccumulator inverse_right("f_f_inverse");
  CheckAccumulator additive("f_additive");
  CheckAccumulator multiplicative("f_multiplicative");
  CheckAccumulator zero("f_zero");
  const auto z = delta_extension<S>(delta_alg.zero());
  zero.record(pairs.base().equal(z.pos, pairs.base().zero()) && pairs.base().equal(z.neg, pairs.base().zero()),
              [&] { return prefix + pairs.describe(z); });
  for (std::size_t k = 0; k < samples; ++k) {
    const auto x = delta_alg.random(rng, 4);
    const auto y = delta_alg.random(rng, 4);
    const auto fx = delta_extension<S>(x);
    const auto fy = delta_extension<S>(y);
    inverse_left.record(delta_alg.equal(delta_extension_inverse<S>(fx), x), [&] { return prefix + delta_alg.describe(x); });
    const DifferencePair<SparseElement<S>> p{pairs.base().random(rng, 3), pairs.base().random(rng, 3)};
    const auto back = delta_extension<S>(delta_extension_inverse<S>(p));
    // Equality of formal differences, not of representatives.
    inverse_right.record(pairs.equal(back, p), [&] { return prefix + pairs.describe(p); });
    additive.record(pairs.equal(delta_extension<S>(delta_alg.add(x, y)), pairs.add(fx, fy)),
                    [&] { return prefix + delta_alg.describe(x) + " | " + delta_alg.describe(y); });
    multiplicative.record(pairs.equal(delta_extension<S>(delta_alg.mul(x, y)), pairs.mul(fx, fy)),
                          [&] { return prefix + delta_alg.describe(x) + " | " + delta_alg.describe(y); });
  }
  CheckReport report;
  for (auto* acc : {&zero, &inverse_left, &inverse_right, &additive, &multiplicative}) report.add(acc->finish());
  return report;
}

/// The left regular representation g ↦ P_g over S, (P_g)_{x,y} = 1 iff x = gy.
template <Semiring S>
PartialRepMap<MatrixAlgebra<S>> regular_representation(const FiniteGroup& group) {
  const auto n = group.order();
  auto alg = MatrixAlgebra<S>::over_scalars(n);
  std::vector<MatrixElement<S>> images;
  for (Element g = 0; g < n; ++g) {
    std::vector<typename S::value_type> entries(n * n, S::zero());
    for (Element y = 0; y < n; ++y) entries[group.mul(g, y) * n + y] = S::one();
    images.push_back(alg.from_scalars(entries));
  }
  return {group, alg, std::move(images)};
}

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one named suite ("all" runs every suite). Check ids are prefixed
/// with the suite name. Throws std::invalid_argument for unknown names.
CheckReport run_suite(std::string_view suite, const FiniteGroup& group, const SuiteOptions& options = {});

}  // namespace pargroupoid

#endif
