#ifndef PARGROUPOID_PARTIAL_REP_HPP
#define PARGROUPOID_PARTIAL_REP_HPP

// Partial representations π : G -> A, the canonical one λ_p into KΓ(G),
// the idempotents ε(g) = π(g)π(g^-1), and the extension of π to a unital
// homomorphism KΓ(G) -> A with its verification.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pargroupoid/groupoid.hpp"
#include "pargroupoid/report.hpp"
#include "pargroupoid/semialgebra.hpp"

namespace pargroupoid {

/// A map G -> A given by its images, indexed by group element.
template <Semialgebra A>
struct PartialRepMap {
  FiniteGroup group;
  A algebra;
  std::vector<typename A::value_type> images;

  [[nodiscard]] const typename A::value_type& operator()(Element g) const { return images.at(g); }
};

/// Checks π(e) = 1, π(g)π(h)π(h^-1) = π(gh)π(h^-1) and
/// π(g^-1)π(g)π(h) = π(g^-1)π(gh) for every pair (g, h).
template <Semialgebra A>
AxiomReport verify_partial_rep(const PartialRepMap<A>& pi) {
  const auto& G = pi.group;
  const auto& alg = pi.algebra;
  auto lbl = [&](Element g) { return G.label(g); };
  CheckAccumulator unit("unit");
  CheckAccumulator right("right_relation");
  CheckAccumulator left("left_relation");
  unit.record(alg.equal(pi(0), alg.one()), [&] { return "pi(e) = " + alg.describe(pi(0)); });
  for (Element g = 0; g < G.order(); ++g) {
    const auto gi = G.inverse(g);
    for (Element h = 0; h < G.order(); ++h) {
      const auto hi = G.inverse(h);
      const auto gh = G.mul(g, h);
      right.record(alg.equal(alg.mul(alg.mul(pi(g), pi(h)), pi(hi)), alg.mul(pi(gh), pi(hi))),
                   [&] { return "g=" + lbl(g) + ",h=" + lbl(h); });
      left.record(alg.equal(alg.mul(alg.mul(pi(gi), pi(g)), pi(h)), alg.mul(pi(gi), pi(gh))),
                  [&] { return "g=" + lbl(g) + ",h=" + lbl(h); });
    }
  }
  AxiomReport report;
  report.add(unit.finish());
  report.add(right.finish());
  report.add(left.finish());
  return report;
}

/// λ_p(g) = Σ_{g^-1 ∈ I} (I, g).
template <Semiring S>
PartialRepMap<GammaAlgebra<S>> lambda_p(std::shared_ptr<const Gamma> gamma) {
  GammaAlgebra<S> alg(gamma);
  const auto& G = gamma->group();
  std::vector<SparseElement<S>> images;
  images.reserve(G.order());
  for (Element g = 0; g < G.order(); ++g) {
    std::vector<typename SparseElement<S>::Term> terms;
    for (auto v : gamma->vertices()) {
      if (v.contains(G.inverse(g))) terms.emplace_back(gamma->index_of({v, g}), S::one());
    }
    images.push_back(SparseElement<S>::from_terms(alg.basis(), std::move(terms)));
  }
  return {G, alg, std::move(images)};
}

/// ε(r) = π(r)π(r^-1).
template <Semialgebra A>
typename A::value_type epsilon(const PartialRepMap<A>& pi, Element r) {
  return pi.algebra.mul(pi(r), pi(pi.group.inverse(r)));
}

/// ε(g) for every g, computed once.
template <Semialgebra A>
std::vector<typename A::value_type> epsilon_table(const PartialRepMap<A>& pi) {
  std::vector<typename A::value_type> out;
  out.reserve(pi.group.order());
  for (Element r = 0; r < pi.group.order(); ++r) out.push_back(epsilon(pi, r));
  return out;
}

/// Consequences of the partial-representation relations: every ε(g) is an
/// idempotent, the ε(g) commute pairwise and π(g)π(g^-1)π(g) = π(g).
template <Semialgebra A>
AxiomReport check_epsilon_calculus(const PartialRepMap<A>& pi) {
  const auto& G = pi.group;
  const auto& alg = pi.algebra;
  const auto eps = epsilon_table(pi);
  CheckAccumulator idempotent("epsilon.idempotent");
  CheckAccumulator commute("epsilon.commute");
  CheckAccumulator regular("regularity");
  for (Element r = 0; r < G.order(); ++r) {
    idempotent.record(alg.equal(alg.mul(eps[r], eps[r]), eps[r]), [&] { return "r=" + G.label(r); });
    regular.record(alg.equal(alg.mul(eps[r], pi(r)), pi(r)), [&] { return "g=" + G.label(r); });
    for (Element s = 0; s < G.order(); ++s) {
      commute.record(alg.equal(alg.mul(eps[r], eps[s]), alg.mul(eps[s], eps[r])),
                     [&] { return "r=" + G.label(r) + ",s=" + G.label(s); });
    }
  }
  AxiomReport report;
  report.add(idempotent.finish());
  report.add(commute.finish());
  report.add(regular.finish());
  return report;
}

/// Range of the second idempotent product in the extension formula.
enum class ComplementRange {
  /// Π (1 - ε(s)) over s not in I. Gives a unital homomorphism.
  outside,
  /// Π (1 - ε(s)) over s in I. Not unital; kept so that can be shown.
  inside,
};

/// A K-linear map KΓ(G) -> A given by its values on the basis Γ(G).
template <Semialgebra A>
struct GammaHom {
  std::shared_ptr<const Gamma> gamma;
  A target;
  std::vector<typename A::value_type> images;

  /// Linear extension to an element of KΓ(G).
  template <Semiring S>
  [[nodiscard]] typename A::value_type apply(const SparseElement<S>& x) const {
    auto out = target.zero();
    for (const auto& [index, coeff] : x.terms()) out = target.add(out, target.scale(coeff, images.at(index)));
    return out;
  }
};

template <Semialgebra A>
struct Extension {
  GammaHom<A> hom;
  /// One instance per basis element: did π̃^Δ(I, g) land back in A.
  CheckResult membership;
};

namespace detail {

template <CancellativeSemiring S>
SparseElement<DeltaSemiring<S>> negate(const SparseElement<DeltaSemiring<S>>& x) {
  return map_coefficients<DeltaSemiring<S>>(x, [](const auto& c) { return DeltaSemiring<S>::neg(c); });
}

template <CancellativeSemiring S>
MatrixElement<DeltaSemiring<S>> negate(const MatrixElement<DeltaSemiring<S>>& x) {
  return map_coefficients<DeltaSemiring<S>>(x, [](const auto& c) { return DeltaSemiring<S>::neg(c); });
}

/// Π_{r ∈ I} ε(r) · Π_{s} (1 - ε(s)) for every vertex I, in the Δ-extension
/// of the target, indexed like Gamma::vertices().
template <class DeltaAlgebra>
std::vector<typename DeltaAlgebra::value_type> vertex_projectors(
    const Gamma& gamma, const DeltaAlgebra& alg, const std::vector<typename DeltaAlgebra::value_type>& eps,
    ComplementRange range) {
  const auto n = gamma.group().order();
  std::vector<typename DeltaAlgebra::value_type> complement;
  complement.reserve(n);
  for (const auto& e : eps) complement.push_back(alg.add(alg.one(), negate(e)));
  std::vector<typename DeltaAlgebra::value_type> out;
  out.reserve(gamma.vertex_count());
  for (auto vertex : gamma.vertices()) {
    auto acc = alg.one();
    for (Element r = 0; r < n; ++r) {
      if (vertex.contains(r)) acc = alg.mul(acc, eps[r]);
    }
    for (Element s = 0; s < n; ++s) {
      const bool take = range == ComplementRange::outside ? !vertex.contains(s) : vertex.contains(s);
      if (take) acc = alg.mul(acc, complement[s]);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace detail

/// π̃(I, g) = π(g) Π_{r ∈ I} ε(r) Π_{s ∉ I} (1 - ε(s)), evaluated in the ring
/// of differences of the target and then brought back into the target.
/// Basis elements whose value does not come back are recorded in
/// `membership` and mapped to zero.
template <Semialgebra A>
Extension<A> extend_to_gamma_hom(const PartialRepMap<A>& pi, std::shared_ptr<const Gamma> gamma,
                                 ComplementRange range = ComplementRange::outside) {
  using S = typename A::scalar;
  static_assert(CancellativeSemiring<S> && HasDifference<S>,
                "extension needs a cancellative target with a partial difference");
  const auto& G = gamma->group();
  const auto delta_alg = pi.algebra.template rebind<DeltaSemiring<S>>();
  std::vector<typename decltype(delta_alg)::value_type> pi_delta;
  for (const auto& img : pi.images) pi_delta.push_back(lift_to_delta<S>(img));
  std::vector<typename decltype(delta_alg)::value_type> eps;
  for (Element r = 0; r < G.order(); ++r) eps.push_back(delta_alg.mul(pi_delta[r], pi_delta[G.inverse(r)]));
  const auto projectors = detail::vertex_projectors(*gamma, delta_alg, eps, range);

  Extension<A> out{GammaHom<A>{gamma, pi.algebra, {}}, CheckResult{"membership", true, 0, ""}};
  out.hom.images.reserve(gamma->size());
  CheckAccumulator membership("membership");
  for (const auto& x : gamma->elements()) {
    const auto vertex = static_cast<std::size_t>(x.subset.mask() >> 1);
    auto value = lower_from_delta<S>(delta_alg.mul(pi_delta[x.g], projectors[vertex]));
    membership.record(value.has_value(), [&] { return "value at " + gamma->format(x) + " has a negative part"; });
    out.hom.images.push_back(value ? std::move(*value) : pi.algebra.zero());
  }
  out.membership = membership.finish();
  return out;
}

/// Rank over Q of the span of all products of λ_p images (words in the
/// generators), computed modulo a large prime. The result equals |Γ(G)|
/// exactly when the words generate KΓ(G).
std::size_t lambda_word_span_dimension(const std::shared_ptr<const Gamma>& gamma);

/// Relations of the universal semialgebra for [g] := λ_p(g): [e] = 1,
/// [s^-1][s][t] = [s^-1][st], [s][t][t^-1] = [st][t^-1], plus the check that
/// products of the [g] span a space of dimension |Γ(G)|.
AxiomReport verify_kpar_relations(const std::shared_ptr<const Gamma>& gamma);

/// Each basis element (I, g) equals λ_p(g) Π_{r ∈ I} ε(r) Π_{s ∉ I}(1 - ε(s))
/// in the Δ-extension, i.e. Γ(G) is generated by the λ_p images.
CheckResult check_basis_generated_by_lambda(const std::shared_ptr<const Gamma>& gamma);

struct FactorizationOptions {
  /// Multiplicativity is checked on every basis pair up to this group order,
  /// on `samples` seeded pairs beyond it.
  std::size_t exhaustive_order = 4;
  std::size_t samples = 2000;
  std::uint64_t seed = kDefaultSeed;
};

/// Checks that π̃ is a unital homomorphism with π = π̃ ∘ λ_p, and that it is
/// the only one: Γ(G) is generated by the λ_p images, and π̃ agrees on every
/// basis element with the value those generators force.
template <Semialgebra A>
AxiomReport verify_factorization(const PartialRepMap<A>& pi, const GammaHom<A>& hom,
                                 const FactorizationOptions& options = {}) {
  const auto& gamma = *hom.gamma;
  const auto& alg = hom.target;
  const auto& G = gamma.group();
  AxiomReport report;

  CheckAccumulator unital("unital");
  auto sum = alg.zero();
  for (auto v : gamma.vertices()) sum = alg.add(sum, hom.images[gamma.unit_index(v)]);
  unital.record(alg.equal(sum, alg.one()), [&] { return "sum of unit images = " + alg.describe(sum); });
  report.add(unital.finish());

  CheckAccumulator multiplicative("multiplicative");
  auto check_pair = [&](std::size_t x, std::size_t y) {
    const auto lhs = alg.mul(hom.images[x], hom.images[y]);
    const auto p = gamma.product_index(x, y);
    const auto rhs = p ? hom.images[*p] : alg.zero();
    multiplicative.record(alg.equal(lhs, rhs), [&] { return gamma.format(gamma[x]) + " * " + gamma.format(gamma[y]); });
  };
  if (G.order() <= options.exhaustive_order) {
    for (std::size_t x = 0; x < gamma.size(); ++x) {
      for (std::size_t y = 0; y < gamma.size(); ++y) check_pair(x, y);
    }
  } else {
    Rng rng(options.seed);
    for (std::size_t k = 0; k < options.samples; ++k) {
      const auto x = static_cast<std::size_t>(draw_below(rng, gamma.size()));
      std::size_t y = 0;
      if (k % 2 == 0) {
        // composable pair: y = (g^-1 I, g) with g in I has range I = source(x)
        const auto& gx = gamma[x];
        const auto drawn = static_cast<Element>(draw_below(rng, G.order()));
        const auto g = gx.subset.contains(drawn) ? drawn : Element{0};
        y = gamma.index_of({G.left_translate(G.inverse(g), gx.subset), g});
      } else {
        y = static_cast<std::size_t>(draw_below(rng, gamma.size()));
      }
      check_pair(x, y);
    }
  }
  report.add(multiplicative.finish());

  CheckAccumulator factor("factorization");
  for (Element g = 0; g < G.order(); ++g) {
    auto value = alg.zero();
    for (auto v : gamma.vertices()) {
      if (v.contains(G.inverse(g))) value = alg.add(value, hom.images[gamma.index_of({v, g})]);
    }
    factor.record(alg.equal(value, pi(g)), [&] { return "g=" + G.label(g) + ": " + alg.describe(value); });
  }
  report.add(factor.finish());

  CheckAccumulator unique("uniqueness");
  const auto generated = check_basis_generated_by_lambda(hom.gamma);
  unique.record(generated.passed, [&] { return generated.counterexample; });
  const auto dim = lambda_word_span_dimension(hom.gamma);
  unique.record(dim == gamma.size(), [&] {
    return "lambda_p words span dimension " + std::to_string(dim) + " != " + std::to_string(gamma.size());
  });
  const auto forced = extend_to_gamma_hom(pi, hom.gamma);
  for (std::size_t x = 0; x < gamma.size(); ++x) {
    unique.record(alg.equal(forced.hom.images[x], hom.images[x]),
                  [&] { return "image of " + gamma.format(gamma[x]) + " differs from the forced value"; });
  }
  report.add(unique.finish());
  return report;
}

}  // namespace pargroupoid

#endif
