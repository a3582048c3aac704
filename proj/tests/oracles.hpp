#ifndef PARGROUPOID_TESTS_ORACLES_HPP
#define PARGROUPOID_TESTS_ORACLES_HPP

// Reference computations for the tests. They use std::set and dense
// matrices instead of bitmasks and sparse algebras, so they share no code
// with the library beyond the group's multiplication table.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pargroupoid/group.hpp"
#include "pargroupoid/semiring.hpp"

namespace oracle {

using pargroupoid::Element;
using pargroupoid::FiniteGroup;
using ElementSet = std::set<Element>;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

/// Σ_{k=1..n} k C(n-1, k-1): a subset containing e of size k contributes k
/// elements (I, g), one per g^-1 in I.
inline std::uint64_t gamma_size_formula(std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) total += k * binomial(n - 1, k - 1);
  return total;
}

/// Every subset of G that contains e, as explicit sets.
inline std::vector<ElementSet> subsets_with_identity(const FiniteGroup& g) {
  std::vector<ElementSet> out;
  const auto n = g.order();
  for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (n - 1)); ++rest) {
    ElementSet s{0};
    for (std::size_t b = 1; b < n; ++b) {
      if ((rest >> (b - 1)) & 1U) s.insert(static_cast<Element>(b));
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline ElementSet translate(const FiniteGroup& g, Element x, const ElementSet& s) {
  ElementSet out;
  for (auto y : s) out.insert(g.mul(x, y));
  return out;
}

inline std::uint64_t mask_of(const ElementSet& s) {
  std::uint64_t m = 0;
  for (auto x : s) m |= std::uint64_t{1} << x;
  return m;
}

inline bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.count(0)) return false;
  for (auto a : s) {
    if (!s.count(g.inverse(a))) return false;
    for (auto b : s) {
      if (!s.count(g.mul(a, b))) return false;
    }
  }
  return true;
}

/// Subgroups by testing every subset.
inline std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  std::vector<ElementSet> out;
  for (const auto& s : subsets_with_identity(g)) {
    if (is_subgroup(g, s)) out.push_back(s);
  }
  return out;
}

inline ElementSet stabilizer(const FiniteGroup& g, const ElementSet& s) {
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x) {
    if (translate(g, x, s) == s) out.insert(x);
  }
  return out;
}

inline ElementSet conjugate(const FiniteGroup& g, Element x, const ElementSet& s) {
  ElementSet out;
  for (auto y : s) out.insert(g.mul(g.mul(x, y), g.inverse(x)));
  return out;
}

/// Least mask among the conjugates of subgroup h.
inline std::uint64_t class_representative_mask(const FiniteGroup& g, const ElementSet& h) {
  std::uint64_t best = mask_of(h);
  for (Element x = 0; x < g.order(); ++x) best = std::min(best, mask_of(conjugate(g, x, h)));
  return best;
}

/// Blocks (|H|, m, c) of KΓ(G): the vertices of the component through I are
/// the translates x^-1 I with x in I, the isotropy group of I is its
/// stabilizer, and c counts components per (conjugacy class, m). Sorted
/// by (|H|, m, least mask in the class).
inline std::vector<std::array<std::size_t, 3>> decomposition(const FiniteGroup& g) {
  std::set<ElementSet> seen;
  std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::size_t> blocks;
  for (const auto& s : subsets_with_identity(g)) {
    if (seen.count(s)) continue;
    std::set<ElementSet> orbit;
    for (auto x : s) orbit.insert(translate(g, g.inverse(x), s));
    seen.insert(orbit.begin(), orbit.end());
    const auto h = stabilizer(g, s);
    ++blocks[{h.size(), orbit.size(), class_representative_mask(g, h)}];
  }
  std::vector<std::array<std::size_t, 3>> out;
  for (const auto& [key, c] : blocks) out.push_back({std::get<0>(key), std::get<1>(key), c});
  return out;
}

/// Number of connected components of Γ(G).
inline std::size_t component_count(const FiniteGroup& g) {
  std::set<ElementSet> seen;
  std::size_t count = 0;
  for (const auto& s : subsets_with_identity(g)) {
    if (seen.count(s)) continue;
    ++count;
    for (auto x : s) seen.insert(translate(g, g.inverse(x), s));
  }
  return count;
}

/// (I, g)(J, h) = (J, gh) when I = hJ, on explicit sets.
struct Arrow {
  ElementSet subset;
  Element g;
  bool operator==(const Arrow&) const = default;
};

inline std::optional<Arrow> product(const FiniteGroup& grp, const Arrow& x, const Arrow& y) {
  if (x.subset != translate(grp, y.g, y.subset)) return std::nullopt;
  return Arrow{y.subset, grp.mul(x.g, y.g)};
}

// Dense matrices over Q, row-major.
using Rational = pargroupoid::Rational;
using Dense = std::vector<Rational>;

inline Dense dense_identity(std::size_t n) {
  Dense out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1;
  return out;
}

inline Dense dense_mul(const Dense& a, const Dense& b, std::size_t n) {
  Dense out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  }
  return out;
}

inline Dense dense_sub(const Dense& a, const Dense& b) {
  Dense out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

/// Left regular representation, (P_g)_{x,y} = 1 iff x = g y.
inline Dense regular_matrix(const FiniteGroup& grp, Element g) {
  const auto n = grp.order();
  Dense out(n * n, 0);
  for (Element y = 0; y < n; ++y) out[grp.mul(g, y) * n + y] = 1;
  return out;
}

/// π(g) Π_{r ∈ I} ε(r) Π_{s ∉ I} (1 - ε(s)) with dense rational matrices.
inline Dense extension_value(const std::vector<Dense>& pi, const FiniteGroup& grp, const ElementSet& subset,
                             Element g, std::size_t n) {
  auto acc = pi[g];
  for (Element r = 0; r < grp.order(); ++r) {
    const auto eps = dense_mul(pi[r], pi[grp.inverse(r)], n);
    acc = dense_mul(acc, subset.count(r) ? eps : dense_sub(dense_identity(n), eps), n);
  }
  return acc;
}

}  // namespace oracle

#endif
