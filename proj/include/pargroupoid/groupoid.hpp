#ifndef PARGROUPOID_GROUPOID_HPP
#define PARGROUPOID_GROUPOID_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pargroupoid/group.hpp"

namespace pargroupoid {

/// Hard ceiling for building Γ(G) whatever bound is configured: the vertex
/// index is a dense array over the 2^(|G|-1) subsets that contain e.
inline constexpr std::size_t kMaxGammaOrder = 24;

/// (I, g) with e, g^-1 in I.
struct GammaElement {
  Subset subset;
  Element g = 0;

  auto operator<=>(const GammaElement&) const = default;
};

/// Validates the membership conditions; throws std::invalid_argument.
GammaElement make_gamma_element(const FiniteGroup& group, Subset subset, Element g);

/// (I, g)(J, h) = (J, gh) when I = hJ, nothing otherwise.
std::optional<GammaElement> gamma_product(const FiniteGroup& group, const GammaElement& x, const GammaElement& y);

/// s(I, g) = (I, e).
inline GammaElement source(const GammaElement& x) { return {x.subset, FiniteGroup::identity()}; }

/// r(I, g) = (gI, e).
inline GammaElement range(const FiniteGroup& group, const GammaElement& x) {
  return {group.left_translate(x.g, x.subset), FiniteGroup::identity()};
}

/// (I, g)^-1 = (gI, g^-1).
inline GammaElement gamma_inverse(const FiniteGroup& group, const GammaElement& x) {
  return {group.left_translate(x.g, x.subset), group.inverse(x.g)};
}

inline bool is_unit(const GammaElement& x) { return x.g == FiniteGroup::identity(); }

/// The groupoid Γ(G): every valid (I, g), in (mask, g) order, with O(1)
/// index lookup.
class Gamma {
 public:
  /// Throws BoundExceeded when |G| > bound (or > kMaxGammaOrder).
  explicit Gamma(FiniteGroup group, std::size_t bound = kDefaultOrderBound);

  [[nodiscard]] const FiniteGroup& group() const { return group_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::vector<GammaElement>& elements() const { return elements_; }
  [[nodiscard]] const GammaElement& operator[](std::size_t index) const { return elements_[index]; }

  /// Subsets containing e, ascending. These are the vertices (units).
  [[nodiscard]] std::vector<Subset> vertices() const;
  [[nodiscard]] std::size_t vertex_count() const { return offsets_.size() - 1; }

  [[nodiscard]] std::optional<std::size_t> find(const GammaElement& x) const;
  /// Throws std::out_of_range for pairs that are not in Γ(G).
  [[nodiscard]] std::size_t index_of(const GammaElement& x) const;
  [[nodiscard]] std::size_t unit_index(Subset vertex) const { return index_of({vertex, FiniteGroup::identity()}); }

  [[nodiscard]] std::optional<GammaElement> product(const GammaElement& x, const GammaElement& y) const {
    return gamma_product(group_, x, y);
  }
  /// Index-level product; nullopt when undefined.
  [[nodiscard]] std::optional<std::size_t> product_index(std::size_t x, std::size_t y) const;

  [[nodiscard]] std::string format(const GammaElement& x) const;

 private:
  FiniteGroup group_;
  std::vector<GammaElement> elements_;
  std::vector<std::uint32_t> offsets_;  // indexed by mask >> 1
};

/// Σ_{I ∋ e} |I| by direct enumeration of subsets.
std::size_t gamma_size_by_enumeration(const FiniteGroup& group);

/// One connected component of the graph E_Γ.
struct ComponentReport {
  std::vector<Subset> vertices;  // ascending; vertices.front() is the base vertex x1
  Subgroup isotropy;             // S(x1)
  std::vector<Element> arrows;   // arrows[i] = g with (x1, g) : x1 -> x_i, least such g; arrows[0] = e

  [[nodiscard]] std::size_t m() const { return vertices.size(); }
  [[nodiscard]] Subset base() const { return vertices.front(); }
  [[nodiscard]] std::size_t vertex_index(Subset vertex) const;
};

/// Union-find over the edges s(x) ~ r(x). Components ordered by base vertex.
std::vector<ComponentReport> connected_components(const Gamma& gamma);

/// (h, i, j) in Γ_m^H with 0-based vertex indices; s = j, r = i.
struct StandardElement {
  Element h = 0;
  std::size_t i = 0;
  std::size_t j = 0;

  auto operator<=>(const StandardElement&) const = default;
};

/// (g, i, j)(h, j, k) = (gh, i, k); nothing when the middle indices differ.
std::optional<StandardElement> standard_product(const FiniteGroup& subgroup, const StandardElement& a,
                                                const StandardElement& b);

/// The isomorphism between one component of Γ(G) and Γ_m^H, H the isotropy
/// group of the base vertex. An arrow γ : x_j -> x_i is sent to
/// (γ_i^-1 γ γ_j, i, j), where γ_i are the chosen arrows out of x1.
class ComponentNormalForm {
 public:
  ComponentNormalForm(const Gamma& gamma, ComponentReport component);

  [[nodiscard]] const ComponentReport& component() const { return component_; }
  [[nodiscard]] const StandaloneSubgroup& isotropy() const { return isotropy_; }
  [[nodiscard]] std::size_t m() const { return component_.m(); }
  /// m^2 |H|.
  [[nodiscard]] std::size_t size() const { return m() * m() * isotropy_.group.order(); }

  [[nodiscard]] StandardElement to_standard(const GammaElement& x) const;
  [[nodiscard]] GammaElement from_standard(const StandardElement& s) const;
  /// Every element of the component, in standard order (i, j, h).
  [[nodiscard]] std::vector<GammaElement> elements() const;

 private:
  const FiniteGroup* group_;
  ComponentReport component_;
  StandaloneSubgroup isotropy_;
};

}  // namespace pargroupoid

#endif
