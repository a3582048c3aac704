#include "pargroupoid/groupoid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace pargroupoid {

GammaElement make_gamma_element(const FiniteGroup& group, Subset subset, Element g) {
  group.require_subsets();
  if (g >= group.order()) throw std::invalid_argument("element index out of range");
  if (!subset.is_subset_of(group.all())) throw std::invalid_argument("subset has bits beyond the group order");
  if (!subset.contains_identity()) throw std::invalid_argument("(I, g) needs e in I, got I = " + group.format(subset));
  if (!subset.contains(group.inverse(g))) {
    throw std::invalid_argument("(I, g) needs g^-1 in I, got I = " + group.format(subset) + ", g = " + group.label(g));
  }
  return {subset, g};
}

std::optional<GammaElement> gamma_product(const FiniteGroup& group, const GammaElement& x, const GammaElement& y) {
  if (x.subset != group.left_translate(y.g, y.subset)) return std::nullopt;
  return GammaElement{y.subset, group.mul(x.g, y.g)};
}

Gamma::Gamma(FiniteGroup group, std::size_t bound) : group_(std::move(group)) {
  const auto n = group_.order();
  if (n > bound || n > kMaxGammaOrder) {
    throw BoundExceeded("group order " + std::to_string(n) + " exceeds the groupoid bound " +
                        std::to_string(std::min(bound, kMaxGammaOrder)));
  }
  const std::size_t vertex_count = std::size_t{1} << (n - 1);
  offsets_.assign(vertex_count + 1, 0);
  elements_.reserve(static_cast<std::size_t>((n + 1)) << (n >= 2 ? n - 2 : 0));
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const Subset subset((static_cast<std::uint64_t>(v) << 1) | 1U);
    offsets_[v] = static_cast<std::uint32_t>(elements_.size());
    // g is admissible iff g^-1 in I, i.e. g ranges over I^-1 in index order.
    for (auto g : group_.inverse_of(subset).elements()) elements_.push_back({subset, g});
  }
  offsets_[vertex_count] = static_cast<std::uint32_t>(elements_.size());
}

std::vector<Subset> Gamma::vertices() const {
  std::vector<Subset> out;
  out.reserve(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) out.emplace_back((static_cast<std::uint64_t>(v) << 1) | 1U);
  return out;
}

std::optional<std::size_t> Gamma::find(const GammaElement& x) const {
  const auto mask = x.subset.mask();
  if ((mask & 1U) == 0 || !x.subset.is_subset_of(group_.all()) || x.g >= group_.order()) return std::nullopt;
  const auto admissible = group_.inverse_of(x.subset);
  if (!admissible.contains(x.g)) return std::nullopt;
  const auto below = admissible.mask() & ((std::uint64_t{1} << x.g) - 1);
  return offsets_[mask >> 1] + static_cast<std::size_t>(std::popcount(below));
}

std::size_t Gamma::index_of(const GammaElement& x) const {
  if (auto idx = find(x)) return *idx;
  throw std::out_of_range("not an element of Gamma(G): " + format(x));
}

std::optional<std::size_t> Gamma::product_index(std::size_t x, std::size_t y) const {
  auto p = gamma_product(group_, elements_[x], elements_[y]);
  if (!p) return std::nullopt;
  return index_of(*p);
}

std::string Gamma::format(const GammaElement& x) const {
  return "(" + group_.format(x.subset) + "," + group_.label(x.g) + ")";
}

std::size_t gamma_size_by_enumeration(const FiniteGroup& group) {
  group.require_subsets();
  std::size_t total = 0;
  const auto full = group.all().mask();
  for (std::uint64_t mask = 1; mask <= full; mask += 2) total += Subset(mask).size();
  return total;
}

// ---------------------------------------------------------------------------
// Components

std::size_t ComponentReport::vertex_index(Subset vertex) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), vertex);
  if (it == vertices.end() || *it != vertex) throw std::out_of_range("vertex not in component");
  return static_cast<std::size_t>(it - vertices.begin());
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // keep the smaller index as root so roots are the least vertex
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<ComponentReport> connected_components(const Gamma& gamma) {
  const auto& group = gamma.group();
  const auto count = gamma.vertex_count();
  DisjointSets sets(count);
  for (const auto& x : gamma.elements()) {
    if (is_unit(x)) continue;
    sets.unite(x.subset.mask() >> 1, range(group, x).subset.mask() >> 1);
  }

  std::vector<std::size_t> component_of(count);
  std::vector<std::vector<Subset>> members;
  std::vector<std::size_t> slot(count, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < count; ++v) {
    auto root = sets.find(v);
    if (slot[root] == static_cast<std::size_t>(-1)) {
      slot[root] = members.size();
      members.emplace_back();
    }
    component_of[v] = slot[root];
    members[slot[root]].emplace_back((static_cast<std::uint64_t>(v) << 1) | 1U);
  }

  std::vector<ComponentReport> out;
  out.reserve(members.size());
  for (auto& vertices : members) {
    // vertices were appended in ascending order, so front() is the least mask
    const auto base = vertices.front();
    std::vector<Element> arrows(vertices.size(), 0);
    std::vector<bool> have(vertices.size(), false);
    have[0] = true;
    std::size_t missing = vertices.size() - 1;
    for (auto g : group.inverse_of(base).elements()) {
      if (missing == 0) break;
      auto target = group.left_translate(g, base);
      auto it = std::lower_bound(vertices.begin(), vertices.end(), target);
      auto idx = static_cast<std::size_t>(it - vertices.begin());
      if (!have[idx]) {
        have[idx] = true;
        arrows[idx] = g;
        --missing;
      }
    }
    auto isotropy = stabilizer_of_subset(group, base);
    out.push_back(ComponentReport{std::move(vertices), isotropy, std::move(arrows)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Standard groupoid

std::optional<StandardElement> standard_product(const FiniteGroup& subgroup, const StandardElement& a,
                                                const StandardElement& b) {
  if (a.j != b.i) return std::nullopt;
  return StandardElement{subgroup.mul(a.h, b.h), a.i, b.j};
}

ComponentNormalForm::ComponentNormalForm(const Gamma& gamma, ComponentReport component)
    : group_(&gamma.group()),
      component_(std::move(component)),
      isotropy_(as_standalone(gamma.group(), component_.isotropy)) {}

StandardElement ComponentNormalForm::to_standard(const GammaElement& x) const {
  const auto& g = *group_;
  const auto j = component_.vertex_index(x.subset);
  const auto i = component_.vertex_index(g.left_translate(x.g, x.subset));
  // γ_i^-1 γ γ_j is the arrow (x1, g_i^-1 g g_j).
  const auto h = g.mul(g.mul(g.inverse(component_.arrows[i]), x.g), component_.arrows[j]);
  auto local = isotropy_.local_index(h);
  if (!local) throw std::logic_error("normal form left the isotropy group");
  return {*local, i, j};
}

GammaElement ComponentNormalForm::from_standard(const StandardElement& s) const {
  const auto& g = *group_;
  const auto h = isotropy_.embedding.at(s.h);
  const auto element = g.mul(g.mul(component_.arrows.at(s.i), h), g.inverse(component_.arrows.at(s.j)));
  return {component_.vertices.at(s.j), element};
}

std::vector<GammaElement> ComponentNormalForm::elements() const {
  std::vector<GammaElement> out;
  out.reserve(size());
  for (std::size_t i = 0; i < m(); ++i) {
    for (std::size_t j = 0; j < m(); ++j) {
      for (Element h = 0; h < isotropy_.group.order(); ++h) out.push_back(from_standard({h, i, j}));
    }
  }
  return out;
}

}  // namespace pargroupoid
