#include "pargroupoid/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

namespace pargroupoid {

ComponentIso::ComponentIso(std::shared_ptr<const Gamma> gamma, ComponentReport component)
    : gamma_(std::move(gamma)),
      normal_form_(*gamma_, std::move(component)),
      isotropy_(std::make_shared<const FiniteGroup>(normal_form_.isotropy().group)) {}

bool ComponentIso::contains(const GammaElement& x) const {
  const auto& vertices = normal_form_.component().vertices;
  return std::binary_search(vertices.begin(), vertices.end(), x.subset);
}

CheckReport ComponentIso::verify_combinatorial() const {
  const auto& component = normal_form_.component();
  const auto where = " in component of " + gamma_->group().format(component.base());
  const auto& H = *isotropy_;

  CheckAccumulator bijective("iso_bijective");
  const auto basis = normal_form_.elements();
  std::size_t in_component = 0;
  for (const auto& x : gamma_->elements()) in_component += contains(x) ? 1 : 0;
  bijective.record(basis.size() == normal_form_.size() && in_component == normal_form_.size(), [&] {
    return std::to_string(in_component) + " basis elements vs m^2|H| = " + std::to_string(normal_form_.size()) + where;
  });
  std::set<GammaElement> distinct(basis.begin(), basis.end());
  bijective.record(distinct.size() == basis.size(), [&] { return "two standard triples share an image" + where; });
  for (std::size_t i = 0; i < m(); ++i) {
    for (std::size_t j = 0; j < m(); ++j) {
      for (Element h = 0; h < H.order(); ++h) {
        const StandardElement s{h, i, j};
        const auto x = normal_form_.from_standard(s);
        bijective.record(gamma_->find(x).has_value() && contains(x) && normal_form_.to_standard(x) == s,
                         [&] { return "round trip fails at " + gamma_->format(x) + where; });
      }
    }
  }

  CheckAccumulator multiplicative("iso_multiplicative");
  for (const auto& x : basis) {
    const auto sx = normal_form_.to_standard(x);
    for (const auto& y : basis) {
      const auto sy = normal_form_.to_standard(y);
      const auto xy = gamma_->product(x, y);
      const auto sxy = standard_product(H, sx, sy);
      const bool ok = xy.has_value() == sxy.has_value() && (!xy || normal_form_.to_standard(*xy) == *sxy);
      multiplicative.record(ok, [&] { return gamma_->format(x) + " * " + gamma_->format(y) + where; });
    }
  }

  CheckAccumulator units("iso_units");
  for (std::size_t i = 0; i < m(); ++i) {
    const auto s = normal_form_.to_standard({component.vertices[i], FiniteGroup::identity()});
    units.record(s == StandardElement{0, i, i}, [&] { return "unit at " + gamma_->group().format(component.vertices[i]); });
  }

  CheckReport report;
  report.add(bijective.finish());
  report.add(multiplicative.finish());
  report.add(units.finish());
  return report;
}

std::size_t MultiplicityTable::at(std::size_t class_index, std::size_t m) const {
  for (const auto& e : entries) {
    if (e.class_index == class_index && e.m == m) return e.c;
  }
  return 0;
}

std::vector<std::vector<std::size_t>> stabilizer_counts(const FiniteGroup& group, const SubgroupLattice& lattice) {
  const auto& subs = lattice.subgroups();
  std::vector<std::vector<std::size_t>> counts(subs.size());
  for (std::size_t k = 0; k < subs.size(); ++k) counts[k].assign(group.order() / subs[k].order() + 1, 0);
  const std::uint64_t half = std::uint64_t{1} << (group.order() - 1);
  for (std::uint64_t rest = 0; rest < half; ++rest) {
    const Subset subset((rest << 1) | 1U);
    const auto stab = stabilizer_of_subset(group, subset);
    const auto idx = lattice.index_of(stab.mask());
    ++counts[idx][subset.size() / stab.order()];
  }
  return counts;
}

MultiplicityTable multiplicity_enumeration(const Gamma& gamma, const SubgroupLattice& lattice) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> tally;
  for (const auto& component : connected_components(gamma)) {
    ++tally[{lattice.class_of(component.isotropy.mask()), component.m()}];
  }
  MultiplicityTable table;
  for (const auto& [key, c] : tally) table.entries.push_back({key.first, key.second, c});

  const auto& group = gamma.group();
  const auto counts = stabilizer_counts(group, lattice);
  CheckAccumulator identity("vertex_count_identity");
  for (std::size_t cls = 0; cls < lattice.classes().size(); ++cls) {
    const auto& rep = lattice.representative(cls);
    for (std::size_t m = 1; m <= group.order() / rep.order(); ++m) {
      std::size_t vertices = 0;
      for (auto member : lattice.classes()[cls]) vertices += counts[member][m];
      const auto c = table.at(cls, m);
      identity.record(c * m == vertices, [&] {
        return "H=" + group.format(rep.elements()) + ", m=" + std::to_string(m) + ": c*m = " + std::to_string(c * m) +
               ", vertices = " + std::to_string(vertices);
      });
    }
  }
  table.vertex_identity = identity.finish();
  return table;
}

namespace {

Natural binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Natural out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

/// x (x-1) ... (x-k+1) / k! for rational x.
Rational generalized_binomial(const Rational& x, std::size_t k) {
  Rational out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * (x - Rational(i)) / Rational(i + 1);
  return out;
}

/// Indices of subgroups strictly containing subgroup `h`.
std::vector<std::size_t> proper_supergroups(const SubgroupLattice& lattice, std::size_t h) {
  const auto& subs = lattice.subgroups();
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < subs.size(); ++b) {
    if (b != h && subs[h].elements().is_subset_of(subs[b].elements())) out.push_back(b);
  }
  return out;
}

}  // namespace

CheckResult check_coset_count_identity(const FiniteGroup& group, const SubgroupLattice& lattice) {
  const auto& subs = lattice.subgroups();
  const auto counts = stabilizer_counts(group, lattice);
  CheckAccumulator acc("coset_count_identity");
  for (std::size_t h = 0; h < subs.size(); ++h) {
    const auto index = group.order() / subs[h].order();
    auto containing = proper_supergroups(lattice, h);
    containing.push_back(h);
    for (std::size_t m = 1; m <= index; ++m) {
      std::size_t lhs = 0;
      for (auto b : containing) {
        const auto step = subs[b].order() / subs[h].order();
        if (m % step == 0) lhs += counts[b][m / step];
      }
      const auto rhs = binomial(index - 1, m - 1);
      acc.record(Natural(lhs) == rhs, [&] {
        return "H=" + group.format(subs[h].elements()) + ", m=" + std::to_string(m) + ": " + std::to_string(lhs) +
               " != " + rhs.str();
      });
    }
  }
  return acc.finish();
}

std::vector<RecursionRow> multiplicity_recursion(const FiniteGroup& group, const SubgroupLattice& lattice,
                                                 const MultiplicityTable& enumerated) {
  const auto& subs = lattice.subgroups();
  const auto n = group.order();
  std::vector<std::vector<std::size_t>> supers(subs.size());
  for (std::size_t h = 0; h < subs.size(); ++h) supers[h] = proper_supergroups(lattice, h);

  // Subgroups are sorted by order, so walking them backwards fills every
  // supergroup before it is needed.
  std::vector<std::vector<Natural>> reading(subs.size());
  std::vector<std::vector<Rational>> closed(subs.size());
  for (std::size_t h = subs.size(); h-- > 0;) {
    const auto index = n / subs[h].order();
    reading[h].assign(n + 1, 0);
    closed[h].assign(n + 1, 0);
    for (std::size_t m = 1; m <= index; ++m) {
      Natural value = binomial(index - 1, m - 1);
      Rational correction = 0;
      for (auto b : supers[h]) {
        const auto step = subs[b].order() / subs[h].order();
        if (m % step != 0) continue;
        value -= reading[b][m / step];
        correction += generalized_binomial(closed[b][m], step) / Rational(step);
      }
      reading[h][m] = value;
      closed[h][m] = Rational(binomial(index - 1, m - 1)) - Rational(m) * correction;
    }
  }

  std::vector<RecursionRow> rows;
  for (std::size_t cls = 0; cls < lattice.classes().size(); ++cls) {
    const auto& members = lattice.classes()[cls];
    const auto rep = members.front();
    const auto index = n / subs[rep].order();
    std::vector<std::string> gens;
    for (auto g : subgroup_generators(group, subs[rep])) gens.push_back(group.label(g));
    for (std::size_t m = 1; m <= index; ++m) {
      RecursionRow row;
      row.class_index = cls;
      row.subgroup_order = subs[rep].order();
      row.generators = gens;
      row.m = m;
      row.enumerated = enumerated.at(cls, m);
      const Rational via_reading = Rational(Natural(members.size()) * reading[rep][m]) / Rational(m);
      row.recursion = via_reading.str();
      row.closed_form = closed[rep][m].str();
      row.recursion_agrees = via_reading == Rational(row.enumerated);
      row.closed_form_agrees = closed[rep][m] == Rational(row.enumerated);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::size_t gamma_size_by_popcount(const FiniteGroup& group) {
  group.require_subsets();
  const std::uint64_t half = std::uint64_t{1} << (group.order() - 1);
  std::size_t total = 0;
  for (std::uint64_t rest = 0; rest < half; ++rest) total += static_cast<std::size_t>(std::popcount((rest << 1) | 1U));
  return total;
}

namespace detail {

DecompositionSummary decompose_blocks(const FiniteGroup& group, const std::shared_ptr<const Gamma>& gamma,
                                      const SubgroupLattice& lattice, std::string scalar) {
  DecompositionSummary summary;
  summary.group = group.name();
  summary.scalar = std::move(scalar);
  summary.gamma_size = gamma->size();
  const auto table = multiplicity_enumeration(*gamma, lattice);
  for (const auto& entry : table.entries) {
    const auto& rep = lattice.representative(entry.class_index);
    BlockDescriptor block;
    block.class_index = entry.class_index;
    block.representative = rep.elements();
    for (auto g : subgroup_generators(group, rep)) block.generators.push_back(group.label(g));
    block.m = entry.m;
    block.c = entry.c;
    summary.blocks.push_back(std::move(block));
  }
  std::sort(summary.blocks.begin(), summary.blocks.end(), [](const BlockDescriptor& a, const BlockDescriptor& b) {
    return std::tuple(a.subgroup_order(), a.m, a.representative.mask()) <
           std::tuple(b.subgroup_order(), b.m, b.representative.mask());
  });
  for (const auto& block : summary.blocks) summary.audit.lhs += block.dimension();
  summary.audit.rhs = gamma_size_by_popcount(group);
  summary.recursion_diff = multiplicity_recursion(group, lattice, table);
  if (!table.vertex_identity.passed) summary.iso_checks.add(table.vertex_identity);
  return summary;
}

}  // namespace detail

CheckResult check_components_orthogonal(const Gamma& gamma) {
  const auto components = connected_components(gamma);
  std::vector<std::size_t> component_of(gamma.vertex_count());
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (auto v : components[c].vertices) component_of[v.mask() >> 1] = c;
  }
  CheckAccumulator acc("components_orthogonal");
  for (std::size_t x = 0; x < gamma.size(); ++x) {
    const auto cx = component_of[gamma[x].subset.mask() >> 1];
    for (std::size_t y = 0; y < gamma.size(); ++y) {
      if (component_of[gamma[y].subset.mask() >> 1] == cx) continue;
      acc.record(!gamma.product_index(x, y).has_value(),
                 [&] { return gamma.format(gamma[x]) + " * " + gamma.format(gamma[y]); });
    }
  }
  return acc.finish();
}

std::vector<std::array<std::size_t, 3>> block_table(const DecompositionSummary& summary) {
  std::vector<std::array<std::size_t, 3>> out;
  for (const auto& b : summary.blocks) out.push_back({b.subgroup_order(), b.m, b.c});
  return out;
}

}  // namespace pargroupoid
