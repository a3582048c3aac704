#include "pargroupoid/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace pargroupoid {

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (auto m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<Element>(std::countr_zero(m)));
  return out;
}

namespace detail {

BitPermutation::BitPermutation(std::span<const Element> image) : chunks_((image.size() + 7) / 8) {
  table_.assign(chunks_ * 256, 0);
  for (std::size_t chunk = 0; chunk < chunks_; ++chunk) {
    for (std::size_t byte = 0; byte < 256; ++byte) {
      std::uint64_t out = 0;
      for (std::size_t bit = 0; bit < 8; ++bit) {
        auto src = chunk * 8 + bit;
        if (src < image.size() && ((byte >> bit) & 1U)) out |= std::uint64_t{1} << image[src];
      }
      table_[chunk * 256 + byte] = out;
    }
  }
}

}  // namespace detail

namespace {

std::string coord(std::size_t row, std::size_t col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

std::size_t parse_count(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("bad group spec '" + std::string(spec) + "': expected a positive integer");
  }
  return value;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table, std::vector<std::string> labels,
                                    std::string name) {
  const auto n = table.size();
  if (n == 0) throw GroupValidationError("empty Cayley table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw GroupValidationError("row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                                     " entries, expected " + std::to_string(n),
                                 i);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw GroupValidationError("entry out of range at " + coord(i, j), i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[0][i] != i) throw GroupValidationError("identity is not at index 0: entry " + coord(0, i), 0, i);
    if (table[i][0] != i) throw GroupValidationError("identity is not at index 0: entry " + coord(i, 0), i, 0);
  }
  // Latin square: each value appears once per row and per column.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> row_seen(n, -1);
    std::vector<int> col_seen(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_seen[table[i][j]] >= 0) {
        throw GroupValidationError("row " + std::to_string(i) + " repeats a value at " + coord(i, j), i, j);
      }
      row_seen[table[i][j]] = static_cast<int>(j);
      if (col_seen[table[j][i]] >= 0) {
        throw GroupValidationError("column " + std::to_string(i) + " repeats a value at " + coord(j, i), j, i);
      }
      col_seen[table[j][i]] = static_cast<int>(j);
    }
  }
  std::vector<Element> inv(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (table[i][j] == 0 && table[j][i] == 0) {
        inv[i] = static_cast<Element>(j);
        found = true;
      }
    }
    if (!found) throw GroupValidationError("element " + std::to_string(i) + " has no two-sided inverse", i);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = table[a][b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          throw GroupValidationError("table is not associative: (" + std::to_string(a) + "*" + std::to_string(b) +
                                         ")*" + std::to_string(c) + " != " + std::to_string(a) + "*(" +
                                         std::to_string(b) + "*" + std::to_string(c) + ")",
                                     a, b);
        }
      }
    }
  }
  if (labels.empty()) {
    labels.reserve(n);
    labels.emplace_back("e");
    for (std::size_t i = 1; i < n; ++i) labels.push_back("g" + std::to_string(i));
  } else if (labels.size() != n) {
    throw GroupValidationError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }

  FiniteGroup g;
  g.order_ = n;
  g.cayley_.reserve(n * n);
  for (const auto& row : table) g.cayley_.insert(g.cayley_.end(), row.begin(), row.end());
  g.inv_ = std::move(inv);
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  if (n <= kMaxMaskOrder) {
    g.left_.reserve(n);
    for (std::size_t a = 0; a < n; ++a) g.left_.emplace_back(std::span<const Element>(&g.cayley_[a * n], n));
    g.inverse_perm_ = detail::BitPermutation(g.inv_);
  }
  return g;
}

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < order_; ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  return std::nullopt;
}

Subset FiniteGroup::right_translate(Subset subset, Element g) const {
  require_subsets();
  std::uint64_t out = 0;
  for (auto x : subset.elements()) out |= std::uint64_t{1} << mul(x, g);
  return Subset(out);
}

Subset FiniteGroup::conjugate(Element g, Subset subset) const {
  require_subsets();
  std::uint64_t out = 0;
  const auto gi = inverse(g);
  for (auto x : subset.elements()) out |= std::uint64_t{1} << mul(mul(g, x), gi);
  return Subset(out);
}

std::string FiniteGroup::format(Subset subset) const {
  std::string out = "{";
  bool first = true;
  for (auto x : subset.elements()) {
    if (!first) out += ",";
    out += labels_[x];
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Built-in families

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group needs n >= 1");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = static_cast<Element>((i + j) % n);
    labels.push_back(i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels), "cyclic:" + std::to_string(n));
}

FiniteGroup klein_four_group() {
  std::vector<std::vector<Element>> table(4, std::vector<Element>(4));
  for (Element i = 0; i < 4; ++i) {
    for (Element j = 0; j < 4; ++j) table[i][j] = i ^ j;
  }
  return FiniteGroup::from_table(std::move(table), {"e", "a", "b", "ab"}, "klein4");
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 5) throw std::invalid_argument("sym:<n> supports 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<Element>(i);
    std::string label;
    for (int v : perms[i]) label += static_cast<char>('1' + v);
    labels.push_back(i == 0 ? "e" : label);
  }
  const auto order = perms.size();
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<int> composed(n);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      // (a b)(x) = a(b(x))
      for (std::size_t x = 0; x < n; ++x) composed[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      table[a][b] = index.at(composed);
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels), "sym:" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral group needs n >= 1");
  // index k < n is r^k, index n + k is r^k s.
  const auto order = 2 * n;
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % n;
      const std::size_t a = x / n;
      const std::size_t j = y % n;
      const std::size_t b = y / n;
      // r^i s^a r^j s^b = r^(i + (-1)^a j) s^(a + b)
      const std::size_t k = a == 0 ? (i + j) % n : (i + n - j) % n;
      table[x][y] = static_cast<Element>(k + n * (a ^ b));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < order; ++k) {
    const auto rot = k % n;
    std::string r = rot == 0 ? "" : rot == 1 ? "r" : "r^" + std::to_string(rot);
    if (k < n) {
      labels.push_back(k == 0 ? "e" : r);
    } else {
      labels.push_back(r + "s");
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels), "dihedral:" + std::to_string(n));
}

FiniteGroup parse_group_table(std::string_view json_text, std::string name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GroupValidationError(std::string("Cayley table is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table")) {
    throw GroupValidationError("Cayley table JSON needs \"order\" and \"table\"");
  }
  if (!doc["order"].is_number_unsigned()) throw GroupValidationError("\"order\" must be a positive integer");
  const auto n = doc["order"].get<std::size_t>();
  const auto& rows = doc["table"];
  if (!rows.is_array() || rows.size() != n) {
    throw GroupValidationError("\"table\" must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<Element>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array()) throw GroupValidationError("row " + std::to_string(i) + " is not an array", i);
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const auto& cell = rows[i][j];
      if (!cell.is_number_unsigned()) {
        throw GroupValidationError("entry " + coord(i, j) + " is not a non-negative integer", i, j);
      }
      table[i].push_back(cell.get<Element>());
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw GroupValidationError("\"labels\" must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw GroupValidationError("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(name));
}

FiniteGroup make_group(std::string_view spec) {
  auto colon = spec.find(':');
  auto kind = spec.substr(0, colon);
  auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "klein4" && colon == std::string_view::npos) return klein_four_group();
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("bad group spec '" + std::string(spec) +
                                "': expected cyclic:<n> | klein4 | sym:<n> | dihedral:<n> | table:<path>");
  }
  if (kind == "cyclic") {
    auto n = parse_count(arg, spec);
    if (n < 1) throw std::invalid_argument("cyclic:<n> needs n >= 1");
    return cyclic_group(n);
  }
  if (kind == "sym") {
    auto n = parse_count(arg, spec);
    if (n < 1 || n > 5) throw std::invalid_argument("sym:<n> supports 1 <= n <= 5");
    return symmetric_group(n);
  }
  if (kind == "dihedral") {
    auto n = parse_count(arg, spec);
    if (n < 1) throw std::invalid_argument("dihedral:<n> needs n >= 1");
    return dihedral_group(n);
  }
  if (kind == "table") {
    std::ifstream in{std::string(arg)};
    if (!in) throw GroupValidationError("cannot open Cayley table file '" + std::string(arg) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_group_table(buffer.str(), std::string(spec));
  }
  throw std::invalid_argument("bad group spec '" + std::string(spec) +
                              "': expected cyclic:<n> | klein4 | sym:<n> | dihedral:<n> | table:<path>");
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(const FiniteGroup& group, Subset subset) : elements_(subset) {
  group.require_subsets();
  if (!subset.contains_identity()) throw std::invalid_argument("subgroup must contain e: " + group.format(subset));
  for (auto a : subset.elements()) {
    if (!subset.contains(group.inverse(a))) {
      throw std::invalid_argument("not closed under inverses: " + group.format(subset));
    }
    for (auto b : subset.elements()) {
      if (!subset.contains(group.mul(a, b))) {
        throw std::invalid_argument("not closed under products: " + group.format(subset));
      }
    }
  }
}

Subset subgroup_closure(const FiniteGroup& group, Subset generators) {
  group.require_subsets();
  auto current = generators.with(FiniteGroup::identity());
  while (true) {
    auto next = current;
    for (auto a : current.elements()) next = next | group.left_translate(a, current);
    if (next == current) return current;
    current = next;
  }
}

Subgroup stabilizer_of_subset(const FiniteGroup& group, Subset subset) {
  group.require_subsets();
  if (!subset.contains_identity()) {
    throw std::invalid_argument("stabilizer_of_subset needs e in I, got " + group.format(subset));
  }
  std::uint64_t mask = 0;
  // gI = I forces g = g e in I, so only members of I can stabilize.
  for (auto g : subset.elements()) {
    if (group.left_translate(g, subset) == subset) mask |= std::uint64_t{1} << g;
  }
  return Subgroup(group, Subset(mask));
}

std::vector<Subgroup> subgroups(const FiniteGroup& group, std::size_t bound) {
  if (group.order() > bound) {
    throw BoundExceeded("group order " + std::to_string(group.order()) + " exceeds bound " + std::to_string(bound));
  }
  group.require_subsets();
  // Every subgroup is reached from {e} by repeatedly adjoining one element
  // and closing, so a search over that relation finds them all.
  std::vector<Subset> found{Subset::singleton(0)};
  std::vector<std::uint64_t> seen{1};
  for (std::size_t k = 0; k < found.size(); ++k) {
    const auto h = found[k];
    for (Element g = 0; g < group.order(); ++g) {
      if (h.contains(g)) continue;
      auto c = subgroup_closure(group, h.with(g));
      auto it = std::lower_bound(seen.begin(), seen.end(), c.mask());
      if (it != seen.end() && *it == c.mask()) continue;
      seen.insert(it, c.mask());
      found.push_back(c);
    }
  }
  std::sort(found.begin(), found.end(), [](Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto s : found) out.emplace_back(group, s);
  return out;
}

std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const FiniteGroup& group, std::size_t bound) {
  SubgroupLattice lattice(group, bound);
  std::vector<std::vector<Subgroup>> out;
  for (const auto& cls : lattice.classes()) {
    std::vector<Subgroup> members;
    for (auto idx : cls) members.push_back(lattice.subgroups()[idx]);
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<Subset> right_cosets(const FiniteGroup& group, const Subgroup& subgroup) {
  group.require_subsets();
  std::vector<Subset> out;
  Subset covered;
  for (Element t = 0; t < group.order(); ++t) {
    if (covered.contains(t)) continue;
    auto coset = group.right_translate(subgroup.elements(), t);
    covered = covered | coset;
    out.push_back(coset);
  }
  return out;
}

std::vector<Element> subgroup_generators(const FiniteGroup& group, const Subgroup& subgroup) {
  std::vector<Element> gens;
  Subset span = Subset::singleton(0);
  for (auto g : subgroup.elements().elements()) {
    if (span.contains(g)) continue;
    gens.push_back(g);
    span = subgroup_closure(group, span.with(g));
  }
  return gens;
}

StandaloneSubgroup as_standalone(const FiniteGroup& group, const Subgroup& subgroup) {
  auto members = subgroup.elements().elements();
  std::vector<std::int32_t> local(group.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::int32_t>(i);
  std::vector<std::vector<Element>> table(members.size(), std::vector<Element>(members.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back(group.label(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j) {
      table[i][j] = static_cast<Element>(local[group.mul(members[i], members[j])]);
    }
  }
  auto name = group.name() + "/" + group.format(subgroup.elements());
  return StandaloneSubgroup{FiniteGroup::from_table(std::move(table), std::move(labels), std::move(name)),
                            std::move(members), std::move(local)};
}

SubgroupLattice::SubgroupLattice(const FiniteGroup& group, std::size_t bound) : subgroups_(pargroupoid::subgroups(group, bound)) {
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  class_of_.assign(subgroups_.size(), kUnassigned);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (class_of_[i] != kUnassigned) continue;
    std::vector<std::size_t> members;
    for (Element g = 0; g < group.order(); ++g) {
      auto idx = index_of(group.conjugate(g, subgroups_[i].elements()).mask());
      if (class_of_[idx] == kUnassigned) {
        class_of_[idx] = classes_.size();
        members.push_back(idx);
      }
    }
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return subgroups_[a].mask() < subgroups_[b].mask(); });
    classes_.push_back(std::move(members));
  }
  // Classes were discovered in (order, mask) order of their first member,
  // which is also the least mask of the class since equal orders sort by mask.
}

std::size_t SubgroupLattice::index_of(std::uint64_t mask) const {
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (subgroups_[i].mask() == mask) return i;
  }
  throw std::out_of_range("not a subgroup mask: " + std::to_string(mask));
}

std::size_t SubgroupLattice::class_of(std::uint64_t mask) const { return class_of_[index_of(mask)]; }

}  // namespace pargroupoid
