#ifndef PARGROUPOID_GROUP_HPP
#define PARGROUPOID_GROUP_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pargroupoid {

using Element = std::uint32_t;

/// Subsets are 64-bit masks, so every subset operation needs |G| <= 64.
inline constexpr std::size_t kMaxMaskOrder = 64;

/// Default cap on |G| for subgroup enumeration and groupoid construction.
inline constexpr std::size_t kDefaultOrderBound = 16;

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table (or group spec) that does not describe a group. Row and
/// column point at the offending table entry when there is one.
class GroupValidationError : public std::runtime_error {
 public:
  GroupValidationError(const std::string& what, std::optional<std::size_t> row = std::nullopt,
                       std::optional<std::size_t> column = std::nullopt)
      : std::runtime_error(what), row_(row), column_(column) {}

  [[nodiscard]] std::optional<std::size_t> row() const { return row_; }
  [[nodiscard]] std::optional<std::size_t> column() const { return column_; }

 private:
  std::optional<std::size_t> row_;
  std::optional<std::size_t> column_;
};

/// A subset of G as a bitmask; bit i set iff element i belongs to the subset.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}

  static constexpr Subset singleton(Element g) { return Subset(std::uint64_t{1} << g); }
  static constexpr Subset first_n(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
  [[nodiscard]] constexpr bool contains(Element g) const { return (mask_ >> g) & 1U; }
  [[nodiscard]] constexpr bool contains_identity() const { return (mask_ & 1U) != 0; }
  [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
  [[nodiscard]] constexpr Subset with(Element g) const { return Subset(mask_ | (std::uint64_t{1} << g)); }
  [[nodiscard]] constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
  [[nodiscard]] std::vector<Element> elements() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.mask_ | b.mask_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.mask_ & b.mask_); }
  constexpr auto operator<=>(const Subset&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

namespace detail {

/// Permutation of bit positions applied to a whole mask with one table
/// lookup per byte.
class BitPermutation {
 public:
  BitPermutation() = default;
  explicit BitPermutation(std::span<const Element> image);

  [[nodiscard]] std::uint64_t apply(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::size_t chunk = 0; chunk < chunks_; ++chunk) {
      out |= table_[chunk * 256 + ((mask >> (8 * chunk)) & 0xFFU)];
    }
    return out;
  }

 private:
  std::size_t chunks_ = 0;
  std::vector<std::uint64_t> table_;
};

}  // namespace detail

/// Finite group given by its Cayley table. Element 0 is the identity. The
/// table is validated on construction (Latin square, identity row/column,
/// inverses, associativity).
class FiniteGroup {
 public:
  /// Throws GroupValidationError if the table is not a group with identity 0.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table, std::vector<std::string> labels = {},
                                std::string name = "table");

  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] static constexpr Element identity() { return 0; }
  [[nodiscard]] Element mul(Element a, Element b) const { return cayley_[a * order_ + b]; }
  [[nodiscard]] Element inverse(Element a) const { return inv_[a]; }
  [[nodiscard]] const std::string& label(Element a) const { return labels_[a]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::optional<Element> find_label(std::string_view label) const;

  /// |G| <= 64, the precondition of every Subset operation below.
  [[nodiscard]] bool supports_subsets() const { return order_ <= kMaxMaskOrder; }
  [[nodiscard]] Subset all() const { return Subset::first_n(order_); }

  /// {g x : x in I}.
  [[nodiscard]] Subset left_translate(Element g, Subset subset) const {
    require_subsets();
    return Subset(left_[g].apply(subset.mask()));
  }
  /// {x g : x in I}.
  [[nodiscard]] Subset right_translate(Subset subset, Element g) const;
  /// {x^-1 : x in I}.
  [[nodiscard]] Subset inverse_of(Subset subset) const {
    require_subsets();
    return Subset(inverse_perm_.apply(subset.mask()));
  }
  /// {g x g^-1 : x in I}.
  [[nodiscard]] Subset conjugate(Element g, Subset subset) const;

  /// Renders a subset as "{e,a,a^2}".
  [[nodiscard]] std::string format(Subset subset) const;

  void require_subsets() const {
    if (!supports_subsets()) {
      throw BoundExceeded("group " + name_ + " has order " + std::to_string(order_) +
                          "; subset operations need order <= 64");
    }
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> cayley_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<detail::BitPermutation> left_;
  detail::BitPermutation inverse_perm_;
};

/// Builds one of: cyclic:<n>, klein4, sym:<n> (n <= 5), dihedral:<n>,
/// table:<path to JSON Cayley table>.
FiniteGroup make_group(std::string_view spec);

/// Parses the Cayley-table JSON document
/// {"order": n, "table": [[...], ...], "labels": [...]} (labels optional).
FiniteGroup parse_group_table(std::string_view json_text, std::string name = "table");

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup klein_four_group();
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);

inline Subset left_translate(const FiniteGroup& group, Element g, Subset subset) {
  return group.left_translate(g, subset);
}

/// Subset of G closed under products and inverses and containing e.
class Subgroup {
 public:
  /// Throws std::invalid_argument when `subset` is not a subgroup.
  Subgroup(const FiniteGroup& group, Subset subset);

  [[nodiscard]] Subset elements() const { return elements_; }
  [[nodiscard]] std::uint64_t mask() const { return elements_.mask(); }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] bool contains(Element g) const { return elements_.contains(g); }

  auto operator<=>(const Subgroup&) const = default;

 private:
  Subset elements_;
};

/// Subgroup generated by `generators`.
Subset subgroup_closure(const FiniteGroup& group, Subset generators);

/// S(I) = {g : gI = I}. Requires e in I; throws std::invalid_argument otherwise.
Subgroup stabilizer_of_subset(const FiniteGroup& group, Subset subset);

/// Every subgroup, ordered by (order, mask). Throws BoundExceeded if
/// |G| > bound.
std::vector<Subgroup> subgroups(const FiniteGroup& group, std::size_t bound = kDefaultOrderBound);

/// Subgroups grouped into conjugacy classes. Each class is sorted by mask so
/// its front is the canonical representative (least mask); classes are
/// ordered by (order, representative mask).
std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const FiniteGroup& group,
                                                                  std::size_t bound = kDefaultOrderBound);

/// Right cosets Ht. The coset of e (H itself) comes first, the rest by
/// their least element.
std::vector<Subset> right_cosets(const FiniteGroup& group, const Subgroup& subgroup);

/// Greedy generating set: scan elements in index order, keep those not yet
/// in the closure of the ones kept so far.
std::vector<Element> subgroup_generators(const FiniteGroup& group, const Subgroup& subgroup);

/// A subgroup re-indexed as a group in its own right. Elements keep their
/// relative order, so the identity stays at index 0.
struct StandaloneSubgroup {
  FiniteGroup group;
  std::vector<Element> embedding;     // local index -> element of the ambient group
  std::vector<std::int32_t> local;    // ambient element -> local index, or -1

  [[nodiscard]] std::optional<Element> local_index(Element ambient) const {
    auto idx = local[ambient];
    if (idx < 0) return std::nullopt;
    return static_cast<Element>(idx);
  }
};

StandaloneSubgroup as_standalone(const FiniteGroup& group, const Subgroup& subgroup);

/// Lookup table of subgroups and their conjugacy classes.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const FiniteGroup& group, std::size_t bound = kDefaultOrderBound);

  [[nodiscard]] const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  /// Index into classes() of the class containing subgroup `mask`.
  [[nodiscard]] std::size_t class_of(std::uint64_t mask) const;
  [[nodiscard]] std::size_t index_of(std::uint64_t mask) const;
  [[nodiscard]] const Subgroup& representative(std::size_t class_index) const {
    return subgroups_[classes_[class_index].front()];
  }

 private:
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

}  // namespace pargroupoid

#endif
