#ifndef PARGROUPOID_TESTS_GROUPS_HPP
#define PARGROUPOID_TESTS_GROUPS_HPP

#include <string>
#include <vector>

#include "pargroupoid/group.hpp"

#ifndef PARGROUPOID_TEST_DATA
#error "PARGROUPOID_TEST_DATA must point at tests/data"
#endif

namespace testgroups {

using pargroupoid::Element;
using pargroupoid::FiniteGroup;

inline std::string data_path(const std::string& file) { return std::string(PARGROUPOID_TEST_DATA) + "/" + file; }

inline FiniteGroup quaternion() { return pargroupoid::make_group("table:" + data_path("q8.json")); }

/// Z_a x Z_b with (x1, y1)(x2, y2) = (x1 + x2, y1 + y2), index x * b + y.
inline FiniteGroup cyclic_product(std::size_t a, std::size_t b, const std::string& name) {
  const auto n = a * b;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      table[p][q] = static_cast<Element>(((p / b + q / b) % a) * b + (p % b + q % b) % b);
    }
  }
  return FiniteGroup::from_table(table, {}, name);
}

/// Z2^3 as bit vectors under xor.
inline FiniteGroup elementary_abelian_8() {
  std::vector<std::vector<Element>> table(8, std::vector<Element>(8));
  for (Element p = 0; p < 8; ++p) {
    for (Element q = 0; q < 8; ++q) table[p][q] = p ^ q;
  }
  return FiniteGroup::from_table(table, {}, "Z2^3");
}

/// One group from each isomorphism class of order <= 8 (fourteen in all).
inline std::vector<FiniteGroup> all_small_groups() {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back(pargroupoid::cyclic_group(n));
  out.push_back(pargroupoid::klein_four_group());
  out.push_back(pargroupoid::symmetric_group(3));
  out.push_back(pargroupoid::dihedral_group(4));
  out.push_back(quaternion());
  out.push_back(cyclic_product(4, 2, "Z4xZ2"));
  out.push_back(elementary_abelian_8());
  return out;
}

/// Z1..Z8, klein4, S3, D4, Q8.
inline std::vector<FiniteGroup> named_groups() {
  auto all = all_small_groups();
  all.erase(all.begin() + 12, all.end());
  return all;
}

inline std::vector<FiniteGroup> groups_up_to(std::size_t order) {
  std::vector<FiniteGroup> out;
  for (auto& g : all_small_groups()) {
    if (g.order() <= order) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace testgroups

#endif
