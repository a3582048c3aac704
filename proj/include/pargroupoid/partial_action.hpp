#ifndef PARGROUPOID_PARTIAL_ACTION_HPP
#define PARGROUPOID_PARTIAL_ACTION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pargroupoid/group.hpp"
#include "pargroupoid/report.hpp"

namespace pargroupoid {

/// Thrown when a map α_g is not a bijection D_{g^-1} -> D_g.
class MalformedPartialAction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partial action of G on X = {0, ..., ground_size - 1}: a domain D_g and a
/// partial map α_g per group element. maps[g][x] is α_g(x), or nullopt
/// when x is outside the map's domain.
struct PartialAction {
  FiniteGroup group;
  std::size_t ground_size = 0;
  std::vector<std::vector<bool>> domains;
  std::vector<std::vector<std::optional<std::size_t>>> maps;

  /// Every D_g and α_g empty.
  PartialAction(FiniteGroup g, std::size_t x_size);

  void set_domain(Element g, const std::vector<std::size_t>& points);
  void set_map(Element g, std::size_t from, std::size_t to);
};

/// Restriction of a global action: D_g = X and α_g = action(g, .).
template <class F>
PartialAction global_action(const FiniteGroup& group, std::size_t ground_size, F&& action) {
  PartialAction pa(group, ground_size);
  std::vector<std::size_t> all(ground_size);
  for (std::size_t x = 0; x < ground_size; ++x) all[x] = x;
  for (Element g = 0; g < group.order(); ++g) {
    pa.set_domain(g, all);
    for (std::size_t x = 0; x < ground_size; ++x) pa.set_map(g, x, action(g, x));
  }
  return pa;
}

/// Checks the domain/map axioms (identity; α_g(D_{g^-1} ∩ D_h) = D_g ∩ D_gh;
/// α_g α_h = α_gh on D_{h^-1} ∩ D_{h^-1 g^-1}) and, independently, the
/// partial-function axioms (e·x = x; g^-1·(g·x) = x; g·(h·x) defined implies
/// (gh)·x defined and equal). The last entry reports whether both
/// formulations reached the same verdict. Throws MalformedPartialAction
/// before checking anything if some α_g is not a bijection D_{g^-1} -> D_g.
AxiomReport verify_partial_action(const PartialAction& action);

/// Parses {"X": n, "domains": {"g": [...]}, "maps": {"g": [[from,to],...]}}.
/// Keys name group elements by label or by decimal index. Throws
/// MalformedPartialAction on schema errors.
PartialAction parse_partial_action(const FiniteGroup& group, std::string_view json_text);

}  // namespace pargroupoid

#endif
