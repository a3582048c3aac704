#include "pargroupoid/partial_action.hpp"

#include <charconv>
#include <string>

#include "json.hpp"

namespace pargroupoid {

PartialAction::PartialAction(FiniteGroup g, std::size_t x_size)
    : group(std::move(g)),
      ground_size(x_size),
      domains(group.order(), std::vector<bool>(x_size, false)),
      maps(group.order(), std::vector<std::optional<std::size_t>>(x_size)) {}

void PartialAction::set_domain(Element g, const std::vector<std::size_t>& points) {
  auto& d = domains.at(g);
  std::fill(d.begin(), d.end(), false);
  for (auto x : points) {
    if (x >= ground_size) throw MalformedPartialAction("domain point " + std::to_string(x) + " is outside X");
    d[x] = true;
  }
}

void PartialAction::set_map(Element g, std::size_t from, std::size_t to) {
  if (from >= ground_size || to >= ground_size) {
    throw MalformedPartialAction("map pair (" + std::to_string(from) + "," + std::to_string(to) + ") leaves X");
  }
  auto& slot = maps.at(g)[from];
  if (slot && *slot != to) {
    throw MalformedPartialAction("map for " + group.label(g) + " sends " + std::to_string(from) + " twice");
  }
  slot = to;
}

namespace {

void require_well_formed(const PartialAction& pa) {
  const auto& group = pa.group;
  for (Element g = 0; g < group.order(); ++g) {
    const auto& source = pa.domains[group.inverse(g)];
    const auto& target = pa.domains[g];
    std::vector<bool> hit(pa.ground_size, false);
    for (std::size_t x = 0; x < pa.ground_size; ++x) {
      const auto& image = pa.maps[g][x];
      if (image && !target[*image]) {
        throw MalformedPartialAction("bijection-target check failed: map for " + group.label(g) + " sends " +
                                     std::to_string(x) + " to " + std::to_string(*image) + ", outside D_g");
      }
      if (source[x] != image.has_value()) {
        throw MalformedPartialAction("bijection-source check failed: map for " + group.label(g) +
                                     (source[x] ? " is undefined at " : " is defined outside D_{g^-1} at ") +
                                     std::to_string(x));
      }
      if (!image) continue;
      if (hit[*image]) {
        throw MalformedPartialAction("bijection check failed: map for " + group.label(g) + " is not injective at " +
                                     std::to_string(*image));
      }
      hit[*image] = true;
    }
    for (std::size_t y = 0; y < pa.ground_size; ++y) {
      if (target[y] && !hit[y]) {
        throw MalformedPartialAction("bijection-target check failed: map for " + group.label(g) + " misses " +
                                     std::to_string(y) + " in D_g");
      }
    }
  }
}

}  // namespace

AxiomReport verify_partial_action(const PartialAction& pa) {
  require_well_formed(pa);
  const auto& group = pa.group;
  const auto n = group.order();
  const auto x_size = pa.ground_size;
  auto lbl = [&](Element g) { return group.label(g); };

  CheckAccumulator identity("identity");
  CheckAccumulator domains("domain_compatibility");
  CheckAccumulator composition("composition");
  for (std::size_t x = 0; x < x_size; ++x) {
    const bool ok = pa.domains[0][x] && pa.maps[0][x] == x;
    identity.record(ok, [&] { return "x=" + std::to_string(x); });
  }
  for (Element g = 0; g < n; ++g) {
    const auto gi = group.inverse(g);
    for (Element h = 0; h < n; ++h) {
      const auto gh = group.mul(g, h);
      // α_g(D_{g^-1} ∩ D_h) = D_g ∩ D_gh
      std::vector<bool> image(x_size, false);
      for (std::size_t x = 0; x < x_size; ++x) {
        if (pa.domains[gi][x] && pa.domains[h][x]) image[*pa.maps[g][x]] = true;
      }
      bool same = true;
      for (std::size_t y = 0; y < x_size && same; ++y) same = image[y] == (pa.domains[g][y] && pa.domains[gh][y]);
      domains.record(same, [&] { return "g=" + lbl(g) + ",h=" + lbl(h); });

      // α_g(α_h(x)) = α_gh(x) for x in D_{h^-1} ∩ D_{h^-1 g^-1}
      const auto hi = group.inverse(h);
      const auto ghi = group.inverse(gh);
      for (std::size_t x = 0; x < x_size; ++x) {
        if (!pa.domains[hi][x] || !pa.domains[ghi][x]) continue;
        const auto hx = *pa.maps[h][x];
        const auto& ghx = pa.maps[g][hx];
        composition.record(ghx.has_value() && *ghx == *pa.maps[gh][x],
                           [&] { return "g=" + lbl(g) + ",h=" + lbl(h) + ",x=" + std::to_string(x); });
      }
    }
  }

  // Partial-function formulation: g·x is defined iff x is in the domain of α_g.
  auto act = [&](Element g, std::size_t x) { return pa.maps[g][x]; };
  CheckAccumulator pf_identity("partial_fn.identity");
  CheckAccumulator pf_inverse("partial_fn.inverse");
  CheckAccumulator pf_composition("partial_fn.composition");
  for (std::size_t x = 0; x < x_size; ++x) {
    auto ex = act(0, x);
    pf_identity.record(ex.has_value() && *ex == x, [&] { return "x=" + std::to_string(x); });
  }
  for (Element g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < x_size; ++x) {
      auto gx = act(g, x);
      if (!gx) continue;
      auto back = act(group.inverse(g), *gx);
      pf_inverse.record(back.has_value() && *back == x, [&] { return "g=" + lbl(g) + ",x=" + std::to_string(x); });
    }
    for (Element h = 0; h < n; ++h) {
      for (std::size_t x = 0; x < x_size; ++x) {
        auto hx = act(h, x);
        if (!hx) continue;
        auto ghx = act(g, *hx);
        if (!ghx) continue;
        auto direct = act(group.mul(g, h), x);
        pf_composition.record(direct.has_value() && *direct == *ghx,
                              [&] { return "g=" + lbl(g) + ",h=" + lbl(h) + ",x=" + std::to_string(x); });
      }
    }
  }

  AxiomReport report;
  for (auto* acc : {&identity, &domains, &composition, &pf_identity, &pf_inverse, &pf_composition}) {
    report.add(acc->finish());
  }
  const bool first = !identity.failed() && !domains.failed() && !composition.failed();
  const bool second = !pf_identity.failed() && !pf_inverse.failed() && !pf_composition.failed();
  CheckResult agree{"formulations_agree", first == second, 1, ""};
  if (!agree.passed) {
    agree.counterexample = std::string("domain/map axioms ") + (first ? "hold" : "fail") +
                           " but partial-function axioms " + (second ? "hold" : "fail");
  }
  report.add(agree);
  return report;
}

namespace {

Element resolve_element(const FiniteGroup& group, const std::string& key) {
  if (auto e = group.find_label(key)) return *e;
  std::size_t idx = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
  if (ec == std::errc() && ptr == key.data() + key.size() && idx < group.order()) return static_cast<Element>(idx);
  throw MalformedPartialAction("unknown group element '" + key + "'");
}

std::size_t as_point(const nlohmann::json& v) {
  if (!v.is_number_unsigned()) throw MalformedPartialAction("points of X must be non-negative integers");
  return v.get<std::size_t>();
}

}  // namespace

PartialAction parse_partial_action(const FiniteGroup& group, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedPartialAction(std::string("partial action is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("X")) throw MalformedPartialAction("partial action JSON needs \"X\"");
  PartialAction pa(group, as_point(doc["X"]));
  if (doc.contains("domains")) {
    if (!doc["domains"].is_object()) throw MalformedPartialAction("\"domains\" must be an object");
    for (const auto& [key, points] : doc["domains"].items()) {
      if (!points.is_array()) throw MalformedPartialAction("domain of " + key + " must be an array");
      std::vector<std::size_t> pts;
      for (const auto& p : points) pts.push_back(as_point(p));
      pa.set_domain(resolve_element(group, key), pts);
    }
  }
  if (doc.contains("maps")) {
    if (!doc["maps"].is_object()) throw MalformedPartialAction("\"maps\" must be an object");
    for (const auto& [key, pairs] : doc["maps"].items()) {
      if (!pairs.is_array()) throw MalformedPartialAction("map of " + key + " must be an array of pairs");
      const auto g = resolve_element(group, key);
      for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2) throw MalformedPartialAction("map entries must be [from, to]");
        pa.set_map(g, as_point(pair[0]), as_point(pair[1]));
      }
    }
  }
  return pa;
}

}  // namespace pargroupoid
