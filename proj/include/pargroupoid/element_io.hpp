#ifndef PARGROUPOID_ELEMENT_IO_HPP
#define PARGROUPOID_ELEMENT_IO_HPP

// JSON form of semialgebra elements:
//   {"basis": "gamma" | "group" | "matrix", "terms": [{"b": key, "c": "p/q"}, ...]}
// Basis keys: gamma {"I": [labels], "g": label}; group label;
// matrix {"i": row, "j": col, "h": label} with 1-based row and column.

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "pargroupoid/semialgebra.hpp"

namespace pargroupoid {

template <class S>
concept ParsableSemiring = Semiring<S> && requires(std::string_view text) {
  { S::parse(text) } -> std::same_as<std::optional<typename S::value_type>>;
};

namespace detail {

inline Element element_by_label(const FiniteGroup& group, const nlohmann::json& key) {
  if (!key.is_string()) throw std::invalid_argument("group element keys must be labels");
  auto found = group.find_label(key.get<std::string>());
  if (!found) throw std::invalid_argument("unknown group element '" + key.get<std::string>() + "'");
  return *found;
}

template <ParsableSemiring S>
typename S::value_type parse_scalar(const nlohmann::json& c) {
  if (!c.is_string()) throw std::invalid_argument("coefficients must be strings");
  auto value = S::parse(c.get<std::string>());
  if (!value) throw std::invalid_argument("bad coefficient '" + c.get<std::string>() + "'");
  return *value;
}

inline const nlohmann::json& checked_terms(const nlohmann::json& doc, const char* basis) {
  if (!doc.is_object() || doc.value("basis", "") != basis || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw std::invalid_argument(std::string("expected an element with basis \"") + basis + "\"");
  }
  return doc["terms"];
}

}  // namespace detail

template <Semiring S>
nlohmann::ordered_json to_json(const GammaAlgebra<S>& alg, const SparseElement<S>& x) {
  const auto& gamma = alg.gamma();
  const auto& group = gamma.group();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [index, coeff] : x.terms()) {
    const auto& element = gamma[index];
    nlohmann::ordered_json subset = nlohmann::ordered_json::array();
    for (auto g : element.subset.elements()) subset.push_back(group.label(g));
    nlohmann::ordered_json key;
    key["I"] = std::move(subset);
    key["g"] = group.label(element.g);
    terms.push_back({{"b", std::move(key)}, {"c", S::to_string(coeff)}});
  }
  return {{"basis", "gamma"}, {"terms", std::move(terms)}};
}

template <Semiring S>
nlohmann::ordered_json to_json(const GroupAlgebra<S>& alg, const SparseElement<S>& x) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [h, coeff] : x.terms()) {
    terms.push_back({{"b", alg.group().label(static_cast<Element>(h))}, {"c", S::to_string(coeff)}});
  }
  return {{"basis", "group"}, {"terms", std::move(terms)}};
}

template <Semiring S>
nlohmann::ordered_json to_json(const MatrixAlgebra<S>& alg, const MatrixElement<S>& x) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < x.m; ++i) {
    for (std::size_t j = 0; j < x.m; ++j) {
      for (const auto& [h, coeff] : x.at(i, j).terms()) {
        nlohmann::ordered_json key;
        key["i"] = i + 1;
        key["j"] = j + 1;
        key["h"] = alg.group().label(static_cast<Element>(h));
        terms.push_back({{"b", std::move(key)}, {"c", S::to_string(coeff)}});
      }
    }
  }
  return {{"basis", "matrix"}, {"terms", std::move(terms)}};
}

template <ParsableSemiring S>
SparseElement<S> from_json(const GammaAlgebra<S>& alg, const nlohmann::json& doc) {
  const auto& gamma = alg.gamma();
  const auto& group = gamma.group();
  std::vector<typename SparseElement<S>::Term> terms;
  for (const auto& term : detail::checked_terms(doc, "gamma")) {
    const auto& key = term.at("b");
    Subset subset;
    for (const auto& label : key.at("I")) subset = subset.with(detail::element_by_label(group, label));
    const auto element = make_gamma_element(group, subset, detail::element_by_label(group, key.at("g")));
    terms.emplace_back(gamma.index_of(element), detail::parse_scalar<S>(term.at("c")));
  }
  return SparseElement<S>::from_terms(alg.basis(), std::move(terms));
}

template <ParsableSemiring S>
SparseElement<S> from_json(const GroupAlgebra<S>& alg, const nlohmann::json& doc) {
  std::vector<typename SparseElement<S>::Term> terms;
  for (const auto& term : detail::checked_terms(doc, "group")) {
    terms.emplace_back(detail::element_by_label(alg.group(), term.at("b")), detail::parse_scalar<S>(term.at("c")));
  }
  return SparseElement<S>::from_terms(alg.basis(), std::move(terms));
}

template <ParsableSemiring S>
MatrixElement<S> from_json(const MatrixAlgebra<S>& alg, const nlohmann::json& doc) {
  auto out = alg.zero();
  for (const auto& term : detail::checked_terms(doc, "matrix")) {
    const auto& key = term.at("b");
    const auto i = key.at("i").get<std::size_t>();
    const auto j = key.at("j").get<std::size_t>();
    if (i < 1 || j < 1 || i > alg.size() || j > alg.size()) throw std::invalid_argument("matrix position out of range");
    const auto h = detail::element_by_label(alg.group(), key.at("h"));
    out = alg.add(out, alg.unit(i - 1, j - 1, h, detail::parse_scalar<S>(term.at("c"))));
  }
  return out;
}

}  // namespace pargroupoid

#endif
