#include "pargroupoid/semiring.hpp"

#include <cctype>

namespace pargroupoid {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::optional<Natural> NatSemiring::parse(std::string_view text) {
  if (!all_digits(text)) return std::nullopt;
  return Natural(std::string(text));
}

std::optional<Rational> QnnSemiring::parse(std::string_view text) {
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  if (!all_digits(num_text)) return std::nullopt;
  Natural num(std::string{num_text});
  Natural den = 1;
  if (slash != std::string_view::npos) {
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) return std::nullopt;
    den = Natural(std::string{den_text});
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

}  // namespace pargroupoid
