#ifndef PARGROUPOID_SEMIRING_HPP
#define PARGROUPOID_SEMIRING_HPP

// Scalar systems. A semiring is a stateless policy type exposing its carrier
// as `value_type` plus static operations; properties the algebra relies on
// (additive cancellation, semifield) are declared as constexpr flags and can
// be audited with check_semiring_laws.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pargroupoid/report.hpp"

namespace pargroupoid {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class S>
concept Semiring = requires(const typename S::value_type& a, Rng& rng) {
  typename S::value_type;
  { S::name() } -> std::convertible_to<std::string>;
  { S::zero() } -> std::same_as<typename S::value_type>;
  { S::one() } -> std::same_as<typename S::value_type>;
  { S::add(a, a) } -> std::same_as<typename S::value_type>;
  { S::mul(a, a) } -> std::same_as<typename S::value_type>;
  { S::equal(a, a) } -> std::same_as<bool>;
  { S::to_string(a) } -> std::convertible_to<std::string>;
  { S::sample(rng) } -> std::same_as<typename S::value_type>;
  { S::seed_values() } -> std::same_as<std::vector<typename S::value_type>>;
  { S::additively_cancellative } -> std::convertible_to<bool>;
  { S::semifield } -> std::convertible_to<bool>;
};

/// Semirings on which the ring of differences is well defined.
template <class S>
concept CancellativeSemiring = Semiring<S> && S::additively_cancellative;

/// `difference(a, b)` returns c with b + c = a when such c lies in the carrier.
template <class S>
concept HasDifference = Semiring<S> && requires(const typename S::value_type& a) {
  { S::difference(a, a) } -> std::same_as<std::optional<typename S::value_type>>;
};

template <class S>
concept HasInverse = Semiring<S> && requires(const typename S::value_type& a) {
  { S::inverse(a) } -> std::same_as<std::optional<typename S::value_type>>;
};

template <class S>
concept HasFiniteCarrier = Semiring<S> && requires {
  { S::carrier() } -> std::same_as<std::vector<typename S::value_type>>;
};

template <Semiring S>
bool is_zero(const typename S::value_type& a) {
  return S::equal(a, S::zero());
}

// ---------------------------------------------------------------------------
// Provided instances

/// Natural numbers: cancellative, not a semifield.
struct NatSemiring {
  using value_type = Natural;
  static constexpr bool additively_cancellative = true;
  static constexpr bool semifield = false;

  static std::string name() { return "nat"; }
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static bool equal(const value_type& a, const value_type& b) { return a == b; }
  static std::optional<value_type> inverse(const value_type& a) {
    if (a == 1) return a;
    return std::nullopt;
  }
  static std::optional<value_type> difference(const value_type& a, const value_type& b) {
    if (a < b) return std::nullopt;
    return value_type(a - b);
  }
  static std::string to_string(const value_type& a) { return a.str(); }
  static std::optional<value_type> parse(std::string_view text);
  static std::vector<value_type> seed_values() { return {0, 1, 2, 3}; }
  static value_type sample(Rng& rng) { return value_type(draw_below(rng, 1000)); }
};

/// Non-negative rationals: cancellative semifield.
struct QnnSemiring {
  using value_type = Rational;
  static constexpr bool additively_cancellative = true;
  static constexpr bool semifield = true;

  static std::string name() { return "qnn"; }
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static bool equal(const value_type& a, const value_type& b) { return a == b; }
  static std::optional<value_type> inverse(const value_type& a) {
    if (a == 0) return std::nullopt;
    return value_type(1 / a);
  }
  static std::optional<value_type> difference(const value_type& a, const value_type& b) {
    if (a < b) return std::nullopt;
    return value_type(a - b);
  }
  /// "p" for integers, "p/q" otherwise.
  static std::string to_string(const value_type& a) { return a.str(); }
  static std::optional<value_type> parse(std::string_view text);
  static std::vector<value_type> seed_values() {
    return {value_type(0), value_type(1), value_type(2), value_type(1, 2), value_type(3), value_type(2, 3)};
  }
  static value_type sample(Rng& rng) {
    auto num = static_cast<long>(draw_below(rng, 21));
    auto den = static_cast<long>(draw_below(rng, 12)) + 1;
    return value_type(num, den);
  }
};

/// Boolean semiring ({0,1}, or, and). 1 + 1 = 1, so addition is not
/// cancellative; kept as the negative instance for the law checker.
struct BoolSemiring {
  using value_type = bool;
  static constexpr bool additively_cancellative = false;
  static constexpr bool semifield = true;

  static std::string name() { return "bool"; }
  static value_type zero() { return false; }
  static value_type one() { return true; }
  static value_type add(value_type a, value_type b) { return a || b; }
  static value_type mul(value_type a, value_type b) { return a && b; }
  static bool equal(value_type a, value_type b) { return a == b; }
  static std::optional<value_type> inverse(value_type a) {
    if (!a) return std::nullopt;
    return true;
  }
  static std::string to_string(value_type a) { return a ? "1" : "0"; }
  static std::vector<value_type> seed_values() { return {false, true}; }
  static std::vector<value_type> carrier() { return {false, true}; }
  static value_type sample(Rng& rng) { return draw_below(rng, 2) == 1; }
};

// ---------------------------------------------------------------------------
// Ring of differences

/// Formal difference pos - neg. Stored unreduced; two elements are equal iff
/// the cross sums agree.
template <class S>
struct DeltaElement {
  typename S::value_type pos;
  typename S::value_type neg;
};

template <CancellativeSemiring S>
struct DeltaSemiring {
  using base = S;
  using value_type = DeltaElement<S>;
  static constexpr bool additively_cancellative = true;
  static constexpr bool semifield = false;

  static std::string name() { return "delta(" + S::name() + ")"; }
  static value_type zero() { return {S::zero(), S::zero()}; }
  static value_type one() { return {S::one(), S::zero()}; }
  static value_type add(const value_type& x, const value_type& y) {
    return {S::add(x.pos, y.pos), S::add(x.neg, y.neg)};
  }
  static value_type mul(const value_type& x, const value_type& y) {
    return {S::add(S::mul(x.pos, y.pos), S::mul(x.neg, y.neg)), S::add(S::mul(x.pos, y.neg), S::mul(x.neg, y.pos))};
  }
  static value_type neg(const value_type& x) { return {x.neg, x.pos}; }
  static bool equal(const value_type& x, const value_type& y) {
    return S::equal(S::add(x.pos, y.neg), S::add(x.neg, y.pos));
  }
  static std::optional<value_type> difference(const value_type& x, const value_type& y) { return add(x, neg(y)); }

  static std::optional<value_type> inverse(const value_type& x)
    requires HasDifference<S> && HasInverse<S>
  {
    if (auto d = S::difference(x.pos, x.neg)) {
      if (auto inv = S::inverse(*d)) return value_type{*inv, S::zero()};
      return std::nullopt;
    }
    if (auto d = S::difference(x.neg, x.pos)) {
      if (auto inv = S::inverse(*d)) return value_type{S::zero(), *inv};
    }
    return std::nullopt;
  }

  /// Subtracts the smaller component when the base semiring can. Display only.
  static value_type normalized(const value_type& x) {
    if constexpr (HasDifference<S>) {
      if (auto d = S::difference(x.pos, x.neg)) return {*d, S::zero()};
      if (auto d = S::difference(x.neg, x.pos)) return {S::zero(), *d};
    }
    return x;
  }

  static std::string to_string(const value_type& x) {
    auto n = normalized(x);
    if constexpr (HasDifference<S>) {
      if (is_zero<S>(n.neg)) return S::to_string(n.pos);
      if (is_zero<S>(n.pos)) return "-" + S::to_string(n.neg);
    }
    return "(" + S::to_string(n.pos) + "," + S::to_string(n.neg) + ")";
  }

  static std::vector<value_type> seed_values() {
    std::vector<value_type> out;
    for (const auto& a : S::seed_values()) out.push_back({a, S::zero()});
    for (const auto& a : S::seed_values()) {
      if (!is_zero<S>(a)) out.push_back({S::zero(), a});
    }
    return out;
  }
  static value_type sample(Rng& rng) {
    auto p = S::sample(rng);
    auto n = S::sample(rng);
    return {std::move(p), std::move(n)};
  }
};

using NatDelta = DeltaSemiring<NatSemiring>;
using QnnDelta = DeltaSemiring<QnnSemiring>;

/// a -> (a, 0).
template <CancellativeSemiring S>
DeltaElement<S> delta_embed(const typename S::value_type& a) {
  return {a, S::zero()};
}

template <CancellativeSemiring S>
DeltaElement<S> delta_add(const DeltaElement<S>& x, const DeltaElement<S>& y) {
  return DeltaSemiring<S>::add(x, y);
}

template <CancellativeSemiring S>
DeltaElement<S> delta_mul(const DeltaElement<S>& x, const DeltaElement<S>& y) {
  return DeltaSemiring<S>::mul(x, y);
}

template <CancellativeSemiring S>
DeltaElement<S> delta_neg(const DeltaElement<S>& x) {
  return DeltaSemiring<S>::neg(x);
}

template <CancellativeSemiring S>
bool delta_equal(const DeltaElement<S>& x, const DeltaElement<S>& y) {
  return DeltaSemiring<S>::equal(x, y);
}

// ---------------------------------------------------------------------------
// Law checking

inline constexpr std::size_t kExhaustiveCarrierLimit = 64;

/// Elements the law checker iterates over: the whole carrier when it is
/// small and finite, otherwise the seed values topped up with seeded random
/// draws to roughly cbrt(budget) elements so that pool^3 <= budget.
template <Semiring S>
std::vector<typename S::value_type> law_sample_pool(std::size_t budget, std::uint64_t seed) {
  if constexpr (HasFiniteCarrier<S>) {
    auto carrier = S::carrier();
    if (carrier.size() <= kExhaustiveCarrierLimit) return carrier;
  }
  auto side = static_cast<std::size_t>(std::cbrt(static_cast<double>(std::max<std::size_t>(budget, 1))) + 1e-9);
  side = std::max<std::size_t>(side, 2);
  auto pool = S::seed_values();
  if (pool.size() > side) pool.resize(side);
  Rng rng(seed);
  while (pool.size() < side) pool.push_back(S::sample(rng));
  return pool;
}

/// Samples every semiring law over a pool of carrier elements. Failures are
/// data: each law reports the first counterexample triple.
template <Semiring S>
LawReport check_semiring_laws(std::size_t sample_budget, std::uint64_t seed = kDefaultSeed) {
  using V = typename S::value_type;
  const auto pool = law_sample_pool<S>(sample_budget, seed);
  auto str = [](const V& v) { return S::to_string(v); };
  auto triple = [&](const V& a, const V& b, const V& c) {
    return "a=" + str(a) + ",b=" + str(b) + ",c=" + str(c);
  };

  CheckAccumulator add_assoc("add.associative");
  CheckAccumulator add_comm("add.commutative");
  CheckAccumulator add_zero("add.identity");
  CheckAccumulator mul_assoc("mul.associative");
  CheckAccumulator mul_comm("mul.commutative");
  CheckAccumulator mul_one("mul.identity");
  CheckAccumulator dist_left("distributive.left");
  CheckAccumulator dist_right("distributive.right");
  CheckAccumulator annihilate("zero.annihilates");
  CheckAccumulator cancel("cancellative");
  CheckAccumulator semifield("semifield");

  for (const auto& a : pool) {
    add_zero.record(S::equal(S::add(a, S::zero()), a) && S::equal(S::add(S::zero(), a), a), [&] { return "a=" + str(a); });
    mul_one.record(S::equal(S::mul(a, S::one()), a) && S::equal(S::mul(S::one(), a), a), [&] { return "a=" + str(a); });
    annihilate.record(is_zero<S>(S::mul(a, S::zero())) && is_zero<S>(S::mul(S::zero(), a)),
                      [&] { return "a=" + str(a); });
    for (const auto& b : pool) {
      add_comm.record(S::equal(S::add(a, b), S::add(b, a)), [&] { return "a=" + str(a) + ",b=" + str(b); });
      mul_comm.record(S::equal(S::mul(a, b), S::mul(b, a)), [&] { return "a=" + str(a) + ",b=" + str(b); });
      for (const auto& c : pool) {
        add_assoc.record(S::equal(S::add(S::add(a, b), c), S::add(a, S::add(b, c))), [&] { return triple(a, b, c); });
        mul_assoc.record(S::equal(S::mul(S::mul(a, b), c), S::mul(a, S::mul(b, c))), [&] { return triple(a, b, c); });
        dist_left.record(S::equal(S::mul(a, S::add(b, c)), S::add(S::mul(a, b), S::mul(a, c))),
                         [&] { return triple(a, b, c); });
        dist_right.record(S::equal(S::mul(S::add(a, b), c), S::add(S::mul(a, c), S::mul(b, c))),
                          [&] { return triple(a, b, c); });
      }
    }
  }

  // a + c = b + c with a != b. Symmetric in (a, b), so only pairs with a
  // later in the pool than b are visited.
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& a = pool[i];
      const auto& b = pool[j];
      if (S::equal(a, b)) continue;
      for (const auto& c : pool) {
        cancel.record(!S::equal(S::add(a, c), S::add(b, c)), [&] { return triple(a, b, c); });
      }
    }
  }

  for (const auto& a : pool) {
    if (is_zero<S>(a)) continue;
    if constexpr (HasInverse<S>) {
      auto inv = S::inverse(a);
      semifield.record(inv.has_value() && S::equal(S::mul(a, *inv), S::one()), [&] { return "a=" + str(a); });
    } else {
      semifield.record(false, [&] { return "a=" + str(a) + " (no inverse operation)"; });
    }
  }

  LawReport report;
  for (auto* acc : {&add_assoc, &add_comm, &add_zero, &mul_assoc, &mul_comm, &mul_one, &dist_left, &dist_right,
                    &annihilate, &cancel, &semifield}) {
    report.add(acc->finish());
  }
  return report;
}

/// True when the commutative-semiring laws hold and every property the
/// instance claims (cancellation, semifield) held on the sample.
template <Semiring S>
bool semiring_claims_hold(const LawReport& report) {
  for (const auto& r : report.results()) {
    if (r.id == "cancellative" && !S::additively_cancellative) continue;
    if (r.id == "semifield" && !S::semifield) continue;
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace pargroupoid

#endif
