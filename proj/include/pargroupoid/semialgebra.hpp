#ifndef PARGROUPOID_SEMIALGEBRA_HPP
#define PARGROUPOID_SEMIALGEBRA_HPP

// Free K-semimodules on finite bases and the products that make them
// semialgebras: the groupoid semialgebra KΓ(G), group semialgebras KH,
// matrix semialgebras M_m(KH) and the tensor basis M_m(K) ⊗ KH. Every
// algebra is a small handle (basis description + shared structure) whose
// value_type is an immutable element; all arithmetic goes through the
// algebra so basis mismatches are caught in one place.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pargroupoid/group.hpp"
#include "pargroupoid/groupoid.hpp"
#include "pargroupoid/semiring.hpp"

namespace pargroupoid {

enum class BasisKind { gamma, group, matrix_entry, tensor };

struct BasisTag {
  BasisKind kind = BasisKind::gamma;
  std::size_t dimension = 0;

  bool operator==(const BasisTag&) const = default;
};

inline const char* basis_kind_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::gamma:
      return "gamma";
    case BasisKind::group:
      return "group";
    case BasisKind::matrix_entry:
      return "matrix";
    case BasisKind::tensor:
      return "tensor";
  }
  return "?";
}

/// Finite K-linear combination of basis indices. Terms are sorted by index
/// and never carry a zero coefficient; the zero element has no terms.
template <Semiring S>
class SparseElement {
 public:
  using scalar_type = typename S::value_type;
  using Term = std::pair<std::size_t, scalar_type>;

  SparseElement() = default;
  explicit SparseElement(BasisTag basis) : basis_(basis) {}

  /// Sorts, merges repeated indices and drops zeros.
  static SparseElement from_terms(BasisTag basis, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    SparseElement out(basis);
    for (auto& [index, coeff] : terms) {
      if (index >= basis.dimension) throw std::out_of_range("basis index out of range");
      if (!out.terms_.empty() && out.terms_.back().first == index) {
        out.terms_.back().second = S::add(out.terms_.back().second, coeff);
      } else {
        out.terms_.emplace_back(index, std::move(coeff));
      }
    }
    std::erase_if(out.terms_, [](const Term& t) { return pargroupoid::is_zero<S>(t.second); });
    return out;
  }

  static SparseElement basis_element(BasisTag basis, std::size_t index, scalar_type coeff = S::one()) {
    return from_terms(basis, {{index, std::move(coeff)}});
  }

  [[nodiscard]] const BasisTag& basis() const { return basis_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] scalar_type coefficient(std::size_t index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, std::size_t i) { return t.first < i; });
    if (it == terms_.end() || it->first != index) return S::zero();
    return it->second;
  }

 private:
  BasisTag basis_;
  std::vector<Term> terms_;
};

template <Semiring S>
void require_same_basis(const SparseElement<S>& a, const SparseElement<S>& b) {
  if (a.basis() != b.basis()) throw std::invalid_argument("semialgebra elements live on different bases");
}

template <Semiring S>
SparseElement<S> add(const SparseElement<S>& a, const SparseElement<S>& b) {
  require_same_basis(a, b);
  auto terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return SparseElement<S>::from_terms(a.basis(), std::move(terms));
}

template <Semiring S>
SparseElement<S> scale(const typename S::value_type& c, const SparseElement<S>& a) {
  auto terms = a.terms();
  for (auto& t : terms) t.second = S::mul(c, t.second);
  return SparseElement<S>::from_terms(a.basis(), std::move(terms));
}

/// Coefficientwise equality in S (for Δ scalars this is the cross-sum test).
template <Semiring S>
bool equal(const SparseElement<S>& a, const SparseElement<S>& b) {
  if (a.basis() != b.basis() || a.terms().size() != b.terms().size()) return false;
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    if (a.terms()[k].first != b.terms()[k].first) return false;
    if (!S::equal(a.terms()[k].second, b.terms()[k].second)) return false;
  }
  return true;
}

/// Applies `f` to every coefficient, moving the element to scalars T.
template <Semiring T, Semiring S, class F>
SparseElement<T> map_coefficients(const SparseElement<S>& a, F&& f) {
  std::vector<typename SparseElement<T>::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& [index, coeff] : a.terms()) terms.emplace_back(index, f(coeff));
  return SparseElement<T>::from_terms(a.basis(), std::move(terms));
}

/// Random element with up to `max_terms` terms.
template <Semiring S>
SparseElement<S> random_sparse(BasisTag basis, Rng& rng, std::size_t max_terms) {
  std::vector<typename SparseElement<S>::Term> terms;
  const auto count = draw_below(rng, max_terms + 1);
  for (std::size_t k = 0; k < count; ++k) {
    auto index = static_cast<std::size_t>(draw_below(rng, basis.dimension));
    terms.emplace_back(index, S::sample(rng));
  }
  return SparseElement<S>::from_terms(basis, std::move(terms));
}

/// Accumulator for products: coefficient map keyed by basis index.
template <Semiring S>
class TermAccumulator {
 public:
  void add(std::size_t index, typename S::value_type value) {
    auto [it, inserted] = sums_.try_emplace(index, value);
    if (!inserted) it->second = S::add(it->second, value);
  }

  SparseElement<S> finish(BasisTag basis) && {
    std::vector<typename SparseElement<S>::Term> terms(std::make_move_iterator(sums_.begin()),
                                                       std::make_move_iterator(sums_.end()));
    return SparseElement<S>::from_terms(basis, std::move(terms));
  }

 private:
  std::map<std::size_t, typename S::value_type> sums_;
};

/// What partial_rep and the Δ constructions need from a target semialgebra.
template <class A>
concept Semialgebra = requires(const A& alg, const typename A::value_type& x) {
  typename A::scalar;
  typename A::value_type;
  { alg.zero() } -> std::same_as<typename A::value_type>;
  { alg.one() } -> std::same_as<typename A::value_type>;
  { alg.add(x, x) } -> std::same_as<typename A::value_type>;
  { alg.mul(x, x) } -> std::same_as<typename A::value_type>;
  { alg.equal(x, x) } -> std::same_as<bool>;
  { alg.describe(x) } -> std::convertible_to<std::string>;
};

// ---------------------------------------------------------------------------
// KΓ(G)

template <Semiring S>
class GammaAlgebra {
 public:
  using scalar = S;
  using value_type = SparseElement<S>;
  template <Semiring T>
  using rebind_t = GammaAlgebra<T>;

  explicit GammaAlgebra(std::shared_ptr<const Gamma> gamma) : gamma_(std::move(gamma)) {
    if (!gamma_) throw std::invalid_argument("GammaAlgebra needs a groupoid");
  }

  template <Semiring T>
  [[nodiscard]] GammaAlgebra<T> rebind() const {
    return GammaAlgebra<T>(gamma_);
  }

  [[nodiscard]] const Gamma& gamma() const { return *gamma_; }
  [[nodiscard]] const std::shared_ptr<const Gamma>& gamma_ptr() const { return gamma_; }
  [[nodiscard]] BasisTag basis() const { return {BasisKind::gamma, gamma_->size()}; }

  [[nodiscard]] value_type zero() const { return value_type(basis()); }

  /// Σ_{I ∋ e} (I, e).
  [[nodiscard]] value_type one() const {
    std::vector<typename value_type::Term> terms;
    for (auto v : gamma_->vertices()) terms.emplace_back(gamma_->unit_index(v), S::one());
    return value_type::from_terms(basis(), std::move(terms));
  }

  [[nodiscard]] value_type basis_element(std::size_t index, typename S::value_type coeff = S::one()) const {
    return value_type::basis_element(basis(), index, std::move(coeff));
  }
  [[nodiscard]] value_type element(const GammaElement& x, typename S::value_type coeff = S::one()) const {
    return basis_element(gamma_->index_of(x), std::move(coeff));
  }

  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const {
    check(a);
    check(b);
    return pargroupoid::add(a, b);
  }

  [[nodiscard]] value_type scale(const typename S::value_type& c, const value_type& a) const {
    return pargroupoid::scale<S>(c, a);
  }

  /// Bilinear extension of α(I,g)·β(J,h) = αβ(J,gh) if I = hJ, else 0.
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const {
    check(a);
    check(b);
    const auto& group = gamma_->group();
    // Right factors grouped by their range hJ, the only left source they compose with.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_range;
    for (std::size_t k = 0; k < b.terms().size(); ++k) {
      const auto& y = (*gamma_)[b.terms()[k].first];
      by_range[group.left_translate(y.g, y.subset).mask()].push_back(k);
    }
    TermAccumulator<S> acc;
    for (const auto& [xi, alpha] : a.terms()) {
      const auto& x = (*gamma_)[xi];
      auto it = by_range.find(x.subset.mask());
      if (it == by_range.end()) continue;
      for (auto k : it->second) {
        const auto& [yi, beta] = b.terms()[k];
        const auto& y = (*gamma_)[yi];
        acc.add(gamma_->index_of({y.subset, group.mul(x.g, y.g)}), S::mul(alpha, beta));
      }
    }
    return std::move(acc).finish(basis());
  }

  [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return pargroupoid::equal(a, b); }

  [[nodiscard]] std::string describe(const value_type& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [index, coeff] : a.terms()) {
      if (!out.empty()) out += " + ";
      if (!S::equal(coeff, S::one())) out += S::to_string(coeff) + "*";
      out += gamma_->format((*gamma_)[index]);
    }
    return out;
  }

  [[nodiscard]] value_type random(Rng& rng, std::size_t max_terms) const {
    return random_sparse<S>(basis(), rng, max_terms);
  }

 private:
  void check(const value_type& a) const {
    if (a.basis() != basis()) throw std::invalid_argument("element is not in this groupoid semialgebra");
  }

  std::shared_ptr<const Gamma> gamma_;
};

/// Σ_{I ∋ e} (I, e), the unit of KΓ(G).
template <Semiring S>
SparseElement<S> identity_element(const GammaAlgebra<S>& algebra) {
  return algebra.one();
}

// ---------------------------------------------------------------------------
// KH

template <Semiring S>
class GroupAlgebra {
 public:
  using scalar = S;
  using value_type = SparseElement<S>;
  template <Semiring T>
  using rebind_t = GroupAlgebra<T>;

  explicit GroupAlgebra(std::shared_ptr<const FiniteGroup> group) : group_(std::move(group)) {
    if (!group_) throw std::invalid_argument("GroupAlgebra needs a group");
  }

  template <Semiring T>
  [[nodiscard]] GroupAlgebra<T> rebind() const {
    return GroupAlgebra<T>(group_);
  }

  [[nodiscard]] const FiniteGroup& group() const { return *group_; }
  [[nodiscard]] const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  [[nodiscard]] BasisTag basis() const { return {BasisKind::group, group_->order()}; }
  [[nodiscard]] value_type zero() const { return value_type(basis()); }
  [[nodiscard]] value_type one() const { return element(FiniteGroup::identity()); }
  [[nodiscard]] value_type element(Element h, typename S::value_type coeff = S::one()) const {
    return value_type::basis_element(basis(), h, std::move(coeff));
  }

  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const {
    check(a);
    check(b);
    return pargroupoid::add(a, b);
  }

  [[nodiscard]] value_type scale(const typename S::value_type& c, const value_type& a) const {
    return pargroupoid::scale<S>(c, a);
  }

  /// Convolution: (Σ α_g g)(Σ β_h h) = Σ α_g β_h gh.
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const {
    check(a);
    check(b);
    TermAccumulator<S> acc;
    for (const auto& [g, alpha] : a.terms()) {
      for (const auto& [h, beta] : b.terms()) {
        acc.add(group_->mul(static_cast<Element>(g), static_cast<Element>(h)), S::mul(alpha, beta));
      }
    }
    return std::move(acc).finish(basis());
  }

  [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return pargroupoid::equal(a, b); }

  [[nodiscard]] std::string describe(const value_type& a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [h, coeff] : a.terms()) {
      if (!out.empty()) out += " + ";
      if (!S::equal(coeff, S::one())) out += S::to_string(coeff) + "*";
      out += group_->label(static_cast<Element>(h));
    }
    return out;
  }

  [[nodiscard]] value_type random(Rng& rng, std::size_t max_terms) const {
    return random_sparse<S>(basis(), rng, max_terms);
  }

 private:
  void check(const value_type& a) const {
    if (a.basis() != basis()) throw std::invalid_argument("element is not in this group semialgebra");
  }

  std::shared_ptr<const FiniteGroup> group_;
};

// ---------------------------------------------------------------------------
// M_m(KH)

/// m x m matrix with entries in KH, row-major.
template <Semiring S>
struct MatrixElement {
  std::size_t m = 0;
  std::vector<SparseElement<S>> entries;

  [[nodiscard]] const SparseElement<S>& at(std::size_t i, std::size_t j) const { return entries[i * m + j]; }
  SparseElement<S>& at(std::size_t i, std::size_t j) { return entries[i * m + j]; }
};

template <Semiring T, Semiring S, class F>
MatrixElement<T> map_coefficients(const MatrixElement<S>& a, F&& f) {
  MatrixElement<T> out{a.m, {}};
  out.entries.reserve(a.entries.size());
  for (const auto& e : a.entries) out.entries.push_back(map_coefficients<T>(e, f));
  return out;
}

template <Semiring S>
class MatrixAlgebra {
 public:
  using scalar = S;
  using value_type = MatrixElement<S>;
  template <Semiring T>
  using rebind_t = MatrixAlgebra<T>;

  MatrixAlgebra(std::size_t m, std::shared_ptr<const FiniteGroup> group) : m_(m), entries_(std::move(group)) {
    if (m == 0) throw std::invalid_argument("matrix size must be positive");
  }

  /// M_m(K): matrices over the trivial group semialgebra.
  static MatrixAlgebra over_scalars(std::size_t m) {
    return MatrixAlgebra(m, std::make_shared<const FiniteGroup>(cyclic_group(1)));
  }

  template <Semiring T>
  [[nodiscard]] MatrixAlgebra<T> rebind() const {
    return MatrixAlgebra<T>(m_, entries_.group_ptr());
  }

  [[nodiscard]] std::size_t size() const { return m_; }
  [[nodiscard]] const GroupAlgebra<S>& entry_algebra() const { return entries_; }
  [[nodiscard]] const FiniteGroup& group() const { return entries_.group(); }

  [[nodiscard]] value_type zero() const { return value_type{m_, std::vector<SparseElement<S>>(m_ * m_, entries_.zero())}; }
  [[nodiscard]] value_type one() const {
    auto out = zero();
    for (std::size_t i = 0; i < m_; ++i) out.at(i, i) = entries_.one();
    return out;
  }
  /// Matrix with `coeff * h` at (i, j) and zeros elsewhere.
  [[nodiscard]] value_type unit(std::size_t i, std::size_t j, Element h = 0,
                                typename S::value_type coeff = S::one()) const {
    auto out = zero();
    out.at(i, j) = entries_.element(h, std::move(coeff));
    return out;
  }
  /// Matrix over K (entries are multiples of e).
  [[nodiscard]] value_type from_scalars(const std::vector<typename S::value_type>& row_major) const {
    if (row_major.size() != m_ * m_) throw std::invalid_argument("scalar matrix has the wrong size");
    auto out = zero();
    for (std::size_t k = 0; k < row_major.size(); ++k) out.entries[k] = entries_.element(0, row_major[k]);
    return out;
  }

  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const {
    check(a);
    check(b);
    value_type out{m_, {}};
    out.entries.reserve(m_ * m_);
    for (std::size_t k = 0; k < m_ * m_; ++k) out.entries.push_back(entries_.add(a.entries[k], b.entries[k]));
    return out;
  }

  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const {
    check(a);
    check(b);
    auto out = zero();
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) {
        const auto& left = a.at(i, k);
        if (left.is_zero()) continue;
        for (std::size_t j = 0; j < m_; ++j) {
          const auto& right = b.at(k, j);
          if (right.is_zero()) continue;
          out.at(i, j) = entries_.add(out.at(i, j), entries_.mul(left, right));
        }
      }
    }
    return out;
  }

  [[nodiscard]] value_type scale(const typename S::value_type& c, const value_type& a) const {
    value_type out{a.m, {}};
    for (const auto& e : a.entries) out.entries.push_back(pargroupoid::scale<S>(c, e));
    return out;
  }

  [[nodiscard]] bool equal(const value_type& a, const value_type& b) const {
    if (a.m != b.m || a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
      if (!entries_.equal(a.entries[k], b.entries[k])) return false;
    }
    return true;
  }

  [[nodiscard]] std::string describe(const value_type& a) const {
    std::string out = "[";
    for (std::size_t i = 0; i < a.m; ++i) {
      out += i == 0 ? "[" : ",[";
      for (std::size_t j = 0; j < a.m; ++j) {
        if (j > 0) out += ",";
        out += entries_.describe(a.at(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

  [[nodiscard]] value_type random(Rng& rng, std::size_t max_terms) const {
    value_type out{m_, {}};
    for (std::size_t k = 0; k < m_ * m_; ++k) out.entries.push_back(entries_.random(rng, max_terms));
    return out;
  }

 private:
  void check(const value_type& a) const {
    if (a.m != m_ || a.entries.size() != m_ * m_) throw std::invalid_argument("matrix dimension mismatch");
    for (const auto& e : a.entries) {
      if (e.basis() != entries_.basis()) throw std::invalid_argument("matrix entry is not in KH");
    }
  }

  std::size_t m_;
  GroupAlgebra<S> entries_;
};

// ---------------------------------------------------------------------------
// M_m(K) ⊗_K KH on the free basis {e_ij ⊗ h}

/// Index of e_ij ⊗ h in the tensor basis.
inline std::size_t tensor_index(std::size_t m, std::size_t group_order, std::size_t i, std::size_t j, Element h) {
  return (i * m + j) * group_order + h;
}

/// Free semimodule on {e_ij ⊗ h} with the product induced by the two
/// factors: (e_ij ⊗ g)(e_kl ⊗ h) = δ_jk e_il ⊗ gh.
template <Semiring S>
class TensorAlgebra {
 public:
  using scalar = S;
  using value_type = SparseElement<S>;
  template <Semiring T>
  using rebind_t = TensorAlgebra<T>;

  TensorAlgebra(std::size_t m, std::shared_ptr<const FiniteGroup> group) : m_(m), group_(std::move(group)) {}

  template <Semiring T>
  [[nodiscard]] TensorAlgebra<T> rebind() const {
    return TensorAlgebra<T>(m_, group_);
  }

  [[nodiscard]] std::size_t size() const { return m_; }
  [[nodiscard]] const FiniteGroup& group() const { return *group_; }
  [[nodiscard]] BasisTag basis() const { return {BasisKind::tensor, m_ * m_ * group_->order()}; }
  [[nodiscard]] value_type zero() const { return value_type(basis()); }
  [[nodiscard]] value_type one() const {
    std::vector<typename value_type::Term> terms;
    for (std::size_t i = 0; i < m_; ++i) terms.emplace_back(index(i, i, 0), S::one());
    return value_type::from_terms(basis(), std::move(terms));
  }
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j, Element h) const {
    return tensor_index(m_, group_->order(), i, j, h);
  }
  /// coeff · (e_ij ⊗ h).
  [[nodiscard]] value_type element(std::size_t i, std::size_t j, Element h,
                                   typename S::value_type coeff = S::one()) const {
    return value_type::basis_element(basis(), index(i, j, h), std::move(coeff));
  }

  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return pargroupoid::add(a, b); }

  [[nodiscard]] value_type scale(const typename S::value_type& c, const value_type& a) const {
    return pargroupoid::scale<S>(c, a);
  }

  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const {
    require_same_basis(a, b);
    if (a.basis() != basis()) throw std::invalid_argument("element is not in this tensor product");
    const auto n = group_->order();
    TermAccumulator<S> acc;
    for (const auto& [x, alpha] : a.terms()) {
      const auto xi = x / n / m_;
      const auto xj = (x / n) % m_;
      const auto xh = static_cast<Element>(x % n);
      for (const auto& [y, beta] : b.terms()) {
        const auto yi = y / n / m_;
        if (xj != yi) continue;
        const auto yj = (y / n) % m_;
        const auto yh = static_cast<Element>(y % n);
        acc.add(index(xi, yj, group_->mul(xh, yh)), S::mul(alpha, beta));
      }
    }
    return std::move(acc).finish(basis());
  }

  [[nodiscard]] bool equal(const value_type& a, const value_type& b) const { return pargroupoid::equal(a, b); }

  [[nodiscard]] std::string describe(const value_type& a) const {
    if (a.is_zero()) return "0";
    const auto n = group_->order();
    std::string out;
    for (const auto& [x, coeff] : a.terms()) {
      if (!out.empty()) out += " + ";
      if (!S::equal(coeff, S::one())) out += S::to_string(coeff) + "*";
      out += "e" + std::to_string(x / n / m_ + 1) + std::to_string((x / n) % m_ + 1) + "(x)" +
             group_->label(static_cast<Element>(x % n));
    }
    return out;
  }

 private:
  std::size_t m_;
  std::shared_ptr<const FiniteGroup> group_;
};

/// phi(A ⊗ w): the matrix whose (i, j) entry is A_ij · w. `scalars` is A in
/// row-major order.
template <Semiring S>
MatrixElement<S> tensor_phi(const MatrixAlgebra<S>& target, const std::vector<typename S::value_type>& scalars,
                            const SparseElement<S>& w) {
  const auto m = target.size();
  if (scalars.size() != m * m) throw std::invalid_argument("scalar matrix has the wrong size");
  auto out = target.zero();
  for (std::size_t k = 0; k < m * m; ++k) out.entries[k] = scale<S>(scalars[k], w);
  return out;
}

/// phi extended linearly from the tensor basis: e_ij ⊗ h ↦ h at (i, j).
template <Semiring S>
MatrixElement<S> tensor_phi(const MatrixAlgebra<S>& target, const SparseElement<S>& t) {
  const auto m = target.size();
  const auto n = target.group().order();
  if (t.basis() != BasisTag{BasisKind::tensor, m * m * n}) throw std::invalid_argument("tensor basis mismatch");
  std::vector<std::vector<typename SparseElement<S>::Term>> cells(m * m);
  for (const auto& [x, coeff] : t.terms()) cells[x / n].emplace_back(x % n, coeff);
  auto out = target.zero();
  const auto entry_basis = target.entry_algebra().basis();
  for (std::size_t k = 0; k < m * m; ++k) out.entries[k] = SparseElement<S>::from_terms(entry_basis, std::move(cells[k]));
  return out;
}

/// varphi([a_ij]) = Σ e_ij ⊗ a_ij, expanded on the basis {e_ij ⊗ h}.
template <Semiring S>
SparseElement<S> tensor_varphi(const TensorAlgebra<S>& target, const MatrixElement<S>& x) {
  const auto m = target.size();
  if (x.m != m) throw std::invalid_argument("matrix dimension mismatch");
  std::vector<typename SparseElement<S>::Term> terms;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [h, coeff] : x.at(i, j).terms()) terms.emplace_back(target.index(i, j, static_cast<Element>(h)), coeff);
    }
  }
  return SparseElement<S>::from_terms(target.basis(), std::move(terms));
}

/// A ⊗ w written on the tensor basis: Σ_ij Σ_h A_ij w_h (e_ij ⊗ h).
template <Semiring S>
SparseElement<S> tensor_pure(const TensorAlgebra<S>& target, const std::vector<typename S::value_type>& scalars,
                             const SparseElement<S>& w) {
  const auto m = target.size();
  std::vector<typename SparseElement<S>::Term> terms;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [h, coeff] : w.terms()) {
        terms.emplace_back(target.index(i, j, static_cast<Element>(h)), S::mul(scalars[i * m + j], coeff));
      }
    }
  }
  return SparseElement<S>::from_terms(target.basis(), std::move(terms));
}

// ---------------------------------------------------------------------------
// Rings of differences of a semialgebra

/// Embeds an element into the same algebra over K^Δ.
template <CancellativeSemiring S>
SparseElement<DeltaSemiring<S>> lift_to_delta(const SparseElement<S>& a) {
  return map_coefficients<DeltaSemiring<S>>(a, [](const auto& c) { return delta_embed<S>(c); });
}

template <CancellativeSemiring S>
MatrixElement<DeltaSemiring<S>> lift_to_delta(const MatrixElement<S>& a) {
  return map_coefficients<DeltaSemiring<S>>(a, [](const auto& c) { return delta_embed<S>(c); });
}

/// Inverse of lift_to_delta where it exists: every coefficient pos - neg
/// must lie in K. Returns nullopt otherwise.
template <CancellativeSemiring S>
  requires HasDifference<S>
std::optional<SparseElement<S>> lower_from_delta(const SparseElement<DeltaSemiring<S>>& a) {
  std::vector<typename SparseElement<S>::Term> terms;
  for (const auto& [index, coeff] : a.terms()) {
    auto d = S::difference(coeff.pos, coeff.neg);
    if (!d) return std::nullopt;
    terms.emplace_back(index, std::move(*d));
  }
  return SparseElement<S>::from_terms(a.basis(), std::move(terms));
}

template <CancellativeSemiring S>
  requires HasDifference<S>
std::optional<MatrixElement<S>> lower_from_delta(const MatrixElement<DeltaSemiring<S>>& a) {
  MatrixElement<S> out{a.m, {}};
  for (const auto& e : a.entries) {
    auto lowered = lower_from_delta<S>(e);
    if (!lowered) return std::nullopt;
    out.entries.push_back(std::move(*lowered));
  }
  return out;
}

/// Formal difference pos - neg of two elements of an algebra A.
template <class V>
struct DifferencePair {
  V pos;
  V neg;
};

/// A^Δ: pairs of A-elements with (a,b) = (c,d) iff a + d = b + c.
template <Semialgebra A>
class DifferenceAlgebra {
 public:
  using scalar = typename A::scalar;
  using value_type = DifferencePair<typename A::value_type>;

  explicit DifferenceAlgebra(A base) : base_(std::move(base)) {}

  [[nodiscard]] const A& base() const { return base_; }
  [[nodiscard]] value_type zero() const { return {base_.zero(), base_.zero()}; }
  [[nodiscard]] value_type one() const { return {base_.one(), base_.zero()}; }
  [[nodiscard]] value_type embed(const typename A::value_type& a) const { return {a, base_.zero()}; }
  [[nodiscard]] value_type add(const value_type& x, const value_type& y) const {
    return {base_.add(x.pos, y.pos), base_.add(x.neg, y.neg)};
  }
  [[nodiscard]] value_type neg(const value_type& x) const { return {x.neg, x.pos}; }
  /// (P1 - N1)(P2 - N2) = (P1 P2 + N1 N2) - (P1 N2 + N1 P2).
  [[nodiscard]] value_type mul(const value_type& x, const value_type& y) const {
    return {base_.add(base_.mul(x.pos, y.pos), base_.mul(x.neg, y.neg)),
            base_.add(base_.mul(x.pos, y.neg), base_.mul(x.neg, y.pos))};
  }
  [[nodiscard]] bool equal(const value_type& x, const value_type& y) const {
    return base_.equal(base_.add(x.pos, y.neg), base_.add(x.neg, y.pos));
  }
  [[nodiscard]] std::string describe(const value_type& x) const {
    return "(" + base_.describe(x.pos) + ") - (" + base_.describe(x.neg) + ")";
  }

 private:
  A base_;
};

/// f(Σ (α_i - β_i) γ_i) = Σ α_i γ_i - Σ β_i γ_i: from coefficients in K^Δ
/// to a difference of two K-combinations.
template <CancellativeSemiring S>
DifferencePair<SparseElement<S>> delta_extension(const SparseElement<DeltaSemiring<S>>& x) {
  std::vector<typename SparseElement<S>::Term> pos;
  std::vector<typename SparseElement<S>::Term> neg;
  for (const auto& [index, coeff] : x.terms()) {
    pos.emplace_back(index, coeff.pos);
    neg.emplace_back(index, coeff.neg);
  }
  return {SparseElement<S>::from_terms(x.basis(), std::move(pos)), SparseElement<S>::from_terms(x.basis(), std::move(neg))};
}

/// f^-1: pairs the two K-combinations coefficientwise.
template <CancellativeSemiring S>
SparseElement<DeltaSemiring<S>> delta_extension_inverse(const DifferencePair<SparseElement<S>>& p) {
  require_same_basis(p.pos, p.neg);
  std::vector<typename SparseElement<DeltaSemiring<S>>::Term> terms;
  for (const auto& [index, coeff] : p.pos.terms()) terms.emplace_back(index, DeltaElement<S>{coeff, S::zero()});
  for (const auto& [index, coeff] : p.neg.terms()) terms.emplace_back(index, DeltaElement<S>{S::zero(), coeff});
  return SparseElement<DeltaSemiring<S>>::from_terms(p.pos.basis(), std::move(terms));
}

}  // namespace pargroupoid

#endif
