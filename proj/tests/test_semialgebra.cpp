#include "doctest.h"
#include "groups.hpp"
#include "oracles.hpp"
#include "pargroupoid/element_io.hpp"
#include "pargroupoid/semialgebra.hpp"
#include "pargroupoid/suites.hpp"

using namespace pargroupoid;

namespace {

using Q = QnnSemiring;
using QA = GammaAlgebra<Q>;

std::shared_ptr<const Gamma> gamma_of(FiniteGroup g) { return std::make_shared<const Gamma>(std::move(g)); }

std::shared_ptr<const FiniteGroup> group_ptr(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

oracle::ElementSet to_set(Subset s) {
  oracle::ElementSet out;
  for (auto x : s.elements()) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("KΓ(G) product examples") {
  const QA z2(gamma_of(cyclic_group(2)));
  const GammaElement aa{Subset(0b11), 1};
  const auto x = z2.element(aa, Rational(2));
  const auto y = z2.element(aa, Rational(3));
  CHECK(z2.equal(z2.mul(x, y), z2.element({Subset(0b11), 0}, Rational(6))));
  CHECK(z2.describe(z2.mul(x, y)) == "6*({e,a},e)");

  const QA z3(gamma_of(cyclic_group(3)));
  const auto u = z3.element({Subset(0b011), 2});
  CHECK_THROWS_AS((void)z3.element({Subset(0b011), 1}), std::out_of_range);
  const auto v = z3.element({Subset(0b101), 1});
  // ({e,a},a^2)({e,a^2},a): {e,a} = a{e,a^2}, product ({e,a^2},e)
  CHECK(z3.equal(z3.mul(u, v), z3.element({Subset(0b101), 0})));
  CHECK(z3.mul(v, v).is_zero());
}

TEST_CASE("identity element") {
  const QA z2(gamma_of(cyclic_group(2)));
  CHECK(z2.describe(identity_element(z2)) == "({e},e) + ({e,a},e)");
  const QA z1(gamma_of(cyclic_group(1)));
  CHECK(z1.describe(identity_element(z1)) == "({e},e)");

  for (const auto& g : testgroups::groups_up_to(6)) {
    const QA alg(gamma_of(g));
    const auto one = alg.one();
    for (std::size_t k = 0; k < alg.gamma().size(); ++k) {
      const auto b = alg.basis_element(k);
      CHECK(alg.equal(alg.mul(one, b), b));
      CHECK(alg.equal(alg.mul(b, one), b));
    }
    const auto vertices = alg.gamma().vertices();
    for (auto i : vertices) {
      for (auto j : vertices) {
        const auto p = alg.mul(alg.element({i, 0}), alg.element({j, 0}));
        if (i == j) {
          CHECK(alg.equal(p, alg.element({i, 0})));
        } else {
          CHECK(p.is_zero());
        }
      }
    }
  }
}

TEST_CASE("basis products agree with the set oracle, and are associative") {
  for (const auto& g : testgroups::groups_up_to(4)) {
    const QA alg(gamma_of(g));
    const auto& gamma = alg.gamma();
    for (std::size_t x = 0; x < gamma.size(); ++x) {
      for (std::size_t y = 0; y < gamma.size(); ++y) {
        const auto p = alg.mul(alg.basis_element(x), alg.basis_element(y));
        const auto o = oracle::product(g, {to_set(gamma[x].subset), gamma[x].g}, {to_set(gamma[y].subset), gamma[y].g});
        if (!o) {
          CHECK(p.is_zero());
          continue;
        }
        REQUIRE(p.terms().size() == 1);
        const auto& r = gamma[p.terms()[0].first];
        CHECK(to_set(r.subset) == o->subset);
        CHECK(r.g == o->g);
        for (std::size_t z = 0; z < gamma.size(); ++z) {
          const auto bz = alg.basis_element(z);
          CHECK(alg.equal(alg.mul(p, bz), alg.mul(alg.basis_element(x), alg.mul(alg.basis_element(y), bz))));
        }
      }
    }
  }
}

TEST_CASE("sampled semialgebra laws up to order 8") {
  for (const auto& g : testgroups::all_small_groups()) {
    const auto report = check_gamma_algebra_laws<Q>(gamma_of(g), SuiteOptions{11, 16, 4, 200});
    CHECK_MESSAGE(report.all_passed(), g.name());
  }
  const auto nat = check_gamma_algebra_laws<NatSemiring>(gamma_of(symmetric_group(3)), SuiteOptions{5, 16, 4, 300});
  CHECK(nat.all_passed());
  const auto boolean = check_gamma_algebra_laws<BoolSemiring>(gamma_of(dihedral_group(4)), SuiteOptions{5, 16, 4, 300});
  CHECK(boolean.all_passed());
}

TEST_CASE("zero coefficients never survive") {
  const QA alg(gamma_of(cyclic_group(3)));
  const auto x = SparseElement<Q>::from_terms(alg.basis(), {{0, Rational(0)}, {3, Rational(1)}, {3, Rational(2)}});
  REQUIRE(x.terms().size() == 1);
  CHECK(x.coefficient(3) == Rational(3));
  CHECK(x.coefficient(0) == Rational(0));
  using ND = NatDelta;
  const auto d = SparseElement<ND>::from_terms({BasisKind::gamma, 3}, {{1, ND::value_type{4, 4}}});
  CHECK(d.is_zero());
}

TEST_CASE("basis mismatches throw") {
  const QA z2(gamma_of(cyclic_group(2)));
  const QA z3(gamma_of(cyclic_group(3)));
  CHECK_THROWS_AS((void)z2.mul(z2.one(), z3.one()), std::invalid_argument);
  CHECK_THROWS_AS((void)z2.add(z2.one(), z3.one()), std::invalid_argument);
  const GroupAlgebra<Q> kz2(group_ptr(cyclic_group(2)));
  CHECK_THROWS_AS((void)kz2.mul(kz2.one(), GroupAlgebra<Q>(group_ptr(cyclic_group(3))).one()), std::invalid_argument);
  const auto m2 = MatrixAlgebra<Q>::over_scalars(2);
  const auto m3 = MatrixAlgebra<Q>::over_scalars(3);
  CHECK_THROWS_AS((void)m2.mul(m2.one(), m3.one()), std::invalid_argument);
}

TEST_CASE("group semialgebra and matrices") {
  const GroupAlgebra<Q> kz2(group_ptr(cyclic_group(2)));
  const auto one_plus_a = kz2.add(kz2.one(), kz2.element(1));
  const auto sq = kz2.mul(one_plus_a, one_plus_a);
  CHECK(kz2.equal(sq, kz2.add(kz2.element(0, Rational(2)), kz2.element(1, Rational(2)))));
  CHECK(kz2.describe(sq) == "2*e + 2*a");

  const auto m3 = MatrixAlgebra<Q>::over_scalars(3);
  CHECK(m3.equal(m3.mul(m3.unit(0, 1), m3.unit(1, 2)), m3.unit(0, 2)));
  CHECK(m3.equal(m3.mul(m3.unit(0, 1), m3.unit(0, 2)), m3.zero()));

  const MatrixAlgebra<Q> mz3(2, group_ptr(cyclic_group(3)));
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    const auto x = mz3.random(rng, 3);
    const auto y = mz3.random(rng, 3);
    const auto z = mz3.random(rng, 3);
    CHECK(mz3.equal(mz3.mul(mz3.one(), x), x));
    CHECK(mz3.equal(mz3.mul(x, mz3.one()), x));
    CHECK(mz3.equal(mz3.mul(mz3.mul(x, y), z), mz3.mul(x, mz3.mul(y, z))));
    CHECK(mz3.equal(mz3.mul(x, mz3.add(y, z)), mz3.add(mz3.mul(x, y), mz3.mul(x, z))));
  }
}

TEST_CASE("tensor maps") {
  const auto kz2 = group_ptr(cyclic_group(2));
  const MatrixAlgebra<Q> mat(2, kz2);
  const TensorAlgebra<Q> ten(2, kz2);
  const GroupAlgebra<Q> entries(kz2);

  // phi(e_11 ⊗ a) is a at (1,1)
  const auto p = tensor_phi(mat, {Rational(1), Rational(0), Rational(0), Rational(0)}, entries.element(1));
  CHECK(mat.equal(p, mat.unit(0, 0, 1)));
  CHECK(mat.equal(tensor_phi(mat, ten.element(0, 0, 1)), mat.unit(0, 0, 1)));

  CHECK(ten.equal(tensor_varphi(ten, mat.one()), ten.add(ten.element(0, 0, 0), ten.element(1, 1, 0))));
  CHECK(ten.describe(tensor_varphi(ten, mat.one())) == "e11(x)e + e22(x)e");

  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    const auto x = mat.random(rng, 3);
    CHECK(mat.equal(tensor_phi(mat, tensor_varphi(ten, x)), x));
    const auto y = mat.random(rng, 3);
    CHECK(ten.equal(tensor_varphi(ten, mat.mul(x, y)), ten.mul(tensor_varphi(ten, x), tensor_varphi(ten, y))));
  }
  const auto report = check_tensor_lemma<Q>(3, group_ptr(klein_four_group()), 100, 4);
  CHECK(report.all_passed());
}

TEST_CASE("f between coefficient pairs and pairs of combinations") {
  using S = NatSemiring;
  using D = DeltaSemiring<S>;
  const auto gamma = gamma_of(cyclic_group(2));
  const GammaAlgebra<D> delta_alg(gamma);
  const GammaAlgebra<S> base(gamma);
  const DifferenceAlgebra<GammaAlgebra<S>> pairs{base};

  // (2,1)γ ↦ (2γ, 1γ)
  const auto x = delta_alg.basis_element(2, D::value_type{2, 1});
  const auto fx = delta_extension<S>(x);
  CHECK(base.equal(fx.pos, base.basis_element(2, 2)));
  CHECK(base.equal(fx.neg, base.basis_element(2, 1)));
  CHECK(pairs.equal(fx, pairs.embed(base.basis_element(2, 1))));

  const auto f0 = delta_extension<S>(delta_alg.zero());
  CHECK(f0.pos.is_zero());
  CHECK(f0.neg.is_zero());

  const auto report = check_delta_extension<S>(gamma_of(symmetric_group(3)), 200, 8);
  CHECK(report.all_passed());
  const auto report_q = check_delta_extension<Q>(gamma_of(cyclic_group(3)), 200, 8);
  CHECK(report_q.all_passed());
}

TEST_CASE("lowering from K^Δ") {
  using S = NatSemiring;
  using D = DeltaSemiring<S>;
  const auto x = SparseElement<D>::from_terms({BasisKind::gamma, 3}, {{0, D::value_type{5, 2}}});
  const auto lowered = lower_from_delta<S>(x);
  REQUIRE(lowered.has_value());
  CHECK(lowered->coefficient(0) == 3);
  const auto y = SparseElement<D>::from_terms({BasisKind::gamma, 3}, {{0, D::value_type{2, 5}}});
  CHECK_FALSE(lower_from_delta<S>(y).has_value());
}

TEST_CASE("JSON round trips") {
  const auto q8 = testgroups::quaternion();
  const QA alg(gamma_of(q8));
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const auto x = alg.random(rng, 5);
    const auto doc = pargroupoid::to_json(alg, x);
    const auto back = pargroupoid::from_json(alg, nlohmann::json::parse(doc.dump()));
    CHECK(alg.equal(back, x));
  }
  const GroupAlgebra<Q> kq(std::make_shared<const FiniteGroup>(q8));
  const auto y = kq.add(kq.element(2, Rational(1, 3)), kq.element(7, Rational(4)));
  CHECK(pargroupoid::to_json(kq, y).dump() == R"({"basis":"group","terms":[{"b":"i","c":"1/3"},{"b":"-k","c":"4"}]})");
  CHECK(kq.equal(pargroupoid::from_json(kq, nlohmann::json::parse(pargroupoid::to_json(kq, y).dump())), y));

  const MatrixAlgebra<NatSemiring> mat(2, std::make_shared<const FiniteGroup>(cyclic_group(2)));
  const auto m = mat.add(mat.unit(0, 1, 1, 3), mat.unit(1, 1, 0, 5));
  CHECK(pargroupoid::to_json(mat, m).dump() ==
        R"({"basis":"matrix","terms":[{"b":{"i":1,"j":2,"h":"a"},"c":"3"},{"b":{"i":2,"j":2,"h":"e"},"c":"5"}]})");
  CHECK(mat.equal(pargroupoid::from_json(mat, nlohmann::json::parse(pargroupoid::to_json(mat, m).dump())), m));

  const QA z3(gamma_of(cyclic_group(3)));
  CHECK_THROWS_AS(pargroupoid::from_json(z3, nlohmann::json::parse(R"({"basis":"gamma","terms":[{"b":{"I":["e","a"],"g":"a"},"c":"1"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(pargroupoid::from_json(z3, nlohmann::json::parse(R"({"basis":"group","terms":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(pargroupoid::from_json(z3, nlohmann::json::parse(R"({"basis":"gamma","terms":[{"b":{"I":["e"],"g":"e"},"c":"-1"}]})")),
                  std::invalid_argument);
}
