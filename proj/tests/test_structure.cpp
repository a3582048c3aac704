#include "doctest.h"
#include "groups.hpp"
#include "oracles.hpp"
#include "pargroupoid/structure.hpp"

using namespace pargroupoid;

namespace {

using Q = QnnSemiring;
using Table = std::vector<std::array<std::size_t, 3>>;

std::shared_ptr<const Gamma> gamma_of(FiniteGroup g) { return std::make_shared<const Gamma>(std::move(g)); }

}  // namespace

TEST_CASE("golden decompositions") {
  const auto z2 = decompose<Q>(cyclic_group(2));
  CHECK(block_table(z2) == Table{{1, 1, 1}, {2, 1, 1}});
  CHECK(z2.audit.lhs == 3);
  CHECK(z2.audit.ok());

  const auto z3 = decompose<Q>(cyclic_group(3));
  CHECK(block_table(z3) == Table{{1, 1, 1}, {1, 2, 1}, {3, 1, 1}});
  CHECK(z3.audit.lhs == 8);
  CHECK(z3.audit.ok());

  // K ⊕ 3·KZ2 ⊕ M_3(K) ⊕ KV4, the three Z2 subgroups in separate classes
  const auto v4 = decompose<Q>(klein_four_group());
  CHECK(block_table(v4) == Table{{1, 1, 1}, {1, 3, 1}, {2, 1, 1}, {2, 1, 1}, {2, 1, 1}, {4, 1, 1}});
  CHECK(v4.audit.lhs == 20);
  CHECK(v4.audit.ok());
  CHECK(v4.blocks[2].generators == std::vector<std::string>{"a"});
  CHECK(v4.blocks[3].generators == std::vector<std::string>{"b"});
  CHECK(v4.blocks[4].generators == std::vector<std::string>{"ab"});
}

TEST_CASE("sym:3 audit equals the binomial sum") {
  const auto s3 = decompose<Q>(symmetric_group(3));
  std::uint64_t expected = 0;
  for (std::uint64_t k = 1; k <= 6; ++k) expected += k * oracle::binomial(5, k - 1);
  CHECK(expected == 112);
  CHECK(s3.audit.rhs == expected);
  CHECK(s3.audit.lhs == expected);
  CHECK(s3.gamma_size == expected);
}

TEST_CASE("decomposition agrees with the orbit oracle for every group up to order 8") {
  for (const auto& g : testgroups::all_small_groups()) {
    const auto summary = decompose<Q>(g);
    CHECK_MESSAGE(block_table(summary) == oracle::decomposition(g), g.name());
    CHECK(summary.audit.ok());
    CHECK(summary.audit.rhs == oracle::gamma_size_formula(g.order()));
    CHECK(summary.iso_checks.all_passed());
    CHECK(gamma_size_by_popcount(g) == summary.gamma_size);
    const auto& last = summary.blocks.back();
    CHECK(last.subgroup_order() == g.order());
    CHECK(last.m == 1);
    CHECK(last.c == 1);
  }
}

TEST_CASE("multiplicity enumeration") {
  const auto z3 = cyclic_group(3);
  const Gamma gamma3(z3);
  const SubgroupLattice lattice3(z3);
  const auto table3 = multiplicity_enumeration(gamma3, lattice3);
  CHECK(table3.at(lattice3.class_of(1), 2) == 1);
  CHECK(table3.at(lattice3.class_of(0b111), 1) == 1);
  CHECK(table3.at(lattice3.class_of(1), 3) == 0);
  CHECK(table3.vertex_identity.passed);

  const auto v = klein_four_group();
  const SubgroupLattice lattice4(v);
  CHECK(multiplicity_enumeration(Gamma(v), lattice4).at(lattice4.class_of(1), 3) == 1);

  for (const auto& g : testgroups::all_small_groups()) {
    const SubgroupLattice lattice(g);
    const auto table = multiplicity_enumeration(Gamma(g), lattice);
    CHECK(table.vertex_identity.passed);
    CHECK(table.at(lattice.class_of(g.all().mask()), 1) == 1);
  }
}

TEST_CASE("stabilizer counts match the set oracle") {
  for (const auto& g : testgroups::groups_up_to(6)) {
    const SubgroupLattice lattice(g);
    const auto counts = stabilizer_counts(g, lattice);
    std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> oracle_counts;
    for (const auto& s : oracle::subsets_with_identity(g)) {
      const auto h = oracle::stabilizer(g, s);
      ++oracle_counts[{oracle::mask_of(h), s.size() / h.size()}];
    }
    for (std::size_t b = 0; b < lattice.subgroups().size(); ++b) {
      const auto mask = lattice.subgroups()[b].mask();
      for (std::size_t k = 1; k < counts[b].size(); ++k) {
        auto it = oracle_counts.find({mask, k});
        CHECK(counts[b][k] == (it == oracle_counts.end() ? 0 : it->second));
      }
    }
  }
}

TEST_CASE("coset-count identity holds for every subgroup and m") {
  for (const auto& g : testgroups::all_small_groups()) {
    const SubgroupLattice lattice(g);
    const auto result = check_coset_count_identity(g, lattice);
    CHECK_MESSAGE(result.passed, (g.name() + ": " + result.counterexample));
    CHECK(result.checked > 0);
  }
}

TEST_CASE("recursion diagnostic") {
  SUBCASE("Z3, H = {e}, m = 2") {
    const auto summary = decompose<Q>(cyclic_group(3));
    const auto it = std::find_if(summary.recursion_diff.begin(), summary.recursion_diff.end(),
                                 [](const RecursionRow& r) { return r.subgroup_order == 1 && r.m == 2; });
    REQUIRE(it != summary.recursion_diff.end());
    CHECK(oracle::binomial(2, 1) == 2);
    CHECK(it->enumerated == 1);
    CHECK(it->recursion == "1");
    CHECK(it->recursion_agrees);
    CHECK(it->closed_form == "2");
    CHECK_FALSE(it->closed_form_agrees);
  }
  SUBCASE("H = G, m = 1 gives 1") {
    for (const auto& g : testgroups::all_small_groups()) {
      const auto summary = decompose<Q>(g);
      const auto& top = summary.recursion_diff.back();
      CHECK(top.subgroup_order == g.order());
      CHECK(top.m == 1);
      CHECK(top.recursion == "1");
      CHECK(top.closed_form == "1");
    }
  }
  SUBCASE("the top-down reading reproduces the enumeration") {
    for (const auto& g : testgroups::all_small_groups()) {
      for (const auto& row : decompose<Q>(g).recursion_diff) {
        CHECK_MESSAGE(row.recursion_agrees,
                      (g.name() + " |H|=" + std::to_string(row.subgroup_order) + " m=" + std::to_string(row.m)));
      }
    }
  }
  SUBCASE("klein4, H = {e}, m = 2: the closed form disagrees") {
    const auto summary = decompose<Q>(klein_four_group());
    const auto it = std::find_if(summary.recursion_diff.begin(), summary.recursion_diff.end(),
                                 [](const RecursionRow& r) { return r.subgroup_order == 1 && r.m == 2; });
    REQUIRE(it != summary.recursion_diff.end());
    CHECK(it->enumerated == 0);
    CHECK(it->closed_form == "3");
  }
  SUBCASE("stable across runs") {
    const auto a = decompose<Q>(dihedral_group(4)).recursion_diff;
    const auto b = decompose<Q>(dihedral_group(4)).recursion_diff;
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].recursion == b[k].recursion);
      CHECK(a[k].closed_form == b[k].closed_form);
      CHECK(a[k].enumerated == b[k].enumerated);
    }
  }
}

TEST_CASE("component isomorphisms") {
  SUBCASE("Z2 full component onto KZ2") {
    const auto gamma = gamma_of(cyclic_group(2));
    const ComponentIso iso(gamma, connected_components(*gamma)[1]);
    CHECK(iso.m() == 1);
    CHECK(iso.isotropy_group()->order() == 2);
    const GammaAlgebra<Q> source(gamma);
    const auto target = iso.target<Q>();
    const auto image = iso.apply(target, source.element({Subset(0b11), 1}));
    CHECK(target.equal(image, target.unit(0, 0, 1)));
    CHECK(source.equal(iso.invert(source, image), source.element({Subset(0b11), 1})));
  }
  SUBCASE("Z3 two-vertex component onto M_2(K)") {
    const auto gamma = gamma_of(cyclic_group(3));
    const ComponentIso iso(gamma, connected_components(*gamma)[1]);
    CHECK(iso.m() == 2);
    CHECK(iso.isotropy_group()->order() == 1);
    const GammaAlgebra<Q> source(gamma);
    const auto target = iso.target<Q>();
    std::set<std::pair<std::size_t, std::size_t>> cells;
    for (const auto& x : iso.normal_form().elements()) {
      const auto image = iso.apply(target, source.element(x));
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          if (!image.at(i, j).is_zero()) {
            ++nonzero;
            cells.insert({i, j});
            CHECK(target.equal(image, target.unit(i, j)));
            if (x.g == 0) CHECK(i == j);
          }
        }
      }
      CHECK(nonzero == 1);
    }
    CHECK(cells.size() == 4);
    CHECK(iso.verify_combinatorial().all_passed());
    CHECK(iso.verify_over<Q>().passed);
    CHECK(iso.verify_over<NatSemiring>().passed);
  }
  SUBCASE("terms outside the component are dropped") {
    const auto gamma = gamma_of(cyclic_group(3));
    const ComponentIso iso(gamma, connected_components(*gamma)[1]);
    CHECK_FALSE(iso.contains({Subset(0b111), 1}));
    const GammaAlgebra<Q> source(gamma);
    const auto target = iso.target<Q>();
    CHECK(target.equal(iso.apply(target, source.element({Subset(0b111), 1})), target.zero()));
    CHECK(target.equal(iso.apply(target, source.one()), target.one()));
  }
  SUBCASE("every component of every group up to order 8") {
    for (const auto& g : testgroups::all_small_groups()) {
      const auto summary = decompose<Q>(g, DecomposeOptions{kDefaultOrderBound, true, 6});
      CHECK_MESSAGE(summary.iso_checks.all_passed(), g.name());
      CHECK_FALSE(summary.iso_checks.results().empty());
    }
  }
}

TEST_CASE("components are orthogonal") {
  for (const auto& g : testgroups::groups_up_to(4)) {
    const auto result = check_components_orthogonal(Gamma(g));
    CHECK(result.passed);
    if (g.order() > 1) CHECK(result.checked > 0);
  }
}

TEST_CASE("decomposition over ring-of-differences scalars has the same blocks") {
  for (const auto& g : testgroups::all_small_groups()) {
    const auto plain = decompose<Q>(g);
    const auto delta = decompose<QnnDelta>(g);
    CHECK(block_table(plain) == block_table(delta));
    CHECK(delta.scalar == QnnDelta::name());
    CHECK(block_table(decompose<NatSemiring>(g)) == block_table(plain));
  }
}

TEST_CASE("decomposition respects the order bound") {
  CHECK_THROWS_AS(decompose<Q>(cyclic_group(9), DecomposeOptions{8}), BoundExceeded);
}
