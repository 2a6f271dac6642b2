#include <gtest/gtest.h>

#include <map>

#include "mipkit/catalog.hpp"
#include "mipkit/decomposition.hpp"
#include "oracles.hpp"

using namespace mipkit;

namespace {

std::map<unsigned, std::size_t> components(const HomocyclicDecomposition& d) {
  std::map<unsigned, std::size_t> m;
  for (const auto& c : d.components) m[c.t] = c.rank;
  return m;
}

std::shared_ptr<const FiniteGroup> product(const char* x, const char* y) {
  auto a = catalog_group(x), b = catalog_group(y);
  return direct_product(*a, *b).group;
}

}  // namespace

TEST(HomocyclicRank, SmallExamples) {
  auto c4 = catalog_group("C4");
  EXPECT_EQ(homocyclic_rank(*c4, 2), 1u);
  EXPECT_EQ(homocyclic_rank(*c4, 1), 0u);
  auto d8 = catalog_group("D8");
  for (unsigned t = 1; t <= 3; ++t) EXPECT_EQ(homocyclic_rank(*d8, t), 0u);
  EXPECT_EQ(homocyclic_rank(*catalog_group("D8xC4"), 2), 1u);
  EXPECT_EQ(homocyclic_rank(*catalog_group("C9xC9xC3"), 2), 2u);
}

TEST(Extract, CyclicFourTimesTwo) {
  auto g = catalog_group("C4xC2");
  ComponentSplit s = extract_component(*g, 2);
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(abelian_type(*g, s.component).factors, (std::vector<std::size_t>{4}));
  EXPECT_EQ(abelian_type(*g, s.complement).factors, (std::vector<std::size_t>{2}));
  EXPECT_TRUE(is_internal_direct_product(*g, s.complement, s.component));
}

TEST(Extract, DihedralTimesCyclicFour) {
  auto g = catalog_group("D8xC4");
  ComponentSplit s = extract_component(*g, 2);
  EXPECT_EQ(s.component.order(), 4u);
  EXPECT_EQ(s.complement.order(), 8u);
  SubgroupGroup sg = as_group(*g, s.complement);
  EXPECT_FALSE(sg.group->is_abelian());
  EXPECT_EQ(oracle::order_census(*sg.group), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_EQ(section_type(sg.group, whole(*sg.group), commutator_subgroup(*sg.group)).factors,
            (std::vector<std::size_t>{2, 2}));
}

TEST(Extract, QuaternionHasNothing) {
  auto g = catalog_group("Q8");
  for (unsigned t = 1; t <= 3; ++t) {
    ComponentSplit s = extract_component(*g, t);
    EXPECT_EQ(s.rank, 0u);
    EXPECT_TRUE(s.component.is_trivial());
    EXPECT_EQ(s.complement.order(), 8u);
  }
}

TEST(Complement, DiagonalFactorOfHomocyclicSquare) {
  auto g = catalog_group("C4xC4");
  // T = <ab> for generators a, b of order 4 spanning G/Φ
  auto basis = burnside_basis(*g);
  ASSERT_EQ(basis.size(), 2u);
  Elem diag = g->mul(basis[0], basis[1]);
  Subgroup t = generate(*g, {diag});
  ComplementResult c = complement_construction(*g, t);
  EXPECT_TRUE(is_internal_direct_product(*g, c.complement, t));
  EXPECT_EQ(abelian_type(*g, c.complement).factors, (std::vector<std::size_t>{4}));
}

TEST(Complement, PreconditionsAreChecked) {
  auto g = catalog_group("C4xC2");
  Elem sq = 0;
  for (Elem x = 0; x < g->order(); ++x)
    if (g->element_order(x) == 4) sq = g->ppow(x, 1);
  // <a^2> lies in Φ, so d(T) != d(TΦ/Φ)
  EXPECT_THROW(complement_construction(*g, generate(*g, {sq})), NotContained);
  auto d8 = catalog_group("D8");
  Elem refl = 0;
  for (Elem x = 0; x < d8->order(); ++x)
    if (d8->element_order(x) == 2 && !center(*d8).contains(x)) refl = x;
  EXPECT_THROW(complement_construction(*d8, generate(*d8, {refl})), NotContained);
}

TEST(Complement, EveryAdmissibleCyclicSubgroupOfSmallAbelianGroups) {
  for (const char* name : {"C4xC2", "C4xC4", "C8xC2", "C9xC3", "C9xC9", "C4xC2xC2"}) {
    auto g = catalog_group(name);
    for (Elem x = 1; x < g->order(); ++x) {
      Subgroup t = generate(*g, {x});
      unsigned te = *log_p(g->element_order(x), g->p());
      Subgroup n = join(*g, agemo(*g, te), commutator_subgroup(*g));
      if (frattini(*g).contains(x) || !meet(*g, t, n).is_trivial()) continue;
      ComplementResult c = complement_construction(*g, t);
      EXPECT_TRUE(is_internal_direct_product(*g, c.complement, t)) << name << " x=" << x;
    }
  }
}

TEST(Split, DihedralTimesFourTimesTwo) {
  auto g = catalog_group("D8xC4xC2");
  auto d = ab_nab_split(g);
  EXPECT_EQ(d.nab.order(), 8u);
  EXPECT_FALSE(as_group(*g, d.nab).group->is_abelian());
  EXPECT_EQ(section_type(as_group(*g, d.nab).group, whole(*as_group(*g, d.nab).group),
                         commutator_subgroup(*as_group(*g, d.nab).group))
                .factors,
            (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(components(d), (std::map<unsigned, std::size_t>{{1, 1}, {2, 1}}));
  EXPECT_EQ(d.ab_type().factors, (std::vector<std::size_t>{4, 2}));
}

TEST(Split, QuaternionIsIndecomposable) {
  auto d = ab_nab_split(catalog_group("Q8"));
  EXPECT_EQ(d.nab.order(), 8u);
  EXPECT_TRUE(d.components.empty());
}

TEST(Split, AbelianGroupsMatchCensusType) {
  for (const auto& e : builtin_catalog()) {
    auto g = build_entry(e);
    if (!g->is_abelian() || g->order() > 81) continue;
    auto d = ab_nab_split(g);
    EXPECT_TRUE(d.nab.is_trivial()) << e.name;
    EXPECT_EQ(d.ab_type().factors, oracle::abelian_type_by_census(*g)) << e.name;
  }
}

TEST(Split, CertificateFormulaAndChecksOnCatalog) {
  for (const auto& e : builtin_catalog()) {
    auto g = build_entry(e);
    HomocyclicDecomposition d;
    ASSERT_NO_THROW(d = ab_nab_split(g)) << e.name;
    EXPECT_EQ(ab_type_by_formula(g), d.ab_type()) << e.name;
    for (const auto& r : component_checks(d)) EXPECT_TRUE(r.all()) << e.name << " t=" << r.t;
    if (e.abelian) {
      EXPECT_TRUE(d.nab.is_trivial()) << e.name;
      EXPECT_EQ(d.ab_type(), *e.abelian) << e.name;
    }
  }
}

TEST(Split, ResidualHasNoAbelianFactor) {
  for (const char* name : {"D8xC4xC2", "Heisenberg27xC9", "Q8xC2", "M27xC3"}) {
    auto g = catalog_group(name);
    auto d = ab_nab_split(g);
    auto again = ab_nab_split(as_group(*g, d.nab).group);
    EXPECT_TRUE(again.components.empty()) << name;
  }
}

TEST(Split, DirectProductsMergeComponents) {
  for (auto [x, y] : {std::pair{"D8", "C4"}, std::pair{"Q8xC2", "C4"}, std::pair{"M27", "C9"}, std::pair{"SD16", "C2"}}) {
    auto gx = catalog_group(x);
    auto dx = components(ab_nab_split(gx));
    auto dy = components(ab_nab_split(catalog_group(y)));
    for (auto [t, r] : dy) dx[t] += r;
    EXPECT_EQ(components(ab_nab_split(product(x, y))), dx) << x << "x" << y;
  }
}

TEST(Split, ComponentChecksOnDihedralTimesFour) {
  auto g = catalog_group("D8xC4");
  auto d = ab_nab_split(g);
  auto reports = component_checks(d);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].all());
  Subgroup n = join(*g, agemo(*g, 2), commutator_subgroup(*g));
  SubgroupGroup s = as_group(*g, d.nab);
  EXPECT_EQ(s.to_parent(*g, join(*s.group, agemo(*s.group, 2), commutator_subgroup(*s.group))), n);
  EXPECT_EQ(n.order(), 2u);
}
