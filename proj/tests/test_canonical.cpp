#include <gtest/gtest.h>

#include <algorithm>

#include "mipkit/canonical.hpp"
#include "mipkit/catalog.hpp"
#include "mipkit/fingerprint.hpp"
#include "oracles.hpp"

using namespace mipkit;

namespace {

using E = CanonicalExpr;

bool has_key(const std::vector<E>& cat, const std::string& key) {
  return std::any_of(cat.begin(), cat.end(), [&](const E& e) { return e.key() == key; });
}

std::shared_ptr<const FiniteGroup> product(const std::string& x, const std::string& y) {
  return direct_product(*catalog_group(x), *catalog_group(y)).group;
}

}  // namespace

TEST(Expr, NormalForm) {
  EXPECT_EQ(E::join(E::derived(), E::derived()).key(), "G'");
  EXPECT_EQ(E::join(E::trivial(), E::derived()).key(), "G'");
  EXPECT_EQ(E::join(E::group(), E::derived()).key(), "G");
  EXPECT_EQ(E::omega_rel(2, E::group()).key(), "G");
  EXPECT_EQ(E::mho_prod(1, E::trivial(), E::derived()).key(), "G'");
  EXPECT_EQ(E::mho_prod(1, E::group(), E::derived()).key(), "Mho(1,G,G')");
  E a = E::omega_rel(1, E::derived()), b = E::omega_center_prod(2, E::derived());
  EXPECT_EQ(E::join(a, b), E::join(b, a));
  EXPECT_EQ(E::join(E::join(a, b), a).key(), "Join(Omega(1,G'),OmegaZ(2,G'))");
  EXPECT_EQ(E::join(a, b).depth(), 2u);
  EXPECT_THROW(E::omega_rel(0, E::derived()), DimensionMismatch);
}

TEST(Catalog, DepthOneContainsBasicSubgroups) {
  auto cat = generate_catalog(1, 1);
  for (const char* k : {"G'", "Mho(1,G,G')", "Omega(1,G')", "OmegaZ(1,G')", "G", "1"}) EXPECT_TRUE(has_key(cat, k)) << k;
  EXPECT_TRUE(std::is_sorted(cat.begin(), cat.end()));
  EXPECT_THROW(generate_catalog(0, 1), DimensionMismatch);
}

TEST(Catalog, DepthTwoContainsNamedSubgroups) {
  auto cat = generate_catalog(2, 3);
  for (const char* k : {"OmegaZ(3,G')", "Mho(2,G,G')", "Omega(2,G')", "OmegaZ(1,G')", "Mho(1,OmegaZ(3,G'),G')",
                        "Omega(1,OmegaZ(3,G'))", "OmegaZ(2,Mho(2,G,G'))"})
    EXPECT_TRUE(has_key(cat, k)) << k;
  for (const auto& e : cat) EXPECT_LE(e.depth(), 2u);
  std::vector<std::string> keys;
  for (const auto& e : cat) keys.push_back(e.key());
  EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
}

TEST(Evaluate, ExamplesOnEveryCatalogGroup) {
  for (const auto& entry : builtin_catalog()) {
    auto g = build_entry(entry);
    const unsigned top = default_t_max(*g);
    EXPECT_EQ(evaluate(E::mho_prod(1, E::group(), E::derived()), *g), frattini(*g)) << entry.name;
    EXPECT_EQ(evaluate(E::omega_center_prod(top, E::derived()), *g), join(*g, center(*g), commutator_subgroup(*g)))
        << entry.name;
  }
  auto d8 = catalog_group("D8");
  EXPECT_EQ(evaluate(E::omega_rel(1, E::derived()), *d8).order(), 8u);
}

TEST(Evaluate, AllCatalogExpressionsAreNormal) {
  auto cat = generate_catalog(2, 3);
  for (const char* name : {"D16", "SD16", "M27", "Q8xC4"}) {
    auto g = catalog_group(name);
    CanonicalEvaluator ev(*g);
    for (const auto& e : cat) EXPECT_TRUE(is_normal(*g, ev(e))) << name << " " << e.key();
  }
}

TEST(Evaluate, ContainmentOfDerivedIsChecked) {
  E bad = E::omega_rel(1, E::trivial());
  EXPECT_THROW(evaluate(bad, *catalog_group("D8")), NotContained);
  EXPECT_NO_THROW(evaluate(bad, *catalog_group("C4xC2")));
}

TEST(Evaluate, SeriesStabilizeBeyondExponent) {
  for (const char* name : {"C8", "M16", "M27xC3", "C9xC3"}) {
    auto g = catalog_group(name);
    const unsigned top = default_t_max(*g);
    CanonicalEvaluator ev(*g);
    for (const auto& n : {E::derived(), E::mho_prod(1, E::group(), E::derived())})
      for (unsigned t = top; t <= top + 2; ++t) {
        EXPECT_EQ(ev(E::omega_rel(t, n)), ev(E::omega_rel(top, n))) << name;
        EXPECT_EQ(ev(E::omega_center_prod(t, n)), ev(E::omega_center_prod(top, n))) << name;
        EXPECT_EQ(ev(E::mho_prod(t, E::group(), n)), ev(E::mho_prod(top, E::group(), n))) << name;
      }
  }
}

TEST(Fingerprint, DihedralAndQuaternionAgree) {
  auto a = serialize(fingerprint(catalog_group("D8")));
  auto b = serialize(fingerprint(catalog_group("Q8")));
  EXPECT_EQ(a, b);
  EXPECT_FALSE(compare(catalog_group("D8"), catalog_group("Q8")).distinguished);
}

TEST(Fingerprint, CyclicEightAgainstFourTimesTwo) {
  CompareVerdict v = compare(catalog_group("C8"), catalog_group("C4xC2"));
  EXPECT_TRUE(v.distinguished);
  EXPECT_EQ(v.key, "jennings");
  EXPECT_EQ(v.left, nlohmann::json({8, 4, 2, 2, 1}));
  EXPECT_EQ(v.right, nlohmann::json({8, 2, 1}));
}

TEST(Fingerprint, SelfComparisonAndDeterminism) {
  for (const char* name : {"M27", "SD16"}) {
    auto g = catalog_group(name);
    EXPECT_FALSE(compare(g, g).distinguished);
    EXPECT_EQ(serialize(fingerprint(g)), serialize(fingerprint(catalog_group(name))));
  }
  EXPECT_THROW(compare(catalog_group("C2"), catalog_group("C3")), DimensionMismatch);
}

TEST(Fingerprint, AbelianTypesDeterminedByFingerprint) {
  std::vector<std::pair<AbelianType, std::string>> groups;
  for (const auto& e : builtin_catalog()) {
    auto g = build_entry(e);
    if (!g->is_abelian() || g->order() > (g->p() == 2 ? 16u : 27u)) continue;
    groups.emplace_back(abelian_type(*g), e.name);
  }
  for (const auto& [ta, na] : groups)
    for (const auto& [tb, nb] : groups) {
      auto ga = catalog_group(na), gb = catalog_group(nb);
      if (ga->p() != gb->p()) continue;
      FingerprintOptions opt;
      opt.t_max = std::max(default_t_max(*ga), default_t_max(*gb));
      EXPECT_EQ(serialize(fingerprint(ga, opt)) == serialize(fingerprint(gb, opt)), ta == tb) << na << " " << nb;
    }
}

TEST(Fingerprint, AbComponentOfEveryCatalogGroup) {
  for (const auto& e : builtin_catalog()) {
    auto g = build_entry(e);
    Fingerprint f;
    ASSERT_NO_THROW(f = fingerprint(g, {1, 0, 1})) << e.name;
    if (g->is_abelian()) {
      EXPECT_EQ(f.ab_type, abelian_type(*g)) << e.name;
    }
  }
}

TEST(Fingerprint, DirectProductsWithAbelianGroups) {
  for (const char* a : {"C2", "C4", "C4xC2"}) {
    auto gd = product("D8", a), gq = product("Q8", a);
    EXPECT_EQ(serialize(fingerprint(gd)), serialize(fingerprint(gq))) << a;
    // Ab(D8 x A) = A
    EXPECT_EQ(fingerprint(gd, {1, 0, 1}).ab_type, abelian_type(*catalog_group(a))) << a;
  }
  for (const char* g : {"M16", "Heisenberg27", "M27"}) {
    for (const char* a : {"C3", "C9", "C2", "C4"}) {
      auto gg = catalog_group(g), ga = catalog_group(a);
      if (gg->p() != ga->p()) continue;
      AbelianType expected = fingerprint(gg, {1, 0, 1}).ab_type;
      for (auto f : abelian_type(*ga).factors) expected.factors.push_back(f);
      std::sort(expected.factors.rbegin(), expected.factors.rend());
      EXPECT_EQ(fingerprint(product(g, a), {1, 0, 1}).ab_type, expected) << g << " " << a;
    }
  }
}

TEST(Fingerprint, StableUnderLargerTMax) {
  for (const char* name : {"D8", "C9xC3", "M16"}) {
    auto g = catalog_group(name);
    Fingerprint small = fingerprint(g), large = fingerprint(g, {2, default_t_max(*g) + 2, 1});
    EXPECT_EQ(small.jennings, large.jennings);
    EXPECT_EQ(small.ab_type, large.ab_type);
    for (const auto& [key, inv] : small.catalog) {
      ASSERT_TRUE(large.catalog.count(key)) << key;
      const auto& other = large.catalog.at(key);
      EXPECT_EQ(inv.order, other.order) << key;
      EXPECT_EQ(inv.jennings, other.jennings) << key;
      EXPECT_EQ(inv.abelian, other.abelian) << key;
      for (const auto& [n, pi] : inv.pairs) {
        EXPECT_EQ(pi.quotient, other.pairs.at(n).quotient) << key << " " << n;
      }
    }
  }
}
