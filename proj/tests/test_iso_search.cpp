#include <gtest/gtest.h>

#include "mipkit/canonical.hpp"
#include "mipkit/catalog.hpp"
#include "mipkit/decomposition.hpp"
#include "mipkit/iso_search.hpp"

using namespace mipkit;

namespace {

// group-table convolution, independent of GroupAlgebra::multiply
std::vector<unsigned> convolve(const FiniteGroup& g, const std::vector<unsigned>& x, const std::vector<unsigned>& y) {
  std::vector<unsigned> z(g.order(), 0);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) z[g.mul(a, b)] = (z[g.mul(a, b)] + x[a] * y[b]) % g.p();
  return z;
}

// units u = 1 + x of F_2 H with u^2 = 1 and x outside I^2, by direct enumeration
std::size_t involutions_outside_square(const FiniteGroup& h, const Subspace& i2) {
  std::size_t count = 0;
  const std::size_t n = h.order();
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<unsigned> u(n);
    unsigned aug = 0;
    for (std::size_t i = 0; i < n; ++i) aug += u[i] = (code >> i) & 1u;
    if (aug % 2 != 1) continue;
    std::vector<unsigned> sq = convolve(h, u, u);
    std::vector<unsigned> one(n, 0);
    one[0] = 1;
    if (sq != one) continue;
    std::vector<residue> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<residue>((u[i] + one[i]) % 2);
    if (!i2.contains(FpVector(2, x))) ++count;
  }
  return count;
}

std::size_t unpruned_isomorphism_count(const GroupAlgebra& a, const GroupAlgebra& b) {
  auto gens = burnside_basis(a.group());
  auto units = augmentation_units(b);
  std::size_t isos = 0;
  for (const auto& u : units)
    for (const auto& v : units) {
      auto m = induced_map(a, b, gens, {u, v});
      if (m && rank(*m) == a.dim()) ++isos;
    }
  return isos;
}

void expect_canonical_ideals_preserved(const AlgebraIsomorphism& phi, std::size_t depth, unsigned t_max) {
  GroupAlgebra a(phi.source), b(phi.target);
  CanonicalEvaluator eg(*phi.source), eh(*phi.target);
  for (const auto& e : generate_catalog(depth, t_max)) {
    Subspace lhs = phi.map(relative_augmentation_ideal(a, eg(e)));
    EXPECT_EQ(lhs, relative_augmentation_ideal(b, eh(e))) << e.key();
  }
}

}  // namespace

TEST(IsoSearch, NoIsomorphismBetweenDihedralAndQuaternionOverF2) {
  GroupAlgebra a(catalog_group("D8")), b(catalog_group("Q8"));
  IsoSearchResult r = iso_search(a, b);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.search_space, 128u * 128u);
  EXPECT_EQ(unpruned_isomorphism_count(a, b), 0u);
  EXPECT_EQ(unpruned_isomorphism_count(b, a), 0u);
}

TEST(IsoSearch, ObstructionIsCountOfInvolutionsOutsideSquare) {
  auto d8 = catalog_group("D8"), q8 = catalog_group("Q8");
  GroupAlgebra a(d8), b(q8);
  EXPECT_GT(involutions_outside_square(*d8, a.augmentation_power(2)), 0u);
  EXPECT_EQ(involutions_outside_square(*q8, b.augmentation_power(2)), 0u);
}

TEST(IsoSearch, CyclicEightAgainstFourTimesTwoIsExhausted) {
  GroupAlgebra a(catalog_group("C8")), b(catalog_group("C4xC2"));
  EXPECT_NE(a.augmentation_power(2).dim(), b.augmentation_power(2).dim());
  EXPECT_FALSE(iso_search(a, b).witness);
  EXPECT_FALSE(iso_search(b, a).witness);
}

TEST(IsoSearch, AutomorphismCountsMatchUnprunedEnumeration) {
  for (const char* name : {"D8", "Q8", "C4xC2"}) {
    GroupAlgebra a(catalog_group(name));
    IsoSearchResult r = for_each_isomorphism(a, a, {}, [](const AlgebraIsomorphism&) { return true; });
    EXPECT_EQ(r.isomorphisms, unpruned_isomorphism_count(a, a)) << name;
    EXPECT_GT(r.isomorphisms, 0u) << name;
  }
}

TEST(IsoSearch, FirstWitnessIsDeterministic) {
  GroupAlgebra a(catalog_group("D8"));
  auto r1 = iso_search(a, a), r2 = iso_search(a, a);
  ASSERT_TRUE(r1.witness && r2.witness);
  EXPECT_EQ(r1.witness->matrix, r2.witness->matrix);
}

TEST(IsoSearch, IdentityImagesGiveIdentityMap) {
  auto g = catalog_group("Q8");
  GroupAlgebra a(g);
  auto gens = burnside_basis(*g);
  std::vector<FpVector> images;
  for (Elem x : gens) images.push_back(a.basis(x));
  auto m = induced_map(a, a, gens, images);
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, FpMatrix::identity(2, 8));
  EXPECT_TRUE(is_algebra_isomorphism(a, a, *m));
}

TEST(IsoSearch, CapsAndShapeErrors) {
  GroupAlgebra d8c2(catalog_group("D8xC2")), q8c2(catalog_group("Q8xC2"));
  EXPECT_THROW(iso_search(d8c2, q8c2), CapExceeded);
  GroupAlgebra big(catalog_group("D8xC4")), big2(catalog_group("Q8xC4"));
  EXPECT_THROW(iso_search(big, big2), CapExceeded);
  GroupAlgebra d8(catalog_group("D8")), c3(catalog_group("C3")), c16(catalog_group("C16"));
  EXPECT_THROW(iso_search(d8, c16), DimensionMismatch);
  EXPECT_THROW(iso_search(d8, c3), DimensionMismatch);
}

TEST(Canonicity, EveryAutomorphismPreservesCatalogIdeals) {
  for (const char* name : {"D8", "Q8"}) {
    GroupAlgebra a(catalog_group(name));
    std::size_t seen = 0;
    for_each_isomorphism(a, a, {}, [&](const AlgebraIsomorphism& phi) {
      // every 16th automorphism keeps the runtime small
      if (seen++ % 16 == 0) expect_canonical_ideals_preserved(phi, 2, 2);
      return true;
    });
    EXPECT_GT(seen, 0u);
  }
}

TEST(Canonicity, NamedIdealsUnderAllAutomorphisms) {
  auto g = catalog_group("D8");
  GroupAlgebra a(g);
  Subspace derived = relative_augmentation_ideal(a, commutator_subgroup(*g));
  Subspace phi_ideal = relative_augmentation_ideal(a, frattini(*g));
  Subspace omz = relative_augmentation_ideal(a, join(*g, omega(*g, center(*g), 1), commutator_subgroup(*g)));
  Subspace center_ideal = relative_augmentation_ideal(a, center(*g));
  std::size_t center_moved = 0;
  for_each_isomorphism(a, a, {}, [&](const AlgebraIsomorphism& phi) {
    EXPECT_EQ(phi.map(derived), derived);
    EXPECT_EQ(phi.map(phi_ideal), phi_ideal);
    EXPECT_EQ(phi.map(omz), omz);
    center_moved += phi.map(center_ideal) != center_ideal;
    return true;
  });
  // Z(D8) = D8' so I(Z)G is canonical here as well
  EXPECT_EQ(center_moved, 0u);
}

TEST(Tensor, ExtendedAutomorphismPreservesCatalogIdeals) {
  GroupAlgebra a(catalog_group("D8"));
  auto r = iso_search(a, a);
  ASSERT_TRUE(r.witness);
  for (const char* k : {"C2", "C4"}) {
    AlgebraIsomorphism big = tensor_with_identity(*r.witness, *catalog_group(k));
    GroupAlgebra ga(big.source), gb(big.target);
    EXPECT_TRUE(is_algebra_isomorphism(ga, gb, big.matrix));
    expect_canonical_ideals_preserved(big, 2, 2);
  }
}

TEST(Tensor, DirectComplementOfMappedComponentIdeal) {
  // G = D8 x C2 with the automorphism φ ⊗ id: J = φ(I(H_1)G) and kG = J ⊕ k NAb
  GroupAlgebra d8(catalog_group("D8"));
  auto r = iso_search(d8, d8);
  ASSERT_TRUE(r.witness);
  AlgebraIsomorphism phi = tensor_with_identity(*r.witness, *catalog_group("C2"));
  GroupAlgebra a(phi.source);
  auto d = ab_nab_split(phi.source);
  ASSERT_EQ(d.components.size(), 1u);
  Subspace j = phi.map(relative_augmentation_ideal(a, d.components[0].subgroup));
  std::vector<FpVector> l;
  for (Elem x : d.nab.elements()) l.push_back(a.basis(x));
  Subspace kl = Subspace::span(2, a.dim(), l);
  EXPECT_EQ(a.dim() - j.dim(), d.nab.order());
  EXPECT_TRUE(intersect(j, kl).is_zero());
  EXPECT_TRUE(sum(j, kl).is_full());
}
