#include <gtest/gtest.h>

#include "mipkit/catalog.hpp"
#include "mipkit/presentation.hpp"
#include "oracles.hpp"

using namespace mipkit;

TEST(Presentation, CyclicTableIsAddition) {
  auto c4 = from_pc_presentation("p 2\ngens 1\norder 1 4\n");
  ASSERT_EQ(c4->order(), 4u);
  // element index a is g1^a
  for (Elem i = 0; i < 4; ++i)
    for (Elem j = 0; j < 4; ++j) EXPECT_EQ(c4->mul(i, j), (i + j) % 4);
}

TEST(Presentation, DihedralFromRotationAndReflection) {
  auto d8 = from_pc_presentation("p 2\ngens 2\norder 1 2\norder 2 4\ncomm 2 1 = g2^2\n");
  EXPECT_EQ(d8->order(), 8u);
  auto census = oracle::order_census(*d8);
  EXPECT_EQ(census[4], 2u);
  EXPECT_EQ(census[2], 5u);
}

TEST(Presentation, QuaternionHasOneInvolution) {
  auto q8 = from_pc_presentation("p 2\ngens 2\norder 1 2\norder 2 4\npow 1 = g2^2\ncomm 2 1 = g2^2\n");
  EXPECT_EQ(oracle::order_census(*q8)[2], 1u);
}

TEST(Presentation, RelationsHoldInBuiltTable) {
  for (const auto& e : builtin_catalog()) {
    auto pres = parse_pc_presentation(e.presentation);
    auto g = build_group(pres);
    for (std::size_t i = 0; i < pres.generators(); ++i) {
      Elem gi = pres.generator(i);
      EXPECT_EQ(g->pow(gi, pres.relative_orders[i]), detail::eval_word(*g, [&] {
        std::vector<Elem> gens;
        for (std::size_t k = 0; k < pres.generators(); ++k) gens.push_back(pres.generator(k));
        return gens;
      }(), pres.powers[i]));
    }
    // normal forms: g_1^a_1 ... g_d^a_d has index a in mixed radix
    for (Elem x = 0; x < g->order(); ++x) {
      auto a = pres.exponents(x);
      Elem prod = 0;
      for (std::size_t k = 0; k < a.size(); ++k) prod = g->mul(prod, g->pow(pres.generator(k), a[k]));
      EXPECT_EQ(prod, x) << e.name;
    }
  }
}

TEST(Presentation, FormatRoundTrip) {
  for (const auto& e : builtin_catalog()) {
    auto pres = parse_pc_presentation(e.presentation);
    EXPECT_EQ(format_pc_presentation(pres), e.presentation);
  }
}

TEST(Presentation, CommentsBlankLinesAndNegativeExponents) {
  auto g = from_pc_presentation("# dihedral\np 2\n\ngens 2\norder 1 2\norder 2 4\ncomm 2 1 = g2^-2   # same as g2^2\n");
  EXPECT_EQ(oracle::order_census(*g)[4], 2u);
}

TEST(Presentation, ParseErrors) {
  EXPECT_THROW(parse_pc_presentation(""), ParseError);
  EXPECT_THROW(parse_pc_presentation("p 4\ngens 1\norder 1 4\n"), ParseError);
  EXPECT_THROW(parse_pc_presentation("p 2\ngens 1\n"), ParseError);
  EXPECT_THROW(parse_pc_presentation("p 2\ngens 1\norder 1 6\n"), ParseError);
  EXPECT_THROW(parse_pc_presentation("p 2\ngens 2\norder 1 2\norder 2 2\ncomm 1 2 = 1\n"), ParseError);
  EXPECT_THROW(parse_pc_presentation("p 2\ngens 2\norder 1 2\norder 2 2\npow 2 = g1\n"), ParseError);
  EXPECT_THROW(parse_pc_presentation("p 2\ngens 1\norder 1 2\nfoo 1\n"), ParseError);
  EXPECT_THROW(parse_pc_presentation("p 2\ngens 1\norder 1 2\npow 1 = h2\n"), ParseError);
}

TEST(Presentation, InconsistentRelationsRejected) {
  // g2 of order 2 cannot be inverted to g2 * g2^... by an action of order 2 with g1^2 = g2 acting nontrivially
  EXPECT_THROW(from_pc_presentation("p 2\ngens 2\norder 1 2\norder 2 4\npow 1 = g2\ncomm 2 1 = g2^2\n"), ParseError);
  // conjugation must be an automorphism: g2 -> g2 * g3 with g3 of order 2 but g2 of order 2 and [g3, g1] = g2
  EXPECT_THROW(from_pc_presentation("p 3\ngens 2\norder 1 3\norder 2 3\ncomm 2 1 = g2\n"), ParseError);
}

TEST(Presentation, CapEnforced) {
  EXPECT_THROW(from_pc_presentation("p 2\ngens 1\norder 1 256\n"), CapExceeded);
  EXPECT_THROW(from_pc_presentation("p 3\ngens 2\norder 1 27\norder 2 27\n"), CapExceeded);
}
