#include <gtest/gtest.h>

#include "commgraph/dihedral.hpp"
#include "commgraph/errors.hpp"
#include "naive.hpp"

using namespace commgraph;

namespace {

const char* const kSmallGroups[] = {"Z3", "Z4", "Z5", "Z6", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ3",
                                    "Z12", "Z2", "Z2xZ2"};

}  // namespace

TEST(Dihedral, MultiplicationRule) {
  const auto g = parse_group_spec("Z5");
  const DihedralElement a{{{2}}, Sign::Minus};
  const DihedralElement b{{{4}}, Sign::Plus};
  EXPECT_EQ(d_mul(g, a, b), (DihedralElement{{{3}}, Sign::Minus}));
  EXPECT_EQ(d_mul(g, b, a), (DihedralElement{{{1}}, Sign::Minus}));
  EXPECT_EQ(d_mul(g, a, a), (DihedralElement{{{0}}, Sign::Plus}));
}

TEST(Dihedral, GroupAxioms) {
  const auto g = parse_group_spec("Z2xZ3");
  const auto els = dihedral_elements(g);
  ASSERT_EQ(els.size(), 12U);
  const DihedralElement e{g.identity(), Sign::Plus};
  for (const auto& x : els) {
    EXPECT_EQ(d_mul(g, x, e), x);
    EXPECT_EQ(d_mul(g, e, x), x);
    for (const auto& y : els) {
      for (const auto& z : els) {
        EXPECT_EQ(d_mul(g, d_mul(g, x, y), z), d_mul(g, x, d_mul(g, y, z)));
      }
    }
  }
}

TEST(Dihedral, CriteriaMatchDefinitionExhaustively) {
  for (const auto* spec : kSmallGroups) {
    const auto g = parse_group_spec(spec);
    const auto els = dihedral_elements(g);
    for (const auto& x : els) {
      for (const auto& y : els) {
        ASSERT_EQ(commutes(g, x, y), commutes_by_definition(g, x, y))
            << spec << ' ' << to_text(x) << ' ' << to_text(y);
      }
    }
  }
}

TEST(Dihedral, CommutationAgreesWithNaiveMultiplication) {
  for (const auto* spec : kSmallGroups) {
    const auto g = parse_group_spec(spec);
    std::vector<int> moduli(g.moduli().begin(), g.moduli().end());
    const auto ours = dihedral_elements(g);
    const auto theirs = naive::elements(moduli);
    ASSERT_EQ(ours.size(), theirs.size());
    for (std::size_t i = 0; i < ours.size(); ++i) {
      ASSERT_EQ(to_text(ours[i]), naive::label(theirs[i]));
      for (std::size_t j = 0; j < ours.size(); ++j) {
        const bool naive_commute =
            naive::mul(moduli, theirs[i], theirs[j]) == naive::mul(moduli, theirs[j], theirs[i]);
        ASSERT_EQ(commutes(g, ours[i], ours[j]), naive_commute) << spec;
      }
    }
  }
}

TEST(Dihedral, CenterMatchesScan) {
  for (const auto* spec : kSmallGroups) {
    const auto g = parse_group_spec(spec);
    const auto fast = center(g);
    EXPECT_EQ(fast, center_by_scan(g)) << spec;
    if (!is_elementary_abelian_2(g)) {
      EXPECT_EQ(static_cast<std::int64_t>(fast.size()), g.involution_count()) << spec;
    } else {
      EXPECT_EQ(static_cast<std::int64_t>(fast.size()), 2 * g.order()) << spec;
    }
  }
}

TEST(Dihedral, OmegaPartitionSizes) {
  for (const auto* spec : {"Z3", "Z4", "Z6", "Z8", "Z2xZ4", "Z4xZ4", "Z2xZ8", "Z2xZ2xZ3"}) {
    const auto g = parse_group_spec(spec);
    const auto part = omega_partition(g);
    const auto c = static_cast<std::size_t>(g.involution_count());
    const auto n = static_cast<std::size_t>(g.order());
    EXPECT_EQ(part.omega1.size(), c) << spec;
    EXPECT_EQ(part.omega2.size(), n - c) << spec;
    EXPECT_EQ(part.block_count(), n / c) << spec;
    for (const auto& block : part.blocks) {
      ASSERT_EQ(block.size(), c) << spec;
      const auto sq = square(g, block.front().g);
      for (const auto& x : block) {
        EXPECT_EQ(x.s, Sign::Minus);
        EXPECT_EQ(square(g, x.g), sq);
      }
    }
    EXPECT_EQ(part.canonical_order().size(), 2 * n);
  }
}

TEST(Dihedral, BlocksOrderedBySquare) {
  const auto part = omega_partition(parse_group_spec("Z6"));
  ASSERT_EQ(part.block_count(), 3U);
  EXPECT_EQ(to_text(part.blocks[0][0]), "(0;-)");
  EXPECT_EQ(to_text(part.blocks[0][1]), "(3;-)");
  EXPECT_EQ(to_text(part.blocks[1][0]), "(1;-)");
  EXPECT_EQ(to_text(part.blocks[2][0]), "(2;-)");
}

TEST(Dihedral, AbelianCaseHasNoPartition) {
  EXPECT_THROW(omega_partition(parse_group_spec("Z2xZ2")), ElementaryAbelian2Error);
  EXPECT_THROW(omega_partition(parse_group_spec("Z2")), ElementaryAbelian2Error);
}

TEST(Dihedral, Text) {
  EXPECT_EQ(to_text(DihedralElement{{{3, 1}}, Sign::Minus}), "(3,1;-)");
  EXPECT_EQ(to_text(DihedralElement{{{0}}, Sign::Plus}), "(0;+)");
}
