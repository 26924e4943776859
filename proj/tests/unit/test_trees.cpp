#include <gtest/gtest.h>

#include <set>

#include "ncpart/census.hpp"
#include "ncpart/symmetry.hpp"
#include "ncpart/trees.hpp"
#include "oracles.hpp"

using namespace ncpart;

namespace {
std::string T(std::string_view partition) {
  return format_tree(nc_to_tree(parse_partition(partition)));
}
std::string code(const BicoloredPlaneTree& t,
                 Chirality c = Chirality::kRotationOnly) {
  return canonical_code(t, c).code;
}
}  // namespace

TEST(TreeText, ParseFormat) {
  EXPECT_EQ(format_tree(parse_tree("W(Y,Y,Y)")), "W(Y,Y,Y)");
  EXPECT_EQ(parse_tree("W(Y(W),Y)").node_count(), 4u);
  EXPECT_EQ(parse_tree("W(Y(W),Y)").edge_count(), 3u);
  EXPECT_THROW(parse_tree("W(Y"), TreeParseError);
  EXPECT_THROW(parse_tree("Q"), TreeParseError);
  EXPECT_FALSE(parse_tree("W(W)").properly_colored());
  EXPECT_THROW(canonical_code(parse_tree("W(W)")), ColoringError);
}

TEST(NcToTree, Examples) {
  EXPECT_EQ(T("1/2/3"), "W(Y,Y,Y)");
  EXPECT_EQ(T("1/2/3/4/5"), "W(Y,Y,Y,Y,Y)");
  EXPECT_EQ(T("1"), "W(Y)");
  const BicoloredPlaneTree path = nc_to_tree(parse_partition("1,2"));
  EXPECT_EQ(code(path), code(parse_tree("W(Y(W))")));
  EXPECT_EQ(path.edge_count(), 2u);
}

TEST(TreeToNc, Examples) {
  EXPECT_EQ(format_partition(tree_to_nc(parse_tree("W(Y,Y,Y)"))), "1/2/3");
  EXPECT_EQ(format_partition(tree_to_nc(parse_tree("W(Y)"))), "1");
  EXPECT_EQ(format_partition(tree_to_nc(parse_tree("W(Y(W))"))), "1,2");
  EXPECT_EQ(format_partition(tree_to_nc(parse_tree("Y(W,W)"))), "1,2");
}

TEST(TreeToNc, RoundTrip) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      const BicoloredPlaneTree t = nc_to_tree(p);
      ASSERT_TRUE(t.properly_colored());
      ASSERT_EQ(t.edge_count(), static_cast<std::size_t>(n));
      EXPECT_EQ(tree_to_nc(t), p) << p;
    }
  }
}

TEST(TreeToNc, AnyRootingLandsInOrbit) {
  // rerooting at the canonical center still gives a member of the orbit
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      const SetPartition q = tree_to_nc(parse_tree(code(nc_to_tree(p))));
      EXPECT_EQ(rotation_orbit(q).representative, rotation_orbit(p).representative);
    }
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(tree_center(parse_tree("W(Y)")).size(), 2u);
  EXPECT_EQ(tree_center(parse_tree("W(Y,Y,Y,Y)")), std::vector<std::size_t>{0});
  EXPECT_EQ(tree_center(parse_tree("W(Y(W))")), std::vector<std::size_t>{1});
  EXPECT_EQ(tree_center(parse_tree("Y(W(Y(W)))")),
            (std::vector<std::size_t>{1, 2}));
}

TEST(CanonicalCode, SingleEdge) {
  const auto t = parse_tree("W(Y)");
  EXPECT_EQ(code(t), code(t, Chirality::kRotationAndReflection));
  EXPECT_EQ(code(t), code(parse_tree("Y(W)")));
}

TEST(CanonicalCode, RerootingInvariant) {
  EXPECT_EQ(code(parse_tree("W(Y(W))")), code(parse_tree("Y(W,W)")));
  const std::string c = code(parse_tree("W(Y,Y(W,W))"));
  EXPECT_EQ(c, code(parse_tree("Y(W(Y),W,W)")));
  EXPECT_EQ(c, code(parse_tree("W(Y(W,W(Y)))")));
  EXPECT_NE(c, code(parse_tree("Y(W,W(Y,Y))")));
}

TEST(CanonicalCode, CountsAtSix) {
  std::set<std::string> rotation_codes;
  int fixed = 0;
  for (const auto& p : enumerate_nc(6)) {
    rotation_codes.insert(code(nc_to_tree(p)));
  }
  for (const auto& c : rotation_codes) {
    if (code(mirror(parse_tree(c))) == c) ++fixed;
  }
  EXPECT_EQ(rotation_codes.size(), 28u);
  EXPECT_EQ(fixed, 20);
}

TEST(CanonicalCode, RotationInvariant) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      const std::string c = code(nc_to_tree(p));
      for (int k = 1; k < n; ++k) {
        ASSERT_EQ(code(nc_to_tree(rotate(p, k))), c) << p << " k=" << k;
      }
    }
  }
}

TEST(CanonicalCode, AchiralityTransfer) {
  for (int n = 1; n <= 9; ++n) {
    std::set<std::string> classes;
    std::size_t fixed = 0;
    for (const auto& p : enumerate_nc(n)) {
      const BicoloredPlaneTree t = nc_to_tree(p);
      const bool mirror_fixed = code(t) == code(mirror(t));
      EXPECT_EQ(mirror_fixed, rotation_orbit(p).achiral) << p;
      if (classes.insert(code(t)).second && mirror_fixed) ++fixed;
      // reflecting the tree is complementing the partition
      EXPECT_EQ(code(mirror(t)), code(nc_to_tree(complement(p))));
    }
    EXPECT_EQ(fixed, oracle::binom(n, n / 2));
  }
}

TEST(CanonicalCode, ReflectionVariantMergesMirrors) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> codes;
    for (const auto& p : enumerate_nc(n)) {
      const auto t = nc_to_tree(p);
      const std::string c = code(t, Chirality::kRotationAndReflection);
      EXPECT_EQ(c, code(mirror(t), Chirality::kRotationAndReflection));
      codes.insert(c);
    }
    EXPECT_EQ(Natural(codes.size()), dihedral_formula(n)) << n;
  }
}

TEST(LeafStats, Examples) {
  EXPECT_EQ(leaf_stats(nc_to_tree(parse_partition("1/2/3"))), (LeafStats{3, 0}));
  EXPECT_EQ(leaf_stats(nc_to_tree(parse_partition("1,2"))), (LeafStats{0, 2}));
  EXPECT_EQ(leaf_stats(nc_to_tree(parse_partition("1"))), (LeafStats{1, 1}));
}

TEST(LeafStats, MatchPartitionStatistics) {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      const LeafStats l = leaf_stats(nc_to_tree(p));
      const PartitionStats s = stats(p);
      EXPECT_EQ(l.yellow_leaves, s.singletons) << p;
      EXPECT_EQ(l.white_leaves, s.adjacencies) << p;
    }
  }
}

TEST(TreeClasses, Counts) {
  EXPECT_EQ(enumerate_tree_classes(1).size(), 1u);
  EXPECT_EQ(enumerate_tree_classes(5).size(), 10u);
  EXPECT_EQ(enumerate_tree_classes(8).size(), 190u);
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(enumerate_tree_classes(n).size(),
              oracle::nc_rotation_classes(n).size());
  }
}
