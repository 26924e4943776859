#include <gtest/gtest.h>

#include <set>

#include "ncpart/paths.hpp"
#include "ncpart/symmetry.hpp"
#include "oracles.hpp"

using namespace ncpart;

namespace {

const char* kWorked = "UDUUUDUDDUUUDDUDDDUUDUDD";
const char* kWorkedPartition = "1/4/3,5/7,8/2,6,9/11/10,12";

std::string F(const SetPartition& p) { return format_partition(p); }

// every U/D word of length 2m with m of each
std::vector<LatticePath> balanced_paths(int m) {
  std::vector<LatticePath> out;
  for (std::uint32_t bits = 0; bits < (1u << (2 * m)); ++bits) {
    if (std::popcount(bits) != m) continue;
    std::vector<Step> steps;
    for (int i = 0; i < 2 * m; ++i) {
      steps.push_back((bits >> i) & 1u ? Step::kUp : Step::kDown);
    }
    out.emplace_back(std::move(steps));
  }
  return out;
}

}  // namespace

TEST(PathText, ParseAndFormat) {
  const LatticePath p = parse_path("UDUD");
  EXPECT_EQ(p.steps(),
            (std::vector<Step>{Step::kUp, Step::kDown, Step::kUp, Step::kDown}));
  EXPECT_EQ(format_path(p), "UDUD");
  EXPECT_THROW(parse_path("UX"), PathParseError);
  EXPECT_TRUE(parse_path("").empty());
  EXPECT_EQ(format_path(parse_path("")), "");
}

TEST(PathShape, Predicates) {
  EXPECT_TRUE(is_dyck(parse_path("UUDD")));
  EXPECT_FALSE(is_dyck(parse_path("DU")));
  EXPECT_TRUE(is_balanced(parse_path("DU")));
  EXPECT_FALSE(is_balanced(parse_path("UUD")));
  EXPECT_EQ(format_path(flip(parse_path("UUDD"))), "DDUU");
  EXPECT_EQ(peak_count(parse_path("UDUUDD")), 2u);
  EXPECT_EQ(return_count(parse_path("UDUUDD")), 2u);
}

TEST(MatchSteps, Examples) {
  const auto nested = match_steps(parse_path("UUDD"));
  ASSERT_EQ(nested.size(), 2u);
  EXPECT_EQ(nested[0].down, 2u);
  EXPECT_EQ(nested[0].up, 1u);
  EXPECT_EQ(nested[1].down, 3u);
  EXPECT_EQ(nested[1].up, 0u);

  for (const auto& pair : match_steps(parse_path("UDUD"))) {
    EXPECT_EQ(pair.up + 1, pair.down);
  }
}

TEST(MatchSteps, WorkedExampleLabels) {
  // the D matched with the i-th U carries label i
  const LatticePath path = parse_path(kWorked);
  std::vector<int> up_label(path.length(), 0);
  int next = 0;
  for (std::size_t i = 0; i < path.length(); ++i) {
    if (path[i] == Step::kUp) up_label[i] = ++next;
  }
  std::string labels;
  std::size_t prev_down = path.length();
  for (const auto& pair : match_steps(path)) {
    if (!labels.empty()) labels += pair.down == prev_down + 1 ? " " : " - ";
    labels += std::to_string(up_label[pair.up]);
    prev_down = pair.down;
  }
  EXPECT_EQ(labels, "1 - 4 - 5 3 - 8 7 - 9 6 2 - 11 - 12 10");
}

TEST(Dyck, WorkedExample) {
  // blocks listed in descent order; the library prints them by minimum
  EXPECT_EQ(dyck_to_nc(parse_path(kWorked)), parse_partition(kWorkedPartition));
  EXPECT_EQ(F(dyck_to_nc(parse_path(kWorked))), "1/2,6,9/3,5/4/7,8/10,12/11");
  EXPECT_EQ(format_path(nc_to_dyck(parse_partition(kWorkedPartition))), kWorked);
  EXPECT_EQ(format_path(nc_to_dyck(SetPartition::singletons(3))), "UDUDUD");
  EXPECT_EQ(format_path(nc_to_dyck(parse_partition("1,2,3"))), "UUUDDD");
}

TEST(Dyck, Extremes) {
  for (int n = 1; n <= 8; ++n) {
    std::string zigzag, tent(n, 'U');
    for (int i = 0; i < n; ++i) zigzag += "UD";
    tent += std::string(n, 'D');
    EXPECT_EQ(dyck_to_nc(parse_path(zigzag)), SetPartition::singletons(n));
    EXPECT_EQ(dyck_to_nc(parse_path(tent)), SetPartition::single_block(n));
  }
}

TEST(Dyck, RoundTripAndStatistics) {
  for (int n = 1; n <= 9; ++n) {
    std::set<std::string> images;
    for (const auto& p : enumerate_nc(n)) {
      const LatticePath d = nc_to_dyck(p);
      ASSERT_TRUE(is_dyck(d));
      ASSERT_EQ(d.length(), static_cast<std::size_t>(2 * n));
      EXPECT_EQ(dyck_to_nc(d), p);
      EXPECT_EQ(peak_count(d), p.block_count());
      EXPECT_EQ(static_cast<int>(return_count(d)), stats(p).maximal_block_count);
      images.insert(format_path(d));
    }
    EXPECT_EQ(images.size(), oracle::catalan(n));
  }
}

TEST(Dyck, RejectsNonDyck) {
  EXPECT_THROW(dyck_to_nc(parse_path("DU")), std::invalid_argument);
  EXPECT_THROW(nc_to_dyck(parse_partition("1,3/2,4")), NotNoncrossingError);
}

TEST(Balanced, Examples) {
  EXPECT_EQ(format_path(sc_to_balanced(parse_partition("1/2/3/4"))), "UDUD");
  EXPECT_EQ(format_path(sc_to_balanced(parse_partition("1,2,3,4"))), "DDUU");
  EXPECT_EQ(format_path(sc_to_balanced(parse_partition("1,4/2,3"))), "DUDU");
  EXPECT_EQ(F(balanced_to_sc(parse_path("DUDU"), 2)), "1,4/2,3");
  EXPECT_EQ(F(balanced_to_sc(parse_path("UDUD"), 2)), "1/2/3/4");
}

TEST(Balanced, RejectsNonSelfComplementary) {
  EXPECT_THROW(sc_to_balanced(parse_partition("1,2/3/4")), std::invalid_argument);
}

TEST(Balanced, RejectsOddSize) {
  EXPECT_THROW(sc_to_balanced(parse_partition("1,3/2")), std::invalid_argument);
  EXPECT_THROW(balanced_to_sc(parse_path("UUD"), 2), std::invalid_argument);
}

TEST(Balanced, BijectionSmall) {
  for (int m = 1; m <= 5; ++m) {
    std::set<std::string> images;
    for (const auto& p : enumerate_nc(2 * m)) {
      if (!is_self_complementary(p)) continue;
      const LatticePath q = sc_to_balanced(p);
      EXPECT_TRUE(is_balanced(q));
      EXPECT_EQ(q.length(), static_cast<std::size_t>(2 * m));
      EXPECT_EQ(balanced_to_sc(q, m), p);
      images.insert(format_path(q));
    }
    EXPECT_EQ(images.size(), oracle::binom(2 * m, m));
    for (const auto& q : balanced_paths(m)) {
      const SetPartition p = balanced_to_sc(q, m);
      EXPECT_TRUE(is_self_complementary(p));
      EXPECT_TRUE(oracle::noncrossing(p));
      EXPECT_EQ(sc_to_balanced(p), q);
    }
  }
}
