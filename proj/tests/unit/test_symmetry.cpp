#include <gtest/gtest.h>

#include "ncpart/symmetry.hpp"
#include "oracles.hpp"

using namespace ncpart;

namespace {
SetPartition P(std::string_view s) { return parse_partition(s); }
std::string F(const SetPartition& p) { return format_partition(p); }
}  // namespace

TEST(Rotate, Examples) {
  EXPECT_EQ(F(rotate(P("1,3,4/2/5,6"), 1)), "1,6/2,4,5/3");
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_all(n)) {
      EXPECT_EQ(rotate(p, n), p);
      EXPECT_EQ(rotate(rotate(p, 3), -3), p);
      EXPECT_EQ(rotate(p, 2), oracle::rotate(p, 2));
      EXPECT_EQ(rotate(p, -1), oracle::rotate(p, -1));
    }
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(F(complement(P("1,3,4/2/5,6"))), "1,2/3,4,6/5");
  EXPECT_EQ(F(complement(P("1,3/2"))), "1,3/2");
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_all(n)) {
      EXPECT_EQ(complement(complement(p)), p);
      EXPECT_EQ(complement(p), oracle::complement(p));
    }
  }
}

TEST(Kreweras, Examples) {
  EXPECT_EQ(F(kreweras(P("1/2/3"))), "1,2,3");
  EXPECT_EQ(F(kreweras(P("1,2/3/4"))), "1/2,3,4");
  EXPECT_EQ(F(kreweras(kreweras(P("1,2/3/4")))), "1,4/2/3");
  EXPECT_EQ(kreweras(kreweras(P("1,2/3/4"))), rotate(P("1,2/3/4"), -1));
}

TEST(Kreweras, CoarsestCompanionOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      ASSERT_EQ(kreweras(p), oracle::kreweras(p)) << p;
    }
  }
}

TEST(Kreweras, InverseAndRejectsCrossing) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      EXPECT_EQ(kreweras_inverse(kreweras(p)), p);
      EXPECT_EQ(kreweras(p).block_count() + p.block_count(),
                static_cast<std::size_t>(n + 1));
    }
  }
  EXPECT_THROW(kreweras(P("1,3/2,4")), NotNoncrossingError);
  EXPECT_THROW(transpose(P("1,3/2,4")), NotNoncrossingError);
}

TEST(Transpose, Examples) {
  EXPECT_EQ(F(transpose(P("1,2/3/4"))), "1,2,3/4");
  EXPECT_EQ(F(transpose(P("1/2/3"))), "1,2,3");
  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      ASSERT_EQ(transpose(transpose(p)), p);
    }
  }
}

TEST(SelfComplementary, Examples) {
  EXPECT_TRUE(is_self_complementary(P("1,3/2")));
  EXPECT_FALSE(is_self_complementary(P("1,3,4/2/5,6")));
  for (int n = 1; n <= 10; ++n) {
    EXPECT_TRUE(is_self_complementary(SetPartition::single_block(n)));
  }
}

TEST(Orbit, Examples) {
  const RotationClass a = rotation_orbit(P("1/2/3"));
  EXPECT_EQ(a.orbit_size, 1);
  EXPECT_TRUE(a.achiral);
  EXPECT_EQ(a.sc_members, std::vector<int>{0});
  EXPECT_EQ(rotation_orbit(P("1,3,4/2/5,6")).orbit_size, 6);
  EXPECT_EQ(rotation_orbit(P("1,2/3,4")).orbit_size, 2);
  EXPECT_EQ(F(rotation_orbit(P("2,3/1/4")).representative), "1,2/3/4");
}

TEST(Orbit, RepresentativeIsLeastMember) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      const RotationClass c = rotation_orbit(p);
      std::string least = F(p);
      for (int k = 0; k < n; ++k) least = std::min(least, F(oracle::rotate(p, k)));
      EXPECT_EQ(F(c.representative), least);
      EXPECT_EQ(n % c.orbit_size, 0);
      EXPECT_EQ(c.orbit_size, rotation_period(p));
      EXPECT_EQ(static_cast<int>(orbit_members(p).size()), c.orbit_size);
      for (int k : c.sc_members) {
        EXPECT_TRUE(is_self_complementary(rotate(c.representative, k)));
      }
    }
  }
}

TEST(ComplementOrder, Examples) {
  EXPECT_EQ(complement_order(P("1/2/3")), 1);
  EXPECT_EQ(complement_order(P("1,2")), 1);
  EXPECT_EQ(F(complement(P("1,2/3/4"))), "1/2/3,4");
  EXPECT_EQ(complement_order(P("1,2/3/4")), 2);
  // no rotation of this one equals its complement
  const SetPartition chiral = P("1,2,4/3/5/6");
  EXPECT_FALSE(rotation_orbit(chiral).achiral);
  EXPECT_THROW(complement_order(chiral), std::domain_error);
}

TEST(ClassifyAchiral, Examples) {
  const auto a = classify_achiral(rotation_orbit(P("1/2/3")));
  EXPECT_EQ(a.orbit_size_parity, Parity::kOdd);
  EXPECT_EQ(a.complement_order_parity, Parity::kNotApplicable);
  EXPECT_EQ(a.sc_count, 1);

  const auto b = classify_achiral(rotation_orbit(P("1,2/3,4")));
  EXPECT_EQ(b.orbit_size, 2);
  EXPECT_EQ(b.complement_order_parity, Parity::kEven);
  EXPECT_EQ(b.sc_count, 2);
  EXPECT_TRUE(is_self_complementary(P("1,2/3,4")));
  EXPECT_TRUE(is_self_complementary(P("1,4/2,3")));
  EXPECT_EQ(b.to_json(),
            R"({"orbit_size":2,"achiral":true,"sc_count":2,"complement_order_parity":"even"})");
}

TEST(ClassifyAchiral, TrichotomyUpTo10) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      const RotationClass c = rotation_orbit(p);
      if (!c.achiral) {
        EXPECT_THROW(classify_achiral(c), std::domain_error);
        continue;
      }
      EXPECT_TRUE(classify_achiral(c).consistent()) << p;
    }
  }
}

TEST(Identities, AllPass) {
  for (int n = 1; n <= 8; ++n) {
    const IdentityReport r = verify_operator_identities(n);
    EXPECT_EQ(r.checks.size(), 8u);
    for (const auto& c : r.checks) {
      EXPECT_TRUE(c.passed()) << n << " " << c.name << " " << c.first_failure;
      EXPECT_EQ(c.cases, oracle::catalan(n));
    }
  }
}

TEST(Identities, OperatorsPreserveNoncrossing) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      EXPECT_TRUE(oracle::noncrossing(rotate(p, 1)));
      EXPECT_TRUE(oracle::noncrossing(complement(p)));
      EXPECT_TRUE(oracle::noncrossing(kreweras(p)));
    }
  }
}
