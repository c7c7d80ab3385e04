#include <gtest/gtest.h>

#include <cmath>

#include "ucf/bounds.hpp"
#include "ucf/combinatorics.hpp"

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(ucf::binomial(4, 2), 6U);
  EXPECT_EQ(ucf::binomial(5, 7), 0U);
  EXPECT_EQ(ucf::binomial(64, 32), 1832624140942590534ULL);
  EXPECT_THROW(ucf::binomial(200, 100), ucf::unsupported_scale);
}

TEST(Combinatorics, Log2IsExactOnPowersOfTwo) {
  for (unsigned k = 0; k < 63; ++k) EXPECT_EQ(ucf::log2_of(std::uint64_t{1} << k), static_cast<double>(k));
  EXPECT_NEAR(ucf::log2_of(10), std::log2(10.0), 1e-12);
  EXPECT_EQ(ucf::m_log2_m(0), 0.0);
}

TEST(Satisfiable, Examples) {
  EXPECT_TRUE(ucf::satisfiable(3, 8));
  EXPECT_FALSE(ucf::satisfiable(3, 9));
  EXPECT_TRUE(ucf::satisfiable(5, 4));
  EXPECT_FALSE(ucf::satisfiable(5, 3));
  EXPECT_TRUE(ucf::satisfiable(1, 0));
  EXPECT_TRUE(ucf::satisfiable(200, 1000));
  EXPECT_THROW(ucf::require_satisfiable(3, 9), ucf::invalid_input);
  try {
    ucf::require_satisfiable(5, 3);
    FAIL();
  } catch (const ucf::invalid_input& e) {
    EXPECT_NE(std::string(e.what()).find("n - 1 <= m"), std::string::npos) << e.what();
  }
}

TEST(ReimerLower, Examples) {
  EXPECT_DOUBLE_EQ(ucf::reimer_lower(8), 12.0);
  EXPECT_DOUBLE_EQ(ucf::reimer_lower(1), 0.0);
  for (unsigned n = 1; n <= 20; ++n) {
    EXPECT_DOUBLE_EQ(ucf::reimer_lower(std::uint64_t{1} << n), n * std::pow(2.0, n - 1));
  }
}

TEST(SeparationLower, Examples) {
  EXPECT_EQ(ucf::separation_lower(4, 1), 6U);
  EXPECT_EQ(ucf::separation_lower(4, 2), 4U);
  EXPECT_EQ(ucf::separation_lower(1, 1), 0U);
}

TEST(GeneralizedBinomial, Examples) {
  EXPECT_DOUBLE_EQ(ucf::generalized_binomial(1.5, 2), 0.375);
  EXPECT_DOUBLE_EQ(ucf::generalized_binomial(3.7, 1), 3.7);
  EXPECT_DOUBLE_EQ(ucf::generalized_binomial(2.0, 2), 1.0);
  EXPECT_DOUBLE_EQ(ucf::generalized_binomial(0.3, 0), 1.0);
  EXPECT_DOUBLE_EQ(ucf::reimer_l_lower(16, 2), 16.0);
  EXPECT_DOUBLE_EQ(ucf::reimer_l_lower(256, 3), 1024.0);
  for (std::uint64_t m = 1; m < 100; ++m) EXPECT_DOUBLE_EQ(ucf::reimer_l_lower(m, 1), ucf::reimer_lower(m));
}

TEST(UpperBounds, Examples) {
  EXPECT_NEAR(ucf::min_weight_upper(6, 10), 10 * std::log2(10.0) / 2 + 21 + 10, 1e-12);
  EXPECT_NEAR(ucf::min_weight_upper(6, 10), 47.61, 0.01);
  const auto t9 = ucf::min_l_fold_weight_upper(4, 8, 1);
  EXPECT_DOUBLE_EQ(t9.value, 18.0);
  EXPECT_TRUE(t9.asymptotic);
  EXPECT_THROW(ucf::min_weight_upper(3, 9), ucf::invalid_input);
  EXPECT_THROW(ucf::min_l_fold_weight_upper(3, 1, 1), ucf::invalid_input);
}

TEST(BaseBounds, LFoldFormReducesToTheWeightFormAtLOne) {
  for (std::uint64_t size = 2; size < 5000; size += 7) {
    EXPECT_NEAR(ucf::base_l_fold_weight_upper(size, 1), ucf::base_weight_upper(size),
                1e-9 * ucf::base_weight_upper(size));
  }
  EXPECT_THROW(ucf::base_l_fold_weight_upper(1, 2), ucf::invalid_input);
}

TEST(AverageDegree, Examples) {
  EXPECT_DOUBLE_EQ(ucf::avg_degree_lower(16), 3.75);
  EXPECT_DOUBLE_EQ(ucf::avg_degree_lower(1), -0.25);
  EXPECT_DOUBLE_EQ(ucf::avg_degree_lower_at(4, 8), 3.0);
}

TEST(AverageDegree, NFreeFormIsBelowTheMinimumOverN) {
  for (std::uint64_t m = 1; m < 3000; m += 13) {
    double least = 1e300;
    for (std::uint64_t n = 1; n <= m + 1; ++n) least = std::min(least, ucf::avg_degree_lower_at(n, m));
    EXPECT_LE(ucf::avg_degree_lower(m), least + 1e-9) << m;
  }
}

TEST(ExpectedLLower, Examples) {
  EXPECT_NEAR(ucf::expected_l_lower(4, 3, 2).exact, 4.0 / 6.0, 1e-12);
  EXPECT_NEAR(ucf::expected_l_lower(6, 10, 1).exact, 10 * std::log2(10.0) / 2 / 6, 1e-12);
  EXPECT_NEAR(ucf::expected_l_lower(6, 10, 1).exact, 2.77, 0.01);
  for (unsigned n = 1; n <= 20; ++n) {
    // the average degree of P_n, n 2^(n-1) / n
    const double avg = std::pow(2.0, n - 1);
    EXPECT_NEAR(ucf::expected_l_lower(n, std::uint64_t{1} << n, 1).exact, avg, 1e-12 * avg);
    EXPECT_GE(ucf::expected_l_lower(n, std::uint64_t{1} << n, 1).exact, n / 2.0);
  }
  EXPECT_TRUE(ucf::expected_l_lower(4, 8, 2).leading.asymptotic);
  EXPECT_THROW(ucf::expected_l_lower(4, 8, 5), ucf::invalid_input);
  EXPECT_THROW(ucf::expected_l_lower(4, 17, 1), ucf::invalid_input);
}

TEST(KnillLower, Examples) {
  EXPECT_DOUBLE_EQ(ucf::knill_lower(8), 8.0 / 3.0);
  EXPECT_DOUBLE_EQ(ucf::knill_lower(4), 2.0);
  EXPECT_DOUBLE_EQ(ucf::knill_lower(2), 2.0);
  EXPECT_THROW(ucf::knill_lower(1), ucf::invalid_input);
}

TEST(BoundsReport, CombinesBothSides) {
  const auto r = ucf::bounds_report(4, 8, 1);
  EXPECT_DOUBLE_EQ(r.reimer_lower, 12.0);
  EXPECT_EQ(r.separation_lower, 6U);
  EXPECT_DOUBLE_EQ(r.combined_lower, 12.0);
  ASSERT_TRUE(r.construction_upper);
  EXPECT_DOUBLE_EQ(r.construction_upper->value, 30.0);
  EXPECT_FALSE(r.construction_upper->asymptotic);
  EXPECT_TRUE(r.satisfiable);
  EXPECT_EQ(ucf::bounds_csv_row(r), "4,8,1,12,6,12,30,3,2.66666666667,true");
  EXPECT_EQ(std::string(ucf::bounds_csv_header()), "n,m,l,reimer,separation,combined,upper,avg_deg,knill,satisfiable");
  const auto u = ucf::bounds_report(3, 9, 1);
  EXPECT_FALSE(u.satisfiable);
  EXPECT_FALSE(u.construction_upper);
  const auto j = ucf::to_json(ucf::bounds_report(4, 8, 2));
  EXPECT_TRUE(j["construction_upper"]["asymptotic"].get<bool>());
}

TEST(BoundsReport, InvariantsOverAGrid) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t m = 1; m <= 300; m += 3) {
      for (unsigned l = 1; l <= 3; ++l) {
        const auto r = ucf::bounds_report(n, m, l);
        EXPECT_DOUBLE_EQ(r.combined_lower, std::max(r.reimer_lower, static_cast<double>(r.separation_lower)));
        EXPECT_EQ(r.satisfiable, n - 1 <= m && m <= (std::uint64_t{1} << n));
        EXPECT_GE(r.separation_lower, 0U);
      }
    }
  }
}
