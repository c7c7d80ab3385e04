#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "ucf/constructions.hpp"
#include "ucf/search.hpp"

using ucf::SetFamily;

namespace {

std::uint64_t count_union_closed(std::size_t n, ucf::EnumerationPartition part = {}) {
  return ucf::for_each_union_closed_code(n, [](ucf::FamilyCode) {}, part);
}

struct Entry {
  std::uint64_t min;
  std::size_t witnesses;
  std::uint64_t examined;
};

// Frozen from an independent brute-force enumeration.
const std::map<std::tuple<std::size_t, std::uint64_t, std::size_t>, Entry>& frozen_minima() {
  static const std::map<std::tuple<std::size_t, std::uint64_t, std::size_t>, Entry> table = [] {
    std::map<std::tuple<std::size_t, std::uint64_t, std::size_t>, Entry> t{
        {{1, 0, 1}, {0, 1, 1}}, {{1, 1, 1}, {0, 1, 2}}, {{1, 2, 1}, {1, 1, 1}},
        {{1, 0, 2}, {0, 1, 1}}, {{1, 1, 2}, {0, 2, 2}}, {{1, 2, 2}, {0, 1, 1}},
        {{2, 1, 1}, {1, 1, 2}}, {{2, 2, 1}, {1, 1, 4}}, {{2, 3, 1}, {3, 1, 3}}, {{2, 4, 1}, {4, 1, 1}},
        {{2, 1, 2}, {0, 1, 2}}, {{2, 2, 2}, {0, 1, 4}}, {{2, 3, 2}, {1, 2, 3}}, {{2, 4, 2}, {1, 1, 1}},
        {{3, 2, 1}, {3, 1, 6}}, {{3, 3, 1}, {3, 1, 18}}, {{3, 4, 1}, {4, 1, 25}}, {{3, 5, 1}, {7, 1, 22}},
        {{3, 6, 1}, {9, 1, 12}}, {{3, 7, 1}, {11, 1, 4}}, {{3, 8, 1}, {12, 1, 1}},
        {{3, 2, 2}, {1, 1, 6}}, {{3, 3, 2}, {1, 2, 18}}, {{3, 4, 2}, {1, 1, 25}}, {{3, 5, 2}, {4, 1, 22}},
        {{3, 6, 2}, {5, 1, 12}}, {{3, 7, 2}, {6, 2, 4}}, {{3, 8, 2}, {6, 1, 1}},
    };
    const std::uint64_t l1[] = {6, 6, 7, 9, 11, 12, 16, 19, 22, 24, 27, 29, 31, 32};
    const std::uint64_t l2[] = {4, 4, 4, 5, 6, 6, 12, 15, 18, 19, 22, 23, 24, 24};
    const std::uint64_t sizes[] = {36, 164, 389, 637, 783, 765, 627, 443, 275, 147, 64, 22, 5, 1};
    for (std::uint64_t m = 3; m <= 16; ++m) {
      const std::size_t k = m - 3;
      t[{4, m, 1}] = {l1[k], 1, sizes[k]};
      t[{4, m, 2}] = {l2[k], (m == 4 || m == 7 || m == 15) ? 2U : 1U, sizes[k]};
    }
    return t;
  }();
  return table;
}

}  // namespace

TEST(Enumeration, UnionClosedCounts) {
  EXPECT_EQ(count_union_closed(1), 4U);
  EXPECT_EQ(count_union_closed(2), 14U);
  EXPECT_EQ(count_union_closed(3), 122U);
  EXPECT_EQ(count_union_closed(4), 4960U);
}

TEST(Enumeration, MatchesNaiveEnumeratorUpToIsomorphism) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::multiset<oracle::Sets> naive, primary;
    for (const auto& s : oracle::union_closed_families(static_cast<unsigned>(n))) {
      naive.insert(oracle::canonical(static_cast<unsigned>(n), s));
    }
    ucf::enumerate_union_closed(n, [&](const SetFamily& f) { primary.insert(ucf::canonical_form(f).sets); });
    EXPECT_EQ(naive, primary) << n;
  }
}

TEST(Enumeration, CanonicalClassCounts) {
  const std::size_t expected[] = {0, 4, 10, 38};
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<ucf::CanonicalKey> keys;
    ucf::enumerate_union_closed(n, [&](const SetFamily& f) { keys.insert(ucf::canonical_form(f)); });
    EXPECT_EQ(keys.size(), expected[n]);
  }
}

TEST(Enumeration, DepthFirstTierMatchesTheScan) {
  EXPECT_TRUE(ucf::depth_first_matches_scan());
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(ucf::for_each_union_closed_code_depth_first(n, [](ucf::FamilyCode) {}), count_union_closed(n));
  }
}

TEST(Enumeration, PartitionsCoverEachFamilyOnce) {
  for (std::size_t parts : {2U, 3U, 7U}) {
    std::uint64_t total = 0, df_total = 0;
    for (std::size_t p = 0; p < parts; ++p) {
      total += count_union_closed(4, {p, parts});
      df_total += ucf::for_each_union_closed_code_depth_first(4, [](ucf::FamilyCode) {}, {p, parts});
    }
    EXPECT_EQ(total, 4960U);
    EXPECT_EQ(df_total, 4960U);
  }
  EXPECT_THROW(count_union_closed(3, {3, 3}), ucf::invalid_input);
  EXPECT_THROW(count_union_closed(6), ucf::unsupported_scale);
}

TEST(Enumeration, EncodeDecodeRoundTrip) {
  ucf::enumerate_union_closed(3, [](const SetFamily& f) {
    EXPECT_EQ(ucf::decode_family(3, ucf::encode_family(f)), f);
    EXPECT_TRUE(ucf::code_is_union_closed(ucf::encode_family(f)));
  });
}

TEST(CanonicalForm, Examples) {
  const SetFamily a(3, {0b001, 0b011});
  const SetFamily b(3, {0b100, 0b110});
  EXPECT_EQ(ucf::canonical_form(a), ucf::canonical_form(b));
  EXPECT_NE(ucf::canonical_form(a), ucf::canonical_form(SetFamily(3, {0b001, 0b111})));
  EXPECT_EQ(ucf::to_family(ucf::canonical_form(ucf::staircase(4))), SetFamily(4, {0b0001, 0b0011, 0b0111}));
  EXPECT_THROW(ucf::canonical_form(ucf::staircase(9)), ucf::unsupported_scale);
}

TEST(MinWeightSearch, FrozenTable) {
  for (const auto& [key, want] : frozen_minima()) {
    const auto [n, m, l] = key;
    const auto got = ucf::min_weight_search(n, m, l);
    ASSERT_TRUE(got.min_value) << n << "," << m << "," << l;
    EXPECT_EQ(*got.min_value, want.min) << n << "," << m << "," << l;
    EXPECT_EQ(got.witnesses.size(), want.witnesses) << n << "," << m << "," << l;
    EXPECT_TRUE(got.exhaustive);
    EXPECT_EQ(got.examined, count_union_closed(n));
  }
}

TEST(MinWeightSearch, MatchesAnOracleScan) {
  for (const auto& [key, want] : frozen_minima()) {
    const auto [n, m, l] = key;
    std::uint64_t separating = 0;
    std::uint64_t best = UINT64_MAX;
    for (const auto& s : oracle::union_closed_families(static_cast<unsigned>(std::min<std::size_t>(n, 3)))) {
      if (n > 3 || s.size() != m || !oracle::is_separating(static_cast<unsigned>(n), s)) continue;
      ++separating;
      best = std::min(best, oracle::l_fold_weight(s, static_cast<unsigned>(l)));
    }
    if (n <= 3) {
      EXPECT_EQ(separating, want.examined) << n << "," << m << "," << l;
      EXPECT_EQ(best, want.min);
    }
  }
}

TEST(MinWeightSearch, StaircaseIsAWitness) {
  const auto r = ucf::min_weight_search(4, 3, 2);
  ASSERT_EQ(r.witnesses.size(), 1U);
  EXPECT_EQ(ucf::canonical_form(r.witnesses[0]), ucf::canonical_form(ucf::staircase(4)));
}

TEST(MinWeightSearch, ThreadCountDoesNotChangeTheResult) {
  for (unsigned threads : {2U, 3U}) {
    ucf::SearchOptions opts;
    opts.threads = threads;
    const auto a = ucf::min_weight_search(4, 8, 1, opts);
    const auto b = ucf::min_weight_search(4, 8, 1);
    EXPECT_EQ(a.min_value, b.min_value);
    EXPECT_EQ(a.examined, b.examined);
    EXPECT_EQ(a.witnesses, b.witnesses);
  }
}

TEST(MinWeightSearch, MergeIsCommutative) {
  const auto a = ucf::detail::search_partition(4, 6, 1, {0, 2});
  const auto b = ucf::detail::search_partition(4, 6, 1, {1, 2});
  const auto ab = ucf::merge(a, b);
  const auto ba = ucf::merge(b, a);
  EXPECT_EQ(ab.min_value, ba.min_value);
  EXPECT_EQ(ab.witnesses, ba.witnesses);
  EXPECT_EQ(ab.examined, ba.examined);
  EXPECT_EQ(ab.min_value, ucf::min_weight_search(4, 6, 1).min_value);
}

TEST(MinWeightSearch, Errors) {
  EXPECT_THROW(ucf::min_weight_search(3, 9, 1), ucf::invalid_input);
  EXPECT_THROW(ucf::min_weight_search(3, 4, 0), ucf::invalid_input);
  EXPECT_THROW(ucf::min_weight_search(5, 8, 1), ucf::unsupported_scale);
  EXPECT_THROW(ucf::min_weight_search(6, 8, 1), ucf::unsupported_scale);
}

TEST(MinWeightSearch, NoSeparatingFamilyOfThatSize) {
  const auto r = ucf::min_weight_search(1, 0, 1);
  EXPECT_TRUE(r.min_value);
  EXPECT_FALSE(ucf::min_weight_search(2, 1, 1).witnesses.empty());
}

TEST(Suites, AllPassAtSmallSizes) {
  EXPECT_TRUE(ucf::verify_staircase_extremality(1, 4).passed());
  for (std::size_t l = 1; l <= 3; ++l) EXPECT_TRUE(ucf::verify_l_fold_equality_structure(4, l).passed());
  const auto c = ucf::verify_conjectures(4, 2);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.skipped.size(), 8U);
  EXPECT_TRUE(ucf::verify_reimer(4).passed());
  EXPECT_TRUE(ucf::verify_structure(4).passed());
}

TEST(Suites, RejectOutOfRangeArguments) {
  EXPECT_THROW(ucf::verify_staircase_extremality(0, 4), ucf::invalid_input);
  EXPECT_THROW(ucf::verify_staircase_extremality(1, 5), ucf::invalid_input);
  EXPECT_THROW(ucf::verify_l_fold_equality_structure(4, 4), ucf::invalid_input);
  EXPECT_THROW(ucf::verify_conjectures(4, 0), ucf::invalid_input);
}

TEST(EqualityForm, StaircaseMatchesAndPowersetDoesNot) {
  EXPECT_TRUE(ucf::matches_l_fold_equality_form(ucf::staircase(4), 1));
  EXPECT_TRUE(ucf::matches_l_fold_equality_form(ucf::staircase(4), 2));
  EXPECT_FALSE(ucf::matches_l_fold_equality_form(ucf::powerset(4), 1));
}

TEST(Sweep, RowsSatisfyTheSandwich) {
  const auto rows = ucf::sweep_constructions(2048, 1);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    EXPECT_TRUE(ucf::satisfiable(r.n, r.m));
    EXPECT_GE(static_cast<double>(r.w), r.lower - 1e-9);
    EXPECT_LE(static_cast<double>(r.w), r.upper + 1e-9);
  }
  EXPECT_EQ(std::string(ucf::sweep_csv_header()), "n,m,l,w,lower,upper,ratio_reimer,ratio_sep");
}

TEST(Enumeration, FiveElementCount) {
  EXPECT_EQ(count_union_closed(5), 2771104U);
}

TEST(MinWeightSearch, FiveElementTierBehindTheFlag) {
  ucf::SearchOptions opts;
  opts.allow_depth_first_tier = true;
  const auto r = ucf::min_weight_search(5, 4, 1, opts);
  ASSERT_TRUE(r.min_value);
  EXPECT_EQ(*r.min_value, 10U);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.examined, 2771104U);
}
