#include "youngent/partitions.hpp"

#include <map>
#include <set>

#include <gtest/gtest.h>

using namespace youngent;

namespace {

// Partitions of n with every part <= k: p(n,k) = p(n,k-1) + p(n-k,k).
Int partition_count(Int n, Int k, std::map<std::pair<Int, Int>, Int>& memo) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  const auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Int value = partition_count(n, k - 1, memo) + partition_count(n - k, k, memo);
  memo[key] = value;
  return value;
}

Int partition_number(Int n) {
  std::map<std::pair<Int, Int>, Int> memo;
  return partition_count(n, n, memo);
}

std::vector<YoungDiagram> filtered(Int n, const PartitionConstraint& c) {
  std::vector<YoungDiagram> out;
  for (const auto& d : all_partitions(n)) {
    if (c.admits(d)) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(YoungDiagram, WidthHeightRank) {
  const YoungDiagram fig1({4, 2, 1});
  EXPECT_EQ(fig1.width(), 4);
  EXPECT_EQ(fig1.height(), 3);
  EXPECT_EQ(fig1.rank(), 1);
  EXPECT_EQ(fig1.n(), 7);

  EXPECT_EQ(YoungDiagram({1}).width(), 1);
  EXPECT_EQ(YoungDiagram({3, 3, 1}).width(), 3);
  EXPECT_EQ(YoungDiagram({3, 3, 1}).rank(), 0);
  EXPECT_EQ(YoungDiagram({1, 1, 1, 1}).height(), 4);
  EXPECT_EQ(YoungDiagram({4, 3}).height(), 2);
  EXPECT_EQ(YoungDiagram({4, 3}).rank(), 2);
}

TEST(YoungDiagram, ExtremeRanks) {
  for (Int n = 1; n <= 12; ++n) {
    EXPECT_EQ(YoungDiagram(std::vector<Int>(static_cast<std::size_t>(n), 1)).rank(), 1 - n);
    EXPECT_EQ(YoungDiagram({n}).rank(), n - 1);
  }
}

TEST(YoungDiagram, RejectsInvalidRows) {
  EXPECT_THROW(YoungDiagram({}), DomainError);
  EXPECT_THROW(YoungDiagram({2, 3}), DomainError);
  EXPECT_THROW(YoungDiagram({2, 0}), DomainError);
  EXPECT_THROW(YoungDiagram({-1}), DomainError);
}

TEST(YoungDiagram, TextForm) {
  EXPECT_EQ(YoungDiagram({4, 2, 1}).to_string(), "4,2,1");
  EXPECT_EQ(YoungDiagram::parse("4,2,1"), YoungDiagram({4, 2, 1}));
  EXPECT_THROW(YoungDiagram::parse("4, 2"), InputError);
  EXPECT_THROW(YoungDiagram::parse("1,2"), InputError);
  EXPECT_THROW(YoungDiagram::parse("4,2,"), InputError);
  EXPECT_THROW(YoungDiagram::parse(""), InputError);
}

TEST(Enumerate, SevenHasFifteenPartitions) {
  EXPECT_EQ(all_partitions(7).size(), 15u);
  EXPECT_EQ(partition_number(7), 15);
}

TEST(Enumerate, OneIsSingleRow) {
  const auto parts = all_partitions(1);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], YoungDiagram({1}));
}

TEST(Enumerate, ReverseLexicographicOrder) {
  std::vector<std::string> text;
  for (const auto& d : all_partitions(5)) text.push_back(d.to_string());
  const std::vector<std::string> expected{"5",     "4,1",   "3,2",      "3,1,1",
                                          "2,2,1", "2,1,1,1", "1,1,1,1,1"};
  EXPECT_EQ(text, expected);

  const auto parts = all_partitions(12);
  for (std::size_t i = 1; i < parts.size(); ++i) EXPECT_GT(parts[i - 1], parts[i]);
}

TEST(Enumerate, ConstrainedSevenExample) {
  PartitionConstraint c;
  c.max_width = 4;
  c.min_height = 3;
  const auto parts = all_partitions(7, c);
  const std::set<YoungDiagram> got(parts.begin(), parts.end());
  EXPECT_TRUE(got.contains(YoungDiagram({4, 2, 1})));
  EXPECT_TRUE(got.contains(YoungDiagram({3, 3, 1})));
  EXPECT_FALSE(got.contains(YoungDiagram({4, 3})));
}

TEST(Enumerate, CountMatchesRecurrenceUpTo40) {
  for (Int n = 1; n <= 40; ++n) {
    Int count = 0;
    for ([[maybe_unused]] const auto& d : PartitionEnumerator(n)) ++count;
    EXPECT_EQ(count, partition_number(n)) << "n=" << n;
  }
}

TEST(Enumerate, EveryDiagramValidAndDistinct) {
  for (Int n = 1; n <= 18; ++n) {
    std::set<YoungDiagram> seen;
    for (const auto& d : PartitionEnumerator(n)) {
      EXPECT_EQ(d.n(), n);
      EXPECT_EQ(d.rank(), d.width() - d.height());
      EXPECT_TRUE(seen.insert(d).second) << d.to_string();
    }
  }
}

TEST(Enumerate, PruningEqualsPostFilter) {
  for (Int n = 1; n <= 20; ++n) {
    std::vector<PartitionConstraint> grid;
    for (Int w = 1; w <= n; w += 2) grid.push_back(PartitionConstraint::width_at_most(w));
    for (Int h = 1; h <= n; h += 2) grid.push_back(PartitionConstraint::height_at_least(h));
    for (Int r = 1 - n; r <= n - 1; r += 3) grid.push_back(PartitionConstraint::rank_at_most(r));
    for (Int w = 1; w <= n; w += 3) {
      for (Int h = 1; h <= n; h += 3) {
        grid.push_back(PartitionConstraint::wh_class(w, h));
        grid.push_back({w, h, w - h + 1});
      }
    }
    for (const auto& c : grid) {
      EXPECT_EQ(all_partitions(n, c), filtered(n, c)) << "n=" << n;
    }
  }
}

TEST(Enumerate, UnsatisfiableIsEmpty) {
  EXPECT_TRUE(all_partitions(7, PartitionConstraint::rank_at_most(-7)).empty());
  EXPECT_TRUE(all_partitions(7, PartitionConstraint::height_at_least(8)).empty());
  PartitionConstraint c;
  c.max_width = 2;
  c.max_rank = -6;  // rank -6 needs all singletons, width 1 ok
  EXPECT_EQ(all_partitions(7, c).size(), 1u);
}

TEST(Enumerate, NextAfterExhaustionStaysEmpty) {
  PartitionEnumerator e(3);
  int count = 0;
  while (e.next()) ++count;
  EXPECT_EQ(count, 3);
  EXPECT_FALSE(e.next().has_value());
  EXPECT_THROW(PartitionEnumerator(0), DomainError);
}
