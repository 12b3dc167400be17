// Copyright 2026 The triadic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "triadic/metrics.hpp"

#include <set>

#include "gtest/gtest.h"
#include "triadic/oracle.hpp"

namespace triadic {
namespace {

JournalRegistry registry_of(std::size_t n) {
  JournalRegistry r;
  for (std::size_t i = 0; i < n; ++i) r.register_journal(oracle::journal_label(i, n));
  return r;
}

TEST(YearStatsTest, ReciprocalPair) {
  const auto r = registry_of(2);
  YearNetwork net(2011, 2);
  net.add_citation(journal_id(0), journal_id(1), 1);
  net.add_citation(journal_id(1), journal_id(0), 1);
  const auto s = year_stats(net, r);
  EXPECT_DOUBLE_EQ(s.avg_reciprocal_degree, 1.0);
  EXPECT_DOUBLE_EQ(s.avg_unidirectional_degree, 0.0);
  EXPECT_EQ(s.n_links, 2u);
  EXPECT_DOUBLE_EQ(s.density_loops, 0.5);
}

TEST(YearStatsTest, OneWayArc) {
  const auto r = registry_of(2);
  YearNetwork net(2011, 2);
  net.add_citation(journal_id(0), journal_id(1), 4);
  const auto s = year_stats(net, r);
  EXPECT_DOUBLE_EQ(s.avg_reciprocal_degree, 0.0);
  EXPECT_DOUBLE_EQ(s.avg_unidirectional_degree, 1.0);
}

TEST(YearStatsTest, IsolatesUseTheFullRegistry) {
  const auto r = registry_of(5);
  YearNetwork net(2011, 5);
  net.add_citation(journal_id(0), journal_id(1), 1);
  net.add_citation(journal_id(2), journal_id(2), 1);  // loop-only journal
  const auto s = year_stats(net, r);
  EXPECT_EQ(s.n_active, 3u);
  EXPECT_EQ(s.n_isolates, 2u);
  EXPECT_EQ(s.n_active + s.n_isolates, s.n_journals);
  EXPECT_DOUBLE_EQ(s.avg_unidirectional_degree, 2.0 / 5.0);
  EXPECT_EQ(s.density_fraction(), std::make_pair(std::uint64_t{2}, std::uint64_t{25}));
}

TEST(YearStatsTest, CompleteDigraphWithLoopsHasDensityOne) {
  const std::size_t n = 7;
  const auto r = registry_of(n);
  YearNetwork net(2011, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      net.add_citation(journal_id(i), journal_id(j), 1);
  const auto s = year_stats(net, r);
  EXPECT_DOUBLE_EQ(s.density_loops, 1.0);
  EXPECT_DOUBLE_EQ(s.avg_reciprocal_degree, static_cast<double>(n - 1));
}

TEST(YearStatsTest, DensityStaysInUnitInterval) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = oracle::random_dataset({40, 0.3, 0.5, seed}, 1);
    const auto s = year_stats(d.years[0], d.registry);
    EXPECT_GE(s.density_loops, 0.0);
    EXPECT_LE(s.density_loops, 1.0);
    EXPECT_EQ(s.n_active + s.n_isolates, s.n_journals);
  }
}

TEST(LinkOverlapTest, ArcInAllYears) {
  YearNetwork a(1, 2), b(2, 2), c(3, 2);
  for (auto* y : {&a, &b, &c}) y->add_citation(journal_id(0), journal_id(1), 1);
  const auto o = link_overlap(a, b, c);
  EXPECT_EQ(o.all_three, 1u);
  EXPECT_EQ(o.union_total, 1u);
}

TEST(LinkOverlapTest, FirstAndLastYearOnly) {
  YearNetwork a(1, 3), b(2, 3), c(3, 3);
  a.add_citation(journal_id(0), journal_id(1), 1);
  c.add_citation(journal_id(0), journal_id(1), 9);
  b.add_citation(journal_id(2), journal_id(2), 1);  // loops are ignored
  const auto o = link_overlap(a, b, c);
  EXPECT_EQ(o.y1_y3_only, 1u);
  EXPECT_EQ(o.only_y2, 0u);
  EXPECT_EQ(o.union_total, 1u);
}

// Exhaustive classification over every ordered pair of distinct ids.
OverlapCounts brute_overlap(const YearNetwork& a, const YearNetwork& b,
                            const YearNetwork& c) {
  OverlapCounts o;
  const auto n = a.node_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto x = journal_id(i), y = journal_id(j);
      const unsigned mask = (a.has_arc(x, y) ? 1u : 0u) |
                            (b.has_arc(x, y) ? 2u : 0u) |
                            (c.has_arc(x, y) ? 4u : 0u);
      if (mask == 0) continue;
      ++o.region(mask);
      ++o.union_total;
    }
  return o;
}

TEST(LinkOverlapTest, MatchesExhaustiveClassification) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto d = oracle::random_dataset({20, 0.3, 0.5, seed}, 3);
    const auto& [a, b, c] = std::tie(d.years[0], d.years[1], d.years[2]);
    const auto o = link_overlap(a, b, c);
    EXPECT_EQ(o, brute_overlap(a, b, c));
    std::uint64_t sum = 0;
    for (const auto& [mask, name] : OverlapCounts::kRegions) sum += o.region(mask);
    EXPECT_EQ(sum, o.union_total);
  }
}

TEST(LinkOverlapTest, PermutingYearsPermutesRegions) {
  const auto d = oracle::random_dataset({25, 0.3, 0.3, 5}, 3);
  const auto& y = d.years;
  const auto o = link_overlap(y[0], y[1], y[2]);
  const auto p = link_overlap(y[2], y[0], y[1]);  // new k = old (k+2) % 3
  auto permute = [](unsigned mask) {
    unsigned out = 0;
    for (unsigned k = 0; k < 3; ++k)
      if (mask & (1u << k)) out |= 1u << ((k + 1) % 3);
    return out;
  };
  for (const auto& [mask, name] : OverlapCounts::kRegions)
    EXPECT_EQ(o.region(mask), p.region(permute(mask))) << name;
  EXPECT_EQ(o.union_total, p.union_total);
}

TEST(ChangeSummaryTest, Taxonomy) {
  const std::vector<ChangeRecord> records{
      make_change_record({}, {3, 5, 9}),
      make_change_record({}, {4, 9, 5}),
      make_change_record({}, {6, 6, 6}),
      make_change_record({}, {9, 4, 1}),
  };
  const auto s = change_summary(records);
  EXPECT_EQ(s.total, 4u);
  EXPECT_EQ(s.net_increase, 2u);  // (3,5,9) and (4,9,5)
  EXPECT_EQ(s.monotonic_up, 1u);
  EXPECT_EQ(s.net_neutral, 1u);
  EXPECT_EQ(s.net_decrease, 1u);
  EXPECT_EQ(s.monotonic_down, 1u);
  EXPECT_EQ(s.net_increase + s.net_neutral + s.net_decrease, s.total);
}

}  // namespace
}  // namespace triadic
