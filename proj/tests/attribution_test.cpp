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

#include "triadic/attribution.hpp"

#include <sstream>

#include "gtest/gtest.h"
#include "triadic/oracle.hpp"

namespace triadic {
namespace {

class Builder {
 public:
  explicit Builder(std::initializer_list<const char*> names) {
    for (auto n : names) d.registry.register_journal(n);
  }
  JournalId operator[](const char* name) const { return *d.registry.find(name); }
  YearNetwork& year(int y) { return d.add_year(y); }
  void mutual(YearNetwork& net, const char* x, const char* y, Weight w = 1) {
    net.add_citation((*this)[x], (*this)[y], w);
    net.add_citation((*this)[y], (*this)[x], w);
  }
  TemporalDataset d;
};

TEST(NewSharedNeighborsTest, NeighborNewlyLinkedToBothSides) {
  Builder b({"A", "B", "C", "D"});
  auto& y1 = b.year(2011);
  b.mutual(y1, "A", "B");
  b.mutual(y1, "A", "C");
  b.mutual(y1, "A", "D");
  b.mutual(y1, "B", "D");
  auto& y2 = b.year(2012);
  b.mutual(y2, "A", "B");
  b.mutual(y2, "A", "C");
  b.mutual(y2, "B", "C");
  b.mutual(y2, "A", "D");
  b.mutual(y2, "B", "D");
  const JournalPair ab(b["A"], b["B"]);
  EXPECT_EQ(new_shared_neighbors(b.d, ab, 2012), std::vector<JournalId>{b["C"]});
  EXPECT_TRUE(triad_events(b.d, ab, 2012).size() == 1);
}

TEST(NewSharedNeighborsTest, Errors) {
  Builder b({"A", "B", "C"});
  auto& y1 = b.year(2011);
  b.mutual(y1, "A", "B");
  auto& y2 = b.year(2012);
  y2.add_citation(b["A"], b["B"], 1);
  const JournalPair ab(b["A"], b["B"]);
  EXPECT_THROW(new_shared_neighbors(b.d, ab, 2011), Error);  // no predecessor
  EXPECT_THROW(new_shared_neighbors(b.d, ab, 2013), Error);  // missing year
  EXPECT_THROW(new_shared_neighbors(b.d, ab, 2012), Error);  // not reciprocal
}

// The pair {ADV, P}: J_PHYS_G already cites ADV in 2011; ADV starts citing
// J_PHYS_G in 2012 with 32 citations (arc J_PHYS_G -> ADV).
TEST(TriadEventsTest, NewArcWithPersistedReverse) {
  Builder b({"ADV", "P", "J_PHYS_G", "COMMUN"});
  auto& y1 = b.year(2011);
  b.mutual(y1, "ADV", "P");
  b.mutual(y1, "P", "J_PHYS_G");
  y1.add_citation(b["ADV"], b["J_PHYS_G"], 5);  // J_PHYS_G cites ADV
  auto& y2 = b.year(2012);
  b.mutual(y2, "ADV", "P");
  b.mutual(y2, "P", "J_PHYS_G");
  y2.add_citation(b["ADV"], b["J_PHYS_G"], 6);
  y2.add_citation(b["J_PHYS_G"], b["ADV"], 32);
  // COMMUN is new on all four arcs.
  b.mutual(y2, "ADV", "COMMUN", 2);
  b.mutual(y2, "P", "COMMUN", 3);

  const JournalPair pair(b["ADV"], b["P"]);
  const auto events = triad_events(b.d, pair, 2012);
  ASSERT_EQ(events.size(), 2u);
  const auto& phys = events[0].neighbor == b["J_PHYS_G"] ? events[0] : events[1];
  const auto& commun = events[0].neighbor == b["COMMUN"] ? events[0] : events[1];

  ASSERT_EQ(phys.new_arcs.size(), 1u);
  EXPECT_EQ(phys.new_arcs[0].cited, b["J_PHYS_G"]);
  EXPECT_EQ(phys.new_arcs[0].citing, b["ADV"]);
  EXPECT_EQ(phys.new_arcs[0].weight, 32u);
  EXPECT_EQ(phys.persisted_arcs.size(), 3u);
  const bool reverse_persisted = std::any_of(
      phys.persisted_arcs.begin(), phys.persisted_arcs.end(), [&](const EventArc& a) {
        return a.cited == b["ADV"] && a.citing == b["J_PHYS_G"];
      });
  EXPECT_TRUE(reverse_persisted);

  EXPECT_EQ(commun.new_arcs.size(), 4u);
  EXPECT_TRUE(commun.persisted_arcs.empty());

  std::ostringstream os;
  write_attribution_tsv(os, std::span(&phys, 1), b.d.registry);
  EXPECT_NE(os.str().find("2012\tJ_PHYS_G\tJ_PHYS_G->ADV\tnew\t32\tADV cites J_PHYS_G\n"),
            std::string::npos);
  EXPECT_NE(os.str().find("2012\tJ_PHYS_G\tADV->J_PHYS_G\tpersisted\t6\tJ_PHYS_G cites ADV\n"),
            std::string::npos);
}

TEST(TriadEventsTest, UnchangedNeighborSetGivesNoEvents) {
  Builder b({"A", "B", "C"});
  for (int y : {2011, 2012}) {
    auto& net = b.year(y);
    b.mutual(net, "A", "B");
    b.mutual(net, "A", "C");
    b.mutual(net, "B", "C");
  }
  EXPECT_TRUE(triad_events(b.d, JournalPair(b["A"], b["B"]), 2012).empty());
}

TEST(TriadEventsTest, MatchesBruteForceAndReverifies) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = oracle::random_dataset({25, 0.5, 0.6, seed}, 3);
    const TriadAttributor attributor(d);
    const auto g = reciprocal_graph(d.years[2]);
    for (const auto& pair : g.edges()) {
      const auto events = attributor.triad_events(pair, d.years[2].year());
      EXPECT_EQ(events, oracle::brute_triad_events(d, pair, d.years[2].year()));
      EXPECT_EQ(events.size(), attributor.new_shared_neighbors(pair, d.years[2].year()).size());
      for (const auto& ev : events) {
        EXPECT_FALSE(ev.new_arcs.empty());
        EXPECT_EQ(ev.new_arcs.size() + ev.persisted_arcs.size(), 4u);
        for (const auto& a : ev.new_arcs) {
          EXPECT_FALSE(d.years[1].has_arc(a.cited, a.citing));
          EXPECT_TRUE(d.years[2].has_arc(a.cited, a.citing));
          EXPECT_EQ(a.weight, d.years[2].arc_weight(a.cited, a.citing));
        }
      }
    }
  }
}

TEST(TriadEventsTest, WeightThreshold) {
  Builder b({"A", "B", "C"});
  auto& y1 = b.year(2011);
  b.mutual(y1, "A", "B", 5);
  b.mutual(y1, "A", "C", 1);
  b.mutual(y1, "B", "C", 1);
  auto& y2 = b.year(2012);
  b.mutual(y2, "A", "B", 5);
  b.mutual(y2, "A", "C", 3);
  b.mutual(y2, "B", "C", 3);
  const JournalPair ab(b["A"], b["B"]);
  EXPECT_TRUE(triad_events(b.d, ab, 2012).empty());
  const auto ev = triad_events(b.d, ab, 2012, 2);
  ASSERT_EQ(ev.size(), 1u);
  EXPECT_EQ(ev[0].new_arcs.size(), 4u);
  EXPECT_EQ(oracle::brute_triad_events(b.d, ab, 2012, 2), ev);
}

EventArc arc(ArcRole role, JournalPair p, JournalId c) {
  const auto [x, y] = role_arcs(p, c)[static_cast<std::size_t>(role)];
  return {role, x, y, 1};
}

TEST(AttributionSummaryTest, AttractorWhenNeighborsStartCitingIt) {
  const JournalPair p(journal_id(0), journal_id(1));
  std::vector<TriadEvent> events;
  for (std::uint32_t c = 2; c < 8; ++c)
    events.push_back({p, journal_id(c), 2012, {arc(ArcRole::kAToC, p, journal_id(c))}, {}, {}});
  const auto s = attribution_summary(events);
  EXPECT_EQ(s.events, 6u);
  EXPECT_EQ(s.new_to_a_only, 6u);
  EXPECT_EQ(s.totals(p.a).cited, 6u);
  EXPECT_EQ(citation_role(s.totals(p.a)), CitationRole::kAttractor);
  EXPECT_EQ(citation_role(s.totals(p.b)), CitationRole::kNone);
  EXPECT_EQ(involvement(s, p), Involvement::kMostlyA);
}

TEST(AttributionSummaryTest, BalancedWhenSymmetric) {
  const JournalPair p(journal_id(0), journal_id(1));
  std::vector<TriadEvent> events;
  for (std::uint32_t c = 2; c < 6; ++c) {
    const auto n = journal_id(c);
    const bool a_side = c % 2 == 0;
    events.push_back({p, n, 2013,
                      {arc(a_side ? ArcRole::kCToA : ArcRole::kCToB, p, n)}, {}, {}});
  }
  events.push_back({p, journal_id(9), 2013,
                    {arc(ArcRole::kAToC, p, journal_id(9)), arc(ArcRole::kCToB, p, journal_id(9))},
                    {}, {}});
  const auto s = attribution_summary(events);
  EXPECT_EQ(s.new_to_a_only, 2u);
  EXPECT_EQ(s.new_to_b_only, 2u);
  EXPECT_EQ(s.new_to_both, 1u);
  EXPECT_EQ(involvement(s, p), Involvement::kBalanced);
  EXPECT_EQ(citation_role(s.totals(p.b)), CitationRole::kCiter);
}

TEST(AttributionSummaryTest, EmptyIsAllZero) {
  const auto s = attribution_summary({});
  EXPECT_EQ(s, AttributionSummary{});
  EXPECT_EQ(involvement(s, {}), Involvement::kNone);
}

TEST(AttributionDotTest, LabelsYearAndWeight) {
  JournalRegistry r;
  for (auto n : {"A", "B", "C"}) r.register_journal(n);
  const JournalPair p(journal_id(0), journal_id(1));
  EventArc a = arc(ArcRole::kCToA, p, journal_id(2));
  a.weight = 32;
  const std::vector<TriadEvent> events{{p, journal_id(2), 2012, {a}, {}, {}}};
  const auto dot = attribution_dot(events, p, r);
  EXPECT_NE(dot.find("\"C\" -> \"A\" [label=\"2012: 32\", style=solid]"), std::string::npos);
}

}  // namespace
}  // namespace triadic
