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

#include "triadic/ingest.hpp"

#include <map>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "triadic/oracle.hpp"

namespace triadic {
namespace {

YearNetwork parse(const std::string& s, JournalRegistry& r, int year = 2011) {
  std::istringstream in(s);
  return parse_edge_file(in, year, r);
}

TEST(ParseEdgeFileTest, SingleLine) {
  JournalRegistry r;
  const auto net = parse("A\tB\t3\n", r);
  EXPECT_EQ(net.arc_weight(*r.find("A"), *r.find("B")), 3u);
  EXPECT_EQ(net.year(), 2011);
}

TEST(ParseEdgeFileTest, RepeatedRowsAccumulate) {
  JournalRegistry r;
  const auto net = parse("A\tB\t3\nA\tB\t2\n", r);
  EXPECT_EQ(net.arc_weight(*r.find("A"), *r.find("B")), 5u);
}

TEST(ParseEdgeFileTest, SkipsCommentsBlankLinesAndCrlf) {
  JournalRegistry r;
  const auto net = parse("# header comment\r\n\r\nA\tB\t3\r\nB\tA\t1\r\n", r);
  EXPECT_EQ(net.arc_count(), 2u);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.name(journal_id(0)), "A");
}

TEST(ParseEdgeFileTest, NonIntegerCountReportsLine) {
  JournalRegistry r;
  try {
    parse("A\tB\tx\n", r);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("non-integer"), std::string::npos);
  }
}

TEST(ParseEdgeFileTest, RejectsWrongFieldCountAndNonPositiveCount) {
  JournalRegistry r;
  try {
    parse("A\tB\t1\nA\tB\n", r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse("A\tB\t0\n", r), ParseError);
  EXPECT_THROW(parse("A\tB\t-2\n", r), ParseError);
  EXPECT_THROW(parse("A\t\t2\n", r), ParseError);
}

AliasMap aliases(const std::string& s) {
  std::istringstream in(s);
  return parse_alias_map(in);
}

TEST(AliasMapTest, SingleAlias) {
  EXPECT_EQ(aliases("A\tB\n").resolve("A"), "B");
  EXPECT_EQ(aliases("A\tB\n").resolve("Z"), "Z");
}

// Reference resolution: follow the direct map until a fixpoint.
std::string resolve_by_iteration(const std::map<std::string, std::string>& m,
                                 std::string name) {
  for (std::size_t step = 0; step <= m.size(); ++step) {
    auto it = m.find(name);
    if (it == m.end()) return name;
    name = it->second;
  }
  throw std::logic_error("no fixpoint");
}

TEST(AliasMapTest, ChainsCollapseToFinalTarget) {
  const auto a = aliases("A\tB\nB\tC\n");
  const std::map<std::string, std::string> direct{{"A", "B"}, {"B", "C"}};
  EXPECT_EQ(a.resolve("A"), resolve_by_iteration(direct, "A"));
  EXPECT_EQ(a.resolve("A"), "C");
  EXPECT_EQ(a.resolve("B"), "C");
}

TEST(AliasMapTest, RandomChainsMatchFixpointIteration) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    // Forward-only edges (i -> j, j > i) cannot form cycles.
    std::map<std::string, std::string> direct;
    std::string text;
    for (int i = 0; i < 15; ++i) {
      if (rng() % 2) continue;
      const int j = i + 1 + static_cast<int>(rng() % 5);
      direct["n" + std::to_string(i)] = "n" + std::to_string(j);
      text += "n" + std::to_string(i) + "\tn" + std::to_string(j) + "\n";
    }
    const auto a = aliases(text);
    for (int i = 0; i < 25; ++i) {
      const auto name = "n" + std::to_string(i);
      EXPECT_EQ(a.resolve(name), resolve_by_iteration(direct, name));
      if (direct.count(name)) {
        EXPECT_NE(a.resolve(name), name);
      }
    }
  }
}

TEST(AliasMapTest, RejectsCyclesAndSplits) {
  EXPECT_THROW(aliases("A\tB\nB\tA\n"), Error);
  EXPECT_THROW(aliases("A\tB\nB\tC\nC\tA\n"), Error);
  EXPECT_THROW(aliases("A\tA\n"), Error);
  EXPECT_THROW(aliases("A\tB\nA\tC\n"), ParseError);
  EXPECT_NO_THROW(aliases("A\tB\nA\tB\n"));
}

TemporalDataset one_year(const std::string& edges) {
  TemporalDataset d;
  std::istringstream in(edges);
  d.years.push_back(parse_edge_file(in, 2011, d.registry));
  d.sync_node_counts();
  return d;
}

Weight weight(const TemporalDataset& d, const std::string& a,
              const std::string& b) {
  return d.years[0].arc_weight(*d.registry.find(a), *d.registry.find(b));
}

TEST(CanonicalizeTest, MergedSourcesAddUp) {
  const auto d = one_year("Old\tX\t2\nNew\tX\t3\n");
  const auto c = canonicalize(d, aliases("Old\tNew\n"));
  EXPECT_FALSE(c.registry.find("Old"));
  EXPECT_EQ(weight(c, "New", "X"), 5u);
}

TEST(CanonicalizeTest, MergedPairBecomesLoop) {
  const auto d = one_year("Old\tNew\t4\n");
  const auto c = canonicalize(d, aliases("Old\tNew\n"));
  // Oracle: sum every original arc whose endpoints both map to New.
  Weight expected = 0;
  const AliasMap a = aliases("Old\tNew\n");
  d.years[0].for_each_arc([&](const Arc& arc) {
    if (a.resolve(d.registry.name(arc.cited)) == "New" &&
        a.resolve(d.registry.name(arc.citing)) == "New")
      expected += arc.weight;
  });
  EXPECT_EQ(weight(c, "New", "New"), expected);
  EXPECT_EQ(expected, 4u);
}

TEST(CanonicalizeTest, EmptyAliasMapIsIdentity) {
  const auto d = one_year("A\tB\t1\nB\tC\t2\nC\tC\t5\n");
  EXPECT_EQ(canonicalize(d, AliasMap{}), d);
}

TEST(CanonicalizeTest, ConservesWeightAndIsIdempotent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = oracle::random_dataset({30, 0.2, 0.5, seed}, 3);
    std::map<std::string, std::string> direct;
    std::mt19937 rng(static_cast<unsigned>(seed));
    for (int k = 0; k < 8; ++k) {
      const auto from = rng() % 30, to = rng() % 30;
      if (from < to)
        direct[oracle::journal_label(from, 30)] = oracle::journal_label(to, 30);
    }
    const AliasMap a(direct);
    const auto once = canonicalize(d, a);
    ASSERT_EQ(once.years.size(), d.years.size());
    for (std::size_t y = 0; y < d.years.size(); ++y)
      EXPECT_EQ(once.years[y].total_weight(), d.years[y].total_weight());
    EXPECT_EQ(canonicalize(once, a), once);
    for (const auto& [from, to] : a.entries()) EXPECT_FALSE(once.registry.find(from));
  }
}

TEST(PajekTest, EmptyOneNodeGraph) {
  JournalRegistry r;
  r.register_journal("A");
  const YearNetwork net(0, 1);
  EXPECT_EQ(write_pajek(net, r), "*Vertices 1\n1 \"A\"\n*Arcs\n");
  std::istringstream in("*Vertices 1\n1 \"A\"\n*Arcs\n");
  const auto parsed = parse_pajek(in);
  EXPECT_EQ(parsed.registry, r);
  EXPECT_EQ(std::get<YearNetwork>(parsed.graph), net);
}

TEST(PajekTest, SingleArc) {
  JournalRegistry r;
  const auto a = r.register_journal("A");
  const auto b = r.register_journal("B");
  YearNetwork net(0, 2);
  net.add_citation(a, b, 3);
  const auto text = write_pajek(net, r);
  EXPECT_NE(text.find("*Arcs\n1 2 3\n"), std::string::npos);
  std::istringstream in(text);
  EXPECT_EQ(std::get<YearNetwork>(parse_pajek(in).graph).arc_weight(a, b), 3u);
}

TEST(PajekTest, MissingVerticesIsAnError) {
  std::istringstream empty("");
  EXPECT_THROW(parse_pajek(empty), ParseError);
  std::istringstream arcs_only("*Arcs\n1 2 3\n");
  EXPECT_THROW(parse_pajek(arcs_only), ParseError);
  std::istringstream truncated("*Vertices 3\n1 \"A\"\n");
  EXPECT_THROW(parse_pajek(truncated), ParseError);
  std::istringstream bad_section("*Vertices 1\n1 \"A\"\n*Matrix\n");
  EXPECT_THROW(parse_pajek(bad_section), ParseError);
}

TEST(PajekTest, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto d = oracle::random_dataset({25, 0.15, 0.4, seed}, 1, 2013);
    std::istringstream in(write_pajek(d.years[0], d.registry));
    const auto parsed = parse_pajek(in, 2013);
    EXPECT_EQ(parsed.registry, d.registry);
    EXPECT_EQ(std::get<YearNetwork>(parsed.graph), d.years[0]);

    const std::vector<double> values{-2.5, -0.5, 0.0, 1.0, 1.5, 3.0};
    const auto g = oracle::random_valued_graph(25, 0.2, values, seed);
    std::istringstream vin(write_pajek(g, d.registry));
    const auto vparsed = parse_pajek(vin);
    EXPECT_FALSE(vparsed.is_directed());
    EXPECT_EQ(std::get<ValuedGraph>(vparsed.graph), g);
  }
}

}  // namespace
}  // namespace triadic
