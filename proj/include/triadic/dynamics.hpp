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

#pragma once

// Monotonic-change network over journal pairs that are reciprocal in every
// observed year.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <string_view>
#include <vector>

#include "triadic/model.hpp"
#include "triadic/triads.hpp"

namespace triadic {

enum class Trend { kMonotonicUp, kMonotonicDown, kOther };

/// Strict: every consecutive step changes in the same direction.
/// Weak: no step goes against the direction and the endpoints differ.
enum class Monotonicity { kStrict, kWeak };

inline std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::kMonotonicUp: return "monotonic-up";
    case Trend::kMonotonicDown: return "monotonic-down";
    case Trend::kOther: break;
  }
  return "other";
}

inline Trend parse_trend(std::string_view s) {
  if (s == "monotonic-up") return Trend::kMonotonicUp;
  if (s == "monotonic-down") return Trend::kMonotonicDown;
  if (s == "other") return Trend::kOther;
  throw Error("unknown trend '" + std::string(s) + "'");
}

/// (last - first) / (years - 1).
inline double average_change(std::span<const std::uint64_t> counts) {
  if (counts.size() < 2) throw Error("average change needs two observations");
  const auto delta = static_cast<double>(counts.back()) -
                     static_cast<double>(counts.front());
  return delta / static_cast<double>(counts.size() - 1);
}

inline Trend classify_trend(std::span<const std::uint64_t> counts,
                            Monotonicity mode = Monotonicity::kStrict) {
  if (counts.size() < 2) return Trend::kOther;
  bool up = true, down = true;
  for (std::size_t t = 0; t + 1 < counts.size(); ++t) {
    const auto a = counts[t], b = counts[t + 1];
    if (mode == Monotonicity::kStrict) {
      up = up && a < b;
      down = down && a > b;
    } else {
      up = up && a <= b;
      down = down && a >= b;
    }
  }
  if (mode == Monotonicity::kWeak) {
    up = up && counts.back() > counts.front();
    down = down && counts.back() < counts.front();
  }
  if (up) return Trend::kMonotonicUp;
  if (down) return Trend::kMonotonicDown;
  return Trend::kOther;
}

struct ChangeRecord {
  JournalPair pair;
  std::vector<std::uint64_t> counts;  // one per year, oldest first
  double avg_change = 0.0;
  Trend trend = Trend::kOther;

  friend bool operator==(const ChangeRecord&, const ChangeRecord&) = default;
};

inline ChangeRecord make_change_record(
    JournalPair pair, std::vector<std::uint64_t> counts,
    Monotonicity mode = Monotonicity::kStrict) {
  ChangeRecord r{pair, std::move(counts), 0.0, Trend::kOther};
  r.avg_change = average_change(r.counts);
  r.trend = classify_trend(r.counts, mode);
  return r;
}

struct ChangeNetwork {
  std::vector<int> years;
  std::size_t node_count = 0;
  std::vector<ChangeRecord> records;  // sorted by pair, each pair once

  friend bool operator==(const ChangeNetwork&, const ChangeNetwork&) = default;
};

/// Pairs reciprocal in every given year.
inline std::vector<JournalPair> persistent_pairs(
    std::span<const ReciprocalGraph> graphs) {
  if (graphs.size() < 2)
    throw Error("persistent pairs need at least 2 years, got " +
                std::to_string(graphs.size()));
  auto common = graphs.front().edges();
  for (std::size_t i = 1; i < graphs.size() && !common.empty(); ++i) {
    const auto& g = graphs[i];
    std::erase_if(common,
                  [&](const JournalPair& p) { return !g.has_edge(p.a, p.b); });
  }
  return common;
}

inline std::vector<ReciprocalGraph> reciprocal_graphs(
    const TemporalDataset& dataset) {
  std::vector<ReciprocalGraph> out;
  out.reserve(dataset.years.size());
  for (const auto& y : dataset.years) out.push_back(reciprocal_graph(y));
  return out;
}

inline std::vector<JournalPair> persistent_pairs(
    const TemporalDataset& dataset) {
  if (dataset.years.size() < 2)
    throw Error("persistent pairs need at least 2 years, got " +
                std::to_string(dataset.years.size()));
  const auto graphs = reciprocal_graphs(dataset);
  return persistent_pairs(graphs);
}

/// Builds the change network from per-year triad counts, each computed on
/// that year's full reciprocal graph. Since every reciprocal edge appears in
/// its year's counts, the persistent pairs are the pairs present in all.
inline ChangeNetwork change_network(std::span<const TriadCountGraph> yearly,
                                    Monotonicity mode = Monotonicity::kStrict) {
  if (yearly.size() < 3)
    throw Error("the change network needs at least 3 years, got " +
                std::to_string(yearly.size()));
  ChangeNetwork cn;
  for (std::size_t i = 0; i < yearly.size(); ++i) {
    if (i > 0 && yearly[i - 1].year >= yearly[i].year)
      throw Error("years must be strictly ascending");
    cn.years.push_back(yearly[i].year);
    cn.node_count = std::max(cn.node_count, yearly[i].node_count);
  }
  for (const auto& e : yearly.front().edges) {
    std::vector<std::uint64_t> counts{e.count};
    for (std::size_t i = 1; i < yearly.size(); ++i) {
      const auto c = yearly[i].count(e.pair);
      if (!c) break;
      counts.push_back(*c);
    }
    if (counts.size() == yearly.size())
      cn.records.push_back(make_change_record(e.pair, std::move(counts), mode));
  }
  return cn;
}

inline std::vector<TriadCountGraph> yearly_triad_counts(
    const TemporalDataset& dataset, unsigned workers = 0) {
  std::vector<TriadCountGraph> out;
  out.reserve(dataset.years.size());
  for (const auto& y : dataset.years)
    out.push_back(shared_neighbor_counts(reciprocal_graph(y), workers));
  return out;
}

inline ChangeNetwork change_network(const TemporalDataset& dataset,
                                    Monotonicity mode = Monotonicity::kStrict,
                                    unsigned workers = 0) {
  if (dataset.years.size() < 3)
    throw Error("the change network needs at least 3 years, got " +
                std::to_string(dataset.years.size()));
  const auto yearly = yearly_triad_counts(dataset, workers);
  return change_network(yearly, mode);
}

/// Keeps monotonic-up and monotonic-down records.
inline ChangeNetwork monotonic_filter(const ChangeNetwork& cn) {
  ChangeNetwork out{cn.years, cn.node_count, {}};
  std::copy_if(cn.records.begin(), cn.records.end(),
               std::back_inserter(out.records),
               [](const ChangeRecord& r) { return r.trend != Trend::kOther; });
  return out;
}

/// Line value = average yearly change.
inline ValuedGraph to_valued_graph(const ChangeNetwork& cn) {
  ValuedGraph g{cn.node_count, {}};
  g.lines.reserve(cn.records.size());
  for (const auto& r : cn.records)
    g.lines.push_back({r.pair.a, r.pair.b, r.avg_change});
  return g;
}

}  // namespace triadic
