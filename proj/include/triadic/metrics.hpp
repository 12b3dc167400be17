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

// Descriptive statistics: per-year network summaries, three-year link
// overlap and the change taxonomy.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "triadic/dynamics.hpp"
#include "triadic/model.hpp"

namespace triadic {

struct YearStats {
  int year = 0;
  std::size_t n_journals = 0;  // registry size N
  std::size_t n_active = 0;
  std::size_t n_links = 0;  // arcs, loops included
  double density_loops = 0.0;
  double avg_reciprocal_degree = 0.0;
  double avg_unidirectional_degree = 0.0;
  std::size_t n_isolates = 0;
  std::size_t n_reciprocal_pairs = 0;
  std::size_t n_unidirectional_pairs = 0;

  /// Exact density n_links / N^2 as a fraction.
  std::pair<std::uint64_t, std::uint64_t> density_fraction() const {
    return {n_links, std::uint64_t{n_journals} * n_journals};
  }

  friend bool operator==(const YearStats&, const YearStats&) = default;
};

/// Averages are taken over all N registered journals, isolates included.
inline YearStats year_stats(const YearNetwork& net,
                            const JournalRegistry& registry) {
  YearStats s;
  s.year = net.year();
  s.n_journals = registry.size();
  s.n_links = net.arc_count();
  std::vector<bool> touched(s.n_journals, false);
  net.for_each_arc([&](const Arc& a) {
    touched[to_index(a.cited)] = true;
    touched[to_index(a.citing)] = true;
    if (a.is_loop()) return;
    if (net.has_arc(a.citing, a.cited)) {
      if (a.cited < a.citing) ++s.n_reciprocal_pairs;
    } else {
      ++s.n_unidirectional_pairs;
    }
  });
  s.n_active = static_cast<std::size_t>(
      std::count(touched.begin(), touched.end(), true));
  s.n_isolates = s.n_journals - s.n_active;
  if (s.n_journals > 0) {
    const auto n = static_cast<double>(s.n_journals);
    s.density_loops = static_cast<double>(s.n_links) / (n * n);
    s.avg_reciprocal_degree = 2.0 * static_cast<double>(s.n_reciprocal_pairs) / n;
    s.avg_unidirectional_degree =
        2.0 * static_cast<double>(s.n_unidirectional_pairs) / n;
  }
  return s;
}

/// Venn regions of arc presence across three years (loops excluded).
struct OverlapCounts {
  std::uint64_t only_y1 = 0;
  std::uint64_t only_y2 = 0;
  std::uint64_t only_y3 = 0;
  std::uint64_t y1_y2_only = 0;
  std::uint64_t y1_y3_only = 0;
  std::uint64_t y2_y3_only = 0;
  std::uint64_t all_three = 0;
  std::uint64_t union_total = 0;

  /// Region counter indexed by presence bitmask (bit k = year k+1).
  std::uint64_t& region(unsigned mask) {
    switch (mask) {
      case 0b001: return only_y1;
      case 0b010: return only_y2;
      case 0b100: return only_y3;
      case 0b011: return y1_y2_only;
      case 0b101: return y1_y3_only;
      case 0b110: return y2_y3_only;
      case 0b111: return all_three;
      default: break;
    }
    throw Error("empty overlap region");
  }
  std::uint64_t region(unsigned mask) const {
    return const_cast<OverlapCounts&>(*this).region(mask);
  }

  static constexpr std::array<std::pair<unsigned, std::string_view>, 7>
      kRegions{{{0b001, "only_y1"},
                {0b010, "only_y2"},
                {0b100, "only_y3"},
                {0b011, "y1_y2_only"},
                {0b101, "y1_y3_only"},
                {0b110, "y2_y3_only"},
                {0b111, "all_three"}}};

  friend bool operator==(const OverlapCounts&, const OverlapCounts&) = default;
};

inline OverlapCounts link_overlap(const YearNetwork& y1, const YearNetwork& y2,
                                  const YearNetwork& y3) {
  const std::array<const YearNetwork*, 3> nets{&y1, &y2, &y3};
  std::unordered_map<std::uint64_t, unsigned> mask;
  for (unsigned k = 0; k < 3; ++k)
    nets[k]->for_each_arc([&](const Arc& a) {
      if (a.is_loop()) return;
      mask[(std::uint64_t{to_index(a.cited)} << 32) | to_index(a.citing)] |=
          1u << k;
    });
  OverlapCounts out;
  for (const auto& [key, m] : mask) ++out.region(m);
  out.union_total = mask.size();
  return out;
}

struct ChangeSummary {
  std::uint64_t total = 0;
  std::uint64_t net_increase = 0;
  std::uint64_t monotonic_up = 0;
  std::uint64_t net_neutral = 0;
  std::uint64_t net_decrease = 0;
  std::uint64_t monotonic_down = 0;

  friend bool operator==(const ChangeSummary&, const ChangeSummary&) = default;
};

inline ChangeSummary change_summary(std::span<const ChangeRecord> records) {
  ChangeSummary s;
  for (const auto& r : records) {
    ++s.total;
    if (r.avg_change > 0) {
      ++s.net_increase;
    } else if (r.avg_change < 0) {
      ++s.net_decrease;
    } else {
      ++s.net_neutral;
    }
    if (r.trend == Trend::kMonotonicUp) ++s.monotonic_up;
    if (r.trend == Trend::kMonotonicDown) ++s.monotonic_down;
  }
  return s;
}

}  // namespace triadic
