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

// TSV readers and writers for every intermediate stage. Rows are sorted by
// journal name so output is reproducible regardless of id assignment.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "triadic/dynamics.hpp"
#include "triadic/islands.hpp"
#include "triadic/metrics.hpp"
#include "triadic/model.hpp"
#include "triadic/text.hpp"
#include "triadic/triads.hpp"

namespace triadic::tsv {

/// Name-ordered view of a pair.
inline std::pair<const std::string*, const std::string*> ordered_names(
    JournalPair p, const JournalRegistry& registry) {
  const auto* x = &registry.name(p.a);
  const auto* y = &registry.name(p.b);
  if (*y < *x) std::swap(x, y);
  return {x, y};
}

/// Indices of `pairs` ordered by (smaller name, larger name).
template <typename GetPair>
std::vector<std::size_t> name_order(std::size_t count, GetPair get,
                                    const JournalRegistry& registry) {
  std::vector<std::pair<std::pair<const std::string*, const std::string*>,
                        std::size_t>>
      keys;
  keys.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    keys.emplace_back(ordered_names(get(i), registry), i);
  std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    if (*x.first.first != *y.first.first)
      return *x.first.first < *y.first.first;
    return *x.first.second < *y.first.second;
  });
  std::vector<std::size_t> out;
  out.reserve(count);
  for (const auto& k : keys) out.push_back(k.second);
  return out;
}

/// Ingest-format edge list, ordered by (cited name, citing name).
inline void write_edge_file(std::ostream& os, const YearNetwork& net,
                            const JournalRegistry& registry) {
  auto arcs = net.sorted_arcs();
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& x, const Arc& y) {
    const auto& xc = registry.name(x.cited);
    const auto& yc = registry.name(y.cited);
    if (xc != yc) return xc < yc;
    return registry.name(x.citing) < registry.name(y.citing);
  });
  for (const auto& a : arcs)
    os << registry.name(a.cited) << '\t' << registry.name(a.citing) << '\t'
       << a.weight << '\n';
}

inline void write_dataset_summary(std::ostream& os, const TemporalDataset& d) {
  os << "year\tn_journals\tn_arcs\tn_loops\ttotal_citations\n";
  for (const auto& y : d.years)
    os << y.year() << '\t' << d.registry.size() << '\t' << y.arc_count()
       << '\t' << y.loop_count() << '\t' << y.total_weight() << '\n';
}

inline void write_stats(std::ostream& os, std::span<const YearStats> stats) {
  os << "year\tn_journals\tn_active\tn_links\tdensity_loops\t"
        "avg_reciprocal_degree\tavg_unidirectional_degree\tn_isolates\n";
  for (const auto& s : stats)
    os << s.year << '\t' << s.n_journals << '\t' << s.n_active << '\t'
       << s.n_links << '\t' << text::format_double(s.density_loops) << '\t'
       << text::format_double(s.avg_reciprocal_degree) << '\t'
       << text::format_double(s.avg_unidirectional_degree) << '\t'
       << s.n_isolates << '\n';
}

inline void write_overlap(std::ostream& os, const OverlapCounts& c,
                          std::span<const int> years) {
  os << "region\tyears\tcount\n";
  for (const auto& [mask, name] : OverlapCounts::kRegions) {
    std::string label;
    for (unsigned k = 0; k < 3; ++k)
      if (mask & (1u << k)) {
        if (!label.empty()) label += ',';
        label += k < years.size() ? std::to_string(years[k]) : "?";
      }
    os << name << '\t' << label << '\t' << c.region(mask) << '\n';
  }
  os << "union_total\t-\t" << c.union_total << '\n';
}

inline void write_triads(std::ostream& os, const TriadCountGraph& t,
                         const JournalRegistry& registry) {
  os << "journal_a\tjournal_b\tcount\n";
  const auto order = name_order(
      t.edges.size(), [&](std::size_t i) { return t.edges[i].pair; }, registry);
  for (auto i : order) {
    const auto [a, b] = ordered_names(t.edges[i].pair, registry);
    os << *a << '\t' << *b << '\t' << t.edges[i].count << '\n';
  }
}

namespace detail {
inline void expect_header(std::istream& in, std::string& line,
                          std::size_t& lineno, std::string_view first) {
  while (text::read_line(in, line)) {
    ++lineno;
    if (text::is_skippable(line)) continue;
    if (text::split(line).front() != first)
      throw ParseError(lineno, "expected a header starting with '" +
                                   std::string(first) + "'");
    return;
  }
  throw ParseError(lineno, "missing header");
}
}  // namespace detail

/// Reads a triads TSV back, registering names in `registry`.
inline TriadCountGraph read_triads(std::istream& in, int year,
                                   JournalRegistry& registry) {
  TriadCountGraph t;
  t.year = year;
  std::string line;
  std::size_t lineno = 0;
  detail::expect_header(in, line, lineno, "journal_a");
  while (text::read_line(in, line)) {
    ++lineno;
    if (text::is_skippable(line)) continue;
    const auto f = text::split(line);
    if (f.size() != 3) throw ParseError(lineno, "expected 3 fields");
    const auto c = text::parse_uint(f[2]);
    if (!c) throw ParseError(lineno, "malformed count");
    const auto a = registry.register_journal(f[0]);
    const auto b = registry.register_journal(f[1]);
    if (a == b) throw ParseError(lineno, "loop in triad counts");
    t.edges.push_back({JournalPair(a, b), *c});
  }
  std::sort(t.edges.begin(), t.edges.end(),
            [](const auto& x, const auto& y) { return x.pair < y.pair; });
  for (std::size_t i = 1; i < t.edges.size(); ++i)
    if (t.edges[i].pair == t.edges[i - 1].pair)
      throw Error("duplicate pair in triad counts");
  t.node_count = registry.size();
  return t;
}

inline void write_change(std::ostream& os, const ChangeNetwork& cn,
                         const JournalRegistry& registry) {
  os << "# years";
  for (auto y : cn.years) os << '\t' << y;
  os << "\njournal_a\tjournal_b";
  for (std::size_t k = 1; k <= cn.years.size(); ++k) os << "\tc" << k;
  os << "\tavg_change\ttrend\n";
  const auto order = name_order(
      cn.records.size(), [&](std::size_t i) { return cn.records[i].pair; },
      registry);
  for (auto i : order) {
    const auto& r = cn.records[i];
    const auto [a, b] = ordered_names(r.pair, registry);
    os << *a << '\t' << *b;
    // Counts follow the year order regardless of name order.
    for (auto c : r.counts) os << '\t' << c;
    os << '\t' << text::format_double(r.avg_change) << '\t'
       << to_string(r.trend) << '\n';
  }
}

inline ChangeNetwork read_change(std::istream& in, JournalRegistry& registry) {
  ChangeNetwork cn;
  std::string line;
  std::size_t lineno = 0;
  std::size_t n_years = 0;
  while (text::read_line(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t.rfind("# years", 0) == 0) {
      const auto f = text::split(t);
      for (std::size_t k = 1; k < f.size(); ++k) {
        const auto y = text::parse_int(f[k]);
        if (!y) throw ParseError(lineno, "malformed year label");
        cn.years.push_back(static_cast<int>(*y));
      }
      continue;
    }
    if (t.front() == '#') continue;
    const auto f = text::split(line);
    if (f.size() < 5 || f[0] != "journal_a")
      throw ParseError(lineno, "expected the change-network header");
    n_years = f.size() - 4;
    break;
  }
  if (n_years == 0) throw ParseError(lineno, "missing header");
  if (cn.years.empty())
    for (std::size_t k = 1; k <= n_years; ++k)
      cn.years.push_back(static_cast<int>(k));
  if (cn.years.size() != n_years)
    throw ParseError(lineno, "year labels do not match the count columns");

  while (text::read_line(in, line)) {
    ++lineno;
    if (text::is_skippable(line)) continue;
    const auto f = text::split(line);
    if (f.size() != n_years + 4)
      throw ParseError(lineno, "expected " + std::to_string(n_years + 4) +
                                   " fields");
    ChangeRecord r;
    r.pair = JournalPair(registry.register_journal(f[0]),
                         registry.register_journal(f[1]));
    for (std::size_t k = 0; k < n_years; ++k) {
      const auto c = text::parse_uint(f[2 + k]);
      if (!c) throw ParseError(lineno, "malformed count");
      r.counts.push_back(*c);
    }
    const auto avg = text::parse_double(f[2 + n_years]);
    if (!avg) throw ParseError(lineno, "malformed avg_change");
    r.avg_change = *avg;
    try {
      r.trend = parse_trend(trim(f[3 + n_years]));
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
    cn.records.push_back(std::move(r));
  }
  std::sort(cn.records.begin(), cn.records.end(),
            [](const auto& x, const auto& y) { return x.pair < y.pair; });
  cn.node_count = registry.size();
  return cn;
}

inline void write_change_summary(std::ostream& os, const ChangeSummary& s) {
  os << "class\tcount\n"
     << "net_increase\t" << s.net_increase << '\n'
     << "monotonic_increase\t" << s.monotonic_up << '\n'
     << "net_neutral\t" << s.net_neutral << '\n'
     << "net_decrease\t" << s.net_decrease << '\n'
     << "monotonic_decrease\t" << s.monotonic_down << '\n'
     << "total\t" << s.total << '\n';
}

/// Island order used in reports: descending height, then the
/// lexicographically first member name.
inline void sort_islands_by_name(IslandSet& s,
                                 const JournalRegistry& registry) {
  sort_islands(s, [&](JournalId x, JournalId y) {
    return registry.name(x) < registry.name(y);
  });
}

inline void write_islands(std::ostream& os, const IslandSet& s,
                          const JournalRegistry& registry) {
  os << "journal\tisland_id\theight\n";
  for (std::size_t k = 0; k < s.islands.size(); ++k) {
    std::vector<const std::string*> names;
    for (auto m : s.islands[k].members) names.push_back(&registry.name(m));
    std::sort(names.begin(), names.end(),
              [](auto* x, auto* y) { return *x < *y; });
    for (const auto* n : names)
      os << *n << '\t' << k << '\t'
         << text::format_double(s.islands[k].height) << '\n';
  }
}

inline void write_island_lines(std::ostream& os, const IslandSet& s,
                               const JournalRegistry& registry) {
  os << "journal_a\tjournal_b\tvalue\tisland_id\n";
  for (std::size_t k = 0; k < s.islands.size(); ++k) {
    const auto& lines = s.islands[k].defining_lines;
    const auto order = name_order(
        lines.size(), [&](std::size_t i) { return lines[i].pair(); },
        registry);
    for (auto i : order) {
      const auto [a, b] = ordered_names(lines[i].pair(), registry);
      os << *a << '\t' << *b << '\t' << text::format_double(lines[i].value)
         << '\t' << k << '\n';
    }
  }
}

/// Reads island membership. Defining lines are left empty.
inline IslandSet read_islands(std::istream& in, JournalRegistry& registry) {
  std::map<std::size_t, Island> by_id;
  std::string line;
  std::size_t lineno = 0;
  detail::expect_header(in, line, lineno, "journal");
  while (text::read_line(in, line)) {
    ++lineno;
    if (text::is_skippable(line)) continue;
    const auto f = text::split(line);
    if (f.size() != 3) throw ParseError(lineno, "expected 3 fields");
    const auto id = text::parse_uint(f[1]);
    const auto h = text::parse_double(f[2]);
    if (!id || !h) throw ParseError(lineno, "malformed island row");
    auto& is = by_id[*id];
    if (!is.members.empty() && is.height != *h)
      throw ParseError(lineno, "inconsistent island height");
    is.height = *h;
    is.members.push_back(registry.register_journal(f[0]));
  }
  IslandSet s;
  for (auto& [id, is] : by_id) {
    if (id != s.islands.size()) throw Error("island ids must be dense from 0");
    std::sort(is.members.begin(), is.members.end());
    s.islands.push_back(std::move(is));
  }
  s.node_count = registry.size();
  return s;
}

}  // namespace triadic::tsv
