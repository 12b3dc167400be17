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

// Attribution of newly closed triads: for a journal pair {A, B} and a year
// t, which neighbors C became shared in t, and which of the four arcs
// A->C, C->A, B->C, C->B were new in t.
//
// Arcs point cited -> citing, so the arc A->C means "C cites A".

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "triadic/model.hpp"
#include "triadic/text.hpp"
#include "triadic/triads.hpp"

namespace triadic {

enum class ArcRole : std::uint8_t { kAToC, kCToA, kBToC, kCToB };

inline constexpr std::array<ArcRole, 4> kArcRoles{
    ArcRole::kAToC, ArcRole::kCToA, ArcRole::kBToC, ArcRole::kCToB};

inline std::string_view to_string(ArcRole r) {
  switch (r) {
    case ArcRole::kAToC: return "A->C";
    case ArcRole::kCToA: return "C->A";
    case ArcRole::kBToC: return "B->C";
    case ArcRole::kCToB: break;
  }
  return "C->B";
}

struct EventArc {
  ArcRole role = ArcRole::kAToC;
  JournalId cited{};
  JournalId citing{};
  Weight weight = 0;  // in the event year

  friend bool operator==(const EventArc&, const EventArc&) = default;
};

struct TriadEvent {
  JournalPair pair;
  JournalId neighbor{};
  int year = 0;
  std::vector<EventArc> new_arcs;        // absent in the previous year
  std::vector<EventArc> persisted_arcs;  // present in both years
  std::string annotation;                // free-form, unused by the pipeline

  friend bool operator==(const TriadEvent&, const TriadEvent&) = default;
};

inline std::array<std::pair<JournalId, JournalId>, 4> role_arcs(
    JournalPair pair, JournalId c) {
  return {{{pair.a, c}, {c, pair.a}, {pair.b, c}, {c, pair.b}}};
}

/// Answers attribution queries over one dataset. Reciprocal graphs are built
/// once per year.
class TriadAttributor {
 public:
  explicit TriadAttributor(const TemporalDataset& dataset,
                           Weight min_weight = 1)
      : dataset_(&dataset), min_weight_(min_weight) {
    if (min_weight < 1) throw Error("arc weight threshold must be at least 1");
    graphs_.reserve(dataset.years.size());
    for (const auto& y : dataset.years)
      graphs_.push_back(reciprocal_graph(y, min_weight));
  }

  /// Shared neighbors of `pair` in `year` that were not shared the year
  /// before.
  std::vector<JournalId> new_shared_neighbors(JournalPair pair,
                                              int year) const {
    const auto t = year_index(year);
    if (to_index(pair.b) >= graphs_[t].node_count())
      throw Error("journal id out of range");
    if (!graphs_[t].has_edge(pair.a, pair.b))
      throw Error("pair is not reciprocal in year " + std::to_string(year));
    const auto now = shared(graphs_[t], pair);
    const auto before = shared(graphs_[t - 1], pair);
    std::vector<JournalId> out;
    std::set_difference(now.begin(), now.end(), before.begin(), before.end(),
                        std::back_inserter(out));
    return out;
  }

  std::vector<TriadEvent> triad_events(JournalPair pair, int year) const {
    const auto t = year_index(year);
    const auto& cur = dataset_->years[t];
    const auto& prev = dataset_->years[t - 1];
    std::vector<TriadEvent> out;
    for (auto c : new_shared_neighbors(pair, year)) {
      TriadEvent ev{pair, c, year, {}, {}, {}};
      const auto arcs = role_arcs(pair, c);
      for (std::size_t k = 0; k < 4; ++k) {
        const auto [cited, citing] = arcs[k];
        const EventArc arc{kArcRoles[k], cited, citing,
                           cur.arc_weight(cited, citing)};
        if (prev.arc_weight(cited, citing) >= min_weight_)
          ev.persisted_arcs.push_back(arc);
        else
          ev.new_arcs.push_back(arc);
      }
      out.push_back(std::move(ev));
    }
    return out;
  }

  /// Events for every year that has a predecessor.
  std::vector<TriadEvent> all_triad_events(JournalPair pair) const {
    std::vector<TriadEvent> out;
    for (std::size_t t = 1; t < dataset_->years.size(); ++t) {
      if (!graphs_[t].has_edge(pair.a, pair.b)) continue;
      auto ev = triad_events(pair, dataset_->years[t].year());
      std::move(ev.begin(), ev.end(), std::back_inserter(out));
    }
    return out;
  }

  Weight min_weight() const noexcept { return min_weight_; }

 private:
  std::size_t year_index(int year) const {
    const auto& ys = dataset_->years;
    for (std::size_t t = 0; t < ys.size(); ++t) {
      if (ys[t].year() != year) continue;
      if (t == 0)
        throw Error("year " + std::to_string(year) +
                    " has no preceding year in the dataset");
      return t;
    }
    throw Error("year " + std::to_string(year) + " is not in the dataset");
  }

  static std::vector<JournalId> shared(const ReciprocalGraph& g,
                                       JournalPair pair) {
    const auto na = g.neighbors(pair.a), nb = g.neighbors(pair.b);
    std::vector<std::uint32_t> both;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                          std::back_inserter(both));
    std::vector<JournalId> out;
    out.reserve(both.size());
    for (auto v : both) out.push_back(journal_id(v));
    return out;
  }

  const TemporalDataset* dataset_;
  Weight min_weight_;
  std::vector<ReciprocalGraph> graphs_;
};

inline std::vector<JournalId> new_shared_neighbors(
    const TemporalDataset& dataset, JournalPair pair, int year,
    Weight min_weight = 1) {
  return TriadAttributor(dataset, min_weight).new_shared_neighbors(pair, year);
}

inline std::vector<TriadEvent> triad_events(const TemporalDataset& dataset,
                                            JournalPair pair, int year,
                                            Weight min_weight = 1) {
  return TriadAttributor(dataset, min_weight).triad_events(pair, year);
}

/// New-arc counts for one core journal in one year. `cited` counts new arcs
/// core->C (C started citing the core journal); `citing` counts new arcs
/// C->core.
struct JournalYearCounts {
  JournalId journal{};
  int year = 0;
  std::uint64_t events = 0;  // events with at least one new arc at this core
  std::uint64_t cited = 0;
  std::uint64_t citing = 0;

  friend bool operator==(const JournalYearCounts&,
                         const JournalYearCounts&) = default;
};

struct AttributionSummary {
  std::uint64_t events = 0;
  // Which side of the pair the new arcs link the neighbor to.
  std::uint64_t new_to_a_only = 0;
  std::uint64_t new_to_b_only = 0;
  std::uint64_t new_to_both = 0;
  std::vector<JournalYearCounts> per_journal;  // sorted by (journal, year)

  /// Totals for `journal` over all years.
  JournalYearCounts totals(JournalId journal) const {
    JournalYearCounts t{journal, 0, 0, 0, 0};
    for (const auto& c : per_journal) {
      if (c.journal != journal) continue;
      t.events += c.events;
      t.cited += c.cited;
      t.citing += c.citing;
    }
    return t;
  }

  friend bool operator==(const AttributionSummary&,
                         const AttributionSummary&) = default;
};

inline AttributionSummary attribution_summary(
    std::span<const TriadEvent> events) {
  AttributionSummary s;
  std::map<std::pair<JournalId, int>, JournalYearCounts> acc;
  auto slot = [&](JournalId j, int year) -> JournalYearCounts& {
    auto [it, inserted] = acc.try_emplace({j, year});
    if (inserted) it->second = {j, year, 0, 0, 0};
    return it->second;
  };
  for (const auto& ev : events) {
    ++s.events;
    bool touches_a = false, touches_b = false;
    for (const auto& arc : ev.new_arcs) {
      const bool at_a = arc.role == ArcRole::kAToC || arc.role == ArcRole::kCToA;
      (at_a ? touches_a : touches_b) = true;
      const auto core = at_a ? ev.pair.a : ev.pair.b;
      auto& c = slot(core, ev.year);
      if (arc.cited == core)
        ++c.cited;
      else
        ++c.citing;
    }
    if (touches_a) ++slot(ev.pair.a, ev.year).events;
    if (touches_b) ++slot(ev.pair.b, ev.year).events;
    if (touches_a && touches_b)
      ++s.new_to_both;
    else if (touches_a)
      ++s.new_to_a_only;
    else if (touches_b)
      ++s.new_to_b_only;
  }
  for (auto& [key, c] : acc) s.per_journal.push_back(c);
  return s;
}

enum class CitationRole { kNone, kAttractor, kCiter, kMixed };

inline std::string_view to_string(CitationRole r) {
  switch (r) {
    case CitationRole::kNone: return "none";
    case CitationRole::kAttractor: return "attractor";
    case CitationRole::kCiter: return "citer";
    case CitationRole::kMixed: break;
  }
  return "mixed";
}

/// Share of a journal's new arcs that must point one way for it to be called
/// an attractor (cited by new neighbors) or a citer.
inline constexpr double kDominantDirectionShare = 0.75;

inline CitationRole citation_role(const JournalYearCounts& totals) {
  const auto n = totals.cited + totals.citing;
  if (n == 0) return CitationRole::kNone;
  const auto share = static_cast<double>(totals.cited) / static_cast<double>(n);
  if (share >= kDominantDirectionShare) return CitationRole::kAttractor;
  if (1.0 - share >= kDominantDirectionShare) return CitationRole::kCiter;
  return CitationRole::kMixed;
}

enum class Involvement { kNone, kBalanced, kMostlyA, kMostlyB };

inline std::string_view to_string(Involvement i) {
  switch (i) {
    case Involvement::kNone: return "none";
    case Involvement::kBalanced: return "balanced";
    case Involvement::kMostlyA: return "mostly-a";
    case Involvement::kMostlyB: break;
  }
  return "mostly-b";
}

/// Balanced when the less involved core takes part in at least half as many
/// events as the more involved one.
inline Involvement involvement(const AttributionSummary& s, JournalPair pair) {
  const auto a = s.totals(pair.a).events, b = s.totals(pair.b).events;
  if (a == 0 && b == 0) return Involvement::kNone;
  if (2 * std::min(a, b) >= std::max(a, b)) return Involvement::kBalanced;
  return a > b ? Involvement::kMostlyA : Involvement::kMostlyB;
}

/// "C cites A" style reading of a stored cited->citing arc.
inline std::string arc_reading(const EventArc& arc,
                               const JournalRegistry& registry) {
  return registry.name(arc.citing) + " cites " + registry.name(arc.cited);
}

/// One row per arc of every event:
/// year, neighbor, arc, status, weight, reading.
inline void write_attribution_tsv(std::ostream& os,
                                  std::span<const TriadEvent> events,
                                  const JournalRegistry& registry) {
  os << "year\tneighbor\tarc\tstatus\tweight\treading\n";
  for (const auto& ev : events) {
    std::vector<std::pair<const EventArc*, bool>> rows;
    for (const auto& a : ev.new_arcs) rows.emplace_back(&a, true);
    for (const auto& a : ev.persisted_arcs) rows.emplace_back(&a, false);
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
      return x.first->role < y.first->role;
    });
    for (const auto& [arc, is_new] : rows)
      os << ev.year << '\t' << registry.name(ev.neighbor) << '\t'
         << registry.name(arc->cited) << "->" << registry.name(arc->citing)
         << '\t' << (is_new ? "new" : "persisted") << '\t' << arc->weight
         << '\t' << arc_reading(*arc, registry) << '\n';
  }
}

inline void write_attribution_summary(std::ostream& os,
                                      const AttributionSummary& s,
                                      JournalPair pair,
                                      const JournalRegistry& registry) {
  os << "# summary\n"
     << "new_shared_neighbors\t" << s.events << '\n'
     << "new_links_to_" << registry.name(pair.a) << "_only\t"
     << s.new_to_a_only << '\n'
     << "new_links_to_" << registry.name(pair.b) << "_only\t"
     << s.new_to_b_only << '\n'
     << "new_links_to_both\t" << s.new_to_both << '\n'
     << "involvement\t" << to_string(involvement(s, pair)) << '\n'
     << "journal\tyear\tevents\tcited_by_new_neighbors\tciting_new_neighbors\n";
  for (const auto& c : s.per_journal)
    os << registry.name(c.journal) << '\t' << c.year << '\t' << c.events
       << '\t' << c.cited << '\t' << c.citing << '\n';
  for (auto j : {pair.a, pair.b})
    os << "role\t" << registry.name(j) << '\t'
       << to_string(citation_role(s.totals(j))) << '\n';
}

/// Directed Graphviz view of the events: core journals boxed, new arcs solid
/// and labelled "year: weight", persisted arcs dashed grey.
inline std::string attribution_dot(std::span<const TriadEvent> events,
                                   JournalPair pair,
                                   const JournalRegistry& registry) {
  auto q = [&](JournalId j) {
    std::string out = "\"";
    for (char c : registry.name(j)) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph attribution {\n  node [fontsize=10];\n";
  for (auto j : {pair.a, pair.b})
    os << "  " << q(j) << " [shape=box, style=filled, fillcolor=\"#dddddd\"];\n";
  std::vector<JournalId> neighbors;
  for (const auto& ev : events) neighbors.push_back(ev.neighbor);
  std::sort(neighbors.begin(), neighbors.end());
  neighbors.erase(std::unique(neighbors.begin(), neighbors.end()),
                  neighbors.end());
  for (auto c : neighbors) os << "  " << q(c) << " [shape=ellipse];\n";
  for (const auto& ev : events) {
    for (const auto& a : ev.new_arcs)
      os << "  " << q(a.cited) << " -> " << q(a.citing) << " [label=\""
         << ev.year << ": " << a.weight << "\", style=solid];\n";
    for (const auto& a : ev.persisted_arcs)
      os << "  " << q(a.cited) << " -> " << q(a.citing) << " [label=\""
         << ev.year << ": " << a.weight
         << "\", style=dashed, color=\"#999999\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace triadic
