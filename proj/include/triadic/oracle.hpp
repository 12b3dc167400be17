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

// Brute-force reference implementations and seeded random instances. These
// follow the definitions literally and are meant for tests and fixture
// generation only.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "triadic/attribution.hpp"
#include "triadic/islands.hpp"
#include "triadic/model.hpp"
#include "triadic/triads.hpp"

namespace triadic::oracle {

inline constexpr std::size_t kTriadBound = 200;
inline constexpr std::size_t kIslandBound = 12;

/// Parameters of the independent random digraph model. For each unordered
/// pair, an arc with random direction is drawn with probability `p_arc`;
/// a drawn arc is reciprocated with probability `p_recip`.
struct GenSpec {
  std::size_t n = 0;
  double p_arc = 0.0;
  double p_recip = 0.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(p_arc >= 0.0 && p_arc <= 1.0) || !(p_recip >= 0.0 && p_recip <= 1.0))
      throw Error("generator probabilities must lie in [0, 1]");
  }
};

inline std::string journal_label(std::size_t i, std::size_t n) {
  std::size_t width = 4;
  for (std::size_t m = n; m >= 10000; m /= 10) ++width;
  std::string digits = std::to_string(i);
  return "J" + std::string(width > digits.size() ? width - digits.size() : 0,
                           '0') + digits;
}

/// Independent yearly digraphs over one registry, weights uniform in
/// [1, 10]. Identical specs give identical datasets.
inline TemporalDataset random_dataset(const GenSpec& spec, int years,
                                      int first_year = 1) {
  spec.validate();
  if (years < 1) throw Error("at least one year is required");
  TemporalDataset d;
  for (std::size_t i = 0; i < spec.n; ++i)
    d.registry.register_journal(journal_label(i, spec.n));

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Weight> weight(1, 10);
  const std::uint64_t pairs =
      spec.n < 2 ? 0 : std::uint64_t{spec.n} * (spec.n - 1) / 2;

  for (int y = 0; y < years; ++y) {
    auto& net = d.add_year(first_year + y);
    if (spec.p_arc <= 0.0 || pairs == 0) continue;
    net.reserve(static_cast<std::size_t>(
        static_cast<double>(pairs) * spec.p_arc * (1.0 + spec.p_recip)));
    // Walk the pairs (i < j) in row order, jumping geometric gaps.
    std::geometric_distribution<std::uint64_t> gap(
        spec.p_arc < 1.0 ? spec.p_arc : 0.5);
    std::uint64_t k = 0;
    std::size_t row = 0;
    std::uint64_t row_start = 0;
    while (true) {
      if (spec.p_arc < 1.0) k += gap(rng);
      if (k >= pairs) break;
      while (k >= row_start + (spec.n - 1 - row)) {
        row_start += spec.n - 1 - row;
        ++row;
      }
      const auto i = journal_id(row);
      const auto j = journal_id(row + 1 + (k - row_start));
      const bool forward = unit(rng) < 0.5;
      const auto from = forward ? i : j, to = forward ? j : i;
      net.add_citation(from, to, weight(rng));
      if (unit(rng) < spec.p_recip) net.add_citation(to, from, weight(rng));
      ++k;
    }
  }
  return d;
}

/// Random reciprocal graph: each pair is an edge with probability `p`.
inline ReciprocalGraph random_reciprocal_graph(std::size_t n, double p,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<JournalPair> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(journal_id(i), journal_id(j));
  return ReciprocalGraph(0, n, std::move(edges));
}

/// Random valued graph with line values drawn from `values`.
inline ValuedGraph random_valued_graph(std::size_t n, double p,
                                       std::span<const double> values,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  ValuedGraph g{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng))
        g.lines.push_back({journal_id(i), journal_id(j), values[pick(rng)]});
  std::shuffle(g.lines.begin(), g.lines.end(), rng);
  return g;
}

/// Per-edge common-neighbor counts by testing every third vertex.
inline TriadCountGraph brute_triads(const ReciprocalGraph& g,
                                    std::size_t bound = kTriadBound) {
  const std::size_t n = g.node_count();
  if (n > bound)
    throw Error("brute_triads limited to " + std::to_string(bound) +
                " nodes, got " + std::to_string(n));
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges())
    adj[to_index(e.a)][to_index(e.b)] = adj[to_index(e.b)][to_index(e.a)] = true;
  TriadCountGraph out;
  out.year = g.year();
  out.node_count = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      std::uint64_t c = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j && adj[i][k] && adj[j][k]) ++c;
      out.edges.push_back({JournalPair(journal_id(i), journal_id(j)), c});
    }
  return out;
}

inline std::uint64_t brute_triangle_count(const ReciprocalGraph& g) {
  const std::size_t n = g.node_count();
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (g.has_edge(journal_id(i), journal_id(j)) &&
            g.has_edge(journal_id(j), journal_id(k)) &&
            g.has_edge(journal_id(i), journal_id(k)))
          ++c;
  return c;
}

/// Checks every vertex subset against the island predicate: the subset is
/// connected by internal lines of value >= h for some h, and every line
/// leaving it is < h. Keeps the maximal qualifying subsets.
inline IslandSet brute_islands(const ValuedGraph& g, std::size_t smin,
                               std::size_t smax) {
  const std::size_t n = g.node_count;
  if (n > kIslandBound)
    throw Error("brute_islands limited to " + std::to_string(kIslandBound) +
                " nodes, got " + std::to_string(n));
  if (smin < 2 || smin > smax) throw Error("invalid island size bounds");

  auto connected = [&](std::uint32_t set, double h) {
    const auto start = static_cast<std::uint32_t>(std::countr_zero(set));
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (const auto& l : g.lines) {
        if (l.value < h) continue;
        const auto bu = 1u << to_index(l.u), bv = 1u << to_index(l.v);
        if (!(set & bu) || !(set & bv)) continue;
        if ((frontier & bu) && !(seen & bv)) next |= bv;
        if ((frontier & bv) && !(seen & bu)) next |= bu;
      }
      seen |= next;
      frontier = next;
    }
    return seen == set;
  };

  struct Found {
    std::uint32_t set;
    double height;
  };
  std::vector<Found> found;
  for (std::uint32_t set = 1; set < (1u << n); ++set) {
    const auto size = static_cast<std::size_t>(std::popcount(set));
    if (size < smin || size > smax) continue;
    std::vector<double> internal;
    bool has_out = false;
    double max_out = 0;
    for (const auto& l : g.lines) {
      const bool in_u = set & (1u << to_index(l.u));
      const bool in_v = set & (1u << to_index(l.v));
      if (in_u && in_v) {
        internal.push_back(l.value);
      } else if (in_u || in_v) {
        max_out = has_out ? std::max(max_out, l.value) : l.value;
        has_out = true;
      }
    }
    std::sort(internal.begin(), internal.end(), std::greater<>());
    internal.erase(std::unique(internal.begin(), internal.end()),
                   internal.end());
    for (double h : internal) {
      if (!connected(set, h)) continue;
      if (!has_out || max_out < h) found.push_back({set, h});
      break;
    }
  }

  IslandSet out;
  out.node_count = n;
  for (const auto& f : found) {
    const bool inside_other = std::any_of(
        found.begin(), found.end(), [&](const Found& o) {
          return o.set != f.set && (f.set & o.set) == f.set;
        });
    if (inside_other) continue;
    Island is;
    is.height = f.height;
    for (std::size_t v = 0; v < n; ++v)
      if (f.set & (1u << v)) is.members.push_back(journal_id(v));
    for (const auto& l : g.sorted_lines())
      if ((f.set & (1u << to_index(l.u))) && (f.set & (1u << to_index(l.v))) &&
          l.value >= f.height)
        is.defining_lines.push_back(l);
    out.islands.push_back(std::move(is));
  }
  sort_islands(out);
  return out;
}

/// Triad events recomputed from raw arc weights over every candidate
/// neighbor.
inline std::vector<TriadEvent> brute_triad_events(
    const TemporalDataset& d, JournalPair pair, int year,
    Weight min_weight = 1) {
  std::size_t t = 0;
  while (t < d.years.size() && d.years[t].year() != year) ++t;
  if (t == 0 || t == d.years.size()) throw Error("year without predecessor");
  const auto& cur = d.years[t];
  const auto& prev = d.years[t - 1];
  auto present = [&](const YearNetwork& y, JournalId x, JournalId z) {
    return y.arc_weight(x, z) >= min_weight;
  };
  auto recip = [&](const YearNetwork& y, JournalId x, JournalId z) {
    return present(y, x, z) && present(y, z, x);
  };
  std::vector<TriadEvent> out;
  for (std::size_t k = 0; k < d.registry.size(); ++k) {
    const auto c = journal_id(k);
    if (c == pair.a || c == pair.b) continue;
    const bool now = recip(cur, pair.a, c) && recip(cur, pair.b, c);
    const bool before = recip(prev, pair.a, c) && recip(prev, pair.b, c);
    if (!now || before) continue;
    TriadEvent ev{pair, c, year, {}, {}, {}};
    const auto arcs = role_arcs(pair, c);
    for (std::size_t r = 0; r < 4; ++r) {
      const auto [x, z] = arcs[r];
      EventArc arc{kArcRoles[r], x, z, cur.arc_weight(x, z)};
      (present(prev, x, z) ? ev.persisted_arcs : ev.new_arcs).push_back(arc);
    }
    out.push_back(std::move(ev));
  }
  return out;
}

}  // namespace triadic::oracle
