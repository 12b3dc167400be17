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

// Reciprocal-link reduction and exact per-edge triangle counts.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "triadic/model.hpp"

namespace triadic {

/// Simple undirected loop-free graph over journals, stored as sorted
/// adjacency lists (CSR). An edge {i,j} means both i->j and j->i were cited.
class ReciprocalGraph {
 public:
  ReciprocalGraph() : offsets_(1, 0) {}

  /// Builds from an edge list; duplicates and orientation are normalized.
  ReciprocalGraph(int year, std::size_t node_count,
                  std::vector<JournalPair> edges)
      : year_(year) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::size_t> degree(node_count, 0);
    for (const auto& e : edges) {
      if (e.a == e.b) throw Error("reciprocal graph cannot contain loops");
      if (to_index(e.b) >= node_count) throw Error("edge endpoint out of range");
      ++degree[to_index(e.a)];
      ++degree[to_index(e.b)];
    }
    offsets_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i)
      offsets_[i + 1] = offsets_[i] + degree[i];
    neighbors_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (a, b), so each list is filled in ascending order
    // for the smaller endpoint; the larger endpoint's lists need a sort.
    for (const auto& e : edges) {
      neighbors_[fill[to_index(e.a)]++] = to_index(e.b);
      neighbors_[fill[to_index(e.b)]++] = to_index(e.a);
    }
    for (std::size_t i = 0; i < node_count; ++i)
      std::sort(neighbors_.begin() + offsets_[i],
                neighbors_.begin() + offsets_[i + 1]);
  }

  int year() const noexcept { return year_; }
  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const std::uint32_t> neighbors(JournalId i) const {
    const auto k = to_index(i);
    return {neighbors_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
  }
  std::size_t degree(JournalId i) const { return neighbors(i).size(); }

  bool has_edge(JournalId i, JournalId j) const {
    if (to_index(i) >= node_count() || to_index(j) >= node_count()) return false;
    const auto n = neighbors(i);
    return std::binary_search(n.begin(), n.end(), to_index(j));
  }

  /// Every edge once, ordered by (smaller id, larger id).
  std::vector<JournalPair> edges() const {
    std::vector<JournalPair> out;
    out.reserve(edge_count());
    for (std::uint32_t u = 0; u < node_count(); ++u)
      for (auto v : neighbors(journal_id(u)))
        if (v > u) out.emplace_back(journal_id(u), journal_id(v));
    return out;
  }

  friend bool operator==(const ReciprocalGraph&,
                         const ReciprocalGraph&) = default;

 private:
  int year_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
};

/// Keeps the pairs cited in both directions; weights and loops are dropped.
/// An arc counts as present when its weight reaches `min_weight`.
inline ReciprocalGraph reciprocal_graph(const YearNetwork& net,
                                        Weight min_weight = 1) {
  std::vector<JournalPair> edges;
  net.for_each_arc([&](const Arc& a) {
    if (a.cited < a.citing && a.weight >= min_weight &&
        net.arc_weight(a.citing, a.cited) >= min_weight)
      edges.emplace_back(a.cited, a.citing);
  });
  return ReciprocalGraph(net.year(), net.node_count(), std::move(edges));
}

struct TriadCount {
  JournalPair pair;
  std::uint64_t count = 0;
  friend bool operator==(const TriadCount&, const TriadCount&) = default;
};

/// Every reciprocal edge of one year with its number of shared neighbors.
/// Zero counts are kept.
struct TriadCountGraph {
  int year = 0;
  std::size_t node_count = 0;
  std::vector<TriadCount> edges;  // sorted by pair

  std::optional<std::uint64_t> count(JournalPair p) const {
    auto it = std::lower_bound(
        edges.begin(), edges.end(), p,
        [](const TriadCount& e, const JournalPair& q) { return e.pair < q; });
    if (it == edges.end() || it->pair != p) return std::nullopt;
    return it->count;
  }

  friend bool operator==(const TriadCountGraph&,
                         const TriadCountGraph&) = default;
};

namespace detail {

inline std::uint64_t merge_intersection(std::span<const std::uint32_t> x,
                                        std::span<const std::uint32_t> y) {
  std::uint64_t n = 0;
  auto i = x.begin(), j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

/// Probes each element of the shorter list in the longer one.
inline std::uint64_t probe_intersection(std::span<const std::uint32_t> small,
                                        std::span<const std::uint32_t> large) {
  std::uint64_t n = 0;
  auto lo = large.begin();
  for (auto v : small) {
    lo = std::lower_bound(lo, large.end(), v);
    if (lo == large.end()) break;
    if (*lo == v) ++n;
  }
  return n;
}

inline std::uint64_t intersection_size(std::span<const std::uint32_t> x,
                                       std::span<const std::uint32_t> y) {
  if (x.size() > y.size()) std::swap(x, y);
  // Probing costs |x| log |y|; merging costs |x| + |y|.
  if (x.size() * 16 < y.size()) return probe_intersection(x, y);
  return merge_intersection(x, y);
}

}  // namespace detail

/// Exact shared-neighbor count for every edge: |adj(i) ∩ adj(j)|.
/// `workers` = 0 selects the hardware concurrency. The result does not
/// depend on the worker count.
inline TriadCountGraph shared_neighbor_counts(const ReciprocalGraph& g,
                                              unsigned workers = 0) {
  const std::size_t n = g.node_count();
  // Slot of the first edge (u, v > u) owned by u.
  std::vector<std::size_t> first_slot(n + 1, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto adj = g.neighbors(journal_id(u));
    const auto above = adj.end() - std::upper_bound(adj.begin(), adj.end(), u);
    first_slot[u + 1] = first_slot[u] + static_cast<std::size_t>(above);
  }

  TriadCountGraph out;
  out.year = g.year();
  out.node_count = n;
  out.edges.resize(first_slot[n]);

  auto process = [&](std::uint32_t u) {
    const auto adj_u = g.neighbors(journal_id(u));
    auto slot = first_slot[u];
    for (auto v : adj_u) {
      if (v <= u) continue;
      const auto adj_v = g.neighbors(journal_id(v));
      out.edges[slot++] = {JournalPair(journal_id(u), journal_id(v)),
                           detail::intersection_size(adj_u, adj_v)};
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || n < 1024) {
    for (std::uint32_t u = 0; u < n; ++u) process(u);
    return out;
  }

  constexpr std::uint32_t kChunk = 64;
  std::atomic<std::uint32_t> cursor{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const auto begin = cursor.fetch_add(kChunk);
        if (begin >= n) return;
        const auto end = std::min<std::size_t>(n, std::size_t{begin} + kChunk);
        for (auto u = begin; u < end; ++u) process(u);
      }
    });
  pool.clear();
  return out;
}

inline std::uint64_t triangle_total(const TriadCountGraph& t) {
  std::uint64_t sum = 0;
  for (const auto& e : t.edges) sum += e.count;
  if (sum % 3 != 0)
    throw Error("triad counts sum to " + std::to_string(sum) +
                ", which is not divisible by 3");
  return sum / 3;
}

}  // namespace triadic
