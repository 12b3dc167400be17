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

// Line islands: vertex sets whose internal spanning lines all exceed every
// line leaving the set, found through the maximum-spanning-forest
// dendrogram of the valued graph.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "triadic/dynamics.hpp"
#include "triadic/model.hpp"
#include "triadic/text.hpp"

namespace triadic {

struct Island {
  std::vector<JournalId> members;  // ascending id
  double height = 0.0;             // minimum value spanning the members
  std::vector<Line> defining_lines;  // internal lines with value >= height

  friend bool operator==(const Island&, const Island&) = default;
};

struct IslandSet {
  std::size_t node_count = 0;
  std::vector<Island> islands;

  /// Island index per journal, if any.
  std::vector<std::optional<std::size_t>> assignment() const {
    std::size_t n = node_count;
    for (const auto& is : islands)
      for (auto m : is.members) n = std::max<std::size_t>(n, to_index(m) + 1);
    std::vector<std::optional<std::size_t>> out(n);
    for (std::size_t k = 0; k < islands.size(); ++k)
      for (auto m : islands[k].members) out[to_index(m)] = k;
    return out;
  }

  friend bool operator==(const IslandSet&, const IslandSet&) = default;
};

/// Orders islands by descending height, then by `first_member_less` applied
/// to each island's smallest member (by the same ordering).
inline void sort_islands(
    IslandSet& s,
    const std::function<bool(JournalId, JournalId)>& member_less =
        std::less<JournalId>{}) {
  for (auto& is : s.islands)
    std::sort(is.members.begin(), is.members.end());
  auto first = [&](const Island& is) {
    return *std::min_element(is.members.begin(), is.members.end(),
                             member_less);
  };
  std::sort(s.islands.begin(), s.islands.end(),
            [&](const Island& x, const Island& y) {
              if (x.height != y.height) return x.height > y.height;
              return member_less(first(x), first(y));
            });
}

namespace detail {

inline void check_valued_graph(const ValuedGraph& g) {
  std::set<JournalPair> seen;
  for (const auto& l : g.lines) {
    if (to_index(l.u) >= g.node_count || to_index(l.v) >= g.node_count)
      throw Error("line endpoint out of range");
    if (l.u == l.v) throw Error("valued graph cannot contain loops");
    if (!std::isfinite(l.value)) throw Error("line values must be finite");
    if (!seen.insert(l.pair()).second)
      throw Error("duplicate line between " + std::to_string(to_index(l.u)) +
                  " and " + std::to_string(to_index(l.v)));
  }
}

inline void check_bounds(std::size_t smin, std::size_t smax) {
  if (smin < 2) throw Error("minimum island size must be at least 2");
  if (smin > smax) throw Error("minimum island size exceeds the maximum");
}

/// Fills defining lines from `g` for islands whose members are set.
inline void attach_defining_lines(const ValuedGraph& g, IslandSet& s) {
  const auto where = s.assignment();
  for (auto& is : s.islands) is.defining_lines.clear();
  for (const auto& l : g.sorted_lines()) {
    const auto iu = where[to_index(l.u)], iv = where[to_index(l.v)];
    if (iu && iv && *iu == *iv && l.value >= s.islands[*iu].height)
      s.islands[*iu].defining_lines.push_back(l);
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// Returns the surviving root.
  std::uint32_t unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return x;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return x;
  }
  std::size_t size(std::uint32_t x) { return size_[find(x)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace detail

/// Maximal line islands with sizes in [smin, smax]. `smax` defaults to the
/// node count. Equal-valued lines are merged as one batch, so a boundary
/// line equal to the internal minimum absorbs its outside endpoint.
inline IslandSet line_islands(const ValuedGraph& g, std::size_t smin = 2,
                              std::optional<std::size_t> smax = std::nullopt) {
  const std::size_t max_size = smax.value_or(std::max<std::size_t>(g.node_count, smin));
  detail::check_bounds(smin, max_size);
  detail::check_valued_graph(g);

  std::vector<std::size_t> order(g.lines.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return g.lines[x].value > g.lines[y].value;
  });

  // Dendrogram over clusters; singletons are implicit.
  struct Cluster {
    double height;
    std::size_t size;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> child_clusters;
    std::vector<std::uint32_t> child_vertices;
  };
  std::vector<Cluster> clusters;
  std::vector<std::optional<std::size_t>> cluster_of_root(g.node_count);
  detail::DisjointSets dsu(g.node_count);

  std::vector<std::uint32_t> old_roots;
  for (std::size_t i = 0; i < order.size();) {
    const double level = g.lines[order[i]].value;
    std::size_t j = i;
    while (j < order.size() && g.lines[order[j]].value == level) ++j;

    old_roots.clear();
    for (auto k = i; k < j; ++k) {
      const auto& l = g.lines[order[k]];
      old_roots.push_back(dsu.find(to_index(l.u)));
      old_roots.push_back(dsu.find(to_index(l.v)));
    }
    std::sort(old_roots.begin(), old_roots.end());
    old_roots.erase(std::unique(old_roots.begin(), old_roots.end()),
                    old_roots.end());
    for (auto k = i; k < j; ++k)
      dsu.unite(to_index(g.lines[order[k]].u), to_index(g.lines[order[k]].v));

    // Group the pre-batch components by their new root.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> groups;
    groups.reserve(old_roots.size());
    for (auto r : old_roots) groups.emplace_back(dsu.find(r), r);
    std::sort(groups.begin(), groups.end());
    for (std::size_t a = 0; a < groups.size();) {
      std::size_t b = a;
      while (b < groups.size() && groups[b].first == groups[a].first) ++b;
      if (b - a >= 2) {
        Cluster c{level, dsu.size(groups[a].first), std::nullopt, {}, {}};
        const auto id = clusters.size();
        for (auto k = a; k < b; ++k) {
          const auto old = groups[k].second;
          if (auto child = cluster_of_root[old]) {
            c.child_clusters.push_back(*child);
            clusters[*child].parent = id;
          } else {
            c.child_vertices.push_back(old);
          }
          cluster_of_root[old].reset();
        }
        clusters.push_back(std::move(c));
        cluster_of_root[groups[a].first] = id;
      }
      a = b;
    }
    i = j;
  }

  IslandSet out;
  out.node_count = g.node_count;
  for (std::size_t id = 0; id < clusters.size(); ++id) {
    const auto& c = clusters[id];
    if (c.size < smin || c.size > max_size) continue;
    if (c.parent && clusters[*c.parent].size <= max_size) continue;
    Island is;
    is.height = c.height;
    std::vector<std::size_t> stack{id};
    while (!stack.empty()) {
      const auto& cur = clusters[stack.back()];
      stack.pop_back();
      for (auto v : cur.child_vertices) is.members.push_back(journal_id(v));
      stack.insert(stack.end(), cur.child_clusters.begin(),
                   cur.child_clusters.end());
    }
    out.islands.push_back(std::move(is));
  }
  sort_islands(out);
  detail::attach_defining_lines(g, out);
  return out;
}

/// Drops islands whose height is not positive (disintegrating cores).
inline IslandSet filter_positive(const IslandSet& s) {
  IslandSet out{s.node_count, {}};
  for (const auto& is : s.islands)
    if (is.height > 0) out.islands.push_back(is);
  return out;
}

struct IslandLine {
  std::size_t island = 0;
  Line line;
  friend bool operator==(const IslandLine&, const IslandLine&) = default;
};

/// Internal lines of each island with value at least its height, read from
/// `g`. Ordered by island, then pair.
inline std::vector<IslandLine> island_lines(const ValuedGraph& g,
                                            const IslandSet& s) {
  const auto where = s.assignment();
  std::vector<IslandLine> out;
  for (const auto& l : g.sorted_lines()) {
    const auto iu = where[to_index(l.u)], iv = where[to_index(l.v)];
    if (iu && iv && *iu == *iv && l.value >= s.islands[*iu].height)
      out.push_back({*iu, l});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const IslandLine& x, const IslandLine& y) {
                     return x.island < y.island;
                   });
  return out;
}

enum class LinkageKind { kDefining, kInterIsland, kBridge };

inline std::string_view to_string(LinkageKind k) {
  switch (k) {
    case LinkageKind::kDefining: return "defining";
    case LinkageKind::kInterIsland: return "inter-island";
    case LinkageKind::kBridge: break;
  }
  return "bridge";
}

struct LinkageNode {
  JournalId id{};
  std::optional<std::size_t> island;  // none for bridging journals
  friend bool operator==(const LinkageNode&, const LinkageNode&) = default;
};

struct LinkageLine {
  Line line;
  LinkageKind kind = LinkageKind::kDefining;
  friend bool operator==(const LinkageLine&, const LinkageLine&) = default;
};

/// Island members, their defining lines, monotonic lines between different
/// islands, and non-island journals with monotonic lines to at least
/// `min_contacts` island members (with those lines).
struct CoreLinkage {
  std::vector<LinkageNode> nodes;  // ascending id
  std::vector<LinkageLine> lines;  // ascending pair

  friend bool operator==(const CoreLinkage&, const CoreLinkage&) = default;
};

inline CoreLinkage core_linkage(const ChangeNetwork& monotonic,
                                const IslandSet& s,
                                std::size_t min_contacts = 2) {
  const auto where = s.assignment();
  auto island_of = [&](JournalId j) -> std::optional<std::size_t> {
    return to_index(j) < where.size() ? where[to_index(j)] : std::nullopt;
  };

  CoreLinkage out;
  std::vector<std::vector<Line>> bridge_lines(s.node_count);
  for (const auto& r : monotonic.records) {
    if (r.trend == Trend::kOther) continue;
    const Line l{r.pair.a, r.pair.b, r.avg_change};
    const auto ia = island_of(r.pair.a), ib = island_of(r.pair.b);
    if (ia && ib) {
      if (*ia != *ib) {
        out.lines.push_back({l, LinkageKind::kInterIsland});
      } else if (l.value >= s.islands[*ia].height) {
        out.lines.push_back({l, LinkageKind::kDefining});
      }
    } else if (ia || ib) {
      const auto outsider = ia ? r.pair.b : r.pair.a;
      if (to_index(outsider) >= bridge_lines.size())
        bridge_lines.resize(to_index(outsider) + 1);
      bridge_lines[to_index(outsider)].push_back(l);
    }
  }
  for (std::size_t k = 0; k < s.islands.size(); ++k)
    for (auto m : s.islands[k].members) out.nodes.push_back({m, k});
  for (std::size_t j = 0; j < bridge_lines.size(); ++j) {
    if (bridge_lines[j].size() < min_contacts || bridge_lines[j].empty())
      continue;
    out.nodes.push_back({journal_id(j), std::nullopt});
    for (const auto& l : bridge_lines[j])
      out.lines.push_back({l, LinkageKind::kBridge});
  }
  std::sort(out.nodes.begin(), out.nodes.end(),
            [](const auto& x, const auto& y) { return x.id < y.id; });
  std::sort(out.lines.begin(), out.lines.end(),
            [](const auto& x, const auto& y) {
              return x.line.pair() < y.line.pair();
            });
  return out;
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline constexpr std::array<std::string_view, 12> kIslandColors{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};
}  // namespace detail

/// Graphviz rendering: fill color per island, white bridging nodes, solid
/// lines for integration, dashed for disintegration, values as labels.
/// Defining lines are drawn bold.
inline std::string to_dot(const CoreLinkage& c,
                          const JournalRegistry& registry) {
  std::ostringstream os;
  os << "graph core_linkage {\n"
     << "  node [shape=ellipse, style=filled, fontsize=10];\n";
  for (const auto& n : c.nodes) {
    os << "  " << detail::dot_quote(registry.name(n.id)) << " [";
    if (n.island) {
      os << "fillcolor=\""
         << detail::kIslandColors[*n.island % detail::kIslandColors.size()]
         << "\", island=" << *n.island;
    } else {
      os << "fillcolor=\"white\"";
    }
    os << "];\n";
  }
  for (const auto& l : c.lines) {
    os << "  " << detail::dot_quote(registry.name(l.line.u)) << " -- "
       << detail::dot_quote(registry.name(l.line.v)) << " [label=\""
       << text::format_double(l.line.value) << "\", style="
       << (l.line.value >= 0 ? "solid" : "dashed");
    if (l.kind == LinkageKind::kDefining) os << ", penwidth=3";
    os << ", kind=\"" << to_string(l.kind) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace triadic
