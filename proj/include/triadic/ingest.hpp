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

// Edge-list and alias readers, journal-name canonicalization, and the Pajek
// subset used for exchange with external network viewers.

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "triadic/model.hpp"
#include "triadic/text.hpp"

namespace triadic {

/// Reads a headerless `cited<TAB>citing<TAB>count` file. Names are
/// registered in `registry` in first-seen order; repeated rows accumulate.
inline YearNetwork parse_edge_file(std::istream& in, int year,
                                   JournalRegistry& registry) {
  struct Row {
    JournalId cited, citing;
    Weight count;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t lineno = 0;
  while (text::read_line(in, line)) {
    ++lineno;
    if (text::is_skippable(line)) continue;
    const auto fields = text::split(line);
    if (fields.size() != 3)
      throw ParseError(lineno, "expected 3 tab-separated fields, got " +
                                   std::to_string(fields.size()));
    const auto count = text::parse_uint(fields[2]);
    if (!count)
      throw ParseError(lineno, "non-integer count '" +
                                   std::string(trim(fields[2])) + "'");
    if (*count < 1) throw ParseError(lineno, "count must be positive");
    if (trim(fields[0]).empty() || trim(fields[1]).empty())
      throw ParseError(lineno, "empty journal name");
    rows.push_back({registry.register_journal(fields[0]),
                    registry.register_journal(fields[1]), *count});
  }
  YearNetwork net(year, registry.size());
  net.reserve(rows.size());
  for (const auto& r : rows) net.add_citation(r.cited, r.citing, r.count);
  return net;
}

/// Loads one edge file per year into a shared registry.
inline TemporalDataset load_dataset(
    const std::vector<std::pair<int, std::filesystem::path>>& files) {
  TemporalDataset d;
  auto sorted = files;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [year, path] : sorted) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge file " + path.string());
    try {
      auto net = parse_edge_file(in, year, d.registry);
      if (!d.years.empty() && d.years.back().year() >= year)
        throw Error("duplicate year " + std::to_string(year));
      d.years.push_back(std::move(net));
    } catch (const ParseError& e) {
      throw Error(path.string() + ": " + e.what());
    }
  }
  d.sync_node_counts();
  return d;
}

/// Old journal name -> newest name, with chains already collapsed.
class AliasMap {
 public:
  AliasMap() = default;

  /// Resolves chains; throws on cycles.
  explicit AliasMap(std::map<std::string, std::string> direct) {
    for (const auto& [from, to] : direct) {
      std::string cur = from;
      std::set<std::string> seen{cur};
      for (auto it = direct.find(cur); it != direct.end();
           it = direct.find(cur)) {
        cur = it->second;
        if (!seen.insert(cur).second)
          throw Error("alias cycle involving '" + from + "'");
      }
      resolved_.emplace(from, cur);
    }
  }

  /// Final name for `name`; unaliased names map to themselves.
  std::string resolve(std::string_view name) const {
    const std::string key(trim(name));
    auto it = resolved_.find(key);
    return it == resolved_.end() ? key : it->second;
  }

  const std::map<std::string, std::string>& entries() const noexcept {
    return resolved_;
  }
  bool empty() const noexcept { return resolved_.empty(); }
  std::size_t size() const noexcept { return resolved_.size(); }

 private:
  std::map<std::string, std::string> resolved_;
};

/// Reads `old<TAB>new` lines. A name listed twice with different targets
/// (a split) is rejected.
inline AliasMap parse_alias_map(std::istream& in) {
  std::map<std::string, std::string> direct;
  std::string line;
  std::size_t lineno = 0;
  while (text::read_line(in, line)) {
    ++lineno;
    if (text::is_skippable(line)) continue;
    const auto fields = text::split(line);
    if (fields.size() != 2)
      throw ParseError(lineno, "expected 2 tab-separated fields, got " +
                                   std::to_string(fields.size()));
    std::string from(trim(fields[0])), to(trim(fields[1]));
    if (from.empty() || to.empty())
      throw ParseError(lineno, "empty journal name");
    if (from == to)
      throw ParseError(lineno, "alias cycle: '" + from + "' maps to itself");
    auto [it, inserted] = direct.emplace(from, to);
    if (!inserted && it->second != to)
      throw ParseError(lineno, "'" + from + "' has conflicting targets '" +
                                   it->second + "' and '" + to + "'");
  }
  try {
    return AliasMap(std::move(direct));
  } catch (const Error& e) {
    throw ParseError(lineno, e.what());
  }
}

/// Rebuilds the dataset on canonical names. Arcs whose endpoints merge are
/// summed; a pair merged into one journal becomes a loop.
inline TemporalDataset canonicalize(const TemporalDataset& dataset,
                                    const AliasMap& aliases) {
  TemporalDataset out;
  std::vector<JournalId> remap;
  remap.reserve(dataset.registry.size());
  for (const auto& name : dataset.registry.names())
    remap.push_back(out.registry.register_journal(aliases.resolve(name)));
  for (const auto& y : dataset.years) {
    YearNetwork net(y.year(), out.registry.size());
    net.reserve(y.arc_count());
    for (const auto& a : y.sorted_arcs())
      net.add_citation(remap[to_index(a.cited)], remap[to_index(a.citing)],
                       a.weight);
    out.years.push_back(std::move(net));
  }
  return out;
}

namespace detail {
inline std::string pajek_label(const std::string& name) {
  std::string s = name;
  for (auto& c : s)
    if (c == '"') c = '\'';
  return "\"" + s + "\"";
}

inline void write_pajek_vertices(std::ostream& os,
                                 const JournalRegistry& registry) {
  os << "*Vertices " << registry.size() << '\n';
  for (std::size_t i = 0; i < registry.size(); ++i)
    os << i + 1 << ' ' << pajek_label(registry.names()[i]) << '\n';
}
}  // namespace detail

/// Directed form: one `*Arcs` line `cited citing weight` per arc.
inline std::string write_pajek(const YearNetwork& net,
                               const JournalRegistry& registry) {
  std::ostringstream os;
  detail::write_pajek_vertices(os, registry);
  os << "*Arcs\n";
  for (const auto& a : net.sorted_arcs())
    os << to_index(a.cited) + 1 << ' ' << to_index(a.citing) + 1 << ' '
       << a.weight << '\n';
  return os.str();
}

/// Undirected form: one `*Edges` line `u v value` per line.
inline std::string write_pajek(const ValuedGraph& g,
                               const JournalRegistry& registry) {
  std::ostringstream os;
  detail::write_pajek_vertices(os, registry);
  os << "*Edges\n";
  for (const auto& l : g.sorted_lines())
    os << to_index(l.u) + 1 << ' ' << to_index(l.v) + 1 << ' '
       << text::format_double(l.value) << '\n';
  return os.str();
}

struct PajekGraph {
  JournalRegistry registry;
  std::variant<YearNetwork, ValuedGraph> graph;

  bool is_directed() const { return graph.index() == 0; }
};

/// Parses the subset emitted by write_pajek. A directed file becomes a
/// YearNetwork labelled `year`.
inline PajekGraph parse_pajek(std::istream& in, int year = 0) {
  PajekGraph out;
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() {
    while (text::read_line(in, line)) {
      ++lineno;
      if (!trim(line).empty()) return true;
    }
    return false;
  };
  if (!next()) throw ParseError(lineno, "missing *Vertices header");
  std::istringstream header{std::string(trim(line))};
  std::string tag;
  std::size_t n = 0;
  if (!(header >> tag >> n) || tag != "*Vertices")
    throw ParseError(lineno, "expected '*Vertices n'");
  for (std::size_t i = 1; i <= n; ++i) {
    if (!next()) throw ParseError(lineno, "truncated vertex list");
    const auto t = trim(line);
    const auto sp = t.find(' ');
    if (sp == std::string_view::npos)
      throw ParseError(lineno, "malformed vertex line");
    const auto num = text::parse_uint(t.substr(0, sp));
    if (!num || *num != i)
      throw ParseError(lineno, "vertex numbers must be 1.." + std::to_string(n));
    auto label = trim(t.substr(sp + 1));
    if (label.size() < 2 || label.front() != '"' || label.back() != '"')
      throw ParseError(lineno, "vertex label must be double-quoted");
    label = label.substr(1, label.size() - 2);
    const auto before = out.registry.size();
    out.registry.register_journal(label);
    if (out.registry.size() == before)
      throw ParseError(lineno, "duplicate vertex label");
  }
  if (!next()) throw ParseError(lineno, "missing *Arcs or *Edges section");
  const auto section = trim(line);
  const bool directed = section == "*Arcs";
  if (!directed && section != "*Edges")
    throw ParseError(lineno, "expected *Arcs or *Edges");

  YearNetwork net(year, n);
  ValuedGraph g{n, {}};
  std::set<JournalPair> seen;
  while (next()) {
    const auto fields = text::split(trim(line), ' ');
    if (fields.size() != 3) throw ParseError(lineno, "expected 'u v value'");
    const auto u = text::parse_uint(fields[0]);
    const auto v = text::parse_uint(fields[1]);
    if (!u || !v || *u < 1 || *v < 1 || *u > n || *v > n)
      throw ParseError(lineno, "vertex number out of range");
    const auto ju = journal_id(*u - 1), jv = journal_id(*v - 1);
    if (directed) {
      const auto w = text::parse_uint(fields[2]);
      if (!w || *w < 1) throw ParseError(lineno, "arc weight must be positive");
      net.add_citation(ju, jv, *w);
    } else {
      const auto val = text::parse_double(fields[2]);
      if (!val) throw ParseError(lineno, "malformed line value");
      if (ju == jv) throw ParseError(lineno, "loops are not allowed in *Edges");
      if (!seen.insert(JournalPair(ju, jv)).second)
        throw ParseError(lineno, "duplicate edge");
      g.lines.push_back({ju, jv, *val});
    }
  }
  if (directed)
    out.graph = std::move(net);
  else
    out.graph = std::move(g);
  return out;
}

}  // namespace triadic
