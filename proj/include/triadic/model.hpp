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

// Core data structures shared by every stage: the journal registry, the
// yearly citation digraphs and the undirected valued graphs that the later
// stages produce.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace triadic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Dense journal index, assigned from 0 in first-seen order.
enum class JournalId : std::uint32_t {};

constexpr std::uint32_t to_index(JournalId id) noexcept {
  return static_cast<std::uint32_t>(id);
}
constexpr JournalId journal_id(std::size_t index) noexcept {
  return static_cast<JournalId>(static_cast<std::uint32_t>(index));
}

/// Citation count carried by an arc.
using Weight = std::uint64_t;

/// Unordered journal pair, stored with the smaller id first.
struct JournalPair {
  JournalId a{};
  JournalId b{};

  JournalPair() = default;
  JournalPair(JournalId x, JournalId y)
      : a(std::min(x, y)), b(std::max(x, y)) {}

  bool contains(JournalId j) const noexcept { return a == j || b == j; }
  JournalId other(JournalId j) const noexcept { return j == a ? b : a; }

  friend auto operator<=>(const JournalPair&, const JournalPair&) = default;
};

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

class JournalRegistry {
 public:
  /// Returns the id of `name` (trimmed), appending it when unseen.
  JournalId register_journal(std::string_view name) {
    const std::string key(trim(name));
    if (key.empty()) throw Error("journal name is empty");
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    const JournalId id = journal_id(names_.size());
    names_.push_back(key);
    index_.emplace(key, id);
    return id;
  }

  std::optional<JournalId> find(std::string_view name) const {
    auto it = index_.find(std::string(trim(name)));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(JournalId id) const {
    check(id);
    return names_[to_index(id)];
  }

  void check(JournalId id) const {
    if (to_index(id) >= names_.size())
      throw Error("journal id " + std::to_string(to_index(id)) +
                  " is not registered");
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const JournalRegistry& x, const JournalRegistry& y) {
    return x.names_ == y.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, JournalId> index_;
};

struct Arc {
  JournalId cited{};
  JournalId citing{};
  Weight weight = 0;

  bool is_loop() const noexcept { return cited == citing; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// One year's citation digraph. Arcs point from the cited journal to the
/// citing journal; loops (self-citation) are stored like any other arc.
class YearNetwork {
 public:
  YearNetwork() = default;
  YearNetwork(int year, std::size_t node_count)
      : year_(year), node_count_(node_count) {}

  int year() const noexcept { return year_; }
  std::size_t node_count() const noexcept { return node_count_; }

  /// Grows the id range; existing arcs are unaffected.
  void resize(std::size_t node_count) {
    if (node_count < node_count_) throw Error("cannot shrink a year network");
    node_count_ = node_count;
  }

  void add_citation(JournalId cited, JournalId citing, Weight count) {
    check(cited);
    check(citing);
    if (count < 1) throw Error("citation count must be positive");
    auto& w = arcs_[key(cited, citing)];
    if (w > std::numeric_limits<Weight>::max() - count)
      throw Error("citation count overflow");
    w += count;
    total_ += count;
  }

  Weight arc_weight(JournalId cited, JournalId citing) const {
    check(cited);
    check(citing);
    auto it = arcs_.find(key(cited, citing));
    return it == arcs_.end() ? 0 : it->second;
  }

  bool has_arc(JournalId cited, JournalId citing) const {
    return arc_weight(cited, citing) > 0;
  }

  std::size_t arc_count() const noexcept { return arcs_.size(); }
  Weight total_weight() const noexcept { return total_; }

  std::size_t loop_count() const {
    std::size_t n = 0;
    for (const auto& [k, w] : arcs_)
      if ((k >> 32) == (k & 0xffffffffu)) ++n;
    return n;
  }

  /// Visits every arc in unspecified order.
  template <typename Fn>
  void for_each_arc(Fn&& fn) const {
    for (const auto& [k, w] : arcs_)
      fn(Arc{journal_id(k >> 32), journal_id(k & 0xffffffffu), w});
  }

  /// All arcs ordered by (cited, citing) id.
  std::vector<Arc> sorted_arcs() const {
    std::vector<Arc> out;
    out.reserve(arcs_.size());
    for_each_arc([&](const Arc& a) { out.push_back(a); });
    std::sort(out.begin(), out.end());
    return out;
  }

  void reserve(std::size_t arcs) { arcs_.reserve(arcs); }

  friend bool operator==(const YearNetwork& x, const YearNetwork& y) {
    return x.year_ == y.year_ && x.node_count_ == y.node_count_ &&
           x.arcs_ == y.arcs_;
  }

 private:
  static std::uint64_t key(JournalId cited, JournalId citing) noexcept {
    return (std::uint64_t{to_index(cited)} << 32) | to_index(citing);
  }
  void check(JournalId id) const {
    if (to_index(id) >= node_count_)
      throw Error("journal id " + std::to_string(to_index(id)) +
                  " out of range for year " + std::to_string(year_));
  }

  int year_ = 0;
  std::size_t node_count_ = 0;
  Weight total_ = 0;
  std::unordered_map<std::uint64_t, Weight> arcs_;
};

/// A registry plus its yearly networks in ascending year order.
struct TemporalDataset {
  JournalRegistry registry;
  std::vector<YearNetwork> years;

  /// Appends an empty network for `year`, which must exceed every year
  /// already present.
  YearNetwork& add_year(int year) {
    if (!years.empty() && years.back().year() >= year)
      throw Error("years must be strictly ascending (got " +
                  std::to_string(year) + " after " +
                  std::to_string(years.back().year()) + ")");
    years.emplace_back(year, registry.size());
    return years.back();
  }

  /// Brings every network's id range up to the registry size.
  void sync_node_counts() {
    for (auto& y : years) y.resize(registry.size());
  }

  const YearNetwork* find_year(int year) const {
    for (const auto& y : years)
      if (y.year() == year) return &y;
    return nullptr;
  }

  void validate() const {
    for (std::size_t i = 0; i < years.size(); ++i) {
      if (years[i].node_count() != registry.size())
        throw Error("year " + std::to_string(years[i].year()) +
                    " does not match the registry size");
      if (i > 0 && years[i - 1].year() >= years[i].year())
        throw Error("years must be strictly ascending");
    }
  }

  std::vector<int> year_labels() const {
    std::vector<int> out;
    for (const auto& y : years) out.push_back(y.year());
    return out;
  }

  friend bool operator==(const TemporalDataset&,
                         const TemporalDataset&) = default;
};

struct Line {
  JournalId u{};
  JournalId v{};
  double value = 0.0;

  JournalPair pair() const { return {u, v}; }
  friend bool operator==(const Line&, const Line&) = default;
};

/// Undirected graph with a real value per line. At most one line per pair,
/// no loops.
struct ValuedGraph {
  std::size_t node_count = 0;
  std::vector<Line> lines;

  /// Lines normalized (u < v) and ordered by pair.
  std::vector<Line> sorted_lines() const {
    std::vector<Line> out = lines;
    for (auto& l : out)
      if (l.v < l.u) std::swap(l.u, l.v);
    std::sort(out.begin(), out.end(), [](const Line& x, const Line& y) {
      return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    return out;
  }

  friend bool operator==(const ValuedGraph& x, const ValuedGraph& y) {
    return x.node_count == y.node_count && x.sorted_lines() == y.sorted_lines();
  }
};

}  // namespace triadic
