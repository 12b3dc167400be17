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

// Small worked-example fixtures shared by unit and acceptance tests.

#include <string>

#include "triadic/model.hpp"

namespace triadic::testing {

/// Six journals: J1 and J2 reciprocal with each other and with J3..J5,
/// J2 reciprocal with J6, and a single arc J1 -> J6.
inline TemporalDataset six_journal_dataset() {
  TemporalDataset d;
  for (int i = 1; i <= 6; ++i)
    d.registry.register_journal("J" + std::to_string(i));
  auto& y = d.add_year(2011);
  auto id = [&](int i) { return *d.registry.find("J" + std::to_string(i)); };
  auto both = [&](int i, int j) {
    y.add_citation(id(i), id(j), 1);
    y.add_citation(id(j), id(i), 1);
  };
  for (int j : {2, 3, 4, 5}) both(1, j);
  for (int j : {3, 4, 5, 6}) both(2, j);
  y.add_citation(id(1), id(6), 1);
  return d;
}

/// Ten journals J1..J10 (ids 0..9) with line values chosen so that, for
/// sizes 2..3, the islands are {J1,J2} at 2, {J4,J8} at 2 and {J7,J9,J10}
/// at 3, the last one containing a value-1 line J7-J9.
inline constexpr std::size_t kTenJournalMaxSize = 3;

inline ValuedGraph ten_journal_graph() {
  auto j = [](int k) { return journal_id(static_cast<std::size_t>(k - 1)); };
  ValuedGraph g{10, {}};
  auto line = [&](int a, int b, double v) { g.lines.push_back({j(a), j(b), v}); };
  line(1, 2, 2.0);
  line(1, 3, 1.0);
  line(2, 5, 1.0);
  line(3, 4, 1.0);
  line(4, 8, 2.0);
  line(8, 6, 1.0);
  line(5, 7, 2.0);
  line(7, 10, 3.0);
  line(9, 10, 3.0);
  line(7, 9, 1.0);
  line(6, 9, 0.5);
  return g;
}

inline JournalRegistry ten_journal_registry() {
  JournalRegistry r;
  for (int k = 1; k <= 10; ++k) r.register_journal("J" + std::to_string(k));
  return r;
}

}  // namespace triadic::testing
