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

// End-to-end run: ingest, statistics, triad counts, change network,
// islands, core linkage and attribution reports, written to one directory.

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "triadic/attribution.hpp"
#include "triadic/dynamics.hpp"
#include "triadic/ingest.hpp"
#include "triadic/islands.hpp"
#include "triadic/metrics.hpp"
#include "triadic/triads.hpp"
#include "triadic/tsv.hpp"

namespace triadic {

enum class ExportFormat { kTsv, kPajek, kDot };

inline ExportFormat parse_export_format(std::string_view s) {
  if (s == "tsv") return ExportFormat::kTsv;
  if (s == "pajek") return ExportFormat::kPajek;
  if (s == "dot") return ExportFormat::kDot;
  throw Error("unknown format '" + std::string(s) + "' (tsv|pajek|dot)");
}

struct PipelineConfig {
  std::vector<std::pair<int, std::filesystem::path>> edge_files;
  std::optional<std::filesystem::path> alias_file;
  std::filesystem::path out_dir = "out";
  std::size_t smin = 2;
  std::optional<std::size_t> smax;
  Monotonicity monotonicity = Monotonicity::kStrict;
  unsigned workers = 0;
  std::set<ExportFormat> formats{ExportFormat::kTsv, ExportFormat::kDot};
  std::size_t min_contacts = 2;
  Weight min_weight = 1;
};

class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& cause)
      : Error(stage + ": " + cause), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

struct PipelineReport {
  std::vector<std::filesystem::path> files;  // in write order
  ChangeSummary change;
  std::size_t islands_found = 0;
  std::size_t islands_positive = 0;
};

/// Writes `content` to `path` through a temporary file and a rename.
inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot write " + tmp.string());
    os << content;
    os.flush();
    if (!os) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace detail {

class BundleWriter {
 public:
  BundleWriter(std::filesystem::path dir, PipelineReport& report)
      : dir_(std::move(dir)), report_(report) {}

  void write(const std::filesystem::path& rel,
             const std::function<void(std::ostream&)>& fill) {
    std::ostringstream os;
    fill(os);
    write_file_atomic(dir_ / rel, os.str());
    report_.files.push_back(rel);
  }

 private:
  std::filesystem::path dir_;
  PipelineReport& report_;
};

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

}  // namespace detail

/// Runs every stage on an already loaded dataset.
inline PipelineReport run_pipeline(TemporalDataset dataset,
                                   const PipelineConfig& config) {
  if (dataset.years.size() < 3)
    throw StageError("config", "the pipeline needs at least 3 years of edge "
                               "files, got " +
                                   std::to_string(dataset.years.size()));
  PipelineReport report;
  detail::BundleWriter out(config.out_dir, report);
  const bool pajek = config.formats.contains(ExportFormat::kPajek);
  const bool dot = config.formats.contains(ExportFormat::kDot);

  detail::stage("canonicalize", [&] {
    if (config.alias_file) {
      std::ifstream in(*config.alias_file);
      if (!in) throw Error("cannot open " + config.alias_file->string());
      dataset = canonicalize(dataset, parse_alias_map(in));
    }
    dataset.validate();
    const auto& reg = dataset.registry;
    out.write("dataset.tsv",
              [&](std::ostream& os) { tsv::write_dataset_summary(os, dataset); });
    out.write("journals.tsv", [&](std::ostream& os) {
      auto names = reg.names();
      std::sort(names.begin(), names.end());
      os << "journal\n";
      for (const auto& n : names) os << n << '\n';
    });
    if (pajek)
      for (const auto& y : dataset.years)
        out.write("network_" + std::to_string(y.year()) + ".net",
                  [&](std::ostream& os) { os << write_pajek(y, reg); });
  });
  const auto& registry = dataset.registry;

  detail::stage("stats", [&] {
    std::vector<YearStats> stats;
    for (const auto& y : dataset.years) stats.push_back(year_stats(y, registry));
    out.write("stats.tsv",
              [&](std::ostream& os) { tsv::write_stats(os, stats); });
    const auto n = dataset.years.size();
    const auto& y1 = dataset.years[n - 3];
    const auto& y2 = dataset.years[n - 2];
    const auto& y3 = dataset.years[n - 1];
    const std::vector<int> labels{y1.year(), y2.year(), y3.year()};
    out.write("overlap.tsv", [&](std::ostream& os) {
      tsv::write_overlap(os, link_overlap(y1, y2, y3), labels);
    });
  });

  const auto yearly = detail::stage("triads", [&] {
    auto counts = yearly_triad_counts(dataset, config.workers);
    for (const auto& t : counts) {
      triangle_total(t);
      const auto stem = "triads_" + std::to_string(t.year);
      out.write(stem + ".tsv",
                [&](std::ostream& os) { tsv::write_triads(os, t, registry); });
      if (pajek) {
        ValuedGraph g{t.node_count, {}};
        for (const auto& e : t.edges)
          g.lines.push_back({e.pair.a, e.pair.b, static_cast<double>(e.count)});
        out.write(stem + ".net",
                  [&](std::ostream& os) { os << write_pajek(g, registry); });
      }
    }
    return counts;
  });

  const auto monotonic = detail::stage("change", [&] {
    const auto cn = change_network(yearly, config.monotonicity);
    report.change = change_summary(cn.records);
    out.write("change.tsv",
              [&](std::ostream& os) { tsv::write_change(os, cn, registry); });
    out.write("change_summary.tsv", [&](std::ostream& os) {
      tsv::write_change_summary(os, report.change);
    });
    auto mono = monotonic_filter(cn);
    if (pajek)
      out.write("monotonic.net", [&](std::ostream& os) {
        os << write_pajek(to_valued_graph(mono), registry);
      });
    return mono;
  });

  const auto islands = detail::stage("islands", [&] {
    const auto g = to_valued_graph(monotonic);
    auto all = line_islands(g, config.smin, config.smax);
    tsv::sort_islands_by_name(all, registry);
    auto positive = filter_positive(all);
    report.islands_found = all.islands.size();
    report.islands_positive = positive.islands.size();
    out.write("islands_all.tsv",
              [&](std::ostream& os) { tsv::write_islands(os, all, registry); });
    out.write("islands.tsv", [&](std::ostream& os) {
      tsv::write_islands(os, positive, registry);
    });
    out.write("island_lines.tsv", [&](std::ostream& os) {
      tsv::write_island_lines(os, positive, registry);
    });
    return positive;
  });

  detail::stage("core-linkage", [&] {
    if (!dot) return;
    const auto linkage = core_linkage(monotonic, islands, config.min_contacts);
    out.write("core_linkage.dot",
              [&](std::ostream& os) { os << to_dot(linkage, registry); });
  });

  detail::stage("attribution", [&] {
    const TriadAttributor attributor(dataset, config.min_weight);
    for (std::size_t k = 0; k < islands.islands.size(); ++k) {
      const auto& is = islands.islands[k];
      const auto order = tsv::name_order(
          is.defining_lines.size(),
          [&](std::size_t i) { return is.defining_lines[i].pair(); }, registry);
      std::vector<std::pair<JournalPair, std::vector<TriadEvent>>> per_pair;
      for (auto i : order) {
        const auto pair = is.defining_lines[i].pair();
        per_pair.emplace_back(pair, attributor.all_triad_events(pair));
      }
      const auto stem = "attribution/island_" + std::to_string(k);
      out.write(stem + ".tsv", [&](std::ostream& os) {
        for (const auto& [pair, events] : per_pair) {
          const auto [a, b] = tsv::ordered_names(pair, registry);
          os << "# pair\t" << *a << '\t' << *b << '\n';
          write_attribution_tsv(os, events, registry);
          write_attribution_summary(os, attribution_summary(events), pair,
                                    registry);
        }
      });
      if (dot)
        for (std::size_t p = 0; p < per_pair.size(); ++p)
          out.write(stem + "_pair_" + std::to_string(p) + ".dot",
                    [&](std::ostream& os) {
                      os << attribution_dot(per_pair[p].second,
                                            per_pair[p].first, registry);
                    });
    }
  });
  return report;
}

/// Loads the configured edge files and runs every stage.
inline PipelineReport run_pipeline(const PipelineConfig& config) {
  if (config.edge_files.size() < 3)
    throw StageError("config", "the pipeline needs at least 3 years of edge "
                               "files, got " +
                                   std::to_string(config.edge_files.size()));
  auto dataset = detail::stage(
      "ingest", [&] { return load_dataset(config.edge_files); });
  return run_pipeline(std::move(dataset), config);
}

}  // namespace triadic
