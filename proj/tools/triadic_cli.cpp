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

// triadic: command-line front end for the citation-triad pipeline.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "triadic.hpp"

namespace fs = std::filesystem;
using namespace triadic;

namespace {

struct GlobalOptions {
  std::optional<fs::path> out;
  unsigned workers = 0;
  std::vector<std::string> formats;

  bool wants(ExportFormat f) const {
    for (const auto& s : formats)
      if (parse_export_format(s) == f) return true;
    return false;
  }
};

/// "YEAR=PATH", or a path whose file name carries the year as its last
/// number (edges_2012.tsv).
std::pair<int, fs::path> parse_year_file(const std::string& spec) {
  if (auto eq = spec.find('='); eq != std::string::npos) {
    const auto y = text::parse_int(spec.substr(0, eq));
    if (y) return {static_cast<int>(*y), spec.substr(eq + 1)};
  }
  const std::string stem = fs::path(spec).stem().string();
  static const std::regex last_number(R"((\d+)(?!.*\d))");
  std::smatch m;
  if (!std::regex_search(stem, m, last_number))
    throw Error("cannot infer the year of '" + spec + "'; use YEAR=PATH");
  return {std::stoi(m[1].str()), spec};
}

std::vector<std::pair<int, fs::path>> parse_year_files(
    const std::vector<std::string>& specs) {
  std::vector<std::pair<int, fs::path>> out;
  for (const auto& s : specs) out.push_back(parse_year_file(s));
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first)
      throw Error("year " + std::to_string(out[i].first) + " given twice");
  return out;
}

class Emitter {
 public:
  explicit Emitter(const GlobalOptions& g) : out_(g.out) {}

  void emit(const std::string& name, const std::string& content) {
    if (out_) {
      write_file_atomic(*out_ / name, content);
    } else {
      if (emitted_++ > 0) std::cout << "\n# " << name << '\n';
      std::cout << content;
    }
  }

  template <typename Fn>
  void emit_with(const std::string& name, Fn&& fill) {
    std::ostringstream os;
    fill(os);
    emit(name, os.str());
  }

 private:
  std::optional<fs::path> out_;
  int emitted_ = 0;
};

TemporalDataset load(const std::vector<std::string>& edges,
                     const std::optional<std::string>& aliases) {
  auto d = load_dataset(parse_year_files(edges));
  if (aliases) {
    std::ifstream in(*aliases);
    if (!in) throw Error("cannot open alias file " + *aliases);
    d = canonicalize(d, parse_alias_map(in));
  }
  return d;
}

JournalId lookup(const JournalRegistry& r, const std::string& name) {
  const auto id = r.find(name);
  if (!id) throw Error("unknown journal '" + name + "'");
  return *id;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integration and disintegration hot-spots in temporal citation networks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  std::string out_dir;
  app.add_option("--out", out_dir, "Output directory (default: stdout where possible)");
  app.add_option("--workers", global.workers, "Worker threads for triad counting (0 = all cores)");
  app.add_option("--format", global.formats, "Export formats: tsv, pajek, dot")
      ->check(CLI::IsMember({"tsv", "pajek", "dot"}));

  std::vector<std::string> edges;
  std::optional<std::string> aliases;
  auto add_edges = [&](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("--edges,edges", edges,
                              "Edge files, YEAR=PATH or PATH with the year in its name");
    if (required) o->required();
    cmd->add_option("--aliases", aliases, "Alias file old<TAB>new");
  };

  auto* ingest = app.add_subcommand("ingest", "Canonicalize edge files");
  add_edges(ingest, true);

  auto* stats = app.add_subcommand("stats", "Per-year network statistics");
  add_edges(stats, true);

  auto* overlap = app.add_subcommand("overlap", "Three-year link overlap");
  add_edges(overlap, true);

  auto* triads = app.add_subcommand("triads", "Shared-neighbor count per reciprocal pair");
  add_edges(triads, true);

  std::vector<std::string> triad_files;
  bool monotonic_only = false, weak = false;
  auto* change = app.add_subcommand("change", "Monotonic-change network");
  add_edges(change, false);
  change->add_option("--triads", triad_files, "Triad TSV files (YEAR=PATH) instead of edge files");
  change->add_flag("--monotonic-only", monotonic_only, "Keep monotonic records only");
  change->add_flag("--weak", weak, "Accept ties inside a monotonic trend");

  std::optional<std::string> change_file;
  std::size_t smin = 2, min_contacts = 2;
  std::optional<std::size_t> smax;
  bool keep_negative = false;
  auto* islands = app.add_subcommand("islands", "Line islands of the monotonic-change network");
  add_edges(islands, false);
  islands->add_option("--change", change_file, "Change-network TSV (instead of edge files)");
  islands->add_option("--smin", smin, "Minimum island size")->capture_default_str();
  islands->add_option("--smax", smax, "Maximum island size (default: unbounded)");
  islands->add_option("--min-contacts", min_contacts,
                      "Island members a bridging journal must touch")->capture_default_str();
  islands->add_flag("--keep-negative", keep_negative, "Keep islands with non-positive height");
  islands->add_flag("--weak", weak, "Accept ties inside a monotonic trend");

  std::string pair_spec;
  std::optional<int> year;
  Weight min_weight = 1;
  bool dot = false;
  std::optional<std::string> island_filter;
  auto* attribute = app.add_subcommand("attribute", "Arcs that created newly shared neighbors");
  add_edges(attribute, true);
  attribute->add_option("--pair", pair_spec, "Journal pair A,B")->required();
  attribute->add_option("--year", year, "Year (default: every year with a predecessor)");
  attribute->add_option("--min-weight", min_weight, "Citations needed for an arc to count")
      ->capture_default_str();
  attribute->add_flag("--dot", dot, "Emit a Graphviz view instead of TSV");
  attribute->add_option("--islands", island_filter,
                        "Islands TSV; keep only neighbors that are island members");

  oracle::GenSpec gen_spec{100, 0.05, 0.5, 1};
  int gen_years = 3, first_year = 2011;
  auto* gen = app.add_subcommand("gen", "Generate random edge files");
  gen->add_option("--nodes", gen_spec.n, "Number of journals")->capture_default_str();
  gen->add_option("--p-arc", gen_spec.p_arc, "Probability a pair is linked")->capture_default_str();
  gen->add_option("--p-recip", gen_spec.p_recip, "Probability a link is reciprocated")->capture_default_str();
  gen->add_option("--seed", gen_spec.seed, "Random seed")->capture_default_str();
  gen->add_option("--years", gen_years, "Independent yearly networks")->capture_default_str();
  gen->add_option("--first-year", first_year, "Label of the first year")->capture_default_str();

  auto* pipeline = app.add_subcommand("pipeline", "Run every stage and write a report bundle");
  add_edges(pipeline, true);
  pipeline->add_option("--smin", smin, "Minimum island size")->capture_default_str();
  pipeline->add_option("--smax", smax, "Maximum island size (default: unbounded)");
  pipeline->add_option("--min-contacts", min_contacts, "Island members a bridging journal must touch")->capture_default_str();
  pipeline->add_option("--min-weight", min_weight, "Citations needed for an arc to count")->capture_default_str();
  pipeline->add_flag("--weak", weak, "Accept ties inside a monotonic trend");

  CLI11_PARSE(app, argc, argv);
  if (!out_dir.empty()) global.out = out_dir;
  const auto mode = weak ? Monotonicity::kWeak : Monotonicity::kStrict;

  std::string stage = app.get_subcommands().front()->get_name();
  try {
    Emitter out(global);

    if (*ingest) {
      const auto d = load(edges, aliases);
      out.emit_with("dataset.tsv", [&](auto& os) { tsv::write_dataset_summary(os, d); });
      for (const auto& y : d.years) {
        const auto stem = "edges_" + std::to_string(y.year());
        if (global.wants(ExportFormat::kPajek))
          out.emit(stem + ".net", write_pajek(y, d.registry));
        else
          out.emit_with(stem + ".tsv", [&](auto& os) { tsv::write_edge_file(os, y, d.registry); });
      }
    } else if (*stats) {
      const auto d = load(edges, aliases);
      std::vector<YearStats> s;
      for (const auto& y : d.years) s.push_back(year_stats(y, d.registry));
      out.emit_with("stats.tsv", [&](auto& os) { tsv::write_stats(os, s); });
    } else if (*overlap) {
      const auto d = load(edges, aliases);
      if (d.years.size() != 3) throw Error("overlap needs exactly 3 edge files");
      const auto labels = d.year_labels();
      out.emit_with("overlap.tsv", [&](auto& os) {
        tsv::write_overlap(os, link_overlap(d.years[0], d.years[1], d.years[2]), labels);
      });
    } else if (*triads) {
      const auto d = load(edges, aliases);
      for (const auto& y : d.years) {
        const auto t = shared_neighbor_counts(reciprocal_graph(y), global.workers);
        triangle_total(t);
        const auto stem = "triads_" + std::to_string(y.year());
        if (global.wants(ExportFormat::kPajek)) {
          ValuedGraph g{t.node_count, {}};
          for (const auto& e : t.edges)
            g.lines.push_back({e.pair.a, e.pair.b, static_cast<double>(e.count)});
          out.emit(stem + ".net", write_pajek(g, d.registry));
        } else {
          out.emit_with(stem + ".tsv", [&](auto& os) { tsv::write_triads(os, t, d.registry); });
        }
      }
    } else if (*change) {
      JournalRegistry registry;
      ChangeNetwork cn;
      if (!triad_files.empty()) {
        std::vector<TriadCountGraph> yearly;
        for (const auto& [y, path] : parse_year_files(triad_files)) {
          std::ifstream in(path);
          if (!in) throw Error("cannot open " + path.string());
          yearly.push_back(tsv::read_triads(in, y, registry));
        }
        for (auto& t : yearly) t.node_count = registry.size();
        cn = change_network(yearly, mode);
      } else if (!edges.empty()) {
        auto d = load(edges, aliases);
        cn = change_network(d, mode, global.workers);
        registry = std::move(d.registry);
      } else {
        throw Error("change needs --edges or --triads");
      }
      const auto summary = change_summary(cn.records);
      if (monotonic_only) cn = monotonic_filter(cn);
      out.emit_with("change.tsv", [&](auto& os) { tsv::write_change(os, cn, registry); });
      out.emit_with("change_summary.tsv",
                    [&](auto& os) { tsv::write_change_summary(os, summary); });
    } else if (*islands) {
      JournalRegistry registry;
      ChangeNetwork cn;
      if (change_file) {
        std::ifstream in(*change_file);
        if (!in) throw Error("cannot open " + *change_file);
        cn = tsv::read_change(in, registry);
      } else if (!edges.empty()) {
        auto d = load(edges, aliases);
        cn = change_network(d, mode, global.workers);
        registry = std::move(d.registry);
      } else {
        throw Error("islands needs --edges or --change");
      }
      const auto mono = monotonic_filter(cn);
      auto s = line_islands(to_valued_graph(mono), smin, smax);
      tsv::sort_islands_by_name(s, registry);
      if (!keep_negative) s = filter_positive(s);
      out.emit_with("islands.tsv", [&](auto& os) { tsv::write_islands(os, s, registry); });
      out.emit_with("island_lines.tsv",
                    [&](auto& os) { tsv::write_island_lines(os, s, registry); });
      if (global.wants(ExportFormat::kDot))
        out.emit("core_linkage.dot", to_dot(core_linkage(mono, s, min_contacts), registry));
    } else if (*attribute) {
      const auto d = load(edges, aliases);
      const auto comma = pair_spec.find(',');
      if (comma == std::string::npos) throw Error("--pair expects A,B");
      const JournalPair pair(lookup(d.registry, pair_spec.substr(0, comma)),
                             lookup(d.registry, pair_spec.substr(comma + 1)));
      const TriadAttributor attributor(d, min_weight);
      auto events = year ? attributor.triad_events(pair, *year)
                         : attributor.all_triad_events(pair);
      if (island_filter) {
        std::ifstream in(*island_filter);
        if (!in) throw Error("cannot open " + *island_filter);
        JournalRegistry r = d.registry;
        const auto s = tsv::read_islands(in, r);
        std::set<std::string> members;
        for (const auto& is : s.islands)
          for (auto m : is.members) members.insert(r.name(m));
        std::erase_if(events, [&](const TriadEvent& ev) {
          return !members.contains(d.registry.name(ev.neighbor));
        });
      }
      if (dot) {
        out.emit("attribution.dot", attribution_dot(events, pair, d.registry));
      } else {
        out.emit_with("attribution.tsv", [&](auto& os) {
          write_attribution_tsv(os, events, d.registry);
          write_attribution_summary(os, attribution_summary(events), pair, d.registry);
        });
      }
    } else if (*gen) {
      const auto d = oracle::random_dataset(gen_spec, gen_years, first_year);
      for (const auto& y : d.years)
        out.emit_with("edges_" + std::to_string(y.year()) + ".tsv",
                      [&](auto& os) { tsv::write_edge_file(os, y, d.registry); });
    } else if (*pipeline) {
      PipelineConfig cfg;
      cfg.edge_files = parse_year_files(edges);
      if (aliases) cfg.alias_file = *aliases;
      cfg.out_dir = global.out.value_or("out");
      cfg.smin = smin;
      cfg.smax = smax;
      cfg.monotonicity = mode;
      cfg.workers = global.workers;
      cfg.min_contacts = min_contacts;
      cfg.min_weight = min_weight;
      if (!global.formats.empty()) {
        cfg.formats.clear();
        for (const auto& f : global.formats) cfg.formats.insert(parse_export_format(f));
      }
      const auto report = run_pipeline(cfg);
      std::cerr << "wrote " << report.files.size() << " files to " << cfg.out_dir.string()
                << "; islands: " << report.islands_found << " found, "
                << report.islands_positive << " positive\n";
    }
  } catch (const StageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.stage() == "config" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << stage << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}
