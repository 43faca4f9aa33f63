// Copyright 2026 The AMR Narratives Authors.
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

#include "cli.h"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "narrative/corpus_io.h"
#include "narrative/corpus_stats.h"
#include "narrative/errors.h"
#include "narrative/report.h"
#include "narrative/triples.h"

namespace narrative {

namespace {

// Bad option values discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to the named file, or to the fallback stream when the name is
// empty or "-".
class Output {
 public:
  Output(const std::string &path, std::ostream &fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DataError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  ~Output() {
    if (file_) file_->close();
  }

  std::ostream &stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_ = nullptr;
};

void WriteFileOrThrow(const std::string &path, const std::string &contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write '" + path + "'");
  f << contents;
}

ElementKind RequireKind(const std::string &name) {
  auto kind = ParseKind(name);
  if (!kind) throw UsageError("unknown element kind '" + name + "'");
  return *kind;
}

struct PairOptions {
  std::string i = "conspiracy";
  std::string j = "mainstream";

  void Register(CLI::App *app) {
    app->add_option("--i", i, "Subcorpus scored positive")
        ->capture_default_str();
    app->add_option("--j", j, "Subcorpus scored negative")
        ->capture_default_str();
  }
  SubcorpusPair Get() const {
    if (i == j) throw UsageError("--i and --j must differ");
    return {i, j};
  }
};

int Mine(const std::string &input, const std::string &output,
         unsigned threads, std::ostream &out, std::ostream &err) {
  LoadCounters counters;
  const auto docs = LoadCorpus(input, &counters, &err);
  const auto records = MineCorpus(docs, threads);
  Output sink(output, out);
  WriteElements(sink.stream(), records);
  err << "mined " << records.size() << " elements from " << counters.documents
      << " documents (" << counters.graphs << " graphs, "
      << counters.skipped_graphs << " skipped)\n";
  return kExitOk;
}

std::string CountsArray(const Aggregator &agg) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const auto &[kind, c] : agg.Finish()) all.push_back(c.ToJson());
  return all.dump(2) + "\n";
}

int Stats(const std::string &input, bool is_corpus, bool as_json,
          const std::string &counts_path, const SubcorpusPair &pair,
          std::ostream &out, std::ostream &err) {
  CorpusStatsReport report;
  std::vector<ElementRecord> records;
  if (is_corpus) {
    const auto docs = LoadCorpus(input, nullptr, &err);
    report = StatsReport(docs);
    if (!counts_path.empty()) records = MineCorpus(docs);
  } else {
    records = LoadElements(input);
    report = StatsReport(std::span<const ElementRecord>(records));
  }
  if (!counts_path.empty()) {
    WriteFileOrThrow(counts_path, CountsArray(AggregateElements(records, pair)));
  }
  if (as_json) {
    out << report.ToJson().dump(2) << "\n";
  } else {
    out << report.ToText();
  }
  return kExitOk;
}

int Compare(const std::string &input, ElementKind kind, std::size_t top,
            const SubcorpusPair &pair, const std::string &output,
            const std::string &counts_path, std::ostream &out) {
  const auto records = LoadElements(input);
  const Aggregator agg = AggregateElements(records, pair);
  const ElementCounts &counts = agg.Finish().at(kind);
  if (!counts_path.empty()) {
    WriteFileOrThrow(counts_path, counts.ToJson().dump(2) + "\n");
  }
  const auto ranked = Rank(counts);
  Output sink(output, out);
  WriteRankingCsv(sink.stream(), ranked, top, pair);
  return kExitOk;
}

// Strongest argument on each side for one subcorpus. `sign` selects which
// subcorpus: +1 for i (positive z), -1 for j (negative z, shown as |z|).
std::optional<NarrativeTriple> StrongestTriple(
    const std::string &frame, const std::vector<ZScoredElement> &arg0,
    const std::vector<ZScoredElement> &arg1, int sign) {
  auto pick = [sign](const std::vector<ZScoredElement> &ranked)
      -> std::optional<ScoredArgument> {
    if (ranked.empty()) return std::nullopt;
    const ZScoredElement &e = sign > 0 ? ranked.front() : ranked.back();
    if (e.z * sign <= 0) return std::nullopt;
    return ScoredArgument{e.label, e.z * sign};
  };
  NarrativeTriple t{pick(arg0), frame, pick(arg1)};
  if (!t.arg0 && !t.arg1) return std::nullopt;
  return t;
}

int Triples(const std::string &input, const std::string &frame,
            const std::string &side_name, bool render,
            const SubcorpusPair &pair, const std::string &output,
            std::ostream &out, std::ostream &err) {
  std::vector<ArgSide> sides = {ArgSide::kArg0, ArgSide::kArg1};
  if (!side_name.empty()) {
    auto side = ParseArgSide(side_name);
    if (!side) throw UsageError("--side must be ARG0 or ARG1");
    sides = {*side};
  }
  const auto docs = LoadCorpus(input, nullptr, &err);
  PairCounts counts(pair);
  for (const Document &doc : docs) {
    for (const AmrGraph &g : doc.graphs) counts.Add(doc.subcorpus, g);
  }
  std::vector<std::pair<ArgSide, std::vector<ZScoredElement>>> scored;
  for (ArgSide side : sides) {
    scored.emplace_back(side, ScoreArguments(frame, side, counts));
  }
  Output sink(output, out);
  WriteTriplesCsv(sink.stream(), frame, scored);

  if (render) {
    std::vector<ZScoredElement> none;
    const auto &arg0 =
        sides.front() == ArgSide::kArg0 ? scored.front().second : none;
    const auto &arg1 =
        sides.back() == ArgSide::kArg1 ? scored.back().second : none;
    for (int sign : {+1, -1}) {
      const std::string &name = sign > 0 ? pair.i : pair.j;
      auto t = StrongestTriple(frame, arg0, arg1, sign);
      err << name << ": " << (t ? RenderTriple(*t) : "(none)") << "\n";
    }
  }
  return kExitOk;
}

int Report(const std::string &input, const std::string &coords_path,
           std::size_t top, const std::vector<std::string> &kind_names,
           const SubcorpusPair &pair, const std::string &output,
           std::ostream &out, std::ostream &err) {
  std::vector<ElementKind> kinds(kAllElementKinds.begin(),
                                 kAllElementKinds.end());
  if (!kind_names.empty()) {
    kinds.clear();
    for (const auto &name : kind_names) kinds.push_back(RequireKind(name));
  }
  std::optional<Coordinates> coords;
  if (!coords_path.empty()) coords = LoadCoordinates(coords_path);

  const auto records = LoadElements(input);
  const Aggregator agg = AggregateElements(records, pair);
  const auto &counts = agg.Finish();
  std::vector<KindRanking> rankings;
  for (ElementKind kind : kinds) {
    rankings.push_back({kind, Rank(counts.at(kind))});
  }
  Output sink(output, out);
  const std::size_t missing =
      EmitPlotData(sink.stream(), rankings, top, pair,
                   coords ? &*coords : nullptr, &err);
  if (missing > 0) err << missing << " rows without coordinates\n";
  return kExitOk;
}

int Validate(const std::string &input, std::ostream &out, std::ostream &err) {
  LoadCounters counters;
  LoadCorpus(input, &counters, &err);
  out << "ok: " << counters.documents << " documents, " << counters.graphs
      << " graphs, " << counters.skipped_graphs << " skipped\n";
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Narrative element mining and subcorpus comparison over AMR "
               "graphs",
               "amr-narratives"};
  app.require_subcommand(1);

  std::string input, output, counts_path, coords_path, kind_name, frame,
      side_name;
  std::vector<std::string> kind_names;
  unsigned threads = 1;
  std::size_t top = 0;
  bool is_corpus = false, as_json = false, render = false;
  PairOptions pair;

  auto *mine = app.add_subcommand("mine", "Extract narrative elements");
  mine->add_option("corpus", input, "Corpus JSONL")->required();
  mine->add_option("-o,--output", output, "Elements JSONL (default stdout)");
  mine->add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  auto *stats = app.add_subcommand("stats", "Element totals per subcorpus");
  stats->add_option("input", input, "Elements JSONL")->required();
  stats->add_flag("--corpus", is_corpus, "Input is a corpus JSONL");
  stats->add_flag("--json", as_json, "Emit JSON instead of text");
  stats->add_option("--counts", counts_path, "Write per-kind counts JSON");
  pair.Register(stats);

  auto *compare = app.add_subcommand("compare", "Rank one element kind");
  compare->add_option("elements", input, "Elements JSONL")->required();
  compare->add_option("--kind", kind_name, "plot, character, setting, moral "
                                           "or entity")
      ->required();
  compare->add_option("--top", top, "Top-N and bottom-N (default: all)");
  compare->add_option("-o,--output", output, "Ranking CSV (default stdout)");
  compare->add_option("--counts", counts_path, "Write counts JSON");
  pair.Register(compare);

  auto *triples = app.add_subcommand("triples", "Score a frame's arguments");
  triples->add_option("corpus", input, "Corpus JSONL")->required();
  triples->add_option("--frame", frame, "Predicate, e.g. prevent-01")
      ->required();
  triples->add_option("--side", side_name, "ARG0 or ARG1 (default: both)");
  triples->add_flag("--render", render,
                    "Print the strongest triple per subcorpus to stderr");
  triples->add_option("-o,--output", output, "Triples CSV (default stdout)");
  pair.Register(triples);

  std::size_t report_top = 15;
  auto *report = app.add_subcommand("report", "Plot data for top elements");
  report->add_option("elements", input, "Elements JSONL")->required();
  report->add_option("--coords", coords_path, "label,x,y CSV");
  report->add_option("--top", report_top, "Top-N and bottom-N per kind")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  report->add_option("--kind", kind_names, "Restrict to these kinds");
  report->add_option("-o,--output", output, "Plot data CSV (default stdout)");
  pair.Register(report);

  auto *validate = app.add_subcommand("validate", "Check a corpus file");
  validate->add_option("corpus", input, "Corpus JSONL")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mine->parsed()) return Mine(input, output, threads, out, err);
    if (stats->parsed()) {
      return Stats(input, is_corpus, as_json, counts_path, pair.Get(), out,
                   err);
    }
    if (compare->parsed()) {
      return Compare(input, RequireKind(kind_name), top, pair.Get(), output,
                     counts_path, out);
    }
    if (triples->parsed()) {
      return Triples(input, frame, side_name, render, pair.Get(), output, out,
                     err);
    }
    if (report->parsed()) {
      return Report(input, coords_path, report_top, kind_names, pair.Get(),
                    output, out, err);
    }
    if (validate->parsed()) return Validate(input, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  std::vector<const char *> argv = {"amr-narratives"};
  for (const auto &a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace narrative
