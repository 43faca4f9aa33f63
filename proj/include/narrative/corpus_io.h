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

#ifndef NARRATIVE_CORPUS_IO_H_
#define NARRATIVE_CORPUS_IO_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "narrative/amr_graph.h"
#include "narrative/corpus_stats.h"
#include "narrative/miner.h"

namespace narrative {

// One news document. Corpus files hold one JSON object per line:
//   {"doc_id": "...", "subcorpus": "...", "seeds": [...], "date": "YYYY-MM-DD",
//    "graphs": ["(p / ...)", ...]}
// seeds and date are optional.
struct Document {
  std::string doc_id;
  std::string subcorpus;
  std::optional<std::vector<std::string>> seeds;
  std::optional<std::string> date;
  // Successfully parsed sentences. Each keeps the index of its string in the
  // record, so skipped sentences leave gaps.
  std::vector<AmrGraph> graphs;
};

struct LoadCounters {
  std::size_t documents = 0;
  std::size_t graphs = 0;
  std::size_t skipped_graphs = 0;
};

// Streams documents from line-delimited JSON. Blank lines are ignored.
// Schema violations throw BadRecord; a graph string that fails to parse is
// dropped, counted, and reported to `warnings` (if non-null).
class CorpusReader {
 public:
  explicit CorpusReader(std::istream &in, std::ostream *warnings = nullptr)
      : in_(in), warnings_(warnings) {}

  std::optional<Document> Next();
  const LoadCounters &counters() const { return counters_; }

 private:
  std::istream &in_;
  std::ostream *warnings_;
  std::size_t line_ = 0;
  LoadCounters counters_;
  std::unordered_set<std::string> seen_ids_;
};

// Reads a whole corpus file. Throws DataError if the file cannot be opened.
std::vector<Document> LoadCorpus(const std::filesystem::path &path,
                                 LoadCounters *counters = nullptr,
                                 std::ostream *warnings = nullptr);

// One line of the elements file:
//   {"doc_id", "subcorpus", "kind", "label", "role_context"}
// with role_context null when absent.
struct ElementRecord {
  std::string doc_id;
  std::string subcorpus;
  NarrativeElement element;

  bool operator==(const ElementRecord &) const = default;
};

std::string ElementRecordToJsonLine(const ElementRecord &record);
// Throws BadRecord.
ElementRecord ParseElementRecord(const std::string &line, std::size_t line_no);

// MineAll over every graph of the document, in sentence order.
std::vector<ElementRecord> MineDocument(const Document &doc);

// Mines documents on up to `threads` workers; output keeps input order.
std::vector<ElementRecord> MineCorpus(std::span<const Document> docs,
                                      unsigned threads = 1);

void WriteElements(std::ostream &out, std::span<const ElementRecord> records);
std::vector<ElementRecord> ReadElements(std::istream &in);
std::vector<ElementRecord> LoadElements(const std::filesystem::path &path);

// Per-kind counts. Throws UnknownLabel for records outside `pair`.
Aggregator AggregateElements(std::span<const ElementRecord> records,
                             const SubcorpusPair &pair);

struct KindStats {
  std::size_t total = 0;
  std::size_t unique = 0;

  bool operator==(const KindStats &) const = default;
};

struct SubcorpusStats {
  std::size_t documents = 0;
  // Absent when computed from an elements file.
  std::optional<std::size_t> graphs;
  std::map<ElementKind, KindStats> kinds;

  bool operator==(const SubcorpusStats &) const = default;
};

// Element totals and distinct-label counts per kind and subcorpus.
struct CorpusStatsReport {
  std::map<std::string, SubcorpusStats> subcorpora;

  nlohmann::ordered_json ToJson() const;
  // Plain-text table, one block per subcorpus.
  std::string ToText() const;

  bool operator==(const CorpusStatsReport &) const = default;
};

CorpusStatsReport StatsReport(std::span<const Document> docs);
// Documents are counted as distinct doc_ids with at least one element.
CorpusStatsReport StatsReport(std::span<const ElementRecord> records);

}  // namespace narrative

#endif  // NARRATIVE_CORPUS_IO_H_
