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

#include "narrative/corpus_io.h"

#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include "narrative/errors.h"
#include "narrative/penman.h"

namespace narrative {

namespace {

using nlohmann::json;

bool IsIsoDate(const std::string &text) {
  static const std::regex kDate(R"((\d{4})-(\d{2})-(\d{2}))");
  std::smatch m;
  if (!std::regex_match(text, m, kDate)) return false;
  const std::chrono::year_month_day ymd{
      std::chrono::year(std::stoi(m[1].str())),
      std::chrono::month(static_cast<unsigned>(std::stoi(m[2].str()))),
      std::chrono::day(static_cast<unsigned>(std::stoi(m[3].str())))};
  return ymd.ok();
}

std::string RequireString(const json &record, const char *field,
                          std::size_t line) {
  auto it = record.find(field);
  if (it == record.end()) {
    throw BadRecord(line, std::string("missing field '") + field + "'");
  }
  if (!it->is_string()) {
    throw BadRecord(line, std::string("field '") + field + "' must be a string");
  }
  std::string value = it->get<std::string>();
  if (value.empty()) {
    throw BadRecord(line, std::string("field '") + field + "' is empty");
  }
  return value;
}

std::vector<std::string> RequireStringArray(const json &value,
                                            const char *field,
                                            std::size_t line) {
  if (!value.is_array()) {
    throw BadRecord(line,
                    std::string("field '") + field + "' must be an array");
  }
  std::vector<std::string> out;
  for (const json &item : value) {
    if (!item.is_string()) {
      throw BadRecord(line, std::string("field '") + field +
                                "' must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

json ParseJsonObject(const std::string &line, std::size_t line_no) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error &e) {
    throw BadRecord(line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw BadRecord(line_no, "record is not an object");
  return record;
}

bool IsBlank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::optional<Document> CorpusReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (IsBlank(line)) continue;

    const json record = ParseJsonObject(line, line_);
    Document doc;
    doc.doc_id = RequireString(record, "doc_id", line_);
    doc.subcorpus = RequireString(record, "subcorpus", line_);
    if (auto it = record.find("seeds"); it != record.end() && !it->is_null()) {
      doc.seeds = RequireStringArray(*it, "seeds", line_);
    }
    if (auto it = record.find("date"); it != record.end() && !it->is_null()) {
      if (!it->is_string() || !IsIsoDate(it->get<std::string>())) {
        throw BadRecord(line_, "field 'date' must be an ISO-8601 date");
      }
      doc.date = it->get<std::string>();
    }
    auto graphs = record.find("graphs");
    if (graphs == record.end()) throw BadRecord(line_, "missing field 'graphs'");
    const std::vector<std::string> penman =
        RequireStringArray(*graphs, "graphs", line_);
    if (!seen_ids_.insert(doc.doc_id).second) {
      throw BadRecord(line_, "duplicate doc_id '" + doc.doc_id + "'");
    }

    for (std::size_t k = 0; k < penman.size(); ++k) {
      try {
        doc.graphs.push_back(ParsePenman(penman[k], static_cast<int>(k)));
        ++counters_.graphs;
      } catch (const DataError &e) {
        ++counters_.skipped_graphs;
        if (warnings_ != nullptr) {
          *warnings_ << "warning: line " << line_ << ", document '"
                     << doc.doc_id << "', sentence " << k << ": " << e.what()
                     << "\n";
        }
      }
    }
    ++counters_.documents;
    return doc;
  }
  if (in_.bad()) throw DataError("read error at line " + std::to_string(line_));
  return std::nullopt;
}

std::vector<Document> LoadCorpus(const std::filesystem::path &path,
                                 LoadCounters *counters,
                                 std::ostream *warnings) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  CorpusReader reader(in, warnings);
  std::vector<Document> docs;
  while (auto doc = reader.Next()) docs.push_back(std::move(*doc));
  if (counters != nullptr) *counters = reader.counters();
  return docs;
}

std::string ElementRecordToJsonLine(const ElementRecord &record) {
  nlohmann::ordered_json j;
  j["doc_id"] = record.doc_id;
  j["subcorpus"] = record.subcorpus;
  j["kind"] = std::string(KindName(record.element.kind));
  j["label"] = record.element.label;
  if (record.element.role_context) {
    j["role_context"] = *record.element.role_context;
  } else {
    j["role_context"] = nullptr;
  }
  return j.dump();
}

ElementRecord ParseElementRecord(const std::string &line, std::size_t line_no) {
  const json j = ParseJsonObject(line, line_no);
  ElementRecord r;
  r.doc_id = RequireString(j, "doc_id", line_no);
  r.subcorpus = RequireString(j, "subcorpus", line_no);
  auto kind = ParseKind(RequireString(j, "kind", line_no));
  if (!kind) throw BadRecord(line_no, "unknown element kind");
  r.element.kind = *kind;
  auto label = j.find("label");
  if (label == j.end() || !label->is_string()) {
    throw BadRecord(line_no, "field 'label' must be a string");
  }
  r.element.label = label->get<std::string>();
  if (auto it = j.find("role_context"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw BadRecord(line_no, "field 'role_context' must be a string");
    }
    r.element.role_context = it->get<std::string>();
  }
  return r;
}

std::vector<ElementRecord> MineDocument(const Document &doc) {
  std::vector<ElementRecord> out;
  for (const AmrGraph &graph : doc.graphs) {
    for (NarrativeElement &e : MineAll(graph)) {
      out.push_back({doc.doc_id, doc.subcorpus, std::move(e)});
    }
  }
  return out;
}

std::vector<ElementRecord> MineCorpus(std::span<const Document> docs,
                                      unsigned threads) {
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(docs.size())));
  if (threads <= 1) {
    std::vector<ElementRecord> out;
    for (const Document &doc : docs) {
      auto part = MineDocument(doc);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }

  // Contiguous shards, concatenated in shard order afterwards.
  std::vector<std::vector<ElementRecord>> shards(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  const std::size_t per = (docs.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        const std::size_t begin = std::min(docs.size(), t * per);
        const std::size_t end = std::min(docs.size(), begin + per);
        for (std::size_t k = begin; k < end; ++k) {
          auto part = MineDocument(docs[k]);
          std::move(part.begin(), part.end(), std::back_inserter(shards[t]));
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread &w : workers) w.join();
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ElementRecord> out;
  for (auto &shard : shards) {
    std::move(shard.begin(), shard.end(), std::back_inserter(out));
  }
  return out;
}

void WriteElements(std::ostream &out, std::span<const ElementRecord> records) {
  for (const ElementRecord &r : records) out << ElementRecordToJsonLine(r) << "\n";
}

std::vector<ElementRecord> ReadElements(std::istream &in) {
  std::vector<ElementRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    out.push_back(ParseElementRecord(line, line_no));
  }
  return out;
}

std::vector<ElementRecord> LoadElements(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return ReadElements(in);
}

Aggregator AggregateElements(std::span<const ElementRecord> records,
                             const SubcorpusPair &pair) {
  Aggregator agg(pair);
  for (const ElementRecord &r : records) agg.Add(r.subcorpus, r.element);
  return agg;
}

nlohmann::ordered_json CorpusStatsReport::ToJson() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto &[name, s] : subcorpora) {
    nlohmann::ordered_json entry;
    entry["documents"] = s.documents;
    if (s.graphs) {
      entry["graphs"] = *s.graphs;
    } else {
      entry["graphs"] = nullptr;
    }
    nlohmann::ordered_json kinds = nlohmann::ordered_json::object();
    for (const auto &[kind, k] : s.kinds) {
      kinds[std::string(KindName(kind))] = {{"total", k.total},
                                            {"unique", k.unique}};
    }
    entry["elements"] = std::move(kinds);
    doc[name] = std::move(entry);
  }
  return doc;
}

std::string CorpusStatsReport::ToText() const {
  std::ostringstream out;
  for (const auto &[name, s] : subcorpora) {
    out << name << ": " << s.documents << " documents";
    if (s.graphs) out << ", " << *s.graphs << " graphs";
    out << "\n";
    for (const auto &[kind, k] : s.kinds) {
      out << "  " << KindName(kind) << "\ttotal " << k.total << "\tunique "
          << k.unique << "\n";
    }
  }
  return out.str();
}

namespace {

struct StatsBuilder {
  std::map<std::string, std::set<std::string>> docs;
  std::map<std::string, std::map<ElementKind, std::set<std::string>>> labels;
  CorpusStatsReport report;

  SubcorpusStats &Entry(const std::string &subcorpus) {
    auto [it, inserted] = report.subcorpora.try_emplace(subcorpus);
    if (inserted) {
      for (ElementKind kind : kAllElementKinds) it->second.kinds[kind] = {};
    }
    return it->second;
  }

  void Count(const std::string &subcorpus, const NarrativeElement &e) {
    ++Entry(subcorpus).kinds[e.kind].total;
    labels[subcorpus][e.kind].insert(e.label);
  }

  CorpusStatsReport Finish() {
    for (auto &[name, s] : report.subcorpora) {
      for (auto &[kind, k] : s.kinds) k.unique = labels[name][kind].size();
    }
    return std::move(report);
  }
};

}  // namespace

CorpusStatsReport StatsReport(std::span<const Document> docs) {
  StatsBuilder b;
  for (const Document &doc : docs) {
    SubcorpusStats &s = b.Entry(doc.subcorpus);
    ++s.documents;
    s.graphs = s.graphs.value_or(0) + doc.graphs.size();
    for (const AmrGraph &g : doc.graphs) {
      for (const NarrativeElement &e : MineAll(g)) b.Count(doc.subcorpus, e);
    }
  }
  return b.Finish();
}

CorpusStatsReport StatsReport(std::span<const ElementRecord> records) {
  StatsBuilder b;
  for (const ElementRecord &r : records) {
    b.Count(r.subcorpus, r.element);
    b.docs[r.subcorpus].insert(r.doc_id);
  }
  for (const auto &[name, ids] : b.docs) b.Entry(name).documents = ids.size();
  return b.Finish();
}

}  // namespace narrative
