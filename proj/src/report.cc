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

#include "narrative/report.h"

#include <charconv>
#include <fstream>
#include <iostream>

#include "narrative/amr_graph.h"
#include "narrative/csv.h"
#include "narrative/errors.h"

namespace narrative {

std::string DisplayLabel(std::string_view label) {
  Concept c = Concept::FromLabel(label);
  std::string_view out = c.stem();
  // A leading hyphen ("-" polarity, negative numbers) is not a compound
  // separator.
  std::size_t hyphen = out.find('-', 1);
  if (hyphen != std::string_view::npos) out = out.substr(0, hyphen);
  return std::string(out);
}

std::string DisplayLabel(ElementKind kind, std::string_view label) {
  if (kind == ElementKind::kEntity) return std::string(label);
  return DisplayLabel(label);
}

std::string ScoredLabel(const ZScoredElement &element) {
  return element.label + " (" + FormatFixed(element.z, 2) + ")";
}

namespace {

bool ParseDouble(const std::string &text, double *value) {
  const char *end = text.data() + text.size();
  auto result = std::from_chars(text.data(), end, *value);
  return result.ec == std::errc() && result.ptr == end;
}

}  // namespace

Coordinates ReadCoordinates(std::istream &in) {
  Coordinates coords;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line == "\r") continue;
    if (header) {
      header = false;
      continue;
    }
    auto fields = SplitCsvLine(line);
    if (!fields || fields->size() != 3) {
      throw BadRecord(line_no, "expected label,x,y");
    }
    Point p;
    if (!ParseDouble((*fields)[1], &p.x) || !ParseDouble((*fields)[2], &p.y)) {
      throw BadRecord(line_no, "coordinates must be numbers");
    }
    coords[(*fields)[0]] = p;
  }
  return coords;
}

Coordinates LoadCoordinates(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return ReadCoordinates(in);
}

std::size_t EmitPlotData(std::ostream &out,
                         std::span<const KindRanking> rankings, std::size_t n,
                         const SubcorpusPair &pair, const Coordinates *coords,
                         std::ostream *warnings) {
  std::size_t missing = 0;
  out << "kind,label,z,subcorpus,x,y\n";
  for (const KindRanking &r : rankings) {
    if (r.ranked.empty()) continue;
    const TopBottom tb = SelectTopBottom(r.ranked, n);
    for (const auto *list : {&tb.top, &tb.bottom}) {
      for (const ZScoredElement &e : *list) {
        const std::string label = DisplayLabel(r.kind, e.label);
        std::string x, y;
        if (coords != nullptr) {
          auto it = coords->find(label);
          if (it == coords->end()) {
            ++missing;
            if (warnings != nullptr) {
              *warnings << "warning: missing coordinate for '" << label
                        << "'\n";
            }
          } else {
            x = FormatShortest(it->second.x);
            y = FormatShortest(it->second.y);
          }
        }
        out << CsvRow({KindName(r.kind), label, FormatFixed(e.z, 2),
                       Attribution(e.z, pair), x, y})
            << "\n";
      }
    }
  }
  return missing;
}

void WriteRankingCsv(std::ostream &out, std::span<const ZScoredElement> ranked,
                     std::size_t n, const SubcorpusPair &pair) {
  out << "list,rank,label,f_i,f_j,z,subcorpus\n";
  auto write = [&](std::string_view list,
                   std::span<const ZScoredElement> rows) {
    std::size_t rank = 0;
    for (const ZScoredElement &e : rows) {
      out << CsvRow({list, std::to_string(++rank), e.label,
                     std::to_string(e.f_i), std::to_string(e.f_j),
                     FormatFixed(e.z, kRankingDecimals),
                     Attribution(e.z, pair)})
          << "\n";
    }
  };
  if (n == 0) {
    write("all", ranked);
    return;
  }
  const TopBottom tb = SelectTopBottom(ranked, n);
  write("top", tb.top);
  write("bottom", tb.bottom);
}

void WriteTriplesCsv(
    std::ostream &out, const std::string &frame,
    std::span<const std::pair<ArgSide, std::vector<ZScoredElement>>> scored) {
  out << "frame,side,argument,f_i,f_j,z\n";
  for (const auto &[side, rows] : scored) {
    for (const ZScoredElement &e : rows) {
      out << CsvRow({frame, ArgSideName(side), e.label, std::to_string(e.f_i),
                     std::to_string(e.f_j), FormatFixed(e.z, kRankingDecimals)})
          << "\n";
    }
  }
}

}  // namespace narrative
