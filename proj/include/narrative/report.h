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

#ifndef NARRATIVE_REPORT_H_
#define NARRATIVE_REPORT_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "narrative/corpus_stats.h"
#include "narrative/miner.h"
#include "narrative/triples.h"

namespace narrative {

// Presentation form of a concept: drops the sense tag, then keeps only the
// part before the first hyphen (prevent-01 -> prevent,
// government-organization -> government). Idempotent. Never used for
// counting.
std::string DisplayLabel(std::string_view label);

// Entities are attribute values (names, numbers) and keep their exact text;
// every other kind goes through DisplayLabel.
std::string DisplayLabel(ElementKind kind, std::string_view label);

// "destroy (24.91)": a ranked entry as a short human-readable string, z to
// two decimals.
std::string ScoredLabel(const ZScoredElement &element);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Display label -> 2-D position.
using Coordinates = std::map<std::string, Point>;

// Reads "label,x,y" CSV with a header row. Lines starting with '#' are
// comments. Throws BadRecord on malformed rows.
Coordinates ReadCoordinates(std::istream &in);
Coordinates LoadCoordinates(const std::filesystem::path &path);

struct KindRanking {
  ElementKind kind;
  std::vector<ZScoredElement> ranked;
};

// Writes plot-data CSV:
//   kind,label,z,subcorpus,x,y
// with the top-n then bottom-n entries of each kind, z to two decimals and
// x,y blank when `coords` is null or lacks the label. Each missing
// coordinate is reported to `warnings` (if non-null). Returns the number of
// rows that lack coordinates while `coords` was given.
std::size_t EmitPlotData(std::ostream &out,
                         std::span<const KindRanking> rankings, std::size_t n,
                         const SubcorpusPair &pair,
                         const Coordinates *coords = nullptr,
                         std::ostream *warnings = nullptr);

// Ranking CSV:
//   list,rank,label,f_i,f_j,z,subcorpus
// `list` is "top"/"bottom" when n > 0, else "all" for the full ranking.
void WriteRankingCsv(std::ostream &out, std::span<const ZScoredElement> ranked,
                     std::size_t n, const SubcorpusPair &pair);

// Triple query CSV:
//   frame,side,argument,f_i,f_j,z
void WriteTriplesCsv(
    std::ostream &out, const std::string &frame,
    std::span<const std::pair<ArgSide, std::vector<ZScoredElement>>> scored);

// Precision used for z in machine-readable rankings.
inline constexpr int kRankingDecimals = 6;

}  // namespace narrative

#endif  // NARRATIVE_REPORT_H_
