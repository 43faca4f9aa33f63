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

#ifndef NARRATIVE_CORPUS_STATS_H_
#define NARRATIVE_CORPUS_STATS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "narrative/miner.h"

namespace narrative {

// The two subcorpora being contrasted. Positive z-scores mean
// over-represented in `i`, negative in `j`.
struct SubcorpusPair {
  std::string i = "conspiracy";
  std::string j = "mainstream";

  bool operator==(const SubcorpusPair &) const = default;
};

enum class CorpusSide { kI, kJ };

struct LabelCounts {
  std::int64_t f_i = 0;
  std::int64_t f_j = 0;

  bool operator==(const LabelCounts &) const = default;
};

// Label frequencies over the union vocabulary of two subcorpora, with
// running totals n_i = sum f_i and n_j = sum f_j.
class FrequencyTable {
 public:
  explicit FrequencyTable(SubcorpusPair pair = {}) : pair_(std::move(pair)) {}

  // Throws UnknownLabel if `subcorpus` is neither i nor j.
  CorpusSide SideOf(std::string_view subcorpus) const;

  void Add(CorpusSide side, const std::string &label, std::int64_t count = 1);
  void Add(std::string_view subcorpus, const std::string &label,
           std::int64_t count = 1) {
    Add(SideOf(subcorpus), label, count);
  }

  // Both tables must use the same subcorpus pair.
  void Merge(const FrequencyTable &other);

  const SubcorpusPair &pair() const { return pair_; }
  const std::map<std::string, LabelCounts> &labels() const { return labels_; }
  std::int64_t n_i() const { return n_i_; }
  std::int64_t n_j() const { return n_j_; }
  bool empty() const { return labels_.empty(); }

  bool operator==(const FrequencyTable &) const = default;

 private:
  SubcorpusPair pair_;
  std::map<std::string, LabelCounts> labels_;
  std::int64_t n_i_ = 0;
  std::int64_t n_j_ = 0;
};

// Frequency table for one element kind. Serialized as
//   {"kind", "labels": [{"label", "f_i", "f_j"}], "n_i", "n_j",
//    "subcorpus_i", "subcorpus_j"}
struct ElementCounts {
  ElementKind kind = ElementKind::kPlot;
  FrequencyTable table;

  bool operator==(const ElementCounts &) const = default;

  nlohmann::ordered_json ToJson() const;
  // Throws DataError when the document violates the schema or its totals
  // do not match the per-label counts.
  static ElementCounts FromJson(const nlohmann::json &doc);
};

// Splits a stream of labelled elements into per-kind frequency tables.
class Aggregator {
 public:
  explicit Aggregator(SubcorpusPair pair = {});

  // Throws UnknownLabel for a third subcorpus label.
  void Add(std::string_view subcorpus, const NarrativeElement &element);
  void Merge(const Aggregator &other);

  const SubcorpusPair &pair() const { return pair_; }
  // Always holds all five kinds, possibly empty.
  const std::map<ElementKind, ElementCounts> &counts() const { return counts_; }

  // Returns counts(); throws EmptyCorpus when either subcorpus has no
  // element of any kind.
  const std::map<ElementKind, ElementCounts> &Finish() const;

  bool operator==(const Aggregator &) const = default;

 private:
  SubcorpusPair pair_;
  std::map<ElementKind, ElementCounts> counts_;
};

// Smoothed log-odds ratio between two subcorpora, divided by its estimated
// standard deviation:
//
//   z = [ln((f_i+1)/(n_i-f_i+1)) - ln((f_j+1)/(n_j-f_j+1))]
//       / sqrt(1/(f_i+1) + 1/(f_j+1))
//
// Requires 0 <= f_i <= n_i and 0 <= f_j <= n_j (std::invalid_argument
// otherwise). Exactly antisymmetric under swapping the two subcorpora and
// exactly zero when the smoothed odds coincide.
double ZScore(std::int64_t f_i, std::int64_t n_i, std::int64_t f_j,
              std::int64_t n_j);

struct ZScoredElement {
  std::string label;
  double z = 0.0;
  std::int64_t f_i = 0;
  std::int64_t f_j = 0;

  bool operator==(const ZScoredElement &) const = default;
};

// One entry per vocabulary label, z descending, ties by label ascending.
std::vector<ZScoredElement> Rank(const FrequencyTable &table);
inline std::vector<ZScoredElement> Rank(const ElementCounts &counts) {
  return Rank(counts.table);
}

struct TopBottom {
  std::vector<ZScoredElement> top;
  // Most j-over-represented first.
  std::vector<ZScoredElement> bottom;
};

// Throws std::invalid_argument if n < 1.
TopBottom SelectTopBottom(std::span<const ZScoredElement> ranked,
                          std::size_t n);

// Subcorpus the sign of z points at; empty for z == 0.
std::string_view Attribution(double z, const SubcorpusPair &pair);

}  // namespace narrative

#endif  // NARRATIVE_CORPUS_STATS_H_
