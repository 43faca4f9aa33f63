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

#include "narrative/corpus_stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "narrative/errors.h"

namespace narrative {

CorpusSide FrequencyTable::SideOf(std::string_view subcorpus) const {
  if (subcorpus == pair_.i) return CorpusSide::kI;
  if (subcorpus == pair_.j) return CorpusSide::kJ;
  throw UnknownLabel(std::string(subcorpus));
}

void FrequencyTable::Add(CorpusSide side, const std::string &label,
                         std::int64_t count) {
  if (count < 0) throw std::invalid_argument("negative count");
  LabelCounts &c = labels_[label];
  if (side == CorpusSide::kI) {
    c.f_i += count;
    n_i_ += count;
  } else {
    c.f_j += count;
    n_j_ += count;
  }
}

void FrequencyTable::Merge(const FrequencyTable &other) {
  if (!(other.pair_ == pair_)) {
    throw std::invalid_argument("cannot merge tables of different subcorpora");
  }
  for (const auto &[label, c] : other.labels_) {
    LabelCounts &mine = labels_[label];
    mine.f_i += c.f_i;
    mine.f_j += c.f_j;
  }
  n_i_ += other.n_i_;
  n_j_ += other.n_j_;
}

nlohmann::ordered_json ElementCounts::ToJson() const {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(KindName(kind));
  auto labels = nlohmann::ordered_json::array();
  for (const auto &[label, c] : table.labels()) {
    nlohmann::ordered_json row;
    row["label"] = label;
    row["f_i"] = c.f_i;
    row["f_j"] = c.f_j;
    labels.push_back(std::move(row));
  }
  doc["labels"] = std::move(labels);
  doc["n_i"] = table.n_i();
  doc["n_j"] = table.n_j();
  doc["subcorpus_i"] = table.pair().i;
  doc["subcorpus_j"] = table.pair().j;
  return doc;
}

ElementCounts ElementCounts::FromJson(const nlohmann::json &doc) {
  try {
    ElementCounts out;
    auto kind = ParseKind(doc.at("kind").get<std::string>());
    if (!kind) throw DataError("unknown element kind");
    out.kind = *kind;
    out.table = FrequencyTable({doc.at("subcorpus_i").get<std::string>(),
                                doc.at("subcorpus_j").get<std::string>()});
    for (const auto &row : doc.at("labels")) {
      const auto label = row.at("label").get<std::string>();
      const auto f_i = row.at("f_i").get<std::int64_t>();
      const auto f_j = row.at("f_j").get<std::int64_t>();
      if (f_i < 0 || f_j < 0) throw DataError("negative count");
      if (out.table.labels().count(label)) {
        throw DataError("duplicate label '" + label + "'");
      }
      out.table.Add(CorpusSide::kI, label, f_i);
      out.table.Add(CorpusSide::kJ, label, f_j);
    }
    if (out.table.n_i() != doc.at("n_i").get<std::int64_t>() ||
        out.table.n_j() != doc.at("n_j").get<std::int64_t>()) {
      throw DataError("totals do not match label counts");
    }
    return out;
  } catch (const nlohmann::json::exception &e) {
    throw DataError(std::string("counts document: ") + e.what());
  }
}

Aggregator::Aggregator(SubcorpusPair pair) : pair_(std::move(pair)) {
  for (ElementKind kind : kAllElementKinds) {
    counts_.emplace(kind, ElementCounts{kind, FrequencyTable(pair_)});
  }
}

void Aggregator::Add(std::string_view subcorpus,
                     const NarrativeElement &element) {
  FrequencyTable &table = counts_.at(element.kind).table;
  table.Add(table.SideOf(subcorpus), element.label);
}

void Aggregator::Merge(const Aggregator &other) {
  for (const auto &[kind, c] : other.counts_) {
    counts_.at(kind).table.Merge(c.table);
  }
}

const std::map<ElementKind, ElementCounts> &Aggregator::Finish() const {
  std::int64_t total_i = 0;
  std::int64_t total_j = 0;
  for (const auto &[kind, c] : counts_) {
    total_i += c.table.n_i();
    total_j += c.table.n_j();
  }
  if (total_i == 0) {
    throw EmptyCorpus("subcorpus '" + pair_.i + "' has no elements");
  }
  if (total_j == 0) {
    throw EmptyCorpus("subcorpus '" + pair_.j + "' has no elements");
  }
  return counts_;
}

double ZScore(std::int64_t f_i, std::int64_t n_i, std::int64_t f_j,
              std::int64_t n_j) {
  if (f_i < 0 || f_j < 0 || f_i > n_i || f_j > n_j) {
    throw std::invalid_argument("z-score requires 0 <= f <= n");
  }
  // ln(a/b) - ln(c/d) == ln(a*d) - ln(b*c). The products are exact in long
  // double for totals up to ~4e9, which makes the two sides of the
  // numerator swap exactly and cancel exactly when the odds agree.
  const long double odds_i = static_cast<long double>(f_i + 1) *
                             static_cast<long double>(n_j - f_j + 1);
  const long double odds_j = static_cast<long double>(n_i - f_i + 1) *
                             static_cast<long double>(f_j + 1);
  const double numerator =
      static_cast<double>(std::log(odds_i) - std::log(odds_j));
  const double variance = 1.0 / static_cast<double>(f_i + 1) +
                          1.0 / static_cast<double>(f_j + 1);
  return numerator / std::sqrt(variance);
}

std::vector<ZScoredElement> Rank(const FrequencyTable &table) {
  std::vector<ZScoredElement> ranked;
  ranked.reserve(table.labels().size());
  for (const auto &[label, c] : table.labels()) {
    ranked.push_back(
        {label, ZScore(c.f_i, table.n_i(), c.f_j, table.n_j()), c.f_i, c.f_j});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const ZScoredElement &a, const ZScoredElement &b) {
              if (a.z != b.z) return a.z > b.z;
              return a.label < b.label;
            });
  return ranked;
}

TopBottom SelectTopBottom(std::span<const ZScoredElement> ranked,
                          std::size_t n) {
  if (n < 1) throw std::invalid_argument("top/bottom size must be >= 1");
  const std::size_t k = std::min(n, ranked.size());
  TopBottom out;
  out.top.assign(ranked.begin(), ranked.begin() + k);
  // Ascending z with ties by label, so the bottom list equals the top list
  // of the swapped comparison even across ties.
  std::vector<ZScoredElement> ascending(ranked.begin(), ranked.end());
  std::sort(ascending.begin(), ascending.end(),
            [](const ZScoredElement &a, const ZScoredElement &b) {
              if (a.z != b.z) return a.z < b.z;
              return a.label < b.label;
            });
  ascending.resize(k);
  out.bottom = std::move(ascending);
  return out;
}

std::string_view Attribution(double z, const SubcorpusPair &pair) {
  if (z > 0) return pair.i;
  if (z < 0) return pair.j;
  return {};
}

}  // namespace narrative
