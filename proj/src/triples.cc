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

#include "narrative/triples.h"

#include <regex>
#include <stdexcept>

#include "narrative/csv.h"
#include "narrative/errors.h"

namespace narrative {

std::string_view ArgSideName(ArgSide side) {
  return side == ArgSide::kArg0 ? "ARG0" : "ARG1";
}

std::optional<ArgSide> ParseArgSide(std::string_view name) {
  if (name == "ARG0" || name == "arg0") return ArgSide::kArg0;
  if (name == "ARG1" || name == "arg1") return ArgSide::kArg1;
  return std::nullopt;
}

std::vector<FramePair> CollectPairs(const AmrGraph &graph) {
  std::vector<FramePair> pairs;
  for (const Edge &e : graph.edges()) {
    std::optional<ArgSide> side;
    if (e.role == "ARG0") side = ArgSide::kArg0;
    if (e.role == "ARG1") side = ArgSide::kArg1;
    if (!side) continue;
    const std::string &frame = graph.LabelOf(e.source);
    if (!IsPredicate(frame)) continue;
    pairs.push_back({frame, *side,
                     e.target.is_variable()
                         ? graph.LabelOf(e.target.variable())
                         : e.target.attribute().value});
  }
  return pairs;
}

void PairCounts::Add(std::string_view subcorpus, const AmrGraph &graph) {
  FrequencyTable probe(pair_);
  const CorpusSide side = probe.SideOf(subcorpus);
  for (const Instance &inst : graph.instances()) {
    if (IsPredicate(inst.label)) frames_.insert(inst.label);
  }
  for (FramePair &p : CollectPairs(graph)) {
    auto key = std::make_pair(std::move(p.frame), p.side);
    auto it = tables_.find(key);
    if (it == tables_.end()) {
      it = tables_.emplace(std::move(key), FrequencyTable(pair_)).first;
    }
    it->second.Add(side, p.argument);
  }
}

void PairCounts::Merge(const PairCounts &other) {
  if (!(other.pair_ == pair_)) {
    throw std::invalid_argument("cannot merge pair counts of different pairs");
  }
  frames_.insert(other.frames_.begin(), other.frames_.end());
  for (const auto &[key, table] : other.tables_) {
    auto it = tables_.find(key);
    if (it == tables_.end()) {
      tables_.emplace(key, table);
    } else {
      it->second.Merge(table);
    }
  }
}

FrequencyTable PairCounts::Arguments(const std::string &frame,
                                     ArgSide side) const {
  auto it = tables_.find({frame, side});
  if (it == tables_.end()) return FrequencyTable(pair_);
  return it->second;
}

std::vector<ZScoredElement> ScoreArguments(const std::string &frame,
                                           ArgSide side,
                                           const PairCounts &counts) {
  if (!counts.HasFrame(frame)) throw UnknownFrame(frame);
  return Rank(counts.Arguments(frame, side));
}

std::string RenderTriple(const NarrativeTriple &triple) {
  if (!triple.arg0 && !triple.arg1) {
    throw std::invalid_argument("triple has neither ARG0 nor ARG1");
  }
  std::string out;
  if (triple.arg0) {
    out += triple.arg0->label + " <-" + FormatFixed(triple.arg0->z, 1) + "-- ";
  }
  out += triple.frame;
  if (triple.arg1) {
    out += " --" + FormatFixed(triple.arg1->z, 1) + "-> " + triple.arg1->label;
  }
  return out;
}

NarrativeTriple ParseTriple(std::string_view text) {
  static const std::regex kTriple(
      R"(^(?:(.+) <-(-?\d+\.\d)-- )?(\S+)(?: --(-?\d+\.\d)-> (.+))?$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, kTriple)) {
    throw std::invalid_argument("not a narrative triple: " + std::string(text));
  }
  NarrativeTriple t;
  t.frame = m[3].str();
  if (m[1].matched) t.arg0 = ScoredArgument{m[1].str(), std::stod(m[2].str())};
  if (m[5].matched) t.arg1 = ScoredArgument{m[5].str(), std::stod(m[4].str())};
  if (!t.arg0 && !t.arg1) {
    throw std::invalid_argument("triple has neither ARG0 nor ARG1");
  }
  return t;
}

}  // namespace narrative
