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

#ifndef NARRATIVE_TRIPLES_H_
#define NARRATIVE_TRIPLES_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "narrative/amr_graph.h"
#include "narrative/corpus_stats.h"

namespace narrative {

enum class ArgSide { kArg0, kArg1 };

// "ARG0" / "ARG1".
std::string_view ArgSideName(ArgSide side);
std::optional<ArgSide> ParseArgSide(std::string_view name);

// One outgoing ARG0/ARG1 edge of a predicate instance.
struct FramePair {
  std::string frame;
  ArgSide side;
  // Target concept (predicates included) or attribute value.
  std::string argument;

  bool operator==(const FramePair &) const = default;
};

// In stored edge order.
std::vector<FramePair> CollectPairs(const AmrGraph &graph);

// Argument frequencies keyed by (frame, side), split by subcorpus.
class PairCounts {
 public:
  explicit PairCounts(SubcorpusPair pair = {}) : pair_(std::move(pair)) {}

  // Throws UnknownLabel for a third subcorpus label.
  void Add(std::string_view subcorpus, const AmrGraph &graph);
  void Merge(const PairCounts &other);

  const SubcorpusPair &pair() const { return pair_; }
  // Every predicate concept seen as an instance, with or without arguments.
  const std::set<std::string> &frames() const { return frames_; }
  bool HasFrame(const std::string &frame) const {
    return frames_.count(frame) != 0;
  }

  // Empty table when the frame never takes that argument.
  FrequencyTable Arguments(const std::string &frame, ArgSide side) const;

  bool operator==(const PairCounts &) const = default;

 private:
  SubcorpusPair pair_;
  std::set<std::string> frames_;
  std::map<std::pair<std::string, ArgSide>, FrequencyTable> tables_;
};

// Smoothed log-odds z-scores over the arguments of one frame slot, with n
// taken as that slot's pair total per subcorpus. Sorted as Rank() sorts.
// Throws UnknownFrame if `frame` never occurs.
std::vector<ZScoredElement> ScoreArguments(const std::string &frame,
                                           ArgSide side,
                                           const PairCounts &counts);

struct ScoredArgument {
  std::string label;
  double z = 0.0;

  bool operator==(const ScoredArgument &) const = default;
};

struct NarrativeTriple {
  std::optional<ScoredArgument> arg0;
  std::string frame;
  std::optional<ScoredArgument> arg1;

  bool operator==(const NarrativeTriple &) const = default;
};

// "doctor <-1.0-- prevent-01 --1.0-> spread-03"; absent sides are omitted.
// Throws std::invalid_argument when both sides are absent.
std::string RenderTriple(const NarrativeTriple &triple);

// Inverse of RenderTriple, with z values at one-decimal precision. Labels
// must not themselves contain the arrow markers. Throws
// std::invalid_argument on anything else.
NarrativeTriple ParseTriple(std::string_view text);

}  // namespace narrative

#endif  // NARRATIVE_TRIPLES_H_
