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

#ifndef NARRATIVE_MINER_H_
#define NARRATIVE_MINER_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "narrative/amr_graph.h"

namespace narrative {

// Narrative policy framework element types, plus attribute-valued entities.
enum class ElementKind { kPlot, kCharacter, kSetting, kMoral, kEntity };

inline constexpr std::array<ElementKind, 5> kAllElementKinds = {
    ElementKind::kPlot, ElementKind::kCharacter, ElementKind::kSetting,
    ElementKind::kMoral, ElementKind::kEntity};

// "Plot", "Character", "Setting", "Moral", "Entity".
std::string_view KindName(ElementKind kind);

// Case-insensitive; accepts singular and plural forms ("characters").
std::optional<ElementKind> ParseKind(std::string_view name);

struct NarrativeElement {
  ElementKind kind;
  // Full concept with sense tag, or the attribute value.
  std::string label;
  // ARG0/ARG1 for characters, time/location for settings, purpose/cause for
  // morals. Empty for plot and entities.
  std::optional<std::string> role_context;

  bool operator==(const NarrativeElement &) const = default;
};

// One element per predicate instance.
std::vector<NarrativeElement> MinePlot(const AmrGraph &graph);

// One element per ARG0/ARG1 edge into a non-predicate instance. Reentrant
// instances count once per such edge.
std::vector<NarrativeElement> MineCharacters(const AmrGraph &graph);

// One element per :time or :location edge.
std::vector<NarrativeElement> MineSetting(const AmrGraph &graph);

// One element per :purpose or :cause edge, labelled with the concept at the
// top of the target subgraph.
std::vector<NarrativeElement> MineMoral(const AmrGraph &graph);

// One element per attribute occurrence.
std::vector<NarrativeElement> MineEntities(const AmrGraph &graph);

// Plot, characters, setting, moral, entities, in that order.
std::vector<NarrativeElement> MineAll(const AmrGraph &graph);

}  // namespace narrative

#endif  // NARRATIVE_MINER_H_
