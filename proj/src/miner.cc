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

#include "narrative/miner.h"

#include <algorithm>
#include <cctype>

namespace narrative {

namespace {

// Label of an edge target: concept for instances, value for constants.
const std::string &TargetLabel(const AmrGraph &graph, const Edge &edge) {
  return edge.target.is_variable() ? graph.LabelOf(edge.target.variable())
                                   : edge.target.attribute().value;
}

std::vector<NarrativeElement> MineByRole(const AmrGraph &graph,
                                         ElementKind kind,
                                         std::string_view first,
                                         std::string_view second) {
  std::vector<NarrativeElement> out;
  for (const Edge &e : graph.edges()) {
    if (e.role != first && e.role != second) continue;
    out.push_back({kind, TargetLabel(graph, e), e.role});
  }
  return out;
}

}  // namespace

std::string_view KindName(ElementKind kind) {
  switch (kind) {
    case ElementKind::kPlot:
      return "Plot";
    case ElementKind::kCharacter:
      return "Character";
    case ElementKind::kSetting:
      return "Setting";
    case ElementKind::kMoral:
      return "Moral";
    case ElementKind::kEntity:
      return "Entity";
  }
  return "";
}

std::optional<ElementKind> ParseKind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "plot" || lower == "plots") return ElementKind::kPlot;
  if (lower == "character" || lower == "characters") {
    return ElementKind::kCharacter;
  }
  if (lower == "setting" || lower == "settings") return ElementKind::kSetting;
  if (lower == "moral" || lower == "morals") return ElementKind::kMoral;
  if (lower == "entity" || lower == "entities") return ElementKind::kEntity;
  return std::nullopt;
}

std::vector<NarrativeElement> MinePlot(const AmrGraph &graph) {
  std::vector<NarrativeElement> out;
  for (const Instance &inst : graph.instances()) {
    if (IsPredicate(inst.label)) {
      out.push_back({ElementKind::kPlot, inst.label, std::nullopt});
    }
  }
  return out;
}

std::vector<NarrativeElement> MineCharacters(const AmrGraph &graph) {
  std::vector<NarrativeElement> out;
  for (const Edge &e : graph.edges()) {
    if (e.role != "ARG0" && e.role != "ARG1") continue;
    if (!e.target.is_variable()) continue;
    const std::string &label = graph.LabelOf(e.target.variable());
    if (IsPredicate(label)) continue;
    out.push_back({ElementKind::kCharacter, label, e.role});
  }
  return out;
}

std::vector<NarrativeElement> MineSetting(const AmrGraph &graph) {
  return MineByRole(graph, ElementKind::kSetting, "time", "location");
}

std::vector<NarrativeElement> MineMoral(const AmrGraph &graph) {
  // The target instance is the root of the subgraph hanging off the edge.
  return MineByRole(graph, ElementKind::kMoral, "purpose", "cause");
}

std::vector<NarrativeElement> MineEntities(const AmrGraph &graph) {
  std::vector<NarrativeElement> out;
  for (const Edge &e : graph.edges()) {
    if (e.target.is_attribute()) {
      out.push_back(
          {ElementKind::kEntity, e.target.attribute().value, std::nullopt});
    }
  }
  return out;
}

std::vector<NarrativeElement> MineAll(const AmrGraph &graph) {
  std::vector<NarrativeElement> out = MinePlot(graph);
  for (auto *miner : {&MineCharacters, &MineSetting, &MineMoral,
                      &MineEntities}) {
    std::vector<NarrativeElement> part = miner(graph);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace narrative
