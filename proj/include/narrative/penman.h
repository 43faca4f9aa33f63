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

#ifndef NARRATIVE_PENMAN_H_
#define NARRATIVE_PENMAN_H_

#include <string>
#include <string_view>

#include "narrative/amr_graph.h"

namespace narrative {

// Parses a single Penman expression such as
//
//   (p / prevent-01
//      :ARG0 (d / doctor)
//      :ARG3 (v2 / vaccinate-01 :ARG0 d))
//
// Whitespace is insignificant. Inverse roles (":ARG0-of") are stored as
// forward edges with source and target swapped. A bare symbol in value
// position is a reentrancy if it names a variable declared anywhere in the
// expression; otherwise it becomes a number or symbol attribute. A bare
// symbol shaped like a variable (one lowercase letter plus optional digits)
// that is never declared is rejected.
//
// Throws MalformedPenman on syntax errors, duplicate or undeclared
// variables, and empty concepts; CyclicGraph if the normalized edges form a
// cycle. Never returns a partial graph.
AmrGraph ParsePenman(std::string_view text, int sentence_index = 0);

enum class PenmanStyle { kIndented, kCompact };

// Canonical serialization: depth-first from the root, each node's incident
// edges in stored order, revisited instances written as bare variables. An
// edge is written as an inverse role only when its source cannot be reached
// from the root along forward edges.
std::string SerializePenman(const AmrGraph &graph,
                            PenmanStyle style = PenmanStyle::kIndented);

}  // namespace narrative

#endif  // NARRATIVE_PENMAN_H_
