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

#include "narrative/amr_graph.h"

#include <cctype>
#include <queue>
#include <stdexcept>

#include "narrative/errors.h"

namespace narrative {

namespace {

// Length of the sense suffix including the hyphen, or 0 if none.
std::size_t SenseSuffixLength(std::string_view label) {
  std::size_t digits = 0;
  while (digits < label.size() &&
         std::isdigit(static_cast<unsigned char>(
             label[label.size() - 1 - digits]))) {
    ++digits;
  }
  if (digits < 2 || digits > 3) return 0;
  // Hyphen plus a nonempty stem must precede the digits.
  if (label.size() < digits + 2) return 0;
  if (label[label.size() - 1 - digits] != '-') return 0;
  return digits + 1;
}

bool EndsWithOf(std::string_view role) {
  return role.size() >= 3 && role.substr(role.size() - 3) == "-of";
}

}  // namespace

bool IsPredicate(std::string_view label) {
  return SenseSuffixLength(label) != 0;
}

Concept Concept::FromLabel(std::string_view label) {
  Concept c;
  c.label = std::string(label);
  std::size_t n = SenseSuffixLength(label);
  if (n != 0) c.sense = std::string(label.substr(label.size() - n + 1));
  return c;
}

std::string_view Concept::stem() const {
  std::string_view view = label;
  if (!sense) return view;
  return view.substr(0, view.size() - sense->size() - 1);
}

AmrGraph::AmrGraph(std::string root, std::vector<Instance> instances,
                   std::vector<Edge> edges, int sentence_index)
    : root_(std::move(root)),
      instances_(std::move(instances)),
      edges_(std::move(edges)),
      sentence_index_(sentence_index) {
  index_.reserve(instances_.size());
  for (std::size_t k = 0; k < instances_.size(); ++k) {
    const Instance &inst = instances_[k];
    if (inst.variable.empty()) throw InvalidGraph("empty variable name");
    if (inst.label.empty()) {
      throw InvalidGraph("instance '" + inst.variable + "' has empty concept");
    }
    if (!index_.emplace(inst.variable, k).second) {
      throw InvalidGraph("variable '" + inst.variable + "' declared twice");
    }
  }
  Validate();
}

bool AmrGraph::HasVariable(std::string_view variable) const {
  return index_.find(std::string(variable)) != index_.end();
}

const std::string &AmrGraph::LabelOf(std::string_view variable) const {
  auto it = index_.find(std::string(variable));
  if (it == index_.end()) {
    throw std::out_of_range("undeclared variable '" + std::string(variable) +
                            "'");
  }
  return instances_[it->second].label;
}

AmrGraph AmrGraph::WithSentenceIndex(int sentence_index) const {
  AmrGraph copy = *this;
  copy.sentence_index_ = sentence_index;
  return copy;
}

void AmrGraph::Validate() const {
  if (!HasVariable(root_)) {
    throw InvalidGraph("root '" + root_ + "' is not a declared instance");
  }

  const std::size_t n = instances_.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::vector<std::size_t>> undirected(n);
  std::vector<std::size_t> indegree(n, 0);

  for (const Edge &e : edges_) {
    if (e.role.empty()) throw InvalidGraph("empty role label");
    if (EndsWithOf(e.role)) {
      throw InvalidGraph("role '" + e.role + "' is not normalized");
    }
    auto src = index_.find(e.source);
    if (src == index_.end()) {
      throw InvalidGraph("edge source '" + e.source + "' is not declared");
    }
    if (!e.target.is_variable()) continue;
    auto dst = index_.find(e.target.variable());
    if (dst == index_.end()) {
      throw InvalidGraph("edge target '" + e.target.variable() +
                         "' is not declared");
    }
    out[src->second].push_back(dst->second);
    undirected[src->second].push_back(dst->second);
    undirected[dst->second].push_back(src->second);
    ++indegree[dst->second];
  }

  // Kahn's algorithm; anything left over sits on a cycle.
  std::queue<std::size_t> ready;
  for (std::size_t k = 0; k < n; ++k) {
    if (indegree[k] == 0) ready.push(k);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t k = ready.front();
    ready.pop();
    ++removed;
    for (std::size_t next : out[k]) {
      if (--indegree[next] == 0) ready.push(next);
    }
  }
  if (removed != n) throw CyclicGraph("instance edges form a cycle");

  std::vector<bool> seen(n, false);
  std::queue<std::size_t> frontier;
  frontier.push(index_.at(root_));
  seen[frontier.front()] = true;
  std::size_t reached = 0;
  while (!frontier.empty()) {
    std::size_t k = frontier.front();
    frontier.pop();
    ++reached;
    for (std::size_t next : undirected[k]) {
      if (!seen[next]) {
        seen[next] = true;
        frontier.push(next);
      }
    }
  }
  if (reached != n) throw InvalidGraph("graph is not connected from root");
}

}  // namespace narrative
