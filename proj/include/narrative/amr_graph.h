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

#ifndef NARRATIVE_AMR_GRAPH_H_
#define NARRATIVE_AMR_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace narrative {

enum class AttributeClass { kString, kNumber, kSymbol };

// Constant-valued leaf. For strings, `value` holds the content without the
// surrounding quotes and with escapes resolved; numbers and symbols keep the
// source token verbatim.
struct Attribute {
  std::string value;
  AttributeClass value_class = AttributeClass::kSymbol;

  bool operator==(const Attribute &) const = default;
};

// Either a reference to a declared instance or a constant.
class EdgeTarget {
 public:
  static EdgeTarget Variable(std::string id) {
    EdgeTarget t;
    t.value_ = VariableRef{std::move(id)};
    return t;
  }
  static EdgeTarget Constant(Attribute attribute) {
    EdgeTarget t;
    t.value_ = std::move(attribute);
    return t;
  }

  bool is_variable() const {
    return std::holds_alternative<VariableRef>(value_);
  }
  bool is_attribute() const { return !is_variable(); }

  // Only valid when is_variable().
  const std::string &variable() const {
    return std::get<VariableRef>(value_).id;
  }
  // Only valid when is_attribute().
  const Attribute &attribute() const { return std::get<Attribute>(value_); }

  bool operator==(const EdgeTarget &) const = default;

 private:
  struct VariableRef {
    std::string id;
    bool operator==(const VariableRef &) const = default;
  };

  EdgeTarget() = default;
  std::variant<VariableRef, Attribute> value_;
};

struct Edge {
  std::string source;
  std::string role;  // without leading ':' and never ending in "-of"
  EdgeTarget target;

  bool operator==(const Edge &) const = default;
};

struct Instance {
  std::string variable;
  std::string label;
};

// Concept label split into stem and optional PropBank sense suffix.
struct Concept {
  std::string label;
  std::optional<std::string> sense;

  static Concept FromLabel(std::string_view label);

  bool is_predicate() const { return sense.has_value(); }
  // Label without "-NN" sense suffix.
  std::string_view stem() const;
};

// True iff `label` ends in a hyphen followed by two or three digits and the
// part before the hyphen is nonempty (prevent-01, have-rel-role-91).
bool IsPredicate(std::string_view label);

// Rooted, connected, acyclic AMR graph of one sentence. Immutable once
// constructed; the constructor enforces every structural invariant and
// throws InvalidGraph (or CyclicGraph) otherwise.
class AmrGraph {
 public:
  AmrGraph(std::string root, std::vector<Instance> instances,
           std::vector<Edge> edges, int sentence_index = 0);

  const std::string &root() const { return root_; }
  // Declaration order.
  std::span<const Instance> instances() const { return instances_; }
  // Stored order.
  std::span<const Edge> edges() const { return edges_; }
  int sentence_index() const { return sentence_index_; }

  bool HasVariable(std::string_view variable) const;
  // Throws std::out_of_range for undeclared variables.
  const std::string &LabelOf(std::string_view variable) const;

  AmrGraph WithSentenceIndex(int sentence_index) const;

 private:
  void Validate() const;

  std::string root_;
  std::vector<Instance> instances_;
  std::vector<Edge> edges_;
  int sentence_index_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace narrative

#endif  // NARRATIVE_AMR_GRAPH_H_
