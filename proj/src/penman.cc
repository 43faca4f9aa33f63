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

#include "narrative/penman.h"

#include <cctype>
#include <optional>
#include <regex>
#include <unordered_map>
#include <unordered_set>

#include "narrative/errors.h"

namespace narrative {

namespace {

enum class TokenType { kOpen, kClose, kSlash, kRole, kString, kSymbol, kEnd };

struct Token {
  TokenType type;
  std::string text;  // role without ':', string content unescaped
  std::size_t position;
};

bool IsDelimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
         c == ')' || c == '"' || c == '/';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token Next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {TokenType::kEnd, "", start};
    const char c = text_[pos_];
    switch (c) {
      case '(':
        ++pos_;
        return {TokenType::kOpen, "(", start};
      case ')':
        ++pos_;
        return {TokenType::kClose, ")", start};
      case '/':
        ++pos_;
        return {TokenType::kSlash, "/", start};
      case '"':
        return ReadString();
      case ':': {
        ++pos_;
        std::string role = ReadSymbolChars();
        if (role.empty()) throw MalformedPenman(start, "empty role");
        return {TokenType::kRole, std::move(role), start};
      }
      default:
        return {TokenType::kSymbol, ReadSymbolChars(), start};
    }
  }

 private:
  std::string ReadSymbolChars() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Token ReadString() {
    const std::size_t start = pos_++;
    std::string out;
    while (pos_ < text_.size()) {
      char c = text_[pos_++];
      if (c == '"') return {TokenType::kString, std::move(out), start};
      if (c == '\\') {
        if (pos_ >= text_.size()) break;
        c = text_[pos_++];
      }
      out.push_back(c);
    }
    throw MalformedPenman(start, "unterminated string");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool LooksNumeric(const std::string &symbol) {
  static const std::regex kNumber(
      R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  return std::regex_match(symbol, kNumber);
}

bool LooksLikeVariable(const std::string &symbol) {
  if (symbol.empty() || !std::islower(static_cast<unsigned char>(symbol[0]))) {
    return false;
  }
  for (std::size_t k = 1; k < symbol.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(symbol[k]))) return false;
  }
  return true;
}

bool IsInverseRole(const std::string &role) {
  return role.size() > 3 && role.compare(role.size() - 3, 3, "-of") == 0;
}

// Edge whose target may still be an unresolved bare symbol.
struct PendingEdge {
  std::string owner;  // variable of the enclosing node
  std::string role;   // as written
  std::size_t role_position;
  std::optional<std::string> variable;  // nested node or symbol to resolve
  std::optional<Attribute> constant;
  std::size_t value_position = 0;
  bool bare_symbol = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { Advance(); }

  AmrGraph Parse(int sentence_index) {
    if (current_.type != TokenType::kOpen) {
      throw MalformedPenman(current_.position, "expected '('");
    }
    std::string root = ParseNode();
    if (current_.type != TokenType::kEnd) {
      throw MalformedPenman(current_.position,
                            "unexpected trailing input '" + current_.text +
                                "'");
    }
    return Assemble(std::move(root), sentence_index);
  }

 private:
  void Advance() { current_ = lexer_.Next(); }

  // Consumes "( var / concept roles* )" and returns the variable.
  std::string ParseNode() {
    const std::size_t open = current_.position;
    Advance();
    if (current_.type != TokenType::kSymbol) {
      throw MalformedPenman(current_.position, "expected variable");
    }
    std::string variable = current_.text;
    const std::size_t var_position = current_.position;
    if (!declared_.insert(variable).second) {
      throw MalformedPenman(var_position,
                            "duplicate variable '" + variable + "'");
    }
    Advance();
    if (current_.type != TokenType::kSlash) {
      throw MalformedPenman(current_.position,
                            "empty concept for '" + variable + "'");
    }
    Advance();
    if (current_.type != TokenType::kSymbol) {
      throw MalformedPenman(current_.position,
                            "empty concept for '" + variable + "'");
    }
    instances_.push_back({variable, current_.text});
    Advance();

    while (current_.type == TokenType::kRole) {
      PendingEdge edge;
      edge.owner = variable;
      edge.role = current_.text;
      edge.role_position = current_.position;
      Advance();
      edge.value_position = current_.position;
      // Reserve the slot now so edges keep textual (preorder) order.
      const std::size_t slot = edges_.size();
      edges_.push_back(edge);
      switch (current_.type) {
        case TokenType::kOpen:
          edges_[slot].variable = ParseNode();
          break;
        case TokenType::kString:
          edges_[slot].constant =
              Attribute{current_.text, AttributeClass::kString};
          Advance();
          break;
        case TokenType::kSymbol:
          edges_[slot].variable = current_.text;
          edges_[slot].bare_symbol = true;
          Advance();
          break;
        default:
          throw MalformedPenman(current_.position,
                                "missing value for role ':" + edge.role + "'");
      }
    }
    if (current_.type == TokenType::kEnd) {
      throw MalformedPenman(open, "unbalanced parenthesis");
    }
    if (current_.type != TokenType::kClose) {
      throw MalformedPenman(current_.position,
                            "unexpected '" + current_.text + "'");
    }
    Advance();
    return variable;
  }

  AmrGraph Assemble(std::string root, int sentence_index) {
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (PendingEdge &pending : edges_) {
      std::optional<EdgeTarget> target;
      if (pending.constant) {
        target = EdgeTarget::Constant(std::move(*pending.constant));
      } else if (!pending.bare_symbol || declared_.count(*pending.variable)) {
        target = EdgeTarget::Variable(*pending.variable);
      } else if (LooksNumeric(*pending.variable)) {
        target = EdgeTarget::Constant(
            {*pending.variable, AttributeClass::kNumber});
      } else if (LooksLikeVariable(*pending.variable)) {
        throw MalformedPenman(
            pending.value_position,
            "undeclared variable '" + *pending.variable + "'");
      } else {
        target = EdgeTarget::Constant(
            {*pending.variable, AttributeClass::kSymbol});
      }

      std::string role = pending.role;
      if (IsInverseRole(role)) {
        if (!target->is_variable()) {
          throw MalformedPenman(pending.role_position,
                                "inverse role ':" + role +
                                    "' on a constant value");
        }
        role.resize(role.size() - 3);
        edges.push_back(
            {target->variable(), role, EdgeTarget::Variable(pending.owner)});
      } else {
        if (role == "-of") {
          throw MalformedPenman(pending.role_position, "empty role");
        }
        edges.push_back({pending.owner, role, std::move(*target)});
      }
    }
    return AmrGraph(std::move(root), std::move(instances_), std::move(edges),
                    sentence_index);
  }

  Lexer lexer_;
  Token current_{TokenType::kEnd, "", 0};
  std::unordered_set<std::string> declared_;
  std::vector<Instance> instances_;
  std::vector<PendingEdge> edges_;
};

std::string QuoteString(const std::string &value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string RenderConstant(const Attribute &a) {
  return a.value_class == AttributeClass::kString ? QuoteString(a.value)
                                                  : a.value;
}

class Serializer {
 public:
  Serializer(const AmrGraph &graph, PenmanStyle style)
      : graph_(graph), style_(style), emitted_(graph.edges().size(), false) {
    const auto edges = graph.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      incident_[edges[k].source].push_back(k);
      if (edges[k].target.is_variable() &&
          edges[k].target.variable() != edges[k].source) {
        incident_[edges[k].target.variable()].push_back(k);
      }
    }
    // Nodes reachable along forward edges never need an inverse role.
    std::vector<std::string> stack = {graph.root()};
    forward_.insert(graph.root());
    while (!stack.empty()) {
      const std::string v = stack.back();
      stack.pop_back();
      for (std::size_t k : incident_[v]) {
        const Edge &e = edges[k];
        if (e.source == v && e.target.is_variable() &&
            forward_.insert(e.target.variable()).second) {
          stack.push_back(e.target.variable());
        }
      }
    }
  }

  std::string Run() {
    WriteNode(graph_.root(), 0);
    return std::move(out_);
  }

 private:
  void WriteNode(const std::string &variable, int depth) {
    expanded_.insert(variable);
    out_ += "(" + variable + " / " + graph_.LabelOf(variable);
    auto it = incident_.find(variable);
    if (it != incident_.end()) {
      for (std::size_t k : it->second) {
        if (emitted_[k]) continue;
        const Edge &e = graph_.edges()[k];
        if (e.source != variable && forward_.count(e.source)) continue;
        emitted_[k] = true;
        Break(depth + 1);
        if (e.source == variable) {
          out_ += ":" + e.role + " ";
          if (e.target.is_attribute()) {
            out_ += RenderConstant(e.target.attribute());
          } else {
            WriteReference(e.target.variable(), depth + 1);
          }
        } else {
          out_ += ":" + e.role + "-of ";
          WriteReference(e.source, depth + 1);
        }
      }
    }
    out_ += ")";
  }

  void WriteReference(const std::string &variable, int depth) {
    if (expanded_.count(variable)) {
      out_ += variable;
    } else {
      WriteNode(variable, depth);
    }
  }

  void Break(int depth) {
    if (style_ == PenmanStyle::kCompact) {
      out_ += " ";
    } else {
      out_ += "\n";
      out_.append(static_cast<std::size_t>(depth) * 4, ' ');
    }
  }

  const AmrGraph &graph_;
  PenmanStyle style_;
  std::vector<bool> emitted_;
  std::unordered_map<std::string, std::vector<std::size_t>> incident_;
  std::unordered_set<std::string> expanded_;
  std::unordered_set<std::string> forward_;
  std::string out_;
};

}  // namespace

AmrGraph ParsePenman(std::string_view text, int sentence_index) {
  return Parser(text).Parse(sentence_index);
}

std::string SerializePenman(const AmrGraph &graph, PenmanStyle style) {
  return Serializer(graph, style).Run();
}

}  // namespace narrative
