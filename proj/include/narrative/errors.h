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

#ifndef NARRATIVE_ERRORS_H_
#define NARRATIVE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace narrative {

// Base class for every error caused by bad input data (as opposed to
// programming errors). The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Penman text that does not describe a single well-formed graph.
class MalformedPenman : public DataError {
 public:
  MalformedPenman(std::size_t position, std::string reason)
      : DataError("malformed penman at offset " + std::to_string(position) +
                  ": " + reason),
        position_(position),
        reason_(std::move(reason)) {}

  std::size_t position() const { return position_; }
  const std::string &reason() const { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

// Structural invariant violation when assembling an AmrGraph.
class InvalidGraph : public DataError {
 public:
  using DataError::DataError;
};

// Instance edges (after inverse-role normalization) contain a cycle.
class CyclicGraph : public InvalidGraph {
 public:
  using InvalidGraph::InvalidGraph;
};

// A subcorpus label other than the configured (i, j) pair.
class UnknownLabel : public DataError {
 public:
  explicit UnknownLabel(const std::string &label)
      : DataError("unknown subcorpus label '" + label + "'"), label_(label) {}
  const std::string &label() const { return label_; }

 private:
  std::string label_;
};

// One of the two subcorpora contributed no elements at all.
class EmptyCorpus : public DataError {
 public:
  using DataError::DataError;
};

class UnknownFrame : public DataError {
 public:
  explicit UnknownFrame(const std::string &frame)
      : DataError("frame '" + frame + "' does not occur in the corpus") {}
};

// Schema violation in a line-delimited record file.
class BadRecord : public DataError {
 public:
  BadRecord(std::size_t line, std::string reason)
      : DataError("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(std::move(reason)) {}

  std::size_t line() const { return line_; }
  const std::string &reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace narrative

#endif  // NARRATIVE_ERRORS_H_
