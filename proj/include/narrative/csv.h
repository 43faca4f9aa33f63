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

#ifndef NARRATIVE_CSV_H_
#define NARRATIVE_CSV_H_

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace narrative {

// Fixed-point rendering that never prints "-0.0".
std::string FormatFixed(double value, int decimals);

// Shortest representation that parses back to the same double.
std::string FormatShortest(double value);

// Quotes a field when it contains a comma, quote, or line break.
std::string CsvField(std::string_view field);

// Joins already-rendered values with commas, quoting as needed.
std::string CsvRow(std::initializer_list<std::string_view> fields);

// Splits one CSV line, honouring double-quoted fields. Returns nullopt for
// an unterminated quote.
std::optional<std::vector<std::string>> SplitCsvLine(std::string_view line);

}  // namespace narrative

#endif  // NARRATIVE_CSV_H_
