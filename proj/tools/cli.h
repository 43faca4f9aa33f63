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

#ifndef NARRATIVE_TOOLS_CLI_H_
#define NARRATIVE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace narrative {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Entry point of the amr-narratives tool. Subcommands:
//   mine <corpus.jsonl> [-o elements.jsonl] [--threads N]
//   stats <elements.jsonl | corpus.jsonl --corpus> [--json] [--counts F]
//   compare <elements.jsonl> --kind K [--top N] [--i A --j B] [-o F]
//   triples <corpus.jsonl> --frame F [--side ARG0|ARG1] [--render] [-o F]
//   report <elements.jsonl> [--coords coords.csv] [--top N] [-o F]
//   validate <corpus.jsonl>
// Output without -o goes to `out`; diagnostics go to `err`.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

// Convenience for tests; args excludes the program name.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace narrative

#endif  // NARRATIVE_TOOLS_CLI_H_
