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

#ifndef NARRATIVE_TESTING_FIXTURES_H_
#define NARRATIVE_TESTING_FIXTURES_H_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "narrative/miner.h"

namespace narrative::testing {

// "Doctors prevent the spread of the virus by vaccinating Pfizer ... 2021."
inline constexpr const char *kDoctorGraph = R"((p / prevent-01
      :ARG0 (d / doctor)
      :ARG1 (s / spread-03
            :ARG1 (v / virus))
      :ARG3 (v2 / vaccinate-01
            :ARG0 d
            :ARG1 (c / company
                  :name (n / name
                        :op1 "Pfizer")))
      :time (d2 / date-entity
            :year 2021)))";

// Order-insensitive comparison of (kind, label, role) triples.
inline std::vector<std::string> ElementKeys(
    const std::vector<NarrativeElement> &elements) {
  std::vector<std::string> keys;
  for (const auto &e : elements) {
    keys.push_back(std::string(KindName(e.kind)) + "|" + e.label + "|" +
                   e.role_context.value_or(""));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("amr-narratives-" + std::to_string(rd()) + "-" +
             std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  std::filesystem::path File(const std::string &name) const {
    return path_ / name;
  }
  std::string Write(const std::string &name, const std::string &contents) const {
    std::ofstream(File(name), std::ios::binary) << contents;
    return File(name).string();
  }

 private:
  std::filesystem::path path_;
};

inline std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace narrative::testing

#endif  // NARRATIVE_TESTING_FIXTURES_H_
