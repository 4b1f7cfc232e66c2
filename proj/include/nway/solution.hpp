/* Copyright 2026 The nway Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef NWAY_SOLUTION_HPP_
#define NWAY_SOLUTION_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nway {

// One candidate answer to a prompt.
struct Solution {
  std::size_t index = 0;
  std::string text;
  // File path or generation parameters; never contains credentials.
  std::string origin;
};

// The prompt plus its ordered candidates; indices are 0..N-1.
struct SolutionSet {
  std::optional<std::string> prompt;
  std::vector<Solution> solutions;
  std::chrono::system_clock::time_point created_at = std::chrono::system_clock::now();
  std::optional<std::string> provider;

  std::size_t size() const { return solutions.size(); }
  bool empty() const { return solutions.empty(); }

  // Appends with the next contiguous index.
  Solution& Add(std::string text, std::string origin = {});
};

SolutionSet MakeSolutionSet(std::span<const std::string> texts,
                            std::optional<std::string> prompt = std::nullopt);

// One solution per file, in argument order. Throws Error(kDomain) on an empty
// list, Error(kIo) on unreadable files and EncodingError on bad UTF-8; both
// messages name the path.
SolutionSet LoadSolutions(std::span<const std::filesystem::path> paths,
                          std::optional<std::string> prompt = std::nullopt);

// Writes solution_01.txt, solution_02.txt, ... into `dir` (created if
// missing). Returns the written paths in order.
std::vector<std::filesystem::path> SaveSolutions(const SolutionSet& set,
                                                 const std::filesystem::path& dir,
                                                 const std::string& extension = ".txt");

}  // namespace nway

#endif  // NWAY_SOLUTION_HPP_
