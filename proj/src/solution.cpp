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

#include "nway/solution.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <utility>

#include "nway/error.hpp"
#include "nway/utf8.hpp"

namespace nway {

Solution& SolutionSet::Add(std::string text, std::string origin) {
  solutions.push_back(Solution{solutions.size(), std::move(text), std::move(origin)});
  return solutions.back();
}

SolutionSet MakeSolutionSet(std::span<const std::string> texts,
                            std::optional<std::string> prompt) {
  SolutionSet set;
  set.prompt = std::move(prompt);
  for (const auto& text : texts) set.Add(text);
  return set;
}

SolutionSet LoadSolutions(std::span<const std::filesystem::path> paths,
                          std::optional<std::string> prompt) {
  if (paths.empty()) {
    throw Error(ErrorCode::kDomain, "at least one solution file is required");
  }
  SolutionSet set;
  set.prompt = std::move(prompt);
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, path.string() + ": cannot open file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorCode::kIo, path.string() + ": read failed");
    utf8::Validate(text, path.string());
    set.Add(std::move(text), path.string());
  }
  return set;
}

std::vector<std::filesystem::path> SaveSolutions(const SolutionSet& set,
                                                 const std::filesystem::path& dir,
                                                 const std::string& extension) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& solution : set.solutions) {
    char name[32];
    std::snprintf(name, sizeof(name), "solution_%02zu", solution.index + 1);
    const auto path = dir / (std::string(name) + extension);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(solution.text.data(), static_cast<std::streamsize>(solution.text.size()));
    if (!out) throw Error(ErrorCode::kIo, path.string() + ": write failed");
    written.push_back(path);
  }
  return written;
}

}  // namespace nway
