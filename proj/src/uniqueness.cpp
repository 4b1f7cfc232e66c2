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

#include "nway/uniqueness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "nway/diff.hpp"
#include "nway/error.hpp"

namespace nway {
namespace {

// Below this many units in total the pairwise diffs run on the caller thread.
constexpr std::size_t kParallelThreshold = 4096;

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

const char* HueName(Hue hue) {
  switch (hue) {
    case Hue::kBlue: return "blue";
    case Hue::kRed: return "red";
    case Hue::kGreen: return "green";
  }
  return "blue";
}

std::optional<Hue> ParseHue(std::string_view name) {
  if (name == "blue") return Hue::kBlue;
  if (name == "red") return Hue::kRed;
  if (name == "green") return Hue::kGreen;
  return std::nullopt;
}

std::string Rgb::Hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "#";
  for (std::uint8_t c : {r, g, b}) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

std::optional<Rgb> Rgb::FromHex(std::string_view hex) {
  if (hex.size() != 7 || hex[0] != '#') return std::nullopt;
  std::uint8_t channels[3];
  for (int c = 0; c < 3; ++c) {
    const int hi = HexDigit(hex[1 + 2 * c]);
    const int lo = HexDigit(hex[2 + 2 * c]);
    if (hi < 0 || lo < 0) return std::nullopt;
    channels[c] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Rgb{channels[0], channels[1], channels[2]};
}

int ColorLevel(int score, int n, const ColorScale& scale) {
  if (n < 1) throw Error(ErrorCode::kDomain, "solution count must be at least 1");
  if (score < 0 || score > n - 1) {
    throw Error(ErrorCode::kDomain, "uniqueness score " + std::to_string(score) +
                                        " outside [0, " + std::to_string(n - 1) + "]");
  }
  if (score == 0) return 0;
  // round(span * score / (n - 1)) with halves rounded up, in integers.
  const long denom = n - 1;
  const long scaled = (2L * scale.span * score + denom) / (2L * denom);
  return static_cast<int>(std::min<long>(scale.floor + scaled, scale.ceiling));
}

Rgb Color(int score, int n, const ColorScale& scale) {
  const int level = ColorLevel(score, n, scale);
  if (level == 0) return scale.common;
  const auto v = static_cast<std::uint8_t>(level);
  switch (scale.hue) {
    case Hue::kRed: return {v, 0, 0};
    case Hue::kGreen: return {0, v, 0};
    case Hue::kBlue: break;
  }
  return {0, 0, v};
}

UniquenessMap ScoreUnits(std::span<const std::vector<Unit>> solutions,
                         unsigned parallelism) {
  const std::size_t n = solutions.size();
  if (n == 0) throw Error(ErrorCode::kDomain, "cannot score an empty solution set");

  SymbolTable table;
  std::vector<std::vector<std::int32_t>> symbols;
  symbols.reserve(n);
  std::size_t total_units = 0;
  for (const auto& units : solutions) {
    symbols.push_back(table.Intern(units));
    total_units += units.size();
  }

  // Ordered pairs (other, target): diff(other, target) decides which units of
  // `target` are matched. Self pairs cannot add uniqueness and are skipped.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t target = 0; target < n; ++target) {
    for (std::size_t other = 0; other < n; ++other) {
      if (other != target) pairs.emplace_back(other, target);
    }
  }
  std::vector<std::vector<bool>> masks(pairs.size());
  auto run_pair = [&](std::size_t p) {
    const auto [other, target] = pairs[p];
    masks[p] = MatchedInB(DiffSymbols(symbols[other], symbols[target]));
  };

  unsigned workers = parallelism != 0 ? parallelism
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, pairs.size()));
  if (workers <= 1 || total_units < kParallelThreshold) {
    for (std::size_t p = 0; p < pairs.size(); ++p) run_pair(p);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t p = next++; p < pairs.size(); p = next++) run_pair(p);
      });
    }
  }

  UniquenessMap map;
  map.per_solution.resize(n);
  for (std::size_t i = 0; i < n; ++i) map.per_solution[i].assign(solutions[i].size(), 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto& scores = map.per_solution[pairs[p].second];
    const auto& mask = masks[p];
    for (std::size_t k = 0; k < scores.size(); ++k) {
      if (!mask[k]) ++scores[k];
    }
  }
  return map;
}

UniquenessMap Score(const SolutionSet& solutions, UnitMode mode, unsigned parallelism) {
  std::vector<std::vector<Unit>> units;
  units.reserve(solutions.size());
  for (const auto& s : solutions.solutions) units.push_back(Segment(s.text, mode));
  return ScoreUnits(units, parallelism);
}

std::string HighlightedDocument::Text() const {
  std::string out;
  for (const auto& span : spans) out += span.text;
  return out;
}

std::vector<HighlightedDocument> Highlight(const SolutionSet& solutions, UnitMode mode,
                                           const ColorScale& scale) {
  if (solutions.empty()) throw Error(ErrorCode::kDomain, "cannot highlight an empty solution set");
  std::vector<std::vector<Unit>> units;
  units.reserve(solutions.size());
  for (const auto& s : solutions.solutions) units.push_back(Segment(s.text, mode));
  const UniquenessMap map = ScoreUnits(units);
  const int n = static_cast<int>(solutions.size());

  std::vector<HighlightedDocument> docs;
  docs.reserve(solutions.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    HighlightedDocument doc;
    doc.index = solutions.solutions[i].index;
    const auto& scores = map.per_solution[i];
    for (std::size_t k = 0; k < units[i].size(); ++k) {
      if (!doc.spans.empty() && doc.spans.back().score == scores[k]) {
        doc.spans.back().text += units[i][k].text;
      } else {
        doc.spans.push_back({units[i][k].text, scores[k], Color(scores[k], n, scale)});
      }
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace nway
