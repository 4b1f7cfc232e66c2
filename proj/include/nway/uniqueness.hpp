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

#ifndef NWAY_UNIQUENESS_HPP_
#define NWAY_UNIQUENESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nway/segmenter.hpp"
#include "nway/solution.hpp"

namespace nway {

enum class Hue { kBlue, kRed, kGreen };

const char* HueName(Hue hue);
std::optional<Hue> ParseHue(std::string_view name);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  // "#rrggbb", lowercase.
  std::string Hex() const;
  static std::optional<Rgb> FromHex(std::string_view hex);

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Score -> color. Unique units get a level in [floor, ceiling] on the hue
// channel; fully common units get `common`.
struct ColorScale {
  int floor = 127;
  int span = 128;
  int ceiling = 255;
  Hue hue = Hue::kBlue;
  Rgb common{0, 0, 0};
};

// per_solution[i][k]: number of other solutions in which unit k of solution i
// has no aligned match. Always in [0, N-1].
struct UniquenessMap {
  std::vector<std::vector<int>> per_solution;
};

// Channel level for `score` out of `n` solutions: 0 for score 0, otherwise
// floor + round(span * score / (n - 1)), capped at ceiling. For n = 5 this is
// exactly 127 + 32 * score. Throws Error(kDomain) when score is outside
// [0, n-1] or n < 1.
int ColorLevel(int score, int n, const ColorScale& scale = {});
Rgb Color(int score, int n, const ColorScale& scale = {});

// Scores already-segmented solutions. `parallelism` caps worker threads for
// the N(N-1) pairwise diffs; 0 picks a default. Throws Error(kDomain) when
// there are no solutions.
UniquenessMap ScoreUnits(std::span<const std::vector<Unit>> solutions,
                         unsigned parallelism = 0);

UniquenessMap Score(const SolutionSet& solutions, UnitMode mode,
                    unsigned parallelism = 0);

struct HighlightSpan {
  std::string text;
  int score = 0;
  Rgb color;

  friend bool operator==(const HighlightSpan&, const HighlightSpan&) = default;
};

// Render-ready form of one solution. Spans tile the text and adjacent spans
// always differ in score.
struct HighlightedDocument {
  std::size_t index = 0;
  std::vector<HighlightSpan> spans;

  std::string Text() const;
  friend bool operator==(const HighlightedDocument&, const HighlightedDocument&) = default;
};

std::vector<HighlightedDocument> Highlight(const SolutionSet& solutions, UnitMode mode,
                                           const ColorScale& scale = {});

}  // namespace nway

#endif  // NWAY_UNIQUENESS_HPP_
