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

#ifndef NWAY_RENDER_HPP_
#define NWAY_RENDER_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nway/segmenter.hpp"
#include "nway/solution.hpp"
#include "nway/uniqueness.hpp"

namespace nway {

inline constexpr int kComparisonSchemaVersion = 1;

// Everything a renderer needs: the highlighted solutions plus the settings
// that produced them.
struct ComparisonDocument {
  std::optional<std::string> prompt;
  int n = 0;
  UnitMode mode = UnitMode::kChar;
  Hue hue = Hue::kBlue;
  std::vector<HighlightedDocument> solutions;

  friend bool operator==(const ComparisonDocument&, const ComparisonDocument&) = default;
};

// Segment, score and highlight `set` in one go.
ComparisonDocument Compare(const SolutionSet& set, UnitMode mode, Hue hue = Hue::kBlue);

// Truecolor terminal output. Each solution is introduced by a rule line
// "── solution k ──"; unique spans are wrapped in ESC[38;2;R;G;Bm ... ESC[0m and
// score-0 spans are written without escapes. `color = false` drops all
// escapes.
std::string RenderAnsi(std::span<const HighlightedDocument> docs, bool color = true);

// Self-contained HTML page with one <pre class="solution"> panel per
// solution. Byte-for-byte deterministic.
std::string RenderHtml(const ComparisonDocument& doc);

std::string EscapeHtml(std::string_view text);

// Wire format, field order fixed:
//   {schema, prompt, n, mode, hue,
//    solutions: [{index, spans: [{text, score, color: "#rrggbb"}]}]}
nlohmann::ordered_json ToJsonValue(const ComparisonDocument& doc);
std::string ToJson(const ComparisonDocument& doc, int indent = 2);

// Inverse of ToJson. Throws Error(kInvalidArgument) on malformed input,
// including span colors that disagree with the color law.
ComparisonDocument ComparisonFromJson(const nlohmann::json& value);
ComparisonDocument ParseComparisonJson(std::string_view text);

}  // namespace nway

#endif  // NWAY_RENDER_HPP_
