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

#ifndef NWAY_SEGMENTER_HPP_
#define NWAY_SEGMENTER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nway {

// Granularity at which solutions are aligned and scored.
enum class UnitMode { kChar, kToken, kLine };

const char* UnitModeName(UnitMode mode);
std::optional<UnitMode> ParseUnitMode(std::string_view name);

enum class UnitKind {
  kChar,
  kWord,
  kNumber,
  kString,
  kOperator,
  kWhitespace,
  kComment,
  kLine,
};

const char* UnitKindName(UnitKind kind);

// Half-open byte offsets into the source text.
struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const ByteRange&, const ByteRange&) = default;
};

// One comparison unit. `text` is the exact source substring, including any
// whitespace the unit owns.
struct Unit {
  std::string text;
  ByteRange range;
  UnitKind kind = UnitKind::kChar;

  friend bool operator==(const Unit&, const Unit&) = default;
};

// Splits `text` into units whose texts concatenate back to `text` and whose
// ranges tile [0, text.size()).
//
//   kChar   one unit per Unicode scalar value
//   kToken  language-agnostic lexer: [A-Za-z0-9_]+ words/numbers, '...' and
//           "..." literals with backslash escapes (single-line), `#` comments
//           to end of line, one unit per whitespace run, and every other
//           scalar as its own operator token
//   kLine   one unit per line, each keeping its trailing '\n'
//
// Throws EncodingError on malformed UTF-8.
std::vector<Unit> Segment(std::string_view text, UnitMode mode);

}  // namespace nway

#endif  // NWAY_SEGMENTER_HPP_
