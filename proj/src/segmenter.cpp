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

#include "nway/segmenter.hpp"

#include <utility>

#include "nway/utf8.hpp"

namespace nway {
namespace {

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

bool IsSpaceByte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class Builder {
 public:
  explicit Builder(std::string_view text) : text_(text) {}

  void Emit(std::size_t begin, std::size_t end, UnitKind kind) {
    units_.push_back(
        Unit{std::string(text_.substr(begin, end - begin)), {begin, end}, kind});
  }

  std::vector<Unit> Take() { return std::move(units_); }

 private:
  std::string_view text_;
  std::vector<Unit> units_;
};

// End offset (exclusive) of a string literal opened at `open`, or nullopt if
// it is not closed on the same line.
std::optional<std::size_t> ScanStringLiteral(std::string_view text,
                                             std::size_t open) {
  const char quote = text[open];
  std::size_t i = open + 1;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') return std::nullopt;
    if (c == '\\') {
      // An escaped newline still ends the line.
      if (i + 1 < text.size() && text[i + 1] == '\n') return std::nullopt;
      i += (i + 1 < text.size()) ? 1 + utf8::SequenceLength(text[i + 1]) : 1;
      continue;
    }
    if (c == quote) return i + 1;
    i += utf8::SequenceLength(static_cast<unsigned char>(c));
  }
  return std::nullopt;
}

std::vector<Unit> SegmentTokens(std::string_view text) {
  Builder out(text);
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t j = i;
    if (IsSpaceByte(c)) {
      while (j < n && IsSpaceByte(text[j])) ++j;
      out.Emit(i, j, UnitKind::kWhitespace);
    } else if (IsWordByte(c)) {
      while (j < n && IsWordByte(text[j])) ++j;
      out.Emit(i, j, (c >= '0' && c <= '9') ? UnitKind::kNumber : UnitKind::kWord);
    } else if (c == '#') {
      while (j < n && text[j] != '\n') ++j;
      out.Emit(i, j, UnitKind::kComment);
    } else if (c == '\'' || c == '"') {
      if (auto end = ScanStringLiteral(text, i)) {
        j = *end;
        out.Emit(i, j, UnitKind::kString);
      } else {
        j = i + 1;
        out.Emit(i, j, UnitKind::kOperator);
      }
    } else {
      j = i + utf8::SequenceLength(c);
      out.Emit(i, j, UnitKind::kOperator);
    }
    i = j;
  }
  return out.Take();
}

}  // namespace

const char* UnitModeName(UnitMode mode) {
  switch (mode) {
    case UnitMode::kChar: return "char";
    case UnitMode::kToken: return "token";
    case UnitMode::kLine: return "line";
  }
  return "char";
}

std::optional<UnitMode> ParseUnitMode(std::string_view name) {
  if (name == "char") return UnitMode::kChar;
  if (name == "token") return UnitMode::kToken;
  if (name == "line") return UnitMode::kLine;
  return std::nullopt;
}

const char* UnitKindName(UnitKind kind) {
  switch (kind) {
    case UnitKind::kChar: return "char";
    case UnitKind::kWord: return "token-word";
    case UnitKind::kNumber: return "token-number";
    case UnitKind::kString: return "token-string";
    case UnitKind::kOperator: return "token-operator";
    case UnitKind::kWhitespace: return "token-whitespace";
    case UnitKind::kComment: return "token-comment";
    case UnitKind::kLine: return "line";
  }
  return "char";
}

std::vector<Unit> Segment(std::string_view text, UnitMode mode) {
  utf8::Validate(text);
  switch (mode) {
    case UnitMode::kChar: {
      Builder out(text);
      for (std::size_t i = 0; i < text.size();) {
        const std::size_t len = utf8::SequenceLength(text[i]);
        out.Emit(i, i + len, UnitKind::kChar);
        i += len;
      }
      return out.Take();
    }
    case UnitMode::kToken:
      return SegmentTokens(text);
    case UnitMode::kLine: {
      Builder out(text);
      std::size_t begin = 0;
      while (begin < text.size()) {
        const std::size_t nl = text.find('\n', begin);
        const std::size_t end = (nl == std::string_view::npos) ? text.size() : nl + 1;
        out.Emit(begin, end, UnitKind::kLine);
        begin = end;
      }
      return out.Take();
    }
  }
  return {};
}

}  // namespace nway
