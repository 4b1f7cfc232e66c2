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

#include "nway/render.hpp"

#include "nway/error.hpp"

namespace nway {
namespace {

using ojson = nlohmann::ordered_json;

constexpr std::string_view kReset = "\x1b[0m";

std::string Rule(std::size_t index) {
  return "── solution " + std::to_string(index + 1) + " ──\n";
}

constexpr std::string_view kHtmlHead = R"(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>)";

constexpr std::string_view kHtmlStyle = R"(</title>
<style>
body{font-family:system-ui,sans-serif;margin:1.5rem;background:#fff;color:#000}
h1.prompt{font-size:1.1rem;font-weight:600}
p.meta{color:#555;font-size:0.85rem}
.panels{display:flex;gap:1rem;align-items:flex-start;overflow-x:auto}
.panel{flex:1 1 0;min-width:18rem;border:1px solid #ccc;border-radius:4px}
.panel h2{font-size:0.85rem;margin:0;padding:0.4rem 0.6rem;background:#f3f3f3;border-bottom:1px solid #ccc}
pre.solution{margin:0;padding:0.6rem;font-family:ui-monospace,monospace;white-space:pre;overflow:auto}
</style>
</head>
<body>
)";

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "comparison document: " + what);
}

const nlohmann::json& Field(const nlohmann::json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) Malformed(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

ComparisonDocument Compare(const SolutionSet& set, UnitMode mode, Hue hue) {
  ColorScale scale;
  scale.hue = hue;
  ComparisonDocument doc;
  doc.prompt = set.prompt;
  doc.n = static_cast<int>(set.size());
  doc.mode = mode;
  doc.hue = hue;
  doc.solutions = Highlight(set, mode, scale);
  return doc;
}

std::string RenderAnsi(std::span<const HighlightedDocument> docs, bool color) {
  std::string out;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    if (d > 0) out += '\n';
    out += Rule(d);
    for (const auto& span : docs[d].spans) {
      if (!color || span.score == 0) {
        out += span.text;
        continue;
      }
      out += "\x1b[38;2;" + std::to_string(span.color.r) + ';' + std::to_string(span.color.g) +
             ';' + std::to_string(span.color.b) + 'm';
      out += span.text;
      out += kReset;
    }
  }
  return out;
}

std::string EscapeHtml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string RenderHtml(const ComparisonDocument& doc) {
  std::string out(kHtmlHead);
  out += doc.prompt ? EscapeHtml(*doc.prompt) : std::string("nway comparison");
  out += kHtmlStyle;
  if (doc.prompt) out += "<h1 class=\"prompt\">" + EscapeHtml(*doc.prompt) + "</h1>\n";
  out += "<p class=\"meta\">" + std::to_string(doc.n) + " solution" + (doc.n == 1 ? "" : "s") +
         " &middot; unit: " + UnitModeName(doc.mode) + " &middot; hue: " + HueName(doc.hue) +
         "</p>\n";
  out += "<div class=\"panels\">\n";
  for (std::size_t d = 0; d < doc.solutions.size(); ++d) {
    out += "<section class=\"panel\"><h2>solution " + std::to_string(d + 1) +
           "</h2><pre class=\"solution\">";
    for (const auto& span : doc.solutions[d].spans) {
      if (span.score == 0) {
        out += EscapeHtml(span.text);
      } else {
        out += "<span style=\"color:" + span.color.Hex() + "\">" + EscapeHtml(span.text) +
               "</span>";
      }
    }
    out += "</pre></section>\n";
  }
  out += "</div>\n</body>\n</html>\n";
  return out;
}

ojson ToJsonValue(const ComparisonDocument& doc) {
  ojson root = ojson::object();
  root["schema"] = kComparisonSchemaVersion;
  root["prompt"] = doc.prompt ? ojson(*doc.prompt) : ojson(nullptr);
  root["n"] = doc.n;
  root["mode"] = UnitModeName(doc.mode);
  root["hue"] = HueName(doc.hue);
  ojson solutions = ojson::array();
  for (const auto& sol : doc.solutions) {
    ojson spans = ojson::array();
    for (const auto& span : sol.spans) {
      ojson s = ojson::object();
      s["text"] = span.text;
      s["score"] = span.score;
      s["color"] = span.color.Hex();
      spans.push_back(std::move(s));
    }
    ojson entry = ojson::object();
    entry["index"] = sol.index;
    entry["spans"] = std::move(spans);
    solutions.push_back(std::move(entry));
  }
  root["solutions"] = std::move(solutions);
  return root;
}

std::string ToJson(const ComparisonDocument& doc, int indent) {
  return ToJsonValue(doc).dump(indent);
}

ComparisonDocument ComparisonFromJson(const nlohmann::json& value) {
  if (!value.is_object()) Malformed("top level must be an object");
  const auto& schema = Field(value, "schema");
  if (!schema.is_number_integer() || schema.get<int>() != kComparisonSchemaVersion) {
    Malformed("unsupported schema version");
  }
  ComparisonDocument doc;
  const auto& prompt = Field(value, "prompt");
  if (prompt.is_string()) {
    doc.prompt = prompt.get<std::string>();
  } else if (!prompt.is_null()) {
    Malformed("prompt must be a string or null");
  }
  const auto& n = Field(value, "n");
  if (!n.is_number_integer() || n.get<int>() < 1) Malformed("n must be a positive integer");
  doc.n = n.get<int>();
  const auto& mode = Field(value, "mode");
  const auto parsed_mode = mode.is_string() ? ParseUnitMode(mode.get<std::string>()) : std::nullopt;
  if (!parsed_mode) Malformed("unknown mode");
  doc.mode = *parsed_mode;
  const auto& hue = Field(value, "hue");
  const auto parsed_hue = hue.is_string() ? ParseHue(hue.get<std::string>()) : std::nullopt;
  if (!parsed_hue) Malformed("unknown hue");
  doc.hue = *parsed_hue;

  ColorScale scale;
  scale.hue = doc.hue;
  const auto& solutions = Field(value, "solutions");
  if (!solutions.is_array()) Malformed("solutions must be an array");
  if (static_cast<int>(solutions.size()) != doc.n) Malformed("n does not match solution count");
  for (const auto& entry : solutions) {
    if (!entry.is_object()) Malformed("solution entries must be objects");
    HighlightedDocument sol;
    const auto& index = Field(entry, "index");
    if (!index.is_number_unsigned()) Malformed("index must be a non-negative integer");
    sol.index = index.get<std::size_t>();
    const auto& spans = Field(entry, "spans");
    if (!spans.is_array()) Malformed("spans must be an array");
    for (const auto& s : spans) {
      if (!s.is_object()) Malformed("span entries must be objects");
      const auto& text = Field(s, "text");
      const auto& score = Field(s, "score");
      const auto& color = Field(s, "color");
      if (!text.is_string() || !score.is_number_integer() || !color.is_string()) {
        Malformed("span fields have wrong types");
      }
      const int sc = score.get<int>();
      if (sc < 0 || sc > doc.n - 1) Malformed("span score out of range");
      const auto rgb = Rgb::FromHex(color.get<std::string>());
      if (!rgb) Malformed("span color must be #rrggbb");
      if (*rgb != Color(sc, doc.n, scale)) Malformed("span color disagrees with its score");
      sol.spans.push_back({text.get<std::string>(), sc, *rgb});
    }
    doc.solutions.push_back(std::move(sol));
  }
  return doc;
}

ComparisonDocument ParseComparisonJson(std::string_view text) {
  const auto value = nlohmann::json::parse(text, nullptr, false);
  if (value.is_discarded()) Malformed("not valid JSON");
  return ComparisonFromJson(value);
}

}  // namespace nway
