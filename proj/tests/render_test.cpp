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

#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <string>
#include <vector>

#include "nway/error.hpp"
#include "support/generators.hpp"
#include "support/mock_provider.hpp"

namespace nway {
namespace {

namespace fs = std::filesystem;

const fs::path kFixtures = NWAY_FIXTURES_DIR;

ComparisonDocument CompareTexts(const std::vector<std::string>& texts, UnitMode mode,
                                std::optional<std::string> prompt = std::nullopt) {
  return Compare(MakeSolutionSet(texts, std::move(prompt)), mode);
}

SolutionSet HelloWorld() {
  std::vector<fs::path> paths;
  for (int i = 1; i <= 5; ++i) {
    paths.push_back(kFixtures / "hello_world" / ("solution_" + std::to_string(i) + ".py"));
  }
  return LoadSolutions(paths);
}

std::string StripAnsi(const std::string& s) {
  static const std::regex kEscape("\x1b\\[[0-9;]*m");
  return std::regex_replace(s, kEscape, "");
}

std::string StripTags(const std::string& s) {
  static const std::regex kTag("<[^>]*>");
  std::string out = std::regex_replace(s, kTag, "");
  const std::pair<std::string, std::string> entities[] = {
      {"&lt;", "<"}, {"&gt;", ">"}, {"&quot;", "\""}, {"&#39;", "'"}, {"&amp;", "&"}};
  for (const auto& [from, to] : entities) {
    for (std::size_t p = out.find(from); p != std::string::npos; p = out.find(from, p + to.size())) {
      out.replace(p, from.size(), to);
    }
  }
  return out;
}

std::vector<std::string> PreBodies(const std::string& html) {
  static const std::regex kPre("<pre class=\"solution\">([\\s\\S]*?)</pre>");
  std::vector<std::string> out;
  for (std::sregex_iterator it(html.begin(), html.end(), kPre), end; it != end; ++it) {
    out.push_back((*it)[1]);
  }
  return out;
}

TEST(AnsiTest, WrapsUniqueSpans) {
  const auto doc = CompareTexts({"abc", "abd", "abc"}, UnitMode::kChar);
  EXPECT_EQ(RenderAnsi(doc.solutions),
            "── solution 1 ──\nab\x1b[38;2;0;0;191mc\x1b[0m\n"
            "── solution 2 ──\nab\x1b[38;2;0;0;255md\x1b[0m\n"
            "── solution 3 ──\nab\x1b[38;2;0;0;191mc\x1b[0m");
}

TEST(AnsiTest, NoColorDropsEscapes) {
  const auto doc = CompareTexts({"abc", "abd"}, UnitMode::kChar);
  const std::string plain = RenderAnsi(doc.solutions, false);
  EXPECT_EQ(plain.find('\x1b'), std::string::npos);
  EXPECT_EQ(plain, "── solution 1 ──\nabc\n── solution 2 ──\nabd");
}

TEST(AnsiTest, StrippingRestoresSources) {
  const auto doc = Compare(HelloWorld(), UnitMode::kChar);
  std::string expected;
  const auto set = HelloWorld();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) expected += '\n';
    expected += "── solution " + std::to_string(i + 1) + " ──\n" + set.solutions[i].text;
  }
  EXPECT_EQ(StripAnsi(RenderAnsi(doc.solutions)), expected);
}

TEST(HtmlTest, SpanMarkupAndEscaping) {
  const auto doc = CompareTexts({"x = max(a<b)", "x = max(a<b)", "x = min(a<b)", "x = min(a<b)", "x = min(a<b)"},
                                UnitMode::kToken);
  const std::string html = RenderHtml(doc);
  EXPECT_NE(html.find("<span style=\"color:#0000bf\">min</span>"), std::string::npos);
  EXPECT_NE(html.find("a&lt;b"), std::string::npos);
  EXPECT_EQ(html.find("a<b"), std::string::npos);
  EXPECT_EQ(PreBodies(html).size(), 5u);
}

TEST(HtmlTest, EmptySolutionIsEmptyPanel) {
  const std::string html = RenderHtml(CompareTexts({"", "a"}, UnitMode::kChar));
  EXPECT_NE(html.find("<pre class=\"solution\"></pre>"), std::string::npos);
}

TEST(HtmlTest, PromptAndMeta) {
  const std::string html =
      RenderHtml(CompareTexts({"a", "b"}, UnitMode::kLine, std::string("Say <hi> & 'bye'")));
  EXPECT_NE(html.find("<h1 class=\"prompt\">Say &lt;hi&gt; &amp; &#39;bye&#39;</h1>"),
            std::string::npos);
  EXPECT_NE(html.find("2 solutions &middot; unit: line &middot; hue: blue"), std::string::npos);
  EXPECT_EQ(RenderHtml(CompareTexts({"a"}, UnitMode::kChar)).find("<h1"), std::string::npos);
}

TEST(HtmlTest, StrippingRestoresSources) {
  std::mt19937 rng(37);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<std::string> texts;
    for (int i = 0; i < 4; ++i) texts.push_back(testing::RandomUtf8(rng, 30) + "<&>\"'");
    for (auto mode : {UnitMode::kChar, UnitMode::kToken, UnitMode::kLine}) {
      const auto bodies = PreBodies(RenderHtml(CompareTexts(texts, mode)));
      ASSERT_EQ(bodies.size(), texts.size());
      for (std::size_t i = 0; i < texts.size(); ++i) ASSERT_EQ(StripTags(bodies[i]), texts[i]);
    }
  }
}

TEST(HtmlTest, Deterministic) {
  const auto a = RenderHtml(Compare(HelloWorld(), UnitMode::kChar));
  const auto b = RenderHtml(Compare(HelloWorld(), UnitMode::kChar));
  EXPECT_EQ(a, b);
}

TEST(HtmlTest, MatchesGolden) {
  const auto html = RenderHtml(Compare(HelloWorld(), UnitMode::kChar));
  EXPECT_EQ(html, testing::ReadFile(kFixtures / "golden/hello_world.html"));
}

TEST(JsonTest, FieldOrderAndValues) {
  const auto doc = CompareTexts({"ab", "ab", "xy"}, UnitMode::kChar, std::string("p"));
  const std::string compact = ToJson(doc, -1);
  EXPECT_EQ(compact,
            R"({"schema":1,"prompt":"p","n":3,"mode":"char","hue":"blue","solutions":[)"
            R"({"index":0,"spans":[{"text":"ab","score":1,"color":"#0000bf"}]},)"
            R"({"index":1,"spans":[{"text":"ab","score":1,"color":"#0000bf"}]},)"
            R"({"index":2,"spans":[{"text":"xy","score":2,"color":"#0000ff"}]}]})");
}

TEST(JsonTest, RoundTrip) {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::string> texts;
    for (int i = 0; i < 3; ++i) texts.push_back(testing::RandomUtf8(rng, 25));
    const auto doc = CompareTexts(texts, UnitMode::kToken, iter % 2 ? std::optional<std::string>("q")
                                                                     : std::nullopt);
    ASSERT_EQ(ParseComparisonJson(ToJson(doc)), doc);
  }
}

TEST(JsonTest, RejectsInconsistentColor) {
  auto value = ToJsonValue(CompareTexts({"a", "b"}, UnitMode::kChar));
  value["solutions"][0]["spans"][0]["color"] = "#ff0000";
  EXPECT_THROW(ParseComparisonJson(value.dump()), Error);
}

TEST(JsonTest, RejectsMalformed) {
  EXPECT_THROW(ParseComparisonJson("[]"), Error);
  EXPECT_THROW(ParseComparisonJson("{"), Error);
  EXPECT_THROW(ParseComparisonJson(R"({"schema":2})"), Error);
  auto value = ToJsonValue(CompareTexts({"a", "b"}, UnitMode::kChar));
  value["n"] = 3;
  EXPECT_THROW(ParseComparisonJson(value.dump()), Error);
}

TEST(CompareTest, HelloWorldScores) {
  const auto doc = Compare(HelloWorld(), UnitMode::kChar);
  ASSERT_EQ(doc.n, 5);
  const auto& third = doc.solutions[2];
  bool saw_comment = false;
  for (const auto& span : third.spans) {
    if (span.text.find("# Say hello to the world") != std::string::npos) {
      EXPECT_EQ(span.score, 4);
      EXPECT_EQ(span.color.Hex(), "#0000ff");
      saw_comment = true;
    }
  }
  EXPECT_TRUE(saw_comment);
}

}  // namespace
}  // namespace nway
