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

// Runs the built `nway` executable as a subprocess.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "nway/render.hpp"
#include "nway/service.hpp"
#include "support/mock_provider.hpp"

namespace nway {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using testing::MockProvider;
using testing::ReadFile;

const fs::path kFixtures = NWAY_FIXTURES_DIR;
const fs::path kCli = NWAY_CLI_PATH;
const std::string kMaxPrompt = "Write a Python function that returns the largest element in a list.";

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string Quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("nway_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // `env` is a prefix such as "NWAY_API_KEY=x"; the child never inherits the
  // caller's NWAY_* variables.
  RunResult Run(const std::vector<std::string>& args, const std::string& env = "") {
    std::string cmd = "env -u NWAY_API_KEY -u NWAY_BASE_URL " + env + " " + Quote(kCli.string());
    for (const auto& a : args) cmd += " " + Quote(a);
    cmd += " >" + Quote((dir_ / "stdout").string()) + " 2>" + Quote((dir_ / "stderr").string());
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = ReadFile(dir_ / "stdout");
    r.err = ReadFile(dir_ / "stderr");
    return r;
  }

  std::vector<std::string> HelloFiles() const {
    std::vector<std::string> out;
    for (int i = 1; i <= 5; ++i) {
      out.push_back((kFixtures / "hello_world" / ("solution_" + std::to_string(i) + ".py")).string());
    }
    return out;
  }

  fs::path dir_;
};

TEST_F(CliTest, CompareJson) {
  auto args = std::vector<std::string>{"compare", "--format", "json"};
  for (const auto& f : HelloFiles()) args.push_back(f);
  const auto r = Run(args);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  ASSERT_FALSE(r.out.empty());
  EXPECT_EQ(r.out.back(), '\n');
  const auto doc = ParseComparisonJson(r.out);
  EXPECT_EQ(doc.n, 5);
  bool has_four = false;
  for (const auto& s : doc.solutions[2].spans) has_four |= s.score == 4;
  EXPECT_TRUE(has_four);
}

TEST_F(CliTest, CompareHtmlMatchesGolden) {
  auto args = std::vector<std::string>{"compare", "--format", "html", "-o", (dir_ / "out.html").string()};
  for (const auto& f : HelloFiles()) args.push_back(f);
  const auto r = Run(args);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(ReadFile(dir_ / "out.html"), ReadFile(kFixtures / "golden/hello_world.html"));
}

TEST_F(CliTest, CompareAnsi) {
  auto files = HelloFiles();
  const auto r = Run({"compare", files[0], files[2]});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("── solution 2 ──"), std::string::npos);
  EXPECT_NE(r.out.find("\x1b[38;2;0;0;255m"), std::string::npos);
  const auto plain = Run({"compare", "--no-color", "--unit", "line", files[0], files[2]});
  EXPECT_EQ(plain.exit_code, 0);
  EXPECT_EQ(plain.out.find('\x1b'), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  const auto files = HelloFiles();
  EXPECT_EQ(Run({"compare", files[0]}).exit_code, 2);
  EXPECT_EQ(Run({"compare", "--unit", "word", files[0], files[1]}).exit_code, 2);
  EXPECT_EQ(Run({}).exit_code, 2);
  EXPECT_EQ(Run({"frobnicate"}).exit_code, 2);
}

TEST_F(CliTest, MissingFileIsIoError) {
  const auto r = Run({"compare", HelloFiles()[0], (dir_ / "nope.py").string()});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("nope.py"), std::string::npos);
}

TEST_F(CliTest, InvalidUtf8IsReported) {
  std::ofstream(dir_ / "bad.py", std::ios::binary) << "ok\xFF";
  const auto r = Run({"compare", HelloFiles()[0], (dir_ / "bad.py").string()});
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.err.find("bad.py"), std::string::npos);
  EXPECT_NE(r.err.find("offset 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, Version) {
  const auto r = Run({"--version"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find(Version()), std::string::npos);
}

TEST_F(CliTest, GenerateDefaultsToFiveSamples) {
  auto mock = MockProvider::ReplayFixture(kFixtures / "provider/max_element");
  const auto r = Run({"generate", kMaxPrompt, "--format", "html", "--base-url", mock->base_url(),
                      "--api-key", "sk-cli-secret"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::size_t panels = 0;
  for (std::size_t p = r.out.find("<pre class=\"solution\">"); p != std::string::npos;
       p = r.out.find("<pre class=\"solution\">", p + 1)) {
    ++panels;
  }
  EXPECT_EQ(panels, 5u);
  EXPECT_EQ(mock->request_count(), 5);
  EXPECT_EQ(r.out.find("sk-cli-secret"), std::string::npos);
}

TEST_F(CliTest, GenerateSampleCountAndSaveDir) {
  const fs::path fixture = kFixtures / "provider/max_element";
  auto mock = MockProvider::ReplayFixture(fixture);
  const auto r = Run({"generate", kMaxPrompt, "-n", "2", "--format", "json", "--save-dir",
                      (dir_ / "saved").string(), "--save-ext", ".py"},
                     "NWAY_BASE_URL=" + Quote(mock->base_url()));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["n"], 2);
  EXPECT_EQ(mock->request_count(), 2);
  EXPECT_EQ(ReadFile(dir_ / "saved/solution_01.py"), ReadFile(fixture / "expected_0.txt"));
  EXPECT_EQ(ReadFile(dir_ / "saved/solution_02.py"), ReadFile(fixture / "expected_1.txt"));
  EXPECT_FALSE(fs::exists(dir_ / "saved/solution_03.py"));
}

TEST_F(CliTest, ProviderDownLeavesNoOutput) {
  const std::string url = "http://127.0.0.1:" + std::to_string(testing::UnusedPort()) + "/v1";
  const auto r = Run({"generate", "p", "--base-url", url, "--retries", "0", "--api-key",
                      "sk-cli-secret", "-o", (dir_ / "out.json").string()});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_FALSE(fs::exists(dir_ / "out.json"));
  EXPECT_EQ(r.err.find("sk-cli-secret"), std::string::npos);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, ProviderHttpErrorExitsThree) {
  auto mock = MockProvider::AlwaysStatus(500, R"({"error":"down"})");
  const auto r = Run({"generate", "p", "--base-url", mock->base_url(), "--retries", "2"});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(mock->request_count(), 5 * 3);
  EXPECT_NE(r.err.find("500"), std::string::npos) << r.err;
}

TEST_F(CliTest, PrecedenceFlagOverEnvOverConfig) {
  auto good = MockProvider::ReplayFixture(kFixtures / "provider/max_element");
  auto bad = MockProvider::AlwaysStatus(404, R"({"error":"wrong server"})");
  const fs::path cfg = dir_ / "nway.conf";
  std::ofstream(cfg) << "# test config\nbase_url = " << bad->base_url() << "\nsamples = 1\n";

  // Config alone points at the wrong server.
  auto r = Run({"generate", kMaxPrompt, "--config", cfg.string(), "--format", "json"});
  EXPECT_EQ(r.exit_code, 3);

  // Environment beats config.
  r = Run({"generate", kMaxPrompt, "--config", cfg.string(), "--format", "json"},
          "NWAY_BASE_URL=" + Quote(good->base_url()));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["n"], 1);

  // Flag beats environment.
  r = Run({"generate", kMaxPrompt, "--config", cfg.string(), "--base-url", good->base_url(),
           "--format", "json"},
          "NWAY_BASE_URL=" + Quote(bad->base_url()));
  ASSERT_EQ(r.exit_code, 0) << r.err;
}

TEST_F(CliTest, ConfigErrorsAreUsageErrors) {
  const fs::path cfg = dir_ / "bad.conf";
  std::ofstream(cfg) << "colour = blue\n";
  const auto files = HelloFiles();
  EXPECT_EQ(Run({"compare", "--config", cfg.string(), files[0], files[1]}).exit_code, 2);
  std::ofstream(dir_ / "bad2.conf") << "retries = lots\n";
  EXPECT_EQ(Run({"compare", "--config", (dir_ / "bad2.conf").string(), files[0], files[1]}).exit_code, 2);
}

TEST_F(CliTest, ConfigSetsRenderDefaults) {
  const fs::path cfg = dir_ / "nway.conf";
  std::ofstream(cfg) << "format = json\nhue = green\n";
  const auto files = HelloFiles();
  const auto r = Run({"compare", "--config", cfg.string(), files[0], files[2]});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["hue"], "green");
}

}  // namespace
}  // namespace nway
