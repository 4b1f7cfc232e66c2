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

#include "nway/service.hpp"

#include <gtest/gtest.h>
#include <httplib.h>

#include <chrono>
#include <fstream>
#include <string>
#include <thread>

#include <json.hpp>

#include "nway/render.hpp"
#include "support/mock_provider.hpp"

namespace nway {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using testing::MockProvider;

const fs::path kFixtures = NWAY_FIXTURES_DIR;
const std::string kSecret = "sk-service-secret-9";

ProviderConfig MockConfig(const MockProvider& mock) {
  ProviderConfig c;
  c.base_url = mock.base_url();
  c.api_key = kSecret;
  c.backoff = std::chrono::milliseconds(1);
  c.timeout = std::chrono::milliseconds(5000);
  return c;
}

TEST(CompareServiceTest, SolutionsForm) {
  CompareService service{ProviderConfig{}};
  const auto reply =
      service.HandleCompare(R"({"solutions":["ab","ab","xy"],"unit":"char","hue":"red"})");
  ASSERT_EQ(reply.status, 200) << reply.body;
  EXPECT_EQ(reply.content_type, "application/json");
  const auto doc = ParseComparisonJson(reply.body);
  EXPECT_EQ(doc.n, 3);
  EXPECT_EQ(doc.hue, Hue::kRed);
  EXPECT_EQ(doc.solutions[2].spans[0].color, (Rgb{255, 0, 0}));
  EXPECT_FALSE(json::parse(reply.body).contains("raw_solutions"));
}

TEST(CompareServiceTest, PromptFormUsesProvider) {
  const fs::path dir = kFixtures / "provider/max_element";
  auto mock = MockProvider::ReplayFixture(dir);
  CompareService service{MockConfig(*mock)};
  const auto reply = service.HandleCompare(
      R"({"prompt":"Write a Python function that returns the largest element in a list."})");
  ASSERT_EQ(reply.status, 200) << reply.body;
  const auto body = json::parse(reply.body);
  EXPECT_EQ(body["n"], 5);
  ASSERT_EQ(body["raw_solutions"].size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(body["raw_solutions"][i],
              testing::ReadFile(dir / ("expected_" + std::to_string(i) + ".txt")));
  }
  EXPECT_EQ(body["prompt"], "Write a Python function that returns the largest element in a list.");
  EXPECT_NO_THROW(ParseComparisonJson(reply.body));
}

TEST(CompareServiceTest, SampleCountAndOverrides) {
  std::string seen_model;
  CompareService service{ProviderConfig{},
                         [&](const std::string& prompt, const ProviderConfig& config) {
                           seen_model = config.model;
                           std::vector<std::string> texts(config.samples, prompt);
                           return MakeSolutionSet(texts, prompt);
                         }};
  const auto reply = service.HandleCompare(
      R"({"prompt":"p","samples":3,"provider":{"model":"m2","temperature":0.3}})");
  ASSERT_EQ(reply.status, 200) << reply.body;
  EXPECT_EQ(json::parse(reply.body)["n"], 3);
  EXPECT_EQ(seen_model, "m2");
}

TEST(CompareServiceTest, BadRequests) {
  CompareService service{ProviderConfig{}};
  EXPECT_EQ(service.HandleCompare(R"({"prompt":"p","solutions":["a"]})").status, 400);
  EXPECT_EQ(service.HandleCompare(R"({})").status, 400);
  EXPECT_EQ(service.HandleCompare("not json").status, 400);
  EXPECT_EQ(service.HandleCompare("[1]").status, 400);
  EXPECT_EQ(service.HandleCompare(R"({"solutions":["a"],"unit":"word"})").status, 400);
  EXPECT_EQ(service.HandleCompare(R"({"solutions":["a"],"hue":"pink"})").status, 400);
  EXPECT_EQ(service.HandleCompare(R"({"solutions":[1]})").status, 400);
  EXPECT_EQ(service.HandleCompare(R"({"prompt":""})").status, 400);
  EXPECT_EQ(service.HandleCompare(R"({"prompt":"p","samples":0})").status, 400);
  EXPECT_EQ(service.HandleCompare(R"({"prompt":"p","samples":33})").status, 400);
  EXPECT_EQ(service.HandleCompare(R"({"solutions":["é", "a"]})").status, 200);
}

TEST(CompareServiceTest, EmptySolutionsIsUnprocessable) {
  CompareService service{ProviderConfig{}};
  const auto reply = service.HandleCompare(R"({"solutions":[]})");
  EXPECT_EQ(reply.status, 422);
  EXPECT_TRUE(json::parse(reply.body).contains("error"));
}

TEST(CompareServiceTest, ProviderFailureIsBadGateway) {
  auto mock = MockProvider::AlwaysStatus(500, "upstream says " + kSecret);
  auto config = MockConfig(*mock);
  config.retries = 0;
  CompareService service{config};
  const auto reply = service.HandleCompare(R"({"prompt":"p"})");
  EXPECT_EQ(reply.status, 502);
  EXPECT_EQ(reply.body.find(kSecret), std::string::npos);
  EXPECT_TRUE(json::parse(reply.body).contains("error"));
}

TEST(CompareServiceTest, UnreachableProviderIsBadGateway) {
  ProviderConfig config;
  config.base_url = "http://127.0.0.1:" + std::to_string(testing::UnusedPort()) + "/v1";
  config.api_key = kSecret;
  config.retries = 0;
  CompareService service{config};
  const auto reply = service.HandleCompare(R"({"prompt":"p","samples":1})");
  EXPECT_EQ(reply.status, 502);
  EXPECT_EQ(reply.body.find(kSecret), std::string::npos);
}

TEST(CompareServiceTest, Health) {
  const auto reply = CompareService{ProviderConfig{}}.HandleHealth();
  EXPECT_EQ(reply.status, 200);
  const auto body = json::parse(reply.body);
  EXPECT_EQ(body["status"], "ok");
  EXPECT_EQ(body["version"], Version());
}

class ServerTest : public ::testing::Test {
 protected:
  void StartServer(ServiceConfig config) {
    config.port = 0;
    server_ = std::make_unique<Server>(std::move(config));
    port_ = server_->Bind();
    thread_ = std::thread([this] { server_->Listen(); });
    httplib::Client probe("127.0.0.1", port_);
    for (int i = 0; i < 200 && !probe.Get("/api/health"); ++i) {
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  }
  void TearDown() override {
    if (server_) server_->Stop();
    if (thread_.joinable()) thread_.join();
  }
  std::unique_ptr<Server> server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(ServerTest, ServesApiOverHttp) {
  StartServer({});
  EXPECT_GT(port_, 0);
  httplib::Client client("127.0.0.1", port_);
  auto health = client.Get("/api/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  auto res = client.Post("/api/compare", R"({"solutions":["abc","abd","abc"]})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(ParseComparisonJson(res->body).solutions[1].spans[1].score, 2);
  auto bad = client.Post("/api/compare", R"({"solutions":[]})", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 422);
  auto root = client.Get("/");
  ASSERT_TRUE(root);
  EXPECT_EQ(root->status, 200);
  EXPECT_NE(root->body.find("nway"), std::string::npos);
  EXPECT_FALSE(res->has_header("Access-Control-Allow-Origin"));
}

TEST_F(ServerTest, DevModeAddsCors) {
  ServiceConfig config;
  config.dev_cors = true;
  StartServer(config);
  httplib::Client client("127.0.0.1", port_);
  auto res = client.Get("/api/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  auto pre = client.Options("/api/compare");
  ASSERT_TRUE(pre);
  EXPECT_LT(pre->status, 300);
}

TEST_F(ServerTest, ServesStaticDir) {
  const fs::path dir = fs::temp_directory_path() / "nway_static_test";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "index.html") << "<p>ui build</p>";
  }
  ServiceConfig config;
  config.static_dir = dir;
  StartServer(config);
  httplib::Client client("127.0.0.1", port_);
  auto res = client.Get("/");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->body, "<p>ui build</p>");
  fs::remove_all(dir);
}

}  // namespace
}  // namespace nway
