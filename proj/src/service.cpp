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

#include <httplib.h>

#include <utility>

#include <json.hpp>

#include "nway/error.hpp"
#include "nway/render.hpp"

namespace nway {
namespace {

using json = nlohmann::json;

HttpReply JsonError(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

constexpr std::string_view kStubPage = R"(<!DOCTYPE html>
<html lang="en">
<head><meta charset="utf-8"><title>nway</title></head>
<body>
<p>The nway comparison service is running. UI assets are not installed;
start the server with <code>--static-dir</code> pointing at a built UI, or use
<code>POST /api/compare</code> directly.</p>
</body>
</html>
)";

}  // namespace

const char* Version() { return NWAY_VERSION_STRING; }

CompareService::CompareService(ProviderConfig provider, GenerateFn generate)
    : provider_(std::move(provider)), generate_(std::move(generate)) {
  if (!generate_) {
    generate_ = [](const std::string& prompt, const ProviderConfig& config) {
      return LlmClient(config).Generate(prompt);
    };
  }
}

HttpReply CompareService::HandleHealth() const {
  return {200, json{{"status", "ok"}, {"version", Version()}}.dump()};
}

HttpReply CompareService::HandleCompare(std::string_view body) const {
  const json request = json::parse(body, nullptr, false);
  if (request.is_discarded()) return JsonError(400, "request body is not valid JSON");
  if (!request.is_object()) return JsonError(400, "request body must be a JSON object");

  const bool has_prompt = request.contains("prompt");
  const bool has_solutions = request.contains("solutions");
  if (has_prompt == has_solutions) {
    return JsonError(400, "exactly one of 'prompt' or 'solutions' is required");
  }

  UnitMode mode = UnitMode::kChar;
  if (const auto it = request.find("unit"); it != request.end()) {
    const auto parsed = it->is_string() ? ParseUnitMode(it->get<std::string>()) : std::nullopt;
    if (!parsed) return JsonError(400, "'unit' must be one of char, token, line");
    mode = *parsed;
  }
  Hue hue = Hue::kBlue;
  if (const auto it = request.find("hue"); it != request.end()) {
    const auto parsed = it->is_string() ? ParseHue(it->get<std::string>()) : std::nullopt;
    if (!parsed) return JsonError(400, "'hue' must be one of blue, red, green");
    hue = *parsed;
  }

  SolutionSet set;
  if (has_solutions) {
    const json& solutions = request["solutions"];
    if (!solutions.is_array()) return JsonError(400, "'solutions' must be an array of strings");
    if (solutions.empty()) return JsonError(422, "'solutions' must not be empty");
    for (const auto& s : solutions) {
      if (!s.is_string()) return JsonError(400, "'solutions' must be an array of strings");
      set.Add(s.get<std::string>(), "request");
    }
  } else {
    const json& prompt = request["prompt"];
    if (!prompt.is_string() || prompt.get<std::string>().empty()) {
      return JsonError(400, "'prompt' must be a non-empty string");
    }
    ProviderConfig config = provider_;
    if (const auto it = request.find("samples"); it != request.end()) {
      if (!it->is_number_integer()) return JsonError(400, "'samples' must be an integer");
      const auto samples = it->get<long long>();
      if (samples < 1 || samples > kMaxServiceSamples) {
        return JsonError(400, "'samples' must be in [1, " + std::to_string(kMaxServiceSamples) + "]");
      }
      config.samples = static_cast<int>(samples);
    }
    if (const auto it = request.find("provider"); it != request.end()) {
      if (!it->is_object()) return JsonError(400, "'provider' must be an object");
      if (const auto m = it->find("model"); m != it->end()) {
        if (!m->is_string()) return JsonError(400, "'provider.model' must be a string");
        config.model = m->get<std::string>();
      }
      if (const auto t = it->find("temperature"); t != it->end()) {
        if (!t->is_number()) return JsonError(400, "'provider.temperature' must be a number");
        config.temperature = t->get<double>();
      }
      if (const auto mt = it->find("max_tokens"); mt != it->end()) {
        if (!mt->is_number_integer()) return JsonError(400, "'provider.max_tokens' must be an integer");
        config.max_tokens = mt->get<int>();
      }
    }
    try {
      config.Validate();
    } catch (const Error& e) {
      return JsonError(400, e.what());
    }
    try {
      set = generate_(prompt.get<std::string>(), config);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidArgument) return JsonError(400, e.what());
      // Messages are built without the API key, and provider bodies are redacted.
      return JsonError(502, e.what());
    }
  }

  try {
    const ComparisonDocument doc = Compare(set, mode, hue);
    auto value = ToJsonValue(doc);
    if (has_prompt) {
      auto raw = nlohmann::ordered_json::array();
      for (const auto& s : set.solutions) raw.push_back(s.text);
      value["raw_solutions"] = std::move(raw);
    }
    return {200, value.dump()};
  } catch (const Error& e) {
    return JsonError(400, e.what());
  }
}

struct Server::Impl {
  ServiceConfig config;
  CompareService service;
  httplib::Server http;
  int port = -1;

  Impl(ServiceConfig cfg, CompareService::GenerateFn generate)
      : config(std::move(cfg)), service(config.provider, std::move(generate)) {}
};

Server::Server(ServiceConfig config, CompareService::GenerateFn generate)
    : impl_(std::make_unique<Impl>(std::move(config), std::move(generate))) {
  auto& http = impl_->http;
  const CompareService& service = impl_->service;
  http.set_payload_max_length(8 * 1024 * 1024);

  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  };
  http.Post("/api/compare", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.HandleCompare(req.body));
  });
  http.Get("/api/health", [&service, send](const httplib::Request&, httplib::Response& res) {
    send(res, service.HandleHealth());
  });

  if (impl_->config.dev_cors) {
    http.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
  }

  if (impl_->config.static_dir) {
    if (!http.set_mount_point("/", impl_->config.static_dir->string())) {
      throw Error(ErrorCode::kIo, impl_->config.static_dir->string() + ": not a directory");
    }
  } else {
    http.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(std::string(kStubPage), "text/html; charset=utf-8");
    });
  }
}

Server::~Server() { Stop(); }

int Server::Bind() {
  auto& cfg = impl_->config;
  if (cfg.port == 0) {
    impl_->port = impl_->http.bind_to_any_port(cfg.host);
  } else {
    impl_->port = impl_->http.bind_to_port(cfg.host, cfg.port) ? cfg.port : -1;
  }
  if (impl_->port < 0) {
    throw Error(ErrorCode::kIo, "cannot bind " + cfg.host + ":" + std::to_string(cfg.port));
  }
  return impl_->port;
}

void Server::Listen() { impl_->http.listen_after_bind(); }

void Server::Stop() {
  if (impl_) impl_->http.stop();
}

int Server::port() const { return impl_->port; }

}  // namespace nway
