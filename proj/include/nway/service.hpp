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

#ifndef NWAY_SERVICE_HPP_
#define NWAY_SERVICE_HPP_

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "nway/llm_client.hpp"
#include "nway/solution.hpp"

namespace nway {

const char* Version();

inline constexpr int kDefaultServicePort = 8787;
inline constexpr int kMaxServiceSamples = 32;

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = kDefaultServicePort;
  // Built UI assets mounted at "/". Without it "/" serves a stub page.
  std::optional<std::filesystem::path> static_dir;
  // Adds permissive CORS headers for a UI dev server on another origin.
  bool dev_cors = false;
  ProviderConfig provider;
};

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Request handling for the JSON API, independent of any socket.
class CompareService {
 public:
  using GenerateFn = std::function<SolutionSet(const std::string& prompt, const ProviderConfig&)>;

  // `generate` defaults to LlmClient(config).Generate(prompt).
  explicit CompareService(ProviderConfig provider, GenerateFn generate = {});

  // POST /api/compare. 200 with a comparison document, 400 malformed request,
  // 422 empty solution list, 502 provider failure.
  HttpReply HandleCompare(std::string_view body) const;

  // GET /api/health.
  HttpReply HandleHealth() const;

 private:
  ProviderConfig provider_;
  GenerateFn generate_;
};

// HTTP front end for CompareService.
class Server {
 public:
  explicit Server(ServiceConfig config, CompareService::GenerateFn generate = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds the listening socket. Port 0 picks a free port. Returns the bound
  // port. Throws Error(kIo) when binding fails.
  int Bind();
  // Serves until Stop(). Bind() must have succeeded.
  void Listen();
  void Stop();
  int port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace nway

#endif  // NWAY_SERVICE_HPP_
