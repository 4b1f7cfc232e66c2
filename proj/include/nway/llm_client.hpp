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

#ifndef NWAY_LLM_CLIENT_HPP_
#define NWAY_LLM_CLIENT_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "nway/solution.hpp"

namespace nway {

// Which OpenAI-compatible schema to speak.
enum class ApiKind { kChat, kCompletions };

const char* ApiKindName(ApiKind api);
std::optional<ApiKind> ParseApiKind(std::string_view name);

// Header carrying the 0-based sample index on every request.
inline constexpr const char* kSampleHeader = "X-Nway-Sample";

struct ProviderConfig {
  std::string base_url = "https://api.openai.com/v1";
  std::string api_key;
  std::string model = "gpt-4o-mini";
  ApiKind api = ApiKind::kChat;
  double temperature = 0.7;
  int max_tokens = 512;
  int samples = 5;
  std::chrono::milliseconds timeout{60000};
  int retries = 2;
  int parallelism = 4;
  // First retry waits `backoff`, then doubles.
  std::chrono::milliseconds backoff{250};

  // Throws Error(kInvalidArgument) describing the first violated rule.
  void Validate() const;

  // Human-readable provider descriptor. Never includes the API key.
  std::string Describe() const;
};

// Scheme/host/port part and request path the client will POST to.
struct Endpoint {
  std::string origin;
  std::string path;
  ApiKind api = ApiKind::kChat;
};

Endpoint ResolveEndpoint(const ProviderConfig& config);

// JSON request body for one sample.
std::string BuildRequestBody(const ProviderConfig& config, std::string_view prompt,
                             ApiKind api);

// Extracts the completion text from a response body, or nullopt when the body
// has no usable content.
std::optional<std::string> ParseCompletion(std::string_view body, ApiKind api);

// Drops leading whitespace-only lines and all trailing whitespace.
std::string TrimCompletion(std::string_view text);

// Fetches N independent completions for one prompt. Immutable after
// construction; Generate() may be called from several threads.
class LlmClient {
 public:
  explicit LlmClient(ProviderConfig config);

  const ProviderConfig& config() const { return config_; }

  // Blocks until every sample has been fetched. Throws
  //   Error(kProviderUnreachable)  transport failure after all retries
  //   ProviderError                non-2xx response
  //   Error(kPartialResult)        some samples came back without content
  SolutionSet Generate(const std::string& prompt) const;

 private:
  std::optional<std::string> FetchOne(const std::string& prompt, int sample) const;

  ProviderConfig config_;
  Endpoint endpoint_;
};

}  // namespace nway

#endif  // NWAY_LLM_CLIENT_HPP_
