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

#include "nway/llm_client.hpp"

#include <httplib.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nway/error.hpp"

namespace nway {
namespace {

using json = nlohmann::json;

constexpr std::size_t kExcerptBytes = 512;
constexpr std::string_view kChatPath = "/chat/completions";
constexpr std::string_view kCompletionsPath = "/completions";

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  });
}

bool Retryable(int status) { return status == 429 || status >= 500; }

std::string Redact(std::string text, const std::string& secret) {
  if (secret.empty()) return text;
  for (std::size_t pos = text.find(secret); pos != std::string::npos;
       pos = text.find(secret, pos + 3)) {
    text.replace(pos, secret.size(), "***");
  }
  return text;
}

}  // namespace

const char* ApiKindName(ApiKind api) {
  return api == ApiKind::kCompletions ? "completions" : "chat";
}

std::optional<ApiKind> ParseApiKind(std::string_view name) {
  if (name == "chat") return ApiKind::kChat;
  if (name == "completions") return ApiKind::kCompletions;
  return std::nullopt;
}

void ProviderConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "provider config: " + what);
  };
  if (base_url.rfind("http://", 0) != 0 && base_url.rfind("https://", 0) != 0) {
    fail("base_url must start with http:// or https://");
  }
  if (model.empty()) fail("model must not be empty");
  if (samples < 1) fail("samples must be at least 1");
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) fail("temperature must be >= 0");
  if (samples > 1 && temperature <= 0.0) {
    fail("temperature must be > 0 when drawing more than one sample");
  }
  if (max_tokens < 1) fail("max_tokens must be positive");
  if (retries < 0 || retries > 10) fail("retries must be in [0, 10]");
  if (parallelism < 1) fail("parallelism must be at least 1");
  if (timeout.count() <= 0) fail("timeout must be positive");
  if (backoff.count() < 0) fail("backoff must not be negative");
}

std::string ProviderConfig::Describe() const {
  const Endpoint ep = ResolveEndpoint(*this);
  std::ostringstream out;
  out << model << " via " << ep.origin << ep.path << " (temperature " << temperature << ")";
  return out.str();
}

Endpoint ResolveEndpoint(const ProviderConfig& config) {
  std::string_view url = config.base_url;
  const std::size_t scheme_end = url.find("://");
  const std::size_t path_start =
      scheme_end == std::string_view::npos ? std::string_view::npos : url.find('/', scheme_end + 3);
  Endpoint ep;
  ep.api = config.api;
  ep.origin = std::string(url.substr(0, path_start));
  std::string path =
      path_start == std::string_view::npos ? std::string() : std::string(url.substr(path_start));
  while (!path.empty() && path.back() == '/') path.pop_back();
  if (EndsWith(path, kChatPath)) {
    ep.api = ApiKind::kChat;
  } else if (EndsWith(path, kCompletionsPath)) {
    ep.api = ApiKind::kCompletions;
  } else {
    path += ep.api == ApiKind::kChat ? kChatPath : kCompletionsPath;
  }
  ep.path = std::move(path);
  return ep;
}

std::string BuildRequestBody(const ProviderConfig& config, std::string_view prompt,
                             ApiKind api) {
  json body;
  body["model"] = config.model;
  if (api == ApiKind::kChat) {
    body["messages"] = json::array({{{"role", "user"}, {"content", std::string(prompt)}}});
  } else {
    body["prompt"] = std::string(prompt);
  }
  body["temperature"] = config.temperature;
  body["max_tokens"] = config.max_tokens;
  body["n"] = 1;
  return body.dump();
}

std::optional<std::string> ParseCompletion(std::string_view body, ApiKind api) {
  const json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  const auto choices = doc.find("choices");
  if (choices == doc.end() || !choices->is_array() || choices->empty()) return std::nullopt;
  const json& choice = (*choices)[0];
  if (!choice.is_object()) return std::nullopt;
  auto text_field = [&](const json& obj, const char* key) -> std::optional<std::string> {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) return std::nullopt;
    return it->get<std::string>();
  };
  std::optional<std::string> text;
  if (const auto msg = choice.find("message"); msg != choice.end() && msg->is_object()) {
    text = text_field(*msg, "content");
  }
  // Legacy completions put the text on the choice itself; some chat servers
  // do the same.
  if (!text) text = text_field(choice, "text");
  (void)api;
  return text;
}

std::string TrimCompletion(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos || !IsBlank(text.substr(start, nl - start))) break;
    start = nl + 1;
  }
  std::size_t end = text.size();
  while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  // A whitespace-only first line that did not end in '\n' is dropped too.
  if (end > start && IsBlank(text.substr(start, end - start))) end = start;
  return std::string(text.substr(start, end - start));
}

LlmClient::LlmClient(ProviderConfig config)
    : config_(std::move(config)) {
  config_.Validate();
  endpoint_ = ResolveEndpoint(config_);
}

std::optional<std::string> LlmClient::FetchOne(const std::string& prompt, int sample) const {
  httplib::Client client(endpoint_.origin);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  httplib::Headers headers{{kSampleHeader, std::to_string(sample)}};
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }
  const std::string body = BuildRequestBody(config_, prompt, endpoint_.api);

  std::string last_transport_error;
  const int max_attempts = config_.retries + 1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    if (attempt > 1 && config_.backoff.count() > 0) {
      std::this_thread::sleep_for(config_.backoff * (1 << (attempt - 2)));
    }
    auto res = client.Post(endpoint_.path, headers, body, "application/json");
    if (!res) {
      last_transport_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 200 && res->status < 300) {
      auto text = ParseCompletion(res->body, endpoint_.api);
      if (!text) return std::nullopt;
      std::string trimmed = TrimCompletion(*text);
      if (trimmed.empty()) return std::nullopt;
      return trimmed;
    }
    if (Retryable(res->status) && attempt < max_attempts) continue;
    std::string excerpt = res->body.substr(0, kExcerptBytes);
    throw ProviderError(res->status, Redact(std::move(excerpt), config_.api_key), attempt);
  }
  throw Error(ErrorCode::kProviderUnreachable,
              "cannot reach " + endpoint_.origin + " after " + std::to_string(max_attempts) +
                  " attempt(s): " + last_transport_error);
}

SolutionSet LlmClient::Generate(const std::string& prompt) const {
  const auto n = static_cast<std::size_t>(config_.samples);
  std::vector<std::optional<std::string>> texts(n);
  std::vector<std::exception_ptr> failures(n);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        texts[i] = FetchOne(prompt, static_cast<int>(i));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const auto workers = std::min<std::size_t>(n, static_cast<std::size_t>(config_.parallelism));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < n; ++i) {
    if (!texts[i]) missing.push_back(i);
  }
  if (!missing.empty()) {
    std::string list;
    for (auto i : missing) list += (list.empty() ? "" : ", ") + std::to_string(i);
    throw Error(ErrorCode::kPartialResult,
                std::to_string(n - missing.size()) + " of " + std::to_string(n) +
                    " completions usable; no content for sample(s) " + list);
  }

  SolutionSet set;
  set.prompt = prompt;
  set.provider = config_.Describe();
  std::ostringstream params;
  params << config_.model << ", temperature " << config_.temperature;
  for (std::size_t i = 0; i < n; ++i) {
    set.Add(std::move(*texts[i]), "sample " + std::to_string(i) + " (" + params.str() + ")");
  }
  return set;
}

}  // namespace nway
