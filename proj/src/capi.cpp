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

#include "nway/nway.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "nway/error.hpp"
#include "nway/llm_client.hpp"
#include "nway/render.hpp"
#include "nway/service.hpp"
#include "nway/solution.hpp"
#include "nway/uniqueness.hpp"
#include "nway/utf8.hpp"

struct nway_solution_set {
  nway::SolutionSet set;
};

struct nway_comparison {
  nway::ComparisonDocument doc;
};

struct nway_server {
  std::unique_ptr<nway::Server> server;
};

namespace {

struct LastError {
  std::string message;
  int64_t offset = -1;
  int provider_status = 0;
};

thread_local LastError g_last_error;

nway_status Fail(nway_status status, std::string message) {
  g_last_error.message = std::move(message);
  return status;
}

nway_status StatusOf(nway::ErrorCode code) {
  switch (code) {
    case nway::ErrorCode::kInvalidArgument: return NWAY_ERR_INVALID_ARGUMENT;
    case nway::ErrorCode::kEncoding: return NWAY_ERR_ENCODING;
    case nway::ErrorCode::kDomain: return NWAY_ERR_DOMAIN;
    case nway::ErrorCode::kIo: return NWAY_ERR_IO;
    case nway::ErrorCode::kProvider: return NWAY_ERR_PROVIDER;
    case nway::ErrorCode::kProviderUnreachable: return NWAY_ERR_PROVIDER_UNREACHABLE;
    case nway::ErrorCode::kPartialResult: return NWAY_ERR_PARTIAL_RESULT;
    case nway::ErrorCode::kInternal: return NWAY_ERR_INTERNAL;
  }
  return NWAY_ERR_INTERNAL;
}

// Runs `body`, translating every exception into a status code.
template <typename F>
nway_status Guard(F&& body) {
  g_last_error = LastError{};
  try {
    body();
    return NWAY_OK;
  } catch (const nway::EncodingError& e) {
    g_last_error.offset = static_cast<int64_t>(e.offset());
    return Fail(NWAY_ERR_ENCODING, e.what());
  } catch (const nway::ProviderError& e) {
    g_last_error.provider_status = e.status();
    return Fail(NWAY_ERR_PROVIDER, e.what());
  } catch (const nway::Error& e) {
    return Fail(StatusOf(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(NWAY_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(NWAY_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(NWAY_ERR_INTERNAL, "unknown exception");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw nway::Error(nway::ErrorCode::kInvalidArgument, what);
}

nway::UnitMode ToMode(nway_unit_mode mode) {
  switch (mode) {
    case NWAY_UNIT_CHAR: return nway::UnitMode::kChar;
    case NWAY_UNIT_TOKEN: return nway::UnitMode::kToken;
    case NWAY_UNIT_LINE: return nway::UnitMode::kLine;
  }
  throw nway::Error(nway::ErrorCode::kInvalidArgument, "unknown unit mode");
}

nway::Hue ToHue(nway_hue hue) {
  switch (hue) {
    case NWAY_HUE_BLUE: return nway::Hue::kBlue;
    case NWAY_HUE_RED: return nway::Hue::kRed;
    case NWAY_HUE_GREEN: return nway::Hue::kGreen;
  }
  throw nway::Error(nway::ErrorCode::kInvalidArgument, "unknown hue");
}

nway::ProviderConfig ToProvider(const nway_provider_config& c) {
  nway::ProviderConfig config;
  if (c.base_url != nullptr) config.base_url = c.base_url;
  if (c.api_key != nullptr) config.api_key = c.api_key;
  if (c.model != nullptr) config.model = c.model;
  Require(c.api == NWAY_API_CHAT || c.api == NWAY_API_COMPLETIONS, "unknown api kind");
  config.api = c.api == NWAY_API_CHAT ? nway::ApiKind::kChat : nway::ApiKind::kCompletions;
  config.temperature = c.temperature;
  config.max_tokens = c.max_tokens;
  config.samples = c.samples;
  config.timeout = std::chrono::milliseconds(c.timeout_ms);
  config.retries = c.retries;
  config.parallelism = c.parallelism;
  config.backoff = std::chrono::milliseconds(c.backoff_ms);
  return config;
}

char* CopyOut(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  return buf;
}

const nway::HighlightedDocument& SolutionAt(const nway_comparison* c, std::size_t i) {
  Require(c != nullptr, "comparison handle is null");
  if (i >= c->doc.solutions.size()) {
    throw nway::Error(nway::ErrorCode::kInvalidArgument, "solution index out of range");
  }
  return c->doc.solutions[i];
}

}  // namespace

extern "C" {

const char* nway_version(void) { return nway::Version(); }

const char* nway_status_name(nway_status status) {
  switch (status) {
    case NWAY_OK: return "ok";
    case NWAY_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NWAY_ERR_ENCODING: return "input encoding error";
    case NWAY_ERR_DOMAIN: return "domain error";
    case NWAY_ERR_IO: return "i/o error";
    case NWAY_ERR_PROVIDER: return "provider error";
    case NWAY_ERR_PROVIDER_UNREACHABLE: return "provider unreachable";
    case NWAY_ERR_PARTIAL_RESULT: return "partial result";
    case NWAY_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* nway_last_error(void) { return g_last_error.message.c_str(); }
int64_t nway_last_error_offset(void) { return g_last_error.offset; }
int nway_last_provider_status(void) { return g_last_error.provider_status; }

nway_status nway_parse_unit_mode(const char* name, nway_unit_mode* out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "null argument");
    const auto mode = nway::ParseUnitMode(name);
    if (!mode) throw nway::Error(nway::ErrorCode::kInvalidArgument,
                                 std::string("unknown unit mode '") + name + "'");
    *out = *mode == nway::UnitMode::kChar    ? NWAY_UNIT_CHAR
           : *mode == nway::UnitMode::kToken ? NWAY_UNIT_TOKEN
                                             : NWAY_UNIT_LINE;
  });
}

nway_status nway_parse_hue(const char* name, nway_hue* out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "null argument");
    const auto hue = nway::ParseHue(name);
    if (!hue) throw nway::Error(nway::ErrorCode::kInvalidArgument,
                                std::string("unknown hue '") + name + "'");
    *out = *hue == nway::Hue::kBlue ? NWAY_HUE_BLUE
           : *hue == nway::Hue::kRed ? NWAY_HUE_RED
                                     : NWAY_HUE_GREEN;
  });
}

nway_status nway_parse_format(const char* name, nway_format* out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "null argument");
    const std::string_view n = name;
    if (n == "ansi") *out = NWAY_FORMAT_ANSI;
    else if (n == "html") *out = NWAY_FORMAT_HTML;
    else if (n == "json") *out = NWAY_FORMAT_JSON;
    else throw nway::Error(nway::ErrorCode::kInvalidArgument,
                           std::string("unknown format '") + name + "'");
  });
}

nway_status nway_parse_api_kind(const char* name, nway_api_kind* out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "null argument");
    const auto api = nway::ParseApiKind(name);
    if (!api) throw nway::Error(nway::ErrorCode::kInvalidArgument,
                                std::string("unknown api '") + name + "'");
    *out = *api == nway::ApiKind::kChat ? NWAY_API_CHAT : NWAY_API_COMPLETIONS;
  });
}

nway_status nway_solution_set_create(const char* prompt, nway_solution_set** out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    auto handle = std::make_unique<nway_solution_set>();
    if (prompt != nullptr) handle->set.prompt = prompt;
    *out = handle.release();
  });
}

nway_status nway_solution_set_add(nway_solution_set* set, const char* text, size_t len,
                                  const char* origin) {
  return Guard([&] {
    Require(set != nullptr, "solution set handle is null");
    Require(text != nullptr || len == 0, "text is null");
    std::string value(text == nullptr ? "" : std::string(text, len));
    nway::utf8::Validate(value);
    set->set.Add(std::move(value), origin == nullptr ? "" : origin);
  });
}

nway_status nway_solution_set_load_files(const char* const* paths, size_t count,
                                         const char* prompt, nway_solution_set** out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    Require(paths != nullptr || count == 0, "paths is null");
    std::vector<std::filesystem::path> list;
    for (size_t i = 0; i < count; ++i) {
      Require(paths[i] != nullptr, "path entry is null");
      list.emplace_back(paths[i]);
    }
    auto handle = std::make_unique<nway_solution_set>();
    handle->set = nway::LoadSolutions(
        list, prompt == nullptr ? std::nullopt : std::optional<std::string>(prompt));
    *out = handle.release();
  });
}

void nway_solution_set_free(nway_solution_set* set) { delete set; }

size_t nway_solution_set_size(const nway_solution_set* set) {
  return set == nullptr ? 0 : set->set.size();
}

const char* nway_solution_set_prompt(const nway_solution_set* set) {
  if (set == nullptr || !set->set.prompt) return nullptr;
  return set->set.prompt->c_str();
}

nway_status nway_solution_set_get(const nway_solution_set* set, size_t index,
                                  const char** text, size_t* len) {
  return Guard([&] {
    Require(set != nullptr && text != nullptr && len != nullptr, "null argument");
    Require(index < set->set.size(), "solution index out of range");
    const auto& s = set->set.solutions[index].text;
    *text = s.data();
    *len = s.size();
  });
}

nway_status nway_solution_set_save(const nway_solution_set* set, const char* dir,
                                   const char* extension) {
  return Guard([&] {
    Require(set != nullptr && dir != nullptr, "null argument");
    nway::SaveSolutions(set->set, dir, extension == nullptr ? ".txt" : extension);
  });
}

void nway_provider_config_init(nway_provider_config* config) {
  if (config == nullptr) return;
  static const nway::ProviderConfig defaults;
  config->base_url = defaults.base_url.c_str();
  config->api_key = "";
  config->model = defaults.model.c_str();
  config->api = NWAY_API_CHAT;
  config->temperature = defaults.temperature;
  config->max_tokens = defaults.max_tokens;
  config->samples = defaults.samples;
  config->timeout_ms = static_cast<int>(defaults.timeout.count());
  config->retries = defaults.retries;
  config->parallelism = defaults.parallelism;
  config->backoff_ms = static_cast<int>(defaults.backoff.count());
}

nway_status nway_generate(const nway_provider_config* config, const char* prompt,
                          nway_solution_set** out) {
  return Guard([&] {
    Require(config != nullptr && prompt != nullptr && out != nullptr, "null argument");
    Require(*prompt != '\0', "prompt is empty");
    const nway::LlmClient client(ToProvider(*config));
    auto handle = std::make_unique<nway_solution_set>();
    handle->set = client.Generate(prompt);
    *out = handle.release();
  });
}

nway_status nway_compare(const nway_solution_set* set, nway_unit_mode mode, nway_hue hue,
                         nway_comparison** out) {
  return Guard([&] {
    Require(set != nullptr && out != nullptr, "null argument");
    auto handle = std::make_unique<nway_comparison>();
    handle->doc = nway::Compare(set->set, ToMode(mode), ToHue(hue));
    *out = handle.release();
  });
}

void nway_comparison_free(nway_comparison* comparison) { delete comparison; }

size_t nway_comparison_solution_count(const nway_comparison* comparison) {
  return comparison == nullptr ? 0 : comparison->doc.solutions.size();
}

nway_status nway_comparison_span_count(const nway_comparison* comparison, size_t solution,
                                       size_t* count) {
  return Guard([&] {
    Require(count != nullptr, "count is null");
    *count = SolutionAt(comparison, solution).spans.size();
  });
}

nway_status nway_comparison_get_span(const nway_comparison* comparison, size_t solution,
                                     size_t span, nway_span* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    const auto& doc = SolutionAt(comparison, solution);
    Require(span < doc.spans.size(), "span index out of range");
    const auto& s = doc.spans[span];
    *out = nway_span{s.text.data(), s.text.size(), s.score, s.color.r, s.color.g, s.color.b};
  });
}

nway_status nway_comparison_render(const nway_comparison* comparison, nway_format format,
                                   unsigned flags, char** out, size_t* len) {
  return Guard([&] {
    Require(comparison != nullptr && out != nullptr, "null argument");
    std::string rendered;
    switch (format) {
      case NWAY_FORMAT_ANSI:
        rendered = nway::RenderAnsi(comparison->doc.solutions, (flags & NWAY_RENDER_NO_COLOR) == 0);
        break;
      case NWAY_FORMAT_HTML:
        rendered = nway::RenderHtml(comparison->doc);
        break;
      case NWAY_FORMAT_JSON:
        rendered = nway::ToJson(comparison->doc);
        break;
      default:
        throw nway::Error(nway::ErrorCode::kInvalidArgument, "unknown format");
    }
    *out = CopyOut(rendered);
    if (len != nullptr) *len = rendered.size();
  });
}

void nway_string_free(char* str) { std::free(str); }

nway_status nway_color(int score, int n, nway_hue hue, uint8_t rgb[3]) {
  return Guard([&] {
    Require(rgb != nullptr, "rgb is null");
    nway::ColorScale scale;
    scale.hue = ToHue(hue);
    const nway::Rgb c = nway::Color(score, n, scale);
    rgb[0] = c.r;
    rgb[1] = c.g;
    rgb[2] = c.b;
  });
}

void nway_server_config_init(nway_server_config* config) {
  if (config == nullptr) return;
  config->host = "127.0.0.1";
  config->port = nway::kDefaultServicePort;
  config->static_dir = nullptr;
  config->dev_cors = 0;
  nway_provider_config_init(&config->provider);
}

nway_status nway_server_create(const nway_server_config* config, nway_server** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    nway::ServiceConfig sc;
    if (config->host != nullptr) sc.host = config->host;
    sc.port = config->port;
    if (config->static_dir != nullptr) sc.static_dir = config->static_dir;
    sc.dev_cors = config->dev_cors != 0;
    sc.provider = ToProvider(config->provider);
    // Provider settings are checked per request; a bad default still lets the
    // solutions-form API work.
    auto handle = std::make_unique<nway_server>();
    handle->server = std::make_unique<nway::Server>(std::move(sc));
    *out = handle.release();
  });
}

nway_status nway_server_bind(nway_server* server, int* port) {
  return Guard([&] {
    Require(server != nullptr, "server handle is null");
    const int bound = server->server->Bind();
    if (port != nullptr) *port = bound;
  });
}

nway_status nway_server_listen(nway_server* server) {
  return Guard([&] {
    Require(server != nullptr, "server handle is null");
    server->server->Listen();
  });
}

void nway_server_stop(nway_server* server) {
  if (server != nullptr) server->server->Stop();
}

void nway_server_free(nway_server* server) { delete server; }

}  // extern "C"
