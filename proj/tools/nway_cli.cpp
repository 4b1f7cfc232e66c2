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

// nway: compare N candidate solutions and highlight what makes each unique.
//
//   nway compare a.py b.py c.py [--unit char|token|line] [--format ansi|html|json]
//   nway generate "prompt" [--samples 5] [--save-dir DIR]
//   nway serve [--port 8787] [--static-dir DIR]
//
// Links only the C interface in libnway.

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <system_error>
#include <thread>
#include <type_traits>
#include <vector>

#include <pthread.h>
#include <unistd.h>

#include <CLI11.hpp>

#include "nway/nway.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitProvider = 3;

// A value that may come from a flag, the environment, a config file or the
// built-in default, in that order of precedence.
enum class Source { kDefault, kConfig, kEnv, kFlag };

template <typename T>
struct Setting {
  T value;
  Source source = Source::kDefault;

  void Offer(const std::optional<T>& v, Source from) {
    if (v && from >= source) {
      value = *v;
      source = from;
    }
  }
};

struct Settings {
  Setting<std::string> unit{"char"};
  Setting<std::string> hue{"blue"};
  Setting<std::string> format{"ansi"};
  Setting<std::string> base_url{"https://api.openai.com/v1"};
  Setting<std::string> api_key{""};
  Setting<std::string> model{"gpt-4o-mini"};
  Setting<std::string> api{"chat"};
  Setting<double> temperature{0.7};
  Setting<int> max_tokens{512};
  Setting<int> samples{5};
  Setting<double> timeout{60.0};
  Setting<int> retries{2};
  Setting<int> parallel{4};
  Setting<std::string> host{"127.0.0.1"};
  Setting<int> port{8787};
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::map<std::string, std::string> ReadConfigFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::system_error(errno, std::generic_category(), path.string());
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
    }
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

template <typename T>
std::optional<T> Convert(const std::string& key, const std::string& raw) {
  if constexpr (std::is_same_v<T, std::string>) {
    return raw;
  } else {
    T value{};
    if (!CLI::detail::lexical_cast(raw, value)) {
      throw UsageError("config: invalid value for '" + key + "': " + raw);
    }
    return value;
  }
}

void ApplyConfig(Settings& s, const std::map<std::string, std::string>& kv) {
  auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  static const char* const kKnown[] = {"unit", "hue", "format", "base_url", "api_key", "model",
                                       "api", "temperature", "max_tokens", "samples", "timeout",
                                       "retries", "parallel", "host", "port"};
  for (const auto& [key, _] : kv) {
    if (std::find(std::begin(kKnown), std::end(kKnown), key) == std::end(kKnown)) {
      throw UsageError("config: unknown key '" + key + "'");
    }
  }
  auto apply = [&](auto& setting, const char* key) {
    using T = std::decay_t<decltype(setting.value)>;
    if (const auto* raw = get(key)) setting.Offer(Convert<T>(key, *raw), Source::kConfig);
  };
  apply(s.unit, "unit");
  apply(s.hue, "hue");
  apply(s.format, "format");
  apply(s.base_url, "base_url");
  apply(s.api_key, "api_key");
  apply(s.model, "model");
  apply(s.api, "api");
  apply(s.temperature, "temperature");
  apply(s.max_tokens, "max_tokens");
  apply(s.samples, "samples");
  apply(s.timeout, "timeout");
  apply(s.retries, "retries");
  apply(s.parallel, "parallel");
  apply(s.host, "host");
  apply(s.port, "port");
}

void ApplyEnv(Settings& s) {
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
  s.api_key.Offer(env("NWAY_API_KEY"), Source::kEnv);
  s.base_url.Offer(env("NWAY_BASE_URL"), Source::kEnv);
}

// Binds `setting` to a flag and records whether the flag was given.
template <typename T>
CLI::Option* Bind(CLI::App* app, const std::string& name, Setting<T>& setting,
                  const std::string& help) {
  return app->add_option_function<T>(
      name,
      [&setting](const T& v) { setting.Offer(v, Source::kFlag); },
      help);
}

void AddRenderFlags(CLI::App* app, Settings& s) {
  Bind(app, "--unit", s.unit, "Comparison unit: char, token or line (default char)")
      ->check(CLI::IsMember({"char", "token", "line"}));
  Bind(app, "--hue", s.hue, "Highlight hue: blue, red or green (default blue)")
      ->check(CLI::IsMember({"blue", "red", "green"}));
  Bind(app, "--format", s.format, "Output format: ansi, html or json (default ansi)")
      ->check(CLI::IsMember({"ansi", "html", "json"}));
}

void AddProviderFlags(CLI::App* app, Settings& s) {
  Bind(app, "--base-url", s.base_url, "OpenAI-compatible API base URL (env NWAY_BASE_URL)");
  Bind(app, "--api-key", s.api_key, "API key (env NWAY_API_KEY)");
  Bind(app, "--model", s.model, "Model name");
  Bind(app, "--api", s.api, "Endpoint schema: chat or completions")
      ->check(CLI::IsMember({"chat", "completions"}));
  Bind(app, "--temperature", s.temperature, "Sampling temperature (default 0.7)");
  Bind(app, "--max-tokens", s.max_tokens, "Completion length cap");
  Bind(app, "--timeout", s.timeout, "Per-request timeout in seconds");
  Bind(app, "--retries", s.retries, "Retries per sample on transport errors, 429 and 5xx");
  Bind(app, "--parallel", s.parallel, "Concurrent sample requests");
}

int ExitFor(nway_status status) {
  switch (status) {
    case NWAY_OK: return kExitOk;
    case NWAY_ERR_PROVIDER:
    case NWAY_ERR_PROVIDER_UNREACHABLE:
    case NWAY_ERR_PARTIAL_RESULT:
      return kExitProvider;
    case NWAY_ERR_INVALID_ARGUMENT:
    case NWAY_ERR_DOMAIN:
      return kExitUsage;
    default:
      return kExitIo;
  }
}

int Report(nway_status status) {
  std::cerr << "nway: " << nway_last_error() << "\n";
  return ExitFor(status);
}

// Writes via a sibling temp file and rename so a failed run never leaves a
// truncated artifact behind.
bool WriteAtomic(const fs::path& path, const std::string& data, std::string& error) {
  std::random_device rd;
  const fs::path tmp = path.string() + ".tmp" + std::to_string(rd() % 1000000);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      error = tmp.string() + ": cannot open for writing";
      return false;
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      error = tmp.string() + ": write failed";
      std::error_code ec;
      fs::remove(tmp, ec);
      return false;
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    error = path.string() + ": " + ec.message();
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

struct OutputOptions {
  std::string path;
  bool no_color = false;
};

int RenderAndWrite(const nway_solution_set* set, const Settings& s, const OutputOptions& out) {
  nway_unit_mode mode;
  nway_hue hue;
  nway_format format;
  if (auto st = nway_parse_unit_mode(s.unit.value.c_str(), &mode); st != NWAY_OK) return Report(st);
  if (auto st = nway_parse_hue(s.hue.value.c_str(), &hue); st != NWAY_OK) return Report(st);
  if (auto st = nway_parse_format(s.format.value.c_str(), &format); st != NWAY_OK) return Report(st);

  nway_comparison* comparison = nullptr;
  if (auto st = nway_compare(set, mode, hue, &comparison); st != NWAY_OK) return Report(st);
  char* buf = nullptr;
  size_t len = 0;
  const unsigned flags = out.no_color ? NWAY_RENDER_NO_COLOR : 0u;
  const nway_status st = nway_comparison_render(comparison, format, flags, &buf, &len);
  nway_comparison_free(comparison);
  if (st != NWAY_OK) return Report(st);
  std::string text(buf, len);
  nway_string_free(buf);
  if (text.empty() || text.back() != '\n') text += '\n';

  if (out.path.empty() || out.path == "-") {
    std::cout.write(text.data(), static_cast<std::streamsize>(text.size()));
    std::cout.flush();
    return std::cout ? kExitOk : kExitIo;
  }
  std::string error;
  if (!WriteAtomic(out.path, text, error)) {
    std::cerr << "nway: " << error << "\n";
    return kExitIo;
  }
  return kExitOk;
}

nway_provider_config ProviderFrom(const Settings& s) {
  nway_provider_config config;
  nway_provider_config_init(&config);
  config.base_url = s.base_url.value.c_str();
  config.api_key = s.api_key.value.c_str();
  config.model = s.model.value.c_str();
  nway_parse_api_kind(s.api.value.c_str(), &config.api);
  config.temperature = s.temperature.value;
  config.max_tokens = s.max_tokens.value;
  config.samples = s.samples.value;
  config.timeout_ms = static_cast<int>(s.timeout.value * 1000.0);
  config.retries = s.retries.value;
  config.parallelism = s.parallel.value;
  return config;
}

int RunCompare(const std::vector<std::string>& files, const std::string& prompt,
               const Settings& s, const OutputOptions& out) {
  if (files.size() < 2) {
    std::cerr << "nway compare: at least two solution files are required\n";
    return kExitUsage;
  }
  std::vector<const char*> paths;
  for (const auto& f : files) paths.push_back(f.c_str());
  nway_solution_set* set = nullptr;
  const nway_status st = nway_solution_set_load_files(paths.data(), paths.size(),
                                                      prompt.empty() ? nullptr : prompt.c_str(), &set);
  if (st != NWAY_OK) {
    std::cerr << "nway: " << nway_last_error() << "\n";
    return kExitIo;
  }
  const int rc = RenderAndWrite(set, s, out);
  nway_solution_set_free(set);
  return rc;
}

int RunGenerate(const std::string& prompt, const std::string& save_dir,
                const std::string& save_ext, const Settings& s, const OutputOptions& out) {
  if (prompt.empty()) {
    std::cerr << "nway generate: a prompt is required\n";
    return kExitUsage;
  }
  const nway_provider_config config = ProviderFrom(s);
  nway_solution_set* set = nullptr;
  if (auto st = nway_generate(&config, prompt.c_str(), &set); st != NWAY_OK) return Report(st);
  if (!save_dir.empty()) {
    if (auto st = nway_solution_set_save(set, save_dir.c_str(), save_ext.c_str()); st != NWAY_OK) {
      nway_solution_set_free(set);
      return Report(st);
    }
  }
  const int rc = RenderAndWrite(set, s, out);
  nway_solution_set_free(set);
  return rc;
}

int RunServe(const std::string& static_dir, bool dev, const Settings& s) {
  nway_server_config config;
  nway_server_config_init(&config);
  config.host = s.host.value.c_str();
  config.port = s.port.value;
  config.static_dir = static_dir.empty() ? nullptr : static_dir.c_str();
  config.dev_cors = dev ? 1 : 0;
  config.provider = ProviderFrom(s);

  // Route SIGINT/SIGTERM to a waiter thread instead of an async handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  nway_server* server = nullptr;
  if (auto st = nway_server_create(&config, &server); st != NWAY_OK) return Report(st);
  int port = 0;
  if (auto st = nway_server_bind(server, &port); st != NWAY_OK) {
    nway_server_free(server);
    return Report(st);
  }
  std::cerr << "nway " << nway_version() << " listening on http://" << s.host.value << ":" << port
            << "\n";
  std::thread waiter([server, signals] {
    int sig = 0;
    sigwait(&signals, &sig);
    nway_server_stop(server);
  });
  const nway_status st = nway_server_listen(server);
  // Wake the waiter if listen returned for any other reason.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  nway_server_free(server);
  return st == NWAY_OK ? kExitOk : Report(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare N candidate solutions and highlight what is unique to each."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nway_version()));

  Settings settings;
  std::string config_path;
  OutputOptions out;
  app.add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);

  auto* compare = app.add_subcommand("compare", "Compare local solution files offline");
  std::vector<std::string> files;
  std::string prompt_label;
  compare->add_option("files", files, "Solution files (at least two)")->required();
  compare->add_option("--prompt", prompt_label, "Prompt to record in the output");
  AddRenderFlags(compare, settings);
  compare->add_option("-o,--output", out.path, "Write to this file instead of stdout");
  compare->add_flag("--no-color", out.no_color, "Plain text ANSI output");

  auto* generate = app.add_subcommand("generate", "Sample N solutions from a provider and compare them");
  std::string prompt;
  std::string save_dir;
  std::string save_ext = ".txt";
  generate->add_option("prompt", prompt, "Programming prompt")->required();
  Bind(generate, "-n,--samples", settings.samples, "Number of solutions (default 5)");
  generate->add_option("--save-dir", save_dir, "Also save raw solutions as numbered files here");
  generate->add_option("--save-ext", save_ext, "Extension for saved solutions (default .txt)");
  AddRenderFlags(generate, settings);
  AddProviderFlags(generate, settings);
  generate->add_option("-o,--output", out.path, "Write to this file instead of stdout");
  generate->add_flag("--no-color", out.no_color, "Plain text ANSI output");

  auto* serve = app.add_subcommand("serve", "Run the HTTP comparison service");
  std::string static_dir;
  bool dev = false;
  Bind(serve, "--host", settings.host, "Listen address (default 127.0.0.1)");
  Bind(serve, "--port", settings.port, "Listen port (default 8787)");
  serve->add_option("--static-dir", static_dir, "Directory of built UI assets served at /");
  serve->add_flag("--dev", dev, "Enable permissive CORS for a UI dev server");
  AddProviderFlags(serve, settings);

  for (auto* sub : {compare, generate, serve}) {
    sub->add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    ApplyEnv(settings);
    if (!config_path.empty()) ApplyConfig(settings, ReadConfigFile(config_path));
  } catch (const UsageError& e) {
    std::cerr << "nway: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::system_error& e) {
    std::cerr << "nway: " << e.what() << "\n";
    return kExitIo;
  }

  if (compare->parsed()) return RunCompare(files, prompt_label, settings, out);
  if (generate->parsed()) return RunGenerate(prompt, save_dir, save_ext, settings, out);
  return RunServe(static_dir, dev, settings);
}
