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

/* C interface to the nway comparison engine.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return nway_status; on failure a
 * thread-local message is available from nway_last_error() until the next
 * call on the same thread. Strings handed out by the library are UTF-8 and are
 * not NUL-terminated unless stated; lengths are always reported. */

#ifndef NWAY_NWAY_H_
#define NWAY_NWAY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NWAY_BUILDING_LIBRARY)
#    define NWAY_API __declspec(dllexport)
#  else
#    define NWAY_API __declspec(dllimport)
#  endif
#else
#  define NWAY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nway_status {
  NWAY_OK = 0,
  NWAY_ERR_INVALID_ARGUMENT = 1,
  NWAY_ERR_ENCODING = 2,
  NWAY_ERR_DOMAIN = 3,
  NWAY_ERR_IO = 4,
  NWAY_ERR_PROVIDER = 5,
  NWAY_ERR_PROVIDER_UNREACHABLE = 6,
  NWAY_ERR_PARTIAL_RESULT = 7,
  NWAY_ERR_INTERNAL = 8
} nway_status;

typedef enum nway_unit_mode {
  NWAY_UNIT_CHAR = 0,
  NWAY_UNIT_TOKEN = 1,
  NWAY_UNIT_LINE = 2
} nway_unit_mode;

typedef enum nway_hue {
  NWAY_HUE_BLUE = 0,
  NWAY_HUE_RED = 1,
  NWAY_HUE_GREEN = 2
} nway_hue;

typedef enum nway_format {
  NWAY_FORMAT_ANSI = 0,
  NWAY_FORMAT_HTML = 1,
  NWAY_FORMAT_JSON = 2
} nway_format;

typedef enum nway_api_kind {
  NWAY_API_CHAT = 0,
  NWAY_API_COMPLETIONS = 1
} nway_api_kind;

/* Flags for nway_comparison_render. */
#define NWAY_RENDER_NO_COLOR 0x1

typedef struct nway_solution_set nway_solution_set;
typedef struct nway_comparison nway_comparison;
typedef struct nway_server nway_server;

/* ---- diagnostics -------------------------------------------------------- */

NWAY_API const char* nway_version(void);
NWAY_API const char* nway_status_name(nway_status status);
NWAY_API const char* nway_last_error(void);
/* Byte offset of the last NWAY_ERR_ENCODING on this thread, or -1. */
NWAY_API int64_t nway_last_error_offset(void);
/* HTTP status of the last NWAY_ERR_PROVIDER on this thread, or 0. */
NWAY_API int nway_last_provider_status(void);

/* ---- names -------------------------------------------------------------- */

NWAY_API nway_status nway_parse_unit_mode(const char* name, nway_unit_mode* out);
NWAY_API nway_status nway_parse_hue(const char* name, nway_hue* out);
NWAY_API nway_status nway_parse_format(const char* name, nway_format* out);
NWAY_API nway_status nway_parse_api_kind(const char* name, nway_api_kind* out);

/* ---- solution sets ------------------------------------------------------ */

/* `prompt` may be NULL. */
NWAY_API nway_status nway_solution_set_create(const char* prompt, nway_solution_set** out);
/* Appends a solution; `text` need not be NUL-terminated. `origin` may be NULL. */
NWAY_API nway_status nway_solution_set_add(nway_solution_set* set, const char* text,
                                           size_t len, const char* origin);
/* One solution per file, in order. Errors name the offending path. */
NWAY_API nway_status nway_solution_set_load_files(const char* const* paths, size_t count,
                                                  const char* prompt,
                                                  nway_solution_set** out);
NWAY_API void nway_solution_set_free(nway_solution_set* set);
NWAY_API size_t nway_solution_set_size(const nway_solution_set* set);
/* NUL-terminated prompt, or NULL when the set has none. */
NWAY_API const char* nway_solution_set_prompt(const nway_solution_set* set);
NWAY_API nway_status nway_solution_set_get(const nway_solution_set* set, size_t index,
                                           const char** text, size_t* len);
/* Writes solution_01<ext>, solution_02<ext>, ... into `dir`. `extension` may
 * be NULL for ".txt". */
NWAY_API nway_status nway_solution_set_save(const nway_solution_set* set, const char* dir,
                                            const char* extension);

/* ---- provider ----------------------------------------------------------- */

typedef struct nway_provider_config {
  const char* base_url;
  const char* api_key; /* never logged or echoed in errors */
  const char* model;
  nway_api_kind api;
  double temperature;
  int max_tokens;
  int samples;
  int timeout_ms;
  int retries;
  int parallelism;
  int backoff_ms;
} nway_provider_config;

/* Fills in defaults: 5 samples at temperature 0.7, 2 retries. String fields
 * point at static storage; api_key is "". */
NWAY_API void nway_provider_config_init(nway_provider_config* config);

/* Fetches config->samples completions for `prompt`, in sample order. */
NWAY_API nway_status nway_generate(const nway_provider_config* config, const char* prompt,
                                   nway_solution_set** out);

/* ---- comparison --------------------------------------------------------- */

typedef struct nway_span {
  const char* text; /* not NUL-terminated */
  size_t len;
  int score;
  uint8_t r, g, b;
} nway_span;

NWAY_API nway_status nway_compare(const nway_solution_set* set, nway_unit_mode mode,
                                  nway_hue hue, nway_comparison** out);
NWAY_API void nway_comparison_free(nway_comparison* comparison);
NWAY_API size_t nway_comparison_solution_count(const nway_comparison* comparison);
NWAY_API nway_status nway_comparison_span_count(const nway_comparison* comparison,
                                                size_t solution, size_t* count);
/* The span text stays valid for the lifetime of `comparison`. */
NWAY_API nway_status nway_comparison_get_span(const nway_comparison* comparison,
                                              size_t solution, size_t span, nway_span* out);
/* Renders into a newly allocated NUL-terminated buffer; release it with
 * nway_string_free. */
NWAY_API nway_status nway_comparison_render(const nway_comparison* comparison,
                                            nway_format format, unsigned flags, char** out,
                                            size_t* len);
NWAY_API void nway_string_free(char* str);

/* Color for a uniqueness score among n solutions. */
NWAY_API nway_status nway_color(int score, int n, nway_hue hue, uint8_t rgb[3]);

/* ---- service ------------------------------------------------------------ */

typedef struct nway_server_config {
  const char* host;
  int port;               /* 0 picks a free port */
  const char* static_dir; /* may be NULL */
  int dev_cors;
  nway_provider_config provider;
} nway_server_config;

NWAY_API void nway_server_config_init(nway_server_config* config);
NWAY_API nway_status nway_server_create(const nway_server_config* config, nway_server** out);
/* Binds the socket; `port` (may be NULL) receives the bound port. */
NWAY_API nway_status nway_server_bind(nway_server* server, int* port);
/* Blocks until nway_server_stop is called from another thread. */
NWAY_API nway_status nway_server_listen(nway_server* server);
NWAY_API void nway_server_stop(nway_server* server);
NWAY_API void nway_server_free(nway_server* server);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* NWAY_NWAY_H_ */
