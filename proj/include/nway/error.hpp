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

#ifndef NWAY_ERROR_HPP_
#define NWAY_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nway {

enum class ErrorCode {
  kInvalidArgument,
  kEncoding,
  kDomain,
  kIo,
  kProvider,
  kProviderUnreachable,
  kPartialResult,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// Base of every exception the core throws. The C layer maps `code()` onto
// nway_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Input text is not well-formed UTF-8. `offset` is the byte index of the first
// offending byte.
class EncodingError : public Error {
 public:
  EncodingError(std::size_t offset, const std::string& context = {});

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Provider answered with a non-2xx status (after retries, when retryable).
class ProviderError : public Error {
 public:
  ProviderError(int status, std::string body_excerpt, int attempts);

  int status() const noexcept { return status_; }
  const std::string& body_excerpt() const noexcept { return body_excerpt_; }
  int attempts() const noexcept { return attempts_; }

 private:
  int status_;
  std::string body_excerpt_;
  int attempts_;
};

}  // namespace nway

#endif  // NWAY_ERROR_HPP_
