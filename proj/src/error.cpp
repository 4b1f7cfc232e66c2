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

#include "nway/error.hpp"

#include <utility>

namespace nway {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kEncoding: return "input encoding error";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kProvider: return "provider error";
    case ErrorCode::kProviderUnreachable: return "provider unreachable";
    case ErrorCode::kPartialResult: return "partial result";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown error";
}

EncodingError::EncodingError(std::size_t offset, const std::string& context)
    : Error(ErrorCode::kEncoding,
            (context.empty() ? std::string() : context + ": ") +
                "invalid UTF-8 at byte offset " + std::to_string(offset)),
      offset_(offset) {}

ProviderError::ProviderError(int status, std::string body_excerpt, int attempts)
    : Error(ErrorCode::kProvider,
            "provider returned HTTP " + std::to_string(status) + " after " +
                std::to_string(attempts) + " attempt(s): " + body_excerpt),
      status_(status),
      body_excerpt_(std::move(body_excerpt)),
      attempts_(attempts) {}

}  // namespace nway
