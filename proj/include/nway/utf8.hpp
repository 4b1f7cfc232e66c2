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

#ifndef NWAY_UTF8_HPP_
#define NWAY_UTF8_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

namespace nway::utf8 {

// Byte offset of the first malformed sequence, or nullopt when `text` is
// well-formed. Rejects overlong forms, surrogates and values past U+10FFFF.
std::optional<std::size_t> FindInvalid(std::string_view text);

// Throws EncodingError when `text` is malformed.
void Validate(std::string_view text, std::string_view context = {});

// Length in bytes of the scalar starting at text[pos]. Assumes valid input.
std::size_t SequenceLength(unsigned char lead);

// Number of Unicode scalar values. Assumes valid input.
std::size_t CountScalars(std::string_view text);

}  // namespace nway::utf8

#endif  // NWAY_UTF8_HPP_
