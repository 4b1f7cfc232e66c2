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

#ifndef NWAY_DIFF_HPP_
#define NWAY_DIFF_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nway/segmenter.hpp"

namespace nway {

enum class DiffTag { kEqual, kDelete, kInsert };

const char* DiffTagName(DiffTag tag);

// Half-open range of unit indices.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct DiffOp {
  DiffTag tag = DiffTag::kEqual;
  IndexRange a;
  IndexRange b;

  friend bool operator==(const DiffOp&, const DiffOp&) = default;
};

// Alignment of sequence `a` against sequence `b`. The a-ranges of the ops
// tile [0, a_size) in order and the b-ranges tile [0, b_size).
struct DiffScript {
  std::vector<DiffOp> ops;
  std::size_t a_size = 0;
  std::size_t b_size = 0;

  // Number of matched units; equals the LCS length.
  std::size_t EqualMass() const;
};

// Maps unit texts onto dense integer symbols so diffs compare ints.
class SymbolTable {
 public:
  std::int32_t Intern(std::string_view text);
  std::vector<std::int32_t> Intern(std::span<const Unit> units);
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, std::int32_t> ids_;
};

// LCS-optimal diff over symbol sequences (Myers O((N+M)D)).
//
// Among the optimal alignments the result is always the same canonical one:
// walking from the start, heads that are equal are matched; otherwise the
// head of `a` is deleted if that keeps the remaining LCS unchanged, and the
// head of `b` is inserted if not. Within a gap between two matches the
// script lists the delete run before the insert run.
DiffScript DiffSymbols(std::span<const std::int32_t> a,
                       std::span<const std::int32_t> b);

// Diff over units, comparing unit text only.
DiffScript Diff(std::span<const Unit> a, std::span<const Unit> b);

// mask[k] is true iff unit k of b lies inside an equal op.
std::vector<bool> MatchedInB(const DiffScript& script);
std::vector<bool> MatchedInA(const DiffScript& script);

}  // namespace nway

#endif  // NWAY_DIFF_HPP_
