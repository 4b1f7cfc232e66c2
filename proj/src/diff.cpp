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

#include "nway/diff.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

namespace nway {
namespace {

using Symbols = std::span<const std::int32_t>;

// One Myers layer: for every diagonal k = u - v in [-d, d] with k == d (mod 2),
// the largest u reachable within cost d, or -1. Coordinates (u, v) count
// elements consumed from the END of a and b, so layer d answers "is the
// remaining suffix at (n-u, m-v) within d edits of the end".
using Layer = std::vector<std::int32_t>;

class ReverseMyers {
 public:
  ReverseMyers(Symbols a, Symbols b)
      : a_(a), b_(b), n_(static_cast<int>(a.size())), m_(static_cast<int>(b.size())) {}

  Layer First() const {
    Layer layer(1);
    layer[0] = Snake(0, 0);
    return layer;
  }

  Layer Step(const Layer* two_back, const Layer& prev, int d) const {
    Layer cur(static_cast<std::size_t>(d) + 1, -1);
    for (int t = 0; t <= d; ++t) {
      const int k = -d + 2 * t;
      if (k < -m_ || k > n_) continue;
      int best = -1;
      // From diagonal k+1 by consuming one element of b.
      if (k + 1 <= d - 1) {
        const int w = At(prev, k + 1, d - 1);
        if (w >= 0) {
          const int clamped = std::min(w, m_ + k);
          if (clamped >= std::max(0, k + 1)) best = std::max(best, clamped);
        }
      }
      // From diagonal k-1 by consuming one element of a.
      if (k - 1 >= -(d - 1)) {
        const int w = At(prev, k - 1, d - 1);
        if (w >= 0) {
          const int clamped = std::min(w, n_ - 1);
          if (clamped >= std::max(0, k - 1)) best = std::max(best, clamped + 1);
        }
      }
      if (two_back != nullptr && k >= -(d - 2) && k <= d - 2) {
        best = std::max(best, At(*two_back, k, d - 2));
      }
      if (best >= 0) best = Snake(best, best - k);
      cur[static_cast<std::size_t>(t)] = best;
    }
    return cur;
  }

  bool Reached(const Layer& layer, int d) const {
    const int k = n_ - m_;
    return k >= -d && k <= d && ((k + d) % 2 == 0) && At(layer, k, d) >= n_;
  }

  static int At(const Layer& layer, int k, int d) {
    return layer[static_cast<std::size_t>((k + d) / 2)];
  }

 private:
  int Snake(int u, int v) const {
    while (u < n_ && v < m_ && a_[n_ - 1 - u] == b_[m_ - 1 - v]) ++u, ++v;
    return u;
  }

  Symbols a_;
  Symbols b_;
  int n_;
  int m_;
};

// Runs the reverse Myers search once, keeping only a pair of layers every
// `block` steps, then hands out layers in descending order by recomputing one
// block at a time. Memory stays near O(D * sqrt(n + m)).
class LayerStore {
 public:
  LayerStore(const ReverseMyers& myers, int block) : myers_(myers), block_(block) {
    Layer prev2;
    Layer prev = myers_.First();
    int d = 0;
    checkpoints_.emplace_back(prev, Layer{});
    while (!myers_.Reached(prev, d)) {
      ++d;
      Layer cur = myers_.Step(d >= 2 ? &prev2 : nullptr, prev, d);
      prev2 = std::move(prev);
      prev = std::move(cur);
      if (d % block_ == 1) checkpoints_.back().second = prev;
      if (d % block_ == 0) checkpoints_.emplace_back(prev, Layer{});
    }
    distance_ = d;
  }

  int distance() const { return distance_; }

  // Layers must be requested in non-increasing order of d.
  const Layer& Get(int d) {
    const int q = d / block_;
    if (q != cached_block_) Load(q);
    return cache_[static_cast<std::size_t>(d - q * block_)];
  }

 private:
  void Load(int q) {
    cache_.clear();
    const int first = q * block_;
    const int last = std::min(first + block_ - 1, distance_);
    const auto& cp = checkpoints_[static_cast<std::size_t>(q)];
    cache_.push_back(cp.first);
    if (first + 1 <= last) cache_.push_back(cp.second);
    for (int d = first + 2; d <= last; ++d) {
      const std::size_t i = cache_.size();
      cache_.push_back(myers_.Step(&cache_[i - 2], cache_[i - 1], d));
    }
    cached_block_ = q;
  }

  const ReverseMyers& myers_;
  int block_;
  int distance_ = 0;
  std::vector<std::pair<Layer, Layer>> checkpoints_;
  std::vector<Layer> cache_;
  int cached_block_ = -1;
};

// Appends the canonical match pairs of a against b to `matches`, offset by
// (a_off, b_off).
void CanonicalMatches(Symbols a, Symbols b, std::size_t a_off, std::size_t b_off,
                      std::vector<std::pair<std::size_t, std::size_t>>& matches) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  if (n == 0 || m == 0) return;

  ReverseMyers myers(a, b);
  const int block = std::max(16, static_cast<int>(std::ceil(std::sqrt(n + m))));
  LayerStore layers(myers, block);

  int i = 0;
  int j = 0;
  int cost = layers.distance();
  while (i < n || j < m) {
    if (i < n && j < m && a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(j)]) {
      matches.emplace_back(a_off + i, b_off + j);
      ++i, ++j;
      continue;
    }
    assert(cost > 0);
    bool take_delete = false;
    if (i < n) {
      // Is (i+1, j) within cost-1 of the end?
      const int u = n - i - 1;
      const int v = m - j;
      const int k = u - v;
      const int d = cost - 1;
      if (k >= -d && k <= d) {
        take_delete = u <= ReverseMyers::At(layers.Get(d), k, d);
      }
    }
    if (take_delete) {
      ++i;
    } else {
      assert(j < m);
      ++j;
    }
    --cost;
  }
}

DiffScript BuildScript(const std::vector<std::pair<std::size_t, std::size_t>>& matches,
                       std::size_t n, std::size_t m) {
  DiffScript script;
  script.a_size = n;
  script.b_size = m;
  std::size_t ai = 0;
  std::size_t bi = 0;
  auto flush_gap = [&](std::size_t a_to, std::size_t b_to) {
    if (a_to > ai) script.ops.push_back({DiffTag::kDelete, {ai, a_to}, {bi, bi}});
    if (b_to > bi) script.ops.push_back({DiffTag::kInsert, {a_to, a_to}, {bi, b_to}});
    ai = a_to;
    bi = b_to;
  };
  for (const auto& [x, y] : matches) {
    flush_gap(x, y);
    if (!script.ops.empty() && script.ops.back().tag == DiffTag::kEqual &&
        script.ops.back().a.end == x && script.ops.back().b.end == y) {
      ++script.ops.back().a.end;
      ++script.ops.back().b.end;
    } else {
      script.ops.push_back({DiffTag::kEqual, {x, x + 1}, {y, y + 1}});
    }
    ai = x + 1;
    bi = y + 1;
  }
  flush_gap(n, m);
  return script;
}

std::vector<bool> MaskOf(const DiffScript& script, bool side_b) {
  std::vector<bool> mask(side_b ? script.b_size : script.a_size, false);
  for (const auto& op : script.ops) {
    if (op.tag != DiffTag::kEqual) continue;
    const IndexRange& r = side_b ? op.b : op.a;
    std::fill(mask.begin() + static_cast<std::ptrdiff_t>(r.begin),
              mask.begin() + static_cast<std::ptrdiff_t>(r.end), true);
  }
  return mask;
}

}  // namespace

const char* DiffTagName(DiffTag tag) {
  switch (tag) {
    case DiffTag::kEqual: return "equal";
    case DiffTag::kDelete: return "delete";
    case DiffTag::kInsert: return "insert";
  }
  return "equal";
}

std::size_t DiffScript::EqualMass() const {
  std::size_t mass = 0;
  for (const auto& op : ops) {
    if (op.tag == DiffTag::kEqual) mass += op.a.size();
  }
  return mass;
}

std::int32_t SymbolTable::Intern(std::string_view text) {
  auto [it, inserted] =
      ids_.try_emplace(std::string(text), static_cast<std::int32_t>(ids_.size()));
  return it->second;
}

std::vector<std::int32_t> SymbolTable::Intern(std::span<const Unit> units) {
  std::vector<std::int32_t> out;
  out.reserve(units.size());
  for (const auto& unit : units) out.push_back(Intern(unit.text));
  return out;
}

DiffScript DiffSymbols(Symbols a, Symbols b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::pair<std::size_t, std::size_t>> matches;

  std::size_t prefix = 0;
  while (prefix < n && prefix < m && a[prefix] == b[prefix]) {
    matches.emplace_back(prefix, prefix);
    ++prefix;
  }
  // Only the prefix is trimmed: a shared suffix can still be matched earlier
  // by the canonical walk, so it has to go through the search.
  CanonicalMatches(a.subspan(prefix), b.subspan(prefix), prefix, prefix, matches);
  return BuildScript(matches, n, m);
}

DiffScript Diff(std::span<const Unit> a, std::span<const Unit> b) {
  SymbolTable table;
  const auto sa = table.Intern(a);
  const auto sb = table.Intern(b);
  return DiffSymbols(sa, sb);
}

std::vector<bool> MatchedInB(const DiffScript& script) { return MaskOf(script, true); }
std::vector<bool> MatchedInA(const DiffScript& script) { return MaskOf(script, false); }

}  // namespace nway
