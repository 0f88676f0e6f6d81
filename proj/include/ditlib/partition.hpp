// Copyright 2026 The ditlib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ditlib/errors.hpp"
#include "ditlib/relation.hpp"
#include "ditlib/sum.hpp"
#include "ditlib/universe.hpp"

namespace ditlib {

/// A partition of a universe into mutually disjoint, jointly exhaustive
/// blocks. Kept in canonical form: indices ascending within each block,
/// blocks ordered by least element, so equality is structural.
class Partition {
 public:
  /// Validates and canonicalizes raw blocks into a partition.
  static Partition make(Universe universe,
                        const std::vector<std::vector<int>>& raw_blocks) {
    int n = universe.size();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(raw_blocks.size());
    for (const auto& raw : raw_blocks) {
      if (raw.empty()) throw EmptyBlockError("blocks must be non-empty");
      std::vector<int> block = raw;
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      if (block.size() != raw.size())
        throw OverlapError("index repeated within a block");
      for (int j : block) {
        if (j < 0 || j >= n)
          throw InvariantViolation("block index " + std::to_string(j) +
                                   " out of range for universe size " +
                                   std::to_string(n));
        if (owner[static_cast<std::size_t>(j)] != -1)
          throw OverlapError("index " + std::to_string(j) +
                             " appears in two blocks");
        owner[static_cast<std::size_t>(j)] =
            static_cast<int>(blocks.size());
      }
      blocks.push_back(std::move(block));
    }
    for (int j = 0; j < n; ++j)
      if (owner[static_cast<std::size_t>(j)] == -1)
        throw CoverageError("index " + std::to_string(j) +
                            " not covered by any block");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return Partition(std::move(universe), std::move(blocks));
  }

  /// The top partition: all singleton blocks.
  static Partition discrete(Universe universe) {
    int n = universe.size();
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) blocks.push_back({j});
    return Partition(std::move(universe), std::move(blocks));
  }

  /// The bottom partition: one block containing everything.
  static Partition indiscrete(Universe universe) {
    int n = universe.size();
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return Partition(std::move(universe), {std::move(all)});
  }

  /// Rebinds the same blocks onto another universe of equal size, so one
  /// partition can be measured under different point probabilities.
  Partition with_universe(Universe universe) const {
    if (universe.size() != universe_.size())
      throw UniverseMismatch("replacement universe has different size");
    return Partition(std::move(universe), blocks_);
  }

  const Universe& universe() const { return universe_; }
  int size() const { return universe_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int block_of(int j) const { return block_of_[static_cast<std::size_t>(j)]; }

  bool is_discrete() const { return num_blocks() == size(); }
  bool is_indiscrete() const { return num_blocks() == 1; }

  /// p(B_i) = sum of point probabilities over each block.
  std::vector<double> block_probs() const {
    std::vector<double> out;
    out.reserve(blocks_.size());
    for (const auto& block : blocks_) {
      CompensatedSum s;
      for (int j : block) s.add(universe_.prob(j));
      out.push_back(s.value());
    }
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.universe_ == b.universe_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }

 private:
  Partition(Universe universe, std::vector<std::vector<int>> blocks)
      : universe_(std::move(universe)), blocks_(std::move(blocks)) {
    block_of_.assign(static_cast<std::size_t>(universe_.size()), -1);
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b)
      for (int j : blocks_[static_cast<std::size_t>(b)])
        block_of_[static_cast<std::size_t>(j)] = b;
  }

  Universe universe_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // index -> block id
};

inline Partition make_partition(Universe universe,
                                const std::vector<std::vector<int>>& blocks) {
  return Partition::make(std::move(universe), blocks);
}

/// Set of distinctions: ordered pairs whose endpoints lie in different
/// blocks. Symmetric and irreflexive.
inline BinRel ditset(const Partition& p) {
  int n = p.size();
  PairSet s(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (p.block_of(j) != p.block_of(k)) s.set(j, k);
  return BinRel(p.universe(), std::move(s));
}

/// The complementary equivalence relation: union of B_i x B_i.
inline BinRel inditset(const Partition& p) {
  int n = p.size();
  PairSet s(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (p.block_of(j) == p.block_of(k)) s.set(j, k);
  return BinRel(p.universe(), std::move(s));
}

namespace detail {
inline void check_same_universe(const Partition& a, const Partition& b) {
  if (a.universe() != b.universe())
    throw UniverseMismatch("partitions live on different universes");
}
}  // namespace detail

/// Partial order sigma <= pi: every block of pi lies inside a block of
/// sigma, equivalently dit(sigma) is contained in dit(pi).
inline bool refines(const Partition& sigma, const Partition& pi) {
  detail::check_same_universe(sigma, pi);
  for (const auto& block : pi.blocks()) {
    int home = sigma.block_of(block.front());
    for (int j : block)
      if (sigma.block_of(j) != home) return false;
  }
  return true;
}

/// Join: blocks are the non-empty intersections B n C, so
/// dit(join) = dit(pi) | dit(sigma).
inline Partition join(const Partition& pi, const Partition& sigma) {
  detail::check_same_universe(pi, sigma);
  int n = pi.size();
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int j = 0; j < n; ++j)
    cells[{pi.block_of(j), sigma.block_of(j)}].push_back(j);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(cells.size());
  for (auto& [key, members] : cells) blocks.push_back(std::move(members));
  return Partition::make(pi.universe(), blocks);
}

/// Meet: equivalence classes of the relation generated by block overlap.
/// Realized with union-find: elements sharing a block in either operand are
/// united, classes become blocks.
inline Partition meet(const Partition& pi, const Partition& sigma) {
  detail::check_same_universe(pi, sigma);
  int n = pi.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    parent[static_cast<std::size_t>(find(a))] = find(b);
  };
  for (const auto& block : pi.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) unite(block[0], block[i]);
  for (const auto& block : sigma.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) unite(block[0], block[i]);
  std::map<int, std::vector<int>> classes;
  for (int j = 0; j < n; ++j) classes[find(j)].push_back(j);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(classes.size());
  for (auto& [root, members] : classes) blocks.push_back(std::move(members));
  return Partition::make(pi.universe(), blocks);
}

/// Implication partition sigma => pi: a block B of pi is discretized into
/// singletons when it lies inside some block of sigma, otherwise kept
/// whole. Equals the top partition exactly when refines(sigma, pi).
inline Partition implication(const Partition& sigma, const Partition& pi) {
  detail::check_same_universe(sigma, pi);
  std::vector<std::vector<int>> blocks;
  for (const auto& block : pi.blocks()) {
    int home = sigma.block_of(block.front());
    bool inside = true;
    for (int j : block)
      if (sigma.block_of(j) != home) {
        inside = false;
        break;
      }
    if (inside) {
      for (int j : block) blocks.push_back({j});
    } else {
      blocks.push_back(block);
    }
  }
  return Partition::make(pi.universe(), blocks);
}

}  // namespace ditlib
