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

// Brute-force oracles used by the tests. These deliberately avoid the
// library's own enumeration, bit-matrix, and closed-form code paths so the
// checks stay independent of what they check.

#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracles {

using Blocks = std::vector<std::vector<int>>;
using PairList = std::set<std::pair<int, int>>;

/// All set partitions of {0..n-1} by recursive placement: element i joins an
/// existing block or opens a new one. Blocks come out with ascending members
/// and are ordered by least element.
inline std::vector<Blocks> all_partitions(int n) {
  std::vector<Blocks> out;
  Blocks current;
  std::function<void(int)> place = [&](int element) {
    if (element == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(element);
      place(element + 1);
      current[b].pop_back();
    }
    current.push_back({element});
    place(element + 1);
    current.pop_back();
  };
  place(0);
  return out;
}

inline std::vector<int> block_lookup(const Blocks& blocks, int n) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int j : blocks[static_cast<std::size_t>(b)])
      owner[static_cast<std::size_t>(j)] = b;
  return owner;
}

/// dit(pi) by definition: ordered pairs in different blocks.
inline PairList ditset_pairs(const Blocks& blocks, int n) {
  std::vector<int> owner = block_lookup(blocks, n);
  PairList pairs;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (owner[static_cast<std::size_t>(j)] !=
          owner[static_cast<std::size_t>(k)])
        pairs.insert({j, k});
  return pairs;
}

/// mu(S) = sum of p_j p_k over S, as a plain double loop.
inline double product_measure(const std::vector<double>& probs,
                              const PairList& pairs) {
  double total = 0.0;
  for (const auto& [j, k] : pairs)
    total += probs[static_cast<std::size_t>(j)] *
             probs[static_cast<std::size_t>(k)];
  return total;
}

/// Largest ditset contained in s, by scanning every partition of the n-set.
inline PairList interior(const PairList& s, int n) {
  PairList best;
  for (const Blocks& blocks : all_partitions(n)) {
    PairList d = ditset_pairs(blocks, n);
    if (std::includes(s.begin(), s.end(), d.begin(), d.end()) &&
        d.size() > best.size())
      best = d;
  }
  return best;
}

/// Least equivalence relation containing r: the intersection of all
/// inditsets (equivalence relations) that contain r.
inline PairList rst_closure(const PairList& r, int n) {
  PairList best;
  bool first = true;
  for (const Blocks& blocks : all_partitions(n)) {
    std::vector<int> owner = block_lookup(blocks, n);
    PairList indit;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (owner[static_cast<std::size_t>(j)] ==
            owner[static_cast<std::size_t>(k)])
          indit.insert({j, k});
    if (!std::includes(indit.begin(), indit.end(), r.begin(), r.end()))
      continue;
    if (first) {
      best = indit;
      first = false;
    } else {
      PairList meet;
      std::set_intersection(best.begin(), best.end(), indit.begin(),
                            indit.end(), std::inserter(meet, meet.begin()));
      best = meet;
    }
  }
  return best;
}

/// The implication partition by the block rule: blocks of pi inside some
/// block of sigma are discretized, the rest kept.
inline Blocks implication(const Blocks& sigma, const Blocks& pi, int n) {
  std::vector<int> owner = block_lookup(sigma, n);
  Blocks out;
  for (const auto& block : pi) {
    bool inside = true;
    for (int j : block)
      if (owner[static_cast<std::size_t>(j)] !=
          owner[static_cast<std::size_t>(block.front())])
        inside = false;
    if (inside)
      for (int j : block) out.push_back({j});
    else
      out.push_back(block);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

/// Refinement by the block rule: every block of pi lies in a block of sigma.
inline bool refines(const Blocks& sigma, const Blocks& pi, int n) {
  std::vector<int> owner = block_lookup(sigma, n);
  for (const auto& block : pi)
    for (int j : block)
      if (owner[static_cast<std::size_t>(j)] !=
          owner[static_cast<std::size_t>(block.front())])
        return false;
  return true;
}

/// Product-measure of {((x),(x')) : predicate} over a dense joint table,
/// with coordinates decoded positionally (last axis fastest).
inline double joint_pair_measure(
    const std::vector<int>& axes, const std::vector<double>& table,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>&
        predicate) {
  int cells = static_cast<int>(table.size());
  auto decode = [&](int flat) {
    std::vector<int> coords(axes.size());
    for (int i = static_cast<int>(axes.size()) - 1; i >= 0; --i) {
      coords[static_cast<std::size_t>(i)] =
          flat % axes[static_cast<std::size_t>(i)];
      flat /= axes[static_cast<std::size_t>(i)];
    }
    return coords;
  };
  double total = 0.0;
  for (int a = 0; a < cells; ++a)
    for (int b = 0; b < cells; ++b)
      if (predicate(decode(a), decode(b)))
        total += table[static_cast<std::size_t>(a)] *
                 table[static_cast<std::size_t>(b)];
  return total;
}

}  // namespace oracles
