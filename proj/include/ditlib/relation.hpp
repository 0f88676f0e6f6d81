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

#include <utility>

#include "ditlib/errors.hpp"
#include "ditlib/pairset.hpp"
#include "ditlib/universe.hpp"

namespace ditlib {

/// A binary relation on a universe: an arbitrary subset of U x U.
class BinRel {
 public:
  BinRel(Universe universe, PairSet pairs)
      : universe_(std::move(universe)), pairs_(std::move(pairs)) {
    if (pairs_.universe_size() != universe_.size())
      throw UniverseMismatch("relation size does not match universe size");
  }

  static BinRel empty(Universe universe) {
    int n = universe.size();
    return BinRel(std::move(universe), PairSet(n));
  }

  const Universe& universe() const { return universe_; }
  const PairSet& pairs() const { return pairs_; }
  int size() const { return universe_.size(); }

  friend bool operator==(const BinRel& a, const BinRel& b) {
    return a.universe_ == b.universe_ && a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const BinRel& a, const BinRel& b) {
    return !(a == b);
  }

 private:
  Universe universe_;
  PairSet pairs_;
};

/// Least equivalence relation containing r: reflexivize, symmetrize, then
/// Warshall transitive closure on bit rows (O(n^3 / 64)).
inline PairSet rst_closure(const PairSet& r) {
  int n = r.universe_size();
  PairSet c = r;
  for (int j = 0; j < n; ++j) c.set(j, j);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (c.test(j, k) || c.test(k, j)) {
        c.set(j, k);
        c.set(k, j);
      }
  std::size_t wpr = c.words_per_row();
  for (int k = 0; k < n; ++k) {
    const std::uint64_t* rk = c.row(k);
    for (int j = 0; j < n; ++j) {
      if (!c.test(j, k)) continue;
      std::uint64_t* rj = c.row(j);
      for (std::size_t w = 0; w < wpr; ++w) rj[w] |= rk[w];
    }
  }
  return c;
}

/// Largest partition relation contained in s: the complement of the
/// rst-closure of the complement.
inline PairSet interior(const PairSet& s) {
  return rst_closure(s.complement()).complement();
}

/// True iff r is irreflexive, symmetric, and anti-transitive, i.e. the
/// ditset of some partition.
inline bool is_partition_relation(const PairSet& r) {
  int n = r.universe_size();
  for (int j = 0; j < n; ++j)
    if (r.test(j, j)) return false;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (r.test(j, k) != r.test(k, j)) return false;
  // Anti-transitivity: (j,l) in r implies (j,k) in r or (k,l) in r for all k.
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      if (!r.test(j, l)) continue;
      for (int k = 0; k < n; ++k)
        if (!r.test(j, k) && !r.test(k, l)) return false;
    }
  return true;
}

inline BinRel rst_closure(const BinRel& r) {
  return BinRel(r.universe(), rst_closure(r.pairs()));
}

inline BinRel interior(const BinRel& s) {
  return BinRel(s.universe(), interior(s.pairs()));
}

inline bool is_partition_relation(const BinRel& r) {
  return is_partition_relation(r.pairs());
}

}  // namespace ditlib
