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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ditlib/errors.hpp"

namespace ditlib {

/// A set of ordered index pairs over {0..n-1}^2, stored as a dense bit
/// matrix with word-aligned rows. Houses ditsets, inditsets, and the
/// subsets of the square that product measures are taken over.
class PairSet {
 public:
  explicit PairSet(int n) : n_(n) {
    if (n < 1) throw InvariantViolation("pair set size must be positive");
    words_per_row_ = static_cast<std::size_t>((n + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n) * words_per_row_, 0);
  }

  /// The full square {0..n-1}^2.
  static PairSet full(int n) {
    PairSet s(n);
    for (auto& w : s.bits_) w = ~std::uint64_t{0};
    s.mask_padding();
    return s;
  }

  /// The diagonal {(j,j)}.
  static PairSet diagonal(int n) {
    PairSet s(n);
    for (int j = 0; j < n; ++j) s.set(j, j);
    return s;
  }

  int universe_size() const { return n_; }

  bool test(int j, int k) const {
    return (word(j, k) >> (static_cast<unsigned>(k) & 63u)) & 1u;
  }

  void set(int j, int k, bool value = true) {
    check_range(j, k);
    std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(k) & 63u);
    if (value)
      word(j, k) |= mask;
    else
      word(j, k) &= ~mask;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : bits_) if (w) return false;
    return true;
  }

  PairSet& operator|=(const PairSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  PairSet& operator&=(const PairSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  /// Set difference: removes o's pairs.
  PairSet& operator-=(const PairSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  friend PairSet operator|(PairSet a, const PairSet& b) { return a |= b; }
  friend PairSet operator&(PairSet a, const PairSet& b) { return a &= b; }
  friend PairSet operator-(PairSet a, const PairSet& b) { return a -= b; }

  /// Complement within the square.
  PairSet complement() const {
    PairSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    r.mask_padding();
    return r;
  }

  friend bool operator==(const PairSet& a, const PairSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const PairSet& a, const PairSet& b) {
    return !(a == b);
  }

  bool is_subset_of(const PairSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  bool intersects(const PairSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  /// Pairs in row-major order; the deterministic iteration order used for
  /// measures and serialization.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(count());
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (test(j, k)) out.emplace_back(j, k);
    return out;
  }

  // Row-level access used by the transitive closure.
  std::uint64_t* row(int j) {
    return bits_.data() + static_cast<std::size_t>(j) * words_per_row_;
  }
  const std::uint64_t* row(int j) const {
    return bits_.data() + static_cast<std::size_t>(j) * words_per_row_;
  }
  std::size_t words_per_row() const { return words_per_row_; }

 private:
  std::uint64_t& word(int j, int k) {
    return bits_[static_cast<std::size_t>(j) * words_per_row_ +
                 (static_cast<std::size_t>(k) >> 6)];
  }
  const std::uint64_t& word(int j, int k) const {
    return bits_[static_cast<std::size_t>(j) * words_per_row_ +
                 (static_cast<std::size_t>(k) >> 6)];
  }

  void check_range(int j, int k) const {
    if (j < 0 || j >= n_ || k < 0 || k >= n_)
      throw InvariantViolation("pair (" + std::to_string(j) + "," +
                               std::to_string(k) + ") out of range for n=" +
                               std::to_string(n_));
  }

  void check_same(const PairSet& o) const {
    if (n_ != o.n_)
      throw SizeMismatch("pair sets over different universe sizes: " +
                         std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

  // Bits past column n-1 in the last word of each row stay zero.
  void mask_padding() {
    unsigned rem = static_cast<unsigned>(n_) & 63u;
    if (rem == 0) return;
    std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    for (int j = 0; j < n_; ++j) row(j)[words_per_row_ - 1] &= mask;
  }

  int n_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ditlib
