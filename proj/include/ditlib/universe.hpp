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

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ditlib/errors.hpp"
#include "ditlib/sum.hpp"

namespace ditlib {

// All relation machinery stores dense n-by-n bit matrices, so universes are
// capped at desk scale.
inline constexpr int kDefaultUniverseCap = 4096;

// Probability vectors must sum to 1 within this tolerance on input.
inline constexpr double kProbSumTolerance = 1e-9;

/// A labeled finite ground set with point probabilities. Immutable after
/// construction; partitions and relations reference it by value.
class Universe {
 public:
  /// Builds a universe with explicit point probabilities.
  static Universe with_probs(std::vector<double> probs,
                             std::optional<std::vector<std::string>> labels =
                                 std::nullopt,
                             int size_cap = kDefaultUniverseCap) {
    return Universe(std::move(probs), std::move(labels), size_cap);
  }

  /// Builds a universe of n equiprobable points.
  static Universe uniform(int n, int size_cap = kDefaultUniverseCap) {
    if (n < 1) throw InvariantViolation("universe size must be positive");
    return Universe(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n),
                    std::nullopt, size_cap);
  }

  int size() const { return static_cast<int>(probs_.size()); }
  const std::vector<double>& probs() const { return probs_; }
  double prob(int j) const { return probs_[static_cast<std::size_t>(j)]; }
  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.probs_ == b.probs_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const Universe& a, const Universe& b) {
    return !(a == b);
  }

 private:
  Universe(std::vector<double> probs,
           std::optional<std::vector<std::string>> labels, int size_cap) {
    if (probs.empty())
      throw InvariantViolation("universe size must be positive");
    if (static_cast<int>(probs.size()) > size_cap)
      throw InvariantViolation("universe size " +
                               std::to_string(probs.size()) +
                               " exceeds cap " + std::to_string(size_cap));
    CompensatedSum total;
    for (double p : probs) {
      if (!(p >= 0.0))
        throw InvariantViolation("probs: entries must be non-negative");
      total.add(p);
    }
    if (std::abs(total.value() - 1.0) > kProbSumTolerance)
      throw InvariantViolation("probs sum: expected 1, got " +
                               std::to_string(total.value()));
    if (labels) {
      if (labels->size() != probs.size())
        throw InvariantViolation("labels: expected one label per point");
      std::unordered_set<std::string> seen;
      for (const auto& l : *labels)
        if (!seen.insert(l).second)
          throw InvariantViolation("labels: duplicate label \"" + l + "\"");
    }
    probs_ = std::move(probs);
    labels_ = std::move(labels);
  }

  std::vector<double> probs_;
  std::optional<std::vector<std::string>> labels_;
};

}  // namespace ditlib
