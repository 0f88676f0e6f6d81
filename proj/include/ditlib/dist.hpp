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
#include <string>
#include <utility>
#include <vector>

#include "ditlib/errors.hpp"
#include "ditlib/sum.hpp"
#include "ditlib/universe.hpp"

namespace ditlib {

/// A finite probability distribution. Inputs are validated, never silently
/// renormalized; use normalized() when renormalization is intended.
class Dist {
 public:
  static Dist make(std::vector<double> probs) {
    if (probs.empty()) throw InvariantViolation("distribution must be non-empty");
    CompensatedSum total;
    for (double p : probs) {
      if (!(p >= 0.0))
        throw InvariantViolation("probs: entries must be non-negative");
      total.add(p);
    }
    if (std::abs(total.value() - 1.0) > kProbSumTolerance)
      throw InvariantViolation("probs sum: expected 1, got " +
                               std::to_string(total.value()));
    return Dist(std::move(probs));
  }

  static Dist uniform(int n) {
    if (n < 1) throw InvariantViolation("distribution must be non-empty");
    return Dist(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
  }

  /// Explicit normalization of non-negative weights with positive total.
  static Dist normalized(std::vector<double> weights) {
    if (weights.empty())
      throw InvariantViolation("distribution must be non-empty");
    CompensatedSum total;
    for (double w : weights) {
      if (!(w >= 0.0))
        throw InvariantViolation("weights must be non-negative");
      total.add(w);
    }
    double t = total.value();
    if (!(t > 0.0)) throw InvariantViolation("weights must have positive sum");
    for (double& w : weights) w /= t;
    return Dist(std::move(weights));
  }

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& probs() const { return p_; }
  auto begin() const { return p_.begin(); }
  auto end() const { return p_.end(); }

  friend bool operator==(const Dist& a, const Dist& b) { return a.p_ == b.p_; }

 private:
  explicit Dist(std::vector<double> probs) : p_(std::move(probs)) {}
  std::vector<double> p_;
};

/// The point-probability distribution of a universe.
inline Dist point_dist(const Universe& u) { return Dist::make(u.probs()); }

}  // namespace ditlib
