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
#include <cstdint>
#include <random>
#include <vector>

#include "ditlib/dist.hpp"
#include "ditlib/joint.hpp"
#include "ditlib/partition.hpp"
#include "ditlib/universe.hpp"

namespace ditlib {

/// Seeded generators for property suites and `verify`. Uniform variates are
/// drawn by hand from the raw engine so streams do not depend on standard
/// library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound).
  int below(int bound) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
  }

  /// Simplex sample via normalized exponentials (symmetric Dirichlet-like).
  /// With zero_fraction > 0, that share of entries is zeroed first (at
  /// least one entry always survives).
  Dist dist(int n, double zero_fraction = 0.0) {
    std::vector<double> w(static_cast<std::size_t>(n));
    while (true) {
      bool any = false;
      for (double& v : w) {
        if (zero_fraction > 0.0 && uniform() < zero_fraction) {
          v = 0.0;
        } else {
          v = -std::log(1.0 - uniform());
          any = true;
        }
      }
      if (any) break;
    }
    return Dist::normalized(std::move(w));
  }

  Universe universe(int n) { return Universe::with_probs(dist(n).probs()); }

  /// Uniformly shaped partition from a random restricted growth string.
  Partition partition(const Universe& u) {
    int n = u.size();
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    int max_label = 0;
    for (int i = 1; i < n; ++i) {
      rgs[static_cast<std::size_t>(i)] = below(max_label + 2);
      max_label = std::max(max_label, rgs[static_cast<std::size_t>(i)]);
    }
    std::vector<std::vector<int>> blocks(
        static_cast<std::size_t>(max_label + 1));
    for (int j = 0; j < n; ++j)
      blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(j)])]
          .push_back(j);
    return Partition::make(u, blocks);
  }

  JointDist joint(const std::vector<int>& axes, double zero_fraction = 0.0) {
    int cells = 1;
    for (int a : axes) cells *= a;
    return JointDist::make(axes, dist(cells, zero_fraction).probs());
  }

  /// Exactly independent joint: the product of random marginals.
  JointDist product_joint(const std::vector<int>& axes) {
    std::vector<Dist> factors;
    factors.reserve(axes.size());
    for (int a : axes) factors.push_back(dist(a));
    return JointDist::product(factors);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ditlib
