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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "ditlib/ditlib.hpp"
#include "oracles.hpp"

using namespace ditlib;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("dist validation and normalization") {
  CHECK(Dist::make({0.5, 0.5}).size() == 2);
  CHECK_THROWS_AS(Dist::make({0.5, 0.4}), InvariantViolation);
  CHECK_THROWS_AS(Dist::make({1.2, -0.2}), InvariantViolation);
  Dist n = Dist::normalized({2.0, 2.0, 4.0});
  CHECK(n[2] == Catch::Approx(0.5));
  CHECK_THROWS_AS(Dist::normalized({0.0, 0.0}), InvariantViolation);
}

TEST_CASE("product measure examples and axioms") {
  Dist uniform2 = Dist::uniform(2);
  CHECK(product_measure(uniform2, PairSet(2)) == 0.0);
  CHECK(product_measure(uniform2, PairSet::full(2)) == Catch::Approx(1.0));
  PairSet off_diag = PairSet::full(2) - PairSet::diagonal(2);
  CHECK(product_measure(uniform2, off_diag) == Catch::Approx(0.5));
  CHECK_THROWS_AS(product_measure(uniform2, PairSet(3)), SizeMismatch);

  // Measure axioms: empty set, non-negativity, additivity over random
  // disjoint splits.
  Rng rng(7300);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + rng.below(7);
    Dist d = rng.dist(n);
    PairSet e1(n), e2(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double roll = rng.uniform();
        if (roll < 0.3) e1.set(j, k);
        else if (roll < 0.6) e2.set(j, k);
      }
    double mu1 = product_measure(d, e1);
    double mu2 = product_measure(d, e2);
    CHECK(mu1 >= 0.0);
    CHECK(std::abs(product_measure(d, e1 | e2) - (mu1 + mu2)) < kTol);
  }
}

TEST_CASE("logical entropy of distributions") {
  CHECK(logical_entropy(Dist::make({1.0, 0.0, 0.0})) == 0.0);
  CHECK(logical_entropy(Dist::uniform(2)) == Catch::Approx(0.5));
  CHECK(logical_entropy(Dist::make({0.99, 0.01})) ==
        Catch::Approx(0.0198).margin(1e-12));
  CHECK(repeat_rate(Dist::uniform(4)) == Catch::Approx(0.25));
  CHECK(repeat_rate(Dist::make({1.0, 0.0})) == 1.0);
  CHECK(repeat_rate(Dist::make({0.99, 0.01})) ==
        Catch::Approx(0.9802).margin(1e-12));

  Rng rng(7301);
  for (int i = 0; i < 200; ++i) {
    Dist d = rng.dist(2 + rng.below(7));
    CHECK(std::abs(logical_entropy(d) - (1.0 - repeat_rate(d))) < kTol);
    CHECK(logical_entropy(d) >= 0.0);
    CHECK(logical_entropy(d) <= 1.0 - 1.0 / d.size() + kTol);
  }
}

TEST_CASE("logical entropy is maximized at uniform") {
  // Local perturbations (move mass between two coordinates) only lower h.
  Rng rng(7302);
  for (int n = 2; n <= 6; ++n) {
    Dist u = Dist::uniform(n);
    double h_max = logical_entropy(u);
    CHECK(h_max == Catch::Approx(1.0 - 1.0 / n));
    for (int i = 0; i < 50; ++i) {
      std::vector<double> probs = u.probs();
      int a = rng.below(n), b = rng.below(n);
      if (a == b) continue;
      double eps = 0.5 * rng.uniform() / n;
      probs[static_cast<std::size_t>(a)] += eps;
      probs[static_cast<std::size_t>(b)] -= eps;
      if (eps > 0.0) CHECK(logical_entropy(Dist::make(probs)) < h_max);
    }
  }
}

TEST_CASE("partition logical entropy matches the product-measure oracle") {
  Universe u4 = Universe::uniform(4);
  CHECK(logical_entropy_partition(Partition::indiscrete(u4)) == 0.0);
  CHECK(logical_entropy_partition(Partition::discrete(u4)) ==
        Catch::Approx(0.75));  // 1 - 1/n at uniform
  Partition halves = make_partition(u4, {{0, 1}, {2, 3}});
  CHECK(logical_entropy_partition(halves) == Catch::Approx(0.5));

  Rng rng(7303);
  for (int i = 0; i < 200; ++i) {
    Universe u = rng.universe(2 + rng.below(7));
    Partition p = rng.partition(u);
    oracles::PairList dits;
    for (const auto& pr : ditset(p).pairs().pairs()) dits.insert(pr);
    CHECK(std::abs(logical_entropy_partition(p) -
                   oracles::product_measure(u.probs(), dits)) < kTol);
  }
}

TEST_CASE("rescaled logical entropy") {
  Universe u4 = Universe::uniform(4);
  CHECK(rescaled_logical_entropy(Partition::discrete(u4)) ==
        Catch::Approx(1.0));
  CHECK(rescaled_logical_entropy(Partition::discrete(Universe::uniform(7))) ==
        Catch::Approx(1.0));
  CHECK(rescaled_logical_entropy(Partition::indiscrete(u4)) == 0.0);
  CHECK(rescaled_logical_entropy(make_partition(u4, {{0, 1}, {2, 3}})) ==
        Catch::Approx(2.0 / 3.0));
  CHECK(rescaled_logical_entropy(Partition::discrete(Universe::uniform(1))) ==
        0.0);
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy(Dist::make({0.99, 0.01}), LogBase::natural) ==
        Catch::Approx(0.0560).margin(5e-4));
  CHECK(shannon_entropy(Dist::uniform(2), LogBase::natural) ==
        Catch::Approx(0.693).margin(5e-4));
  CHECK(shannon_entropy(Dist::uniform(4), LogBase::two) == Catch::Approx(2.0));
  CHECK(shannon_entropy(Dist::make({1.0, 0.0})) == 0.0);  // 0 log 0 = 0
}

TEST_CASE("logical cross entropy") {
  Dist half = Dist::uniform(2);
  CHECK(cross_entropy_logical(half, half) == Catch::Approx(0.5));
  CHECK(cross_entropy_logical(Dist::make({1.0, 0.0}), Dist::make({0.0, 1.0})) ==
        Catch::Approx(1.0));
  CHECK(cross_entropy_logical(Dist::make({0.99, 0.01}), half) ==
        Catch::Approx(0.5));
  CHECK_THROWS_AS(cross_entropy_logical(half, Dist::uniform(3)), SizeMismatch);

  Rng rng(7304);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + rng.below(6);
    Dist p = rng.dist(n), q = rng.dist(n);
    CHECK(std::abs(cross_entropy_logical(p, q) - cross_entropy_logical(q, p)) <
          kTol);  // symmetric
    CHECK(std::abs(cross_entropy_logical(p, p) - logical_entropy(p)) < kTol);
  }
}

TEST_CASE("shannon cross entropy") {
  Dist half = Dist::uniform(2);
  Dist skew = Dist::make({0.25, 0.75});
  CHECK(cross_entropy_shannon(half, half) ==
        Catch::Approx(shannon_entropy(half)));
  CHECK(std::isinf(cross_entropy_shannon(Dist::make({1.0, 0.0}),
                                         Dist::make({0.0, 1.0}))));
  CHECK(cross_entropy_shannon(half, skew) ==
        Catch::Approx(1.0 + 0.5 * std::log2(4.0 / 3.0)).margin(1e-12));
}

TEST_CASE("kl divergence") {
  Dist half = Dist::uniform(2);
  Dist skew = Dist::make({0.25, 0.75});
  CHECK(kl_divergence(half, half) == 0.0);
  CHECK(kl_divergence(half, skew) ==
        Catch::Approx(cross_entropy_shannon(half, skew) - 1.0).margin(1e-12));
  CHECK(kl_divergence(Dist::make({1.0, 0.0}), half) == Catch::Approx(1.0));
  CHECK(std::isinf(kl_divergence(Dist::make({1.0, 0.0}),
                                 Dist::make({0.0, 1.0}))));

  // Asymmetry witness, pinned.
  Dist p = Dist::make({0.9, 0.1});
  Dist q = Dist::make({0.5, 0.5});
  CHECK(kl_divergence(p, q) != kl_divergence(q, p));
  CHECK(kl_divergence(p, q, /*symmetrized=*/true) ==
        Catch::Approx(0.5 * (kl_divergence(p, q) + kl_divergence(q, p))));

  Rng rng(7305);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + rng.below(6);
    Dist a = rng.dist(n), b = rng.dist(n);
    CHECK(kl_divergence(a, b) >= 0.0);
    double linf = 0.0;
    for (int j = 0; j < n; ++j) linf = std::max(linf, std::abs(a[j] - b[j]));
    if (linf > 1e-6) CHECK(kl_divergence(a, b) > 0.0);
  }
}

TEST_CASE("logical divergence and the Jensen difference") {
  Dist half = Dist::uniform(2);
  CHECK(logical_divergence(half, half) == 0.0);
  CHECK(logical_divergence(Dist::make({1.0, 0.0}), Dist::make({0.0, 1.0})) ==
        Catch::Approx(1.0));
  CHECK(logical_divergence(Dist::make({0.99, 0.01}), half) ==
        Catch::Approx(0.2401).margin(1e-12));

  Rng rng(7306);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + rng.below(6);
    Dist p = rng.dist(n), q = rng.dist(n);
    double jensen = cross_entropy_logical(p, q) -
                    0.5 * (logical_entropy(p) + logical_entropy(q));
    CHECK(std::abs(logical_divergence(p, q) - jensen) < kTol);
    CHECK(logical_divergence(p, q) >= 0.0);
    CHECK(std::abs(logical_divergence(p, q) - logical_divergence(q, p)) < kTol);
  }
}

TEST_CASE("mixing chain") {
  Dist half = Dist::uniform(2);
  MixingChain equal = mixing_check(half, half);
  CHECK(equal.cross == Catch::Approx(0.5));
  CHECK(equal.mixed == Catch::Approx(0.5));
  CHECK(equal.average == Catch::Approx(0.5));

  MixingChain disjoint =
      mixing_check(Dist::make({1.0, 0.0}), Dist::make({0.0, 1.0}));
  CHECK(disjoint.cross == Catch::Approx(1.0));
  CHECK(disjoint.mixed == Catch::Approx(0.5));
  CHECK(disjoint.average == Catch::Approx(0.0));

  MixingChain skewed = mixing_check(Dist::make({0.99, 0.01}), half);
  CHECK(skewed.cross > skewed.mixed);
  CHECK(skewed.mixed > skewed.average);

  Rng rng(7307);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + rng.below(6);
    Dist p = rng.dist(n), q = rng.dist(n);
    MixingChain chain = mixing_check(p, q);
    CHECK(std::abs(chain.mixed - (0.5 * chain.cross + 0.5 * chain.average)) <
          kTol);
    CHECK(chain.cross >= chain.mixed - kTol);
    CHECK(chain.mixed >= chain.average - kTol);
  }
}

TEST_CASE("numbers-equivalent entropy") {
  CHECK(numbers_equivalent_entropy(Dist::make({0.99, 0.01})) ==
        Catch::Approx(1.057).margin(1e-3));
  CHECK(numbers_equivalent_entropy(Dist::uniform(2)) ==
        Catch::Approx(2.000).margin(1e-3));
  for (int n = 1; n <= 8; ++n)
    CHECK(numbers_equivalent_entropy(Dist::uniform(n)) ==
          Catch::Approx(static_cast<double>(n)).margin(1e-9));
  CHECK(numbers_equivalent_entropy(Dist::make({1.0, 0.0})) ==
        Catch::Approx(1.0));  // zero entries contribute factor 1

  Rng rng(7308);
  for (int i = 0; i < 100; ++i) {
    Dist p = rng.dist(2 + rng.below(7));
    CHECK(std::abs(std::log2(numbers_equivalent_entropy(p)) -
                   shannon_entropy(p, LogBase::two)) < 1e-9);
  }
}

TEST_CASE("rao quadratic entropy") {
  Dist half = Dist::uniform(2);
  std::vector<std::vector<double>> logical{{0, 1}, {1, 0}};
  CHECK(rao_quadratic_entropy(half, logical) == Catch::Approx(0.5));
  std::vector<std::vector<double>> zeros{{0, 0}, {0, 0}};
  CHECK(rao_quadratic_entropy(half, zeros) == 0.0);
  std::vector<std::vector<double>> two{{0, 2}, {2, 0}};
  CHECK(rao_quadratic_entropy(half, two) == Catch::Approx(1.0));

  CHECK_THROWS_AS(rao_quadratic_entropy(half, {{0, 1}, {2, 0}}),
                  AsymmetricDistance);
  CHECK_THROWS_AS(rao_quadratic_entropy(half, {{1, 1}, {1, 0}}),
                  NonzeroDiagonal);
  CHECK_THROWS_AS(rao_quadratic_entropy(half, {{0.0}}), SizeMismatch);

  // With logical distances, Q is exactly h.
  Rng rng(7309);
  for (int i = 0; i < 100; ++i) {
    int n = 2 + rng.below(6);
    Dist p = rng.dist(n);
    std::vector<std::vector<double>> d(
        static_cast<std::size_t>(n),
        std::vector<double>(static_cast<std::size_t>(n), 1.0));
    for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 0.0;
    CHECK(std::abs(rao_quadratic_entropy(p, d) - logical_entropy(p)) < kTol);
  }
}
