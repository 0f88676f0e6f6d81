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
#include <vector>

#include "ditlib/ditlib.hpp"
#include "oracles.hpp"

using namespace ditlib;

namespace {
constexpr double kTol = 1e-12;

double oracle_measure(const JointDist& j, const InfoSet& s) {
  return oracles::joint_pair_measure(
      j.axes(), j.table(),
      [&s](const std::vector<int>& x, const std::vector<int>& xp) {
        return s.contains(x, xp);
      });
}
}  // namespace

TEST_CASE("joint distribution validation") {
  CHECK(abramson_joint().num_cells() == 8);
  CHECK_THROWS_AS(JointDist::make({2, 2}, {0.5, 0.5, 0.5}),
                  InvariantViolation);
  CHECK_THROWS_AS(JointDist::make({2}, {0.7, 0.7}), InvariantViolation);
  CHECK_THROWS_AS(JointDist::make({2}, {1.2, -0.2}), InvariantViolation);
  CHECK_THROWS_AS(JointDist::from_cells({2, 2}, {{{0, 0}, 0.5},
                                                 {{0, 0}, 0.5}}),
                  InvariantViolation);
  CHECK_THROWS_AS(JointDist::from_cells({2, 2}, {{{0, 2}, 1.0}}),
                  InvariantViolation);

  JointDist j = abramson_joint();
  CHECK(j.at({0, 1, 1}) == 0.25);
  CHECK(j.at({0, 0, 1}) == 0.0);
  CHECK_THROWS_AS(j.marginal({}), EmptyAxisSet);
  CHECK_THROWS_AS(j.marginal({0, 3}), AxisMismatch);
  CHECK_THROWS_AS(j.marginal({1, 0}), AxisMismatch);  // must be sorted
}

TEST_CASE("marginals of the built-in joint") {
  JointDist j = abramson_joint();
  CHECK(j.axis_dist(0).probs() == std::vector<double>{0.5, 0.5});
  CHECK(j.axis_dist(1).probs() == std::vector<double>{0.5, 0.5});
  CHECK(j.axis_dist(2).probs() == std::vector<double>{0.5, 0.5});
  JointDist xy = j.marginal({0, 1});
  CHECK(xy.table() == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  JointDist xz = j.marginal({0, 2});
  CHECK(xz.table() == std::vector<double>{0.25, 0.25, 0.25, 0.25});
}

TEST_CASE("product joints marginalize to their factors") {
  Dist a = Dist::make({0.5, 0.5});
  Dist b = Dist::make({1.0 / 3, 2.0 / 3});
  JointDist j = JointDist::product({a, b});
  CHECK(j.axis_dist(0)[0] == Catch::Approx(0.5).margin(1e-15));
  CHECK(j.axis_dist(1)[1] == Catch::Approx(2.0 / 3).margin(1e-15));
}

TEST_CASE("infoset measure examples") {
  JointDist j = abramson_joint();
  CHECK(measure_infoset(j, InfoSet::differs(0)) == Catch::Approx(0.5));
  CHECK(measure_infoset(j, InfoSet::differs(0) & InfoSet::equals(0)) == 0.0);
  CHECK(measure_infoset(j, ~InfoSet::none()) == Catch::Approx(1.0));
  CHECK(measure_infoset(j, InfoSet::all()) == Catch::Approx(1.0));
  CHECK_THROWS_AS(measure_infoset(j, InfoSet::differs(5)), AxisMismatch);
}

TEST_CASE("infoset algebra identities by materialization") {
  Rng rng(7400);
  for (int i = 0; i < 60; ++i) {
    JointDist j = rng.joint({2 + rng.below(3), 2 + rng.below(3)},
                            i % 2 ? 0.3 : 0.0);
    InfoSet sx = InfoSet::differs(0);
    InfoSet sy = InfoSet::differs(1);
    // S_{X v Y} = S_X u S_Y; S_{X ^ !Y} = S_X - S_Y; the three-way split of
    // S_{X v Y} is disjoint and exhaustive.
    CHECK(std::abs(measure_infoset(j, sx | sy) -
                   measure_infoset(j, infoset_or({0, 1}))) < kTol);
    CHECK(std::abs(measure_infoset(j, sx - sy) -
                   measure_infoset(j, infoset_or_given({0}, {1}))) < kTol);
    double split = measure_infoset(j, sx - sy) + measure_infoset(j, sy - sx) +
                   measure_infoset(j, sx & sy);
    CHECK(std::abs(measure_infoset(j, sx | sy) - split) < kTol);
    CHECK(measure_infoset(j, (sx - sy) & (sx & sy)) == 0.0);  // disjoint
    CHECK(std::abs(measure_infoset(j, ~sx) +
                   measure_infoset(j, sx) - 1.0) < kTol);
  }
}

TEST_CASE("joint logical entropy") {
  JointDist j = abramson_joint();
  CHECK(joint_logical_entropy(j, {0}) == Catch::Approx(0.5));
  CHECK(joint_logical_entropy(j, {0, 1}) == Catch::Approx(0.75));
  CHECK(joint_logical_entropy(j, {0, 2}) == Catch::Approx(0.75));
  CHECK(joint_logical_entropy(j, {1, 2}) == Catch::Approx(0.75));
  CHECK(joint_logical_entropy(j, {0, 1, 2}) == Catch::Approx(0.75));

  JointDist point = JointDist::from_cells({2, 2}, {{{1, 0}, 1.0}});
  CHECK(joint_logical_entropy(point, {0, 1}) == 0.0);
}

TEST_CASE("conditional logical entropy") {
  JointDist j = abramson_joint();
  CHECK(conditional_logical_entropy(j, {0}, {1}) == Catch::Approx(0.25));

  JointDist indep = JointDist::product({Dist::uniform(2), Dist::uniform(2)});
  CHECK(conditional_logical_entropy(indep, {0}, {1}) == Catch::Approx(0.25));

  // Y determined by X: no X-information left once Y is known.
  JointDist copy = JointDist::from_cells({2, 2}, {{{0, 0}, 0.5},
                                                  {{1, 1}, 0.5}});
  CHECK(conditional_logical_entropy(copy, {0}, {1}) == Catch::Approx(0.0));
  CHECK_THROWS_AS(conditional_logical_entropy(j, {0, 1}, {1}),
                  OverlappingAxisSets);
}

TEST_CASE("mutual logical information") {
  JointDist j = abramson_joint();
  CHECK(mutual_logical_info(j, {0, 1, 2}) == Catch::Approx(0.0).margin(kTol));
  CHECK(mutual_logical_info(j, {0, 1}) == Catch::Approx(0.25));

  JointDist indep = JointDist::product({Dist::uniform(2), Dist::uniform(2)});
  CHECK(mutual_logical_info(indep, {0, 1}) == Catch::Approx(0.25));

  JointDist copy = JointDist::from_cells({2, 2}, {{{0, 0}, 0.5},
                                                  {{1, 1}, 0.5}});
  CHECK(mutual_logical_info(copy, {0, 1}) == Catch::Approx(0.5));
}

TEST_CASE("shannon joint, conditional, mutual") {
  JointDist j = abramson_joint();
  CHECK(shannon_joint(j, {0}) == Catch::Approx(1.0));
  CHECK(shannon_joint(j, {0, 1}) == Catch::Approx(2.0));
  CHECK(shannon_joint(j, {0, 1, 2}) == Catch::Approx(2.0));
  CHECK(shannon_mutual(j, {0, 1, 2}) == Catch::Approx(-1.0));
  CHECK(shannon_mutual(j, {0, 1}) == Catch::Approx(0.0).margin(kTol));
  CHECK(shannon_conditional(j, {0}, {1}) == Catch::Approx(1.0));

  JointDist indep = JointDist::product({Dist::make({0.3, 0.7}),
                                        Dist::make({0.2, 0.8})});
  CHECK(shannon_mutual(indep, {0, 1}) == Catch::Approx(0.0).margin(kTol));
}

TEST_CASE("compound quantities equal their oracle measures on random joints") {
  Rng rng(7401);
  for (int i = 0; i < 120; ++i) {
    std::vector<int> axes;
    int num_axes = 2 + rng.below(2);
    for (int a = 0; a < num_axes; ++a) axes.push_back(2 + rng.below(3));
    JointDist j = rng.joint(axes, i % 3 == 0 ? 0.3 : 0.0);

    CHECK(std::abs(joint_logical_entropy(j, {0}) -
                   oracle_measure(j, infoset_or({0}))) < kTol);
    CHECK(std::abs(conditional_logical_entropy(j, {0}, {1}) -
                   oracle_measure(j, infoset_or_given({0}, {1}))) < kTol);
    CHECK(std::abs(mutual_logical_info(j, {0, 1}) -
                   oracle_measure(j, infoset_and({0, 1}))) < kTol);
    if (num_axes == 3) {
      CHECK(std::abs(mutual_logical_info(j, {0, 1, 2}) -
                     oracle_measure(j, infoset_and({0, 1, 2}))) < kTol);
      CHECK(std::abs(mutual_logical_info(j, {0, 1}, {2}) -
                     oracle_measure(j, infoset_and_given({0, 1}, {2}))) < kTol);
      CHECK(std::abs(conditional_logical_entropy(j, {0}, {1, 2}) -
                     oracle_measure(j, infoset_or_given({0}, {1, 2}))) < kTol);
    }
  }
}

TEST_CASE("conditional mutual information with multi-axis conditioning") {
  // m(I|J) for single-I, two-axis J, against the materialized measure.
  Rng rng(7403);
  for (int i = 0; i < 60; ++i) {
    JointDist j = rng.joint({2, 2 + rng.below(3), 2 + rng.below(2)},
                            i % 2 ? 0.3 : 0.0);
    CHECK(std::abs(mutual_logical_info(j, {0}, {1, 2}) -
                   oracle_measure(j, infoset_and_given({0}, {1, 2}))) < kTol);
    CHECK(std::abs(mutual_logical_info(j, {1}, {0, 2}) -
                   oracle_measure(j, infoset_and_given({1}, {0, 2}))) < kTol);
    CHECK(mutual_logical_info(j, {0}, {1, 2}) >= -kTol);
  }
  // Single-axis sets reduce to the plain entropies.
  JointDist j = abramson_joint();
  CHECK(mutual_logical_info(j, {0}) ==
        Catch::Approx(joint_logical_entropy(j, {0})).margin(kTol));
  CHECK(mutual_logical_info(j, {0}, {1}) ==
        Catch::Approx(conditional_logical_entropy(j, {0}, {1})).margin(kTol));
}

TEST_CASE("venn identities on random joints") {
  Rng rng(7402);
  for (int i = 0; i < 150; ++i) {
    JointDist j = rng.joint({2 + rng.below(3), 2 + rng.below(3)},
                            i % 4 == 0 ? 0.25 : 0.0);
    double h_x = joint_logical_entropy(j, {0});
    double h_y = joint_logical_entropy(j, {1});
    double h_xy = joint_logical_entropy(j, {0, 1});
    double m = mutual_logical_info(j, {0, 1});
    CHECK(std::abs(h_xy - conditional_logical_entropy(j, {0}, {1}) - h_y) <
          kTol);
    CHECK(std::abs(m - (h_x + h_y - h_xy)) < kTol);
    CHECK(std::abs(h_xy - conditional_logical_entropy(j, {0}, {1}) -
                   conditional_logical_entropy(j, {1}, {0}) - m) < kTol);
    CHECK(m >= 0.0);
  }
}

TEST_CASE("independence checks") {
  JointDist product = JointDist::product({Dist::uniform(2),
                                          Dist::make({1.0 / 3, 2.0 / 3})});
  CHECK(is_independent(product));

  JointDist j = abramson_joint();
  CHECK_FALSE(is_independent(j));
  IndependenceReport report = independence_report(j);
  REQUIRE(report.entries.size() == 3);  // {X}|{Y,Z}, {X,Y}|{Z}, {X,Z}|{Y}
  for (const auto& entry : report.entries) CHECK_FALSE(entry.independent);
  // p(0,0,0) = 1/4 but p(x=0) p(y=0,z=0) = 1/2 * 1/4 = 1/8.
  CHECK(report.entries[0].max_abs_dev == Catch::Approx(0.125));

  // Pairwise independent though: every two-axis marginal is a product.
  CHECK(is_independent(j.marginal({0, 1})));
  CHECK(is_independent(j.marginal({0, 2})));
  CHECK(is_independent(j.marginal({1, 2})));
}

TEST_CASE("variable ditsets") {
  JointDist point = JointDist::from_cells({2, 2}, {{{0, 1}, 1.0}});
  CHECK(variable_ditset(point, 0).empty());

  // Full support: dit(X) is all of S_X.
  JointDist full = JointDist::product({Dist::uniform(2), Dist::uniform(2)});
  PairSet s_x(full.num_cells());
  for (int a = 0; a < full.num_cells(); ++a)
    for (int b = 0; b < full.num_cells(); ++b)
      if (full.unflatten(a)[0] != full.unflatten(b)[0]) s_x.set(a, b);
  CHECK(variable_ditset(full, 0) == s_x);

  // Abramson: strictly smaller than S_X (four cells carry no mass) but of
  // equal measure.
  JointDist j = abramson_joint();
  PairSet dit_x = variable_ditset(j, 0);
  PairSet s_x3(j.num_cells());
  for (int a = 0; a < j.num_cells(); ++a)
    for (int b = 0; b < j.num_cells(); ++b)
      if (j.unflatten(a)[0] != j.unflatten(b)[0]) s_x3.set(a, b);
  CHECK(dit_x.is_subset_of(s_x3));
  CHECK(dit_x.count() < s_x3.count());
  CHECK(product_measure(j.flat_dist(), dit_x) ==
        Catch::Approx(joint_logical_entropy(j, {0})).margin(kTol));
  CHECK(product_measure(j.flat_dist(), s_x3) ==
        Catch::Approx(joint_logical_entropy(j, {0})).margin(kTol));
  CHECK_THROWS_AS(variable_ditset(j, 9), AxisMismatch);
}

TEST_CASE("materialization caps reject oversized joints") {
  // 101 x 101 cells means more than 1e8 tuple pairs.
  std::vector<std::pair<std::vector<int>, double>> cells{{{0, 0}, 1.0}};
  JointDist big = JointDist::from_cells({101, 101}, cells);
  CHECK_THROWS_AS(measure_infoset(big, InfoSet::differs(0)), CapExceeded);
  CHECK_THROWS_AS(variable_ditset(big, 0), CapExceeded);
  // The closed forms still work: they never materialize pairs.
  CHECK(joint_logical_entropy(big, {0, 1}) == Catch::Approx(0.0).margin(1e-12));
  CHECK_THROWS_AS(JointDist::from_cells({100000, 100000}, cells), CapExceeded);
}

TEST_CASE("nonempty ditsets always intersect") {
  JointDist indep = JointDist::product({Dist::uniform(2), Dist::uniform(2)});
  DitsetsIntersectReport r = ditsets_intersect_check(indep);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].applicable);
  CHECK(r.entries[0].m == Catch::Approx(0.25));
  CHECK(r.entries[0].holds);
  CHECK(r.entries[0].witness.has_value());

  // Degenerate X: h(X) = 0, implication vacuous.
  JointDist degenerate = JointDist::from_cells(
      {2, 2}, {{{0, 0}, 0.5}, {{0, 1}, 0.5}});
  r = ditsets_intersect_check(degenerate);
  REQUIRE(r.entries.size() == 1);
  CHECK_FALSE(r.entries[0].applicable);
  CHECK(r.entries[0].holds);

  JointDist j = abramson_joint();
  r = ditsets_intersect_check(j);
  for (const auto& entry : r.entries) {
    CHECK(entry.applicable);
    CHECK(entry.m == Catch::Approx(0.25));  // 1/2 + 1/2 - 3/4
    CHECK(entry.holds);
  }
}
