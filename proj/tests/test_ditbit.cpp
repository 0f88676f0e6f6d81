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
#include <string>
#include <vector>

#include "ditlib/ditlib.hpp"

using namespace ditlib;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("entropy form") {
  AvgForm f = entropy_form(Dist::uniform(2));
  CHECK(f.num_terms() == 2);
  CHECK(f.kind() == AtomKind::dit);
  CHECK(f.eval() == Catch::Approx(0.5));
  CHECK(dit_bit_transform(f).eval(LogBase::two) == Catch::Approx(1.0));

  AvgForm point = entropy_form(Dist::make({1.0, 0.0}));
  CHECK(point.eval() == 0.0);
  CHECK(dit_bit_transform(point).eval(LogBase::two) == 0.0);

  AvgForm u4 = dit_bit_transform(entropy_form(Dist::uniform(4)));
  CHECK(u4.eval(LogBase::two) == Catch::Approx(2.0));

  AvgForm empty({{"p", {}}}, {});
  CHECK(empty.eval() == 0.0);
}

TEST_CASE("transform is a pure kind flip") {
  AvgForm f = entropy_form(Dist::make({0.25, 0.75}));
  AvgForm g = dit_bit_transform(f);
  CHECK(f.kind() == AtomKind::dit);
  CHECK(g.kind() == AtomKind::bit);
  CHECK(g.num_terms() == f.num_terms());
  CHECK_THROWS_AS(dit_bit_transform(g), AlreadyBitKind);
  // Flipping back gives the original structure.
  CHECK(g.with_kind(AtomKind::dit) == f);
}

TEST_CASE("form invariants are validated") {
  // Mixed atom kinds in one form are rejected.
  CHECK_THROWS_AS(
      AvgForm({{"p", {0.5, 0.5}}},
              {{{0, 0}, {{1, {0, 0}, AtomKind::dit}}},
               {{0, 1}, {{1, {0, 1}, AtomKind::bit}}}}),
      InvariantViolation);
  // Weights must sum to one.
  CHECK_THROWS_AS(AvgForm({{"p", {0.5, 0.2}}},
                          {{{0, 0}, {{1, {0, 0}, AtomKind::dit}}},
                           {{0, 1}, {{1, {0, 1}, AtomKind::dit}}}}),
                  InvariantViolation);
  // Out-of-range references are rejected.
  CHECK_THROWS_AS(AvgForm({{"p", {1.0}}},
                          {{{0, 0}, {{1, {0, 3}, AtomKind::dit}}}}),
                  InvariantViolation);
  CHECK_THROWS_AS(AvgForm({{"p", {1.0}}},
                          {{{0, 0}, {{2, {0, 0}, AtomKind::dit}}}}),
                  InvariantViolation);
}

TEST_CASE("abramson three-way mutual information pins the sign flip") {
  JointDist j = abramson_joint();
  AvgForm f = mutual3_form(j);
  double dit_value = f.eval();
  double bit_value = dit_bit_transform(f).eval(LogBase::two);
  CHECK(dit_value == Catch::Approx(0.0).margin(kTol));
  CHECK(bit_value == Catch::Approx(-1.0).margin(kTol));
  // The transform preserves Venn structure but not non-negativity.
  CHECK(dit_value >= 0.0);
  CHECK(bit_value < 0.0);
}

TEST_CASE("conditional form on the built-in joint") {
  // Wider joints marginalize down to the form's axes: h(X|Y) of the
  // three-variable table is 3/4 - 1/2 = 1/4.
  JointDist j3 = abramson_joint();
  AvgForm f = conditional_form(j3);
  CHECK(f.eval() == Catch::Approx(0.25).margin(kTol));
  CHECK(f.eval() ==
        Catch::Approx(conditional_logical_entropy(j3, {0}, {1})).margin(kTol));
  CHECK(dit_bit_transform(f).eval(LogBase::two) ==
        Catch::Approx(1.0).margin(kTol));

  JointDist xy = j3.marginal({0, 1});
  CHECK(conditional_form(xy).eval() == Catch::Approx(0.25).margin(kTol));
  CHECK(mutual_form(j3).eval() ==
        Catch::Approx(mutual_logical_info(j3, {0, 1})).margin(kTol));
  CHECK_THROWS_AS(mutual3_form(xy), UnsupportedKind);
}

TEST_CASE("every form kind matches its quantity on random data") {
  Rng rng(7500);
  for (int i = 0; i < 60; ++i) {
    int n = 2 + rng.below(5);
    Dist p = rng.dist(n);
    Dist q = rng.dist(n);
    JointDist j2 = rng.joint({2 + rng.below(3), 2 + rng.below(3)});
    JointDist j3 = rng.joint({2, 2 + rng.below(2), 2});

    CHECK(std::abs(entropy_form(p).eval() - logical_entropy(p)) < kTol);
    CHECK(std::abs(dit_bit_transform(entropy_form(p)).eval(LogBase::natural) -
                   shannon_entropy(p, LogBase::natural)) < kTol);

    CHECK(std::abs(conditional_form(j2).eval() -
                   conditional_logical_entropy(j2, {0}, {1})) < kTol);
    CHECK(std::abs(dit_bit_transform(conditional_form(j2)).eval(LogBase::two) -
                   shannon_conditional(j2, {0}, {1})) < kTol);

    CHECK(std::abs(mutual_form(j2).eval() - mutual_logical_info(j2, {0, 1})) <
          kTol);
    CHECK(std::abs(dit_bit_transform(mutual_form(j2)).eval(LogBase::two) -
                   shannon_mutual(j2, {0, 1})) < kTol);

    CHECK(std::abs(mutual3_form(j3).eval() -
                   mutual_logical_info(j3, {0, 1, 2})) < kTol);
    CHECK(std::abs(dit_bit_transform(mutual3_form(j3)).eval(LogBase::two) -
                   shannon_mutual(j3, {0, 1, 2})) < kTol);

    CHECK(std::abs(cross_form(p, q).eval() - cross_entropy_logical(p, q)) <
          kTol);
    CHECK(std::abs(dit_bit_transform(cross_form(p, q)).eval(LogBase::two) -
                   cross_entropy_shannon(p, q, true)) < kTol);

    CHECK(std::abs(cross_form_asymmetric(p, q).eval() -
                   cross_entropy_logical(p, q)) < kTol);
    CHECK(std::abs(
              dit_bit_transform(cross_form_asymmetric(p, q)).eval(LogBase::two) -
              cross_entropy_shannon(p, q)) < kTol);

    CHECK(std::abs(divergence_form(p, q).eval() - logical_divergence(p, q)) <
          kTol);
    CHECK(std::abs(dit_bit_transform(divergence_form(p, q)).eval(LogBase::two) -
                   kl_divergence(p, q, true)) < kTol);
  }
}

TEST_CASE("kind-dispatched builders") {
  Dist p = Dist::uniform(2);
  Dist q = Dist::make({0.25, 0.75});
  JointDist j2 = abramson_joint().marginal({0, 1});
  JointDist j3 = abramson_joint();
  CHECK(build_avg_form(FormKind::entropy, p).eval() == Catch::Approx(0.5));
  CHECK(build_avg_form(FormKind::cross, p, q).eval() ==
        Catch::Approx(cross_entropy_logical(p, q)));
  CHECK(build_avg_form(FormKind::divergence, p, q).eval() ==
        Catch::Approx(logical_divergence(p, q)).margin(kTol));
  CHECK(build_avg_form(FormKind::mutual, j2).eval() ==
        Catch::Approx(mutual_logical_info(j2, {0, 1})).margin(kTol));
  CHECK(build_avg_form(FormKind::mutual3, j3).eval() ==
        Catch::Approx(0.0).margin(kTol));
  CHECK_THROWS_AS(build_avg_form(FormKind::mutual, p), UnsupportedKind);
  CHECK_THROWS_AS(build_avg_form(FormKind::entropy, p, q), UnsupportedKind);
  CHECK_THROWS_AS(build_avg_form(FormKind::entropy, j2), UnsupportedKind);
}

TEST_CASE("transform linearity over concatenated forms") {
  Rng rng(7501);
  for (int i = 0; i < 40; ++i) {
    JointDist j = rng.joint({2 + rng.below(3), 2 + rng.below(3)});
    // h(X,Y) as a form over the joint weights, and h(Y) spread over the
    // same weights: concatenating the conditional form's atoms with the
    // marginal atoms must evaluate to the joint form, before and after the
    // transform. This is the Venn identity h(X,Y) = h(X|Y) + h(Y) carried
    // through the rewrite to H(X,Y) = H(X|Y) + H(Y).
    std::vector<AvgForm::Term> joint_terms, marginal_terms;
    for (int flat = 0; flat < j.num_cells(); ++flat) {
      int y = j.unflatten(flat)[1];
      joint_terms.push_back({{0, flat}, {{1, {0, flat}, AtomKind::dit}}});
      marginal_terms.push_back({{0, flat}, {{1, {1, y}, AtomKind::dit}}});
    }
    std::vector<std::pair<std::string, std::vector<double>>> slots{
        {"p(x,y)", j.table()}, {"p(y)", j.marginal({1}).table()}};
    AvgForm joint_form(slots, joint_terms);
    AvgForm marginal_form(slots, marginal_terms);
    AvgForm cond = conditional_form(j);

    AvgForm sum = cond.concat(marginal_form);
    CHECK(std::abs(sum.eval() - joint_form.eval()) < kTol);
    CHECK(std::abs(sum.eval() - (cond.eval() + marginal_form.eval())) < kTol);
    CHECK(std::abs(dit_bit_transform(sum).eval(LogBase::two) -
                   dit_bit_transform(joint_form).eval(LogBase::two)) < kTol);
    CHECK(std::abs(dit_bit_transform(sum).eval(LogBase::two) -
                   (dit_bit_transform(cond).eval(LogBase::two) +
                    dit_bit_transform(marginal_form).eval(LogBase::two))) <
          kTol);
  }
}

TEST_CASE("form rendering names the probabilities") {
  AvgForm f = entropy_form(Dist::uniform(2));
  std::string text = f.describe();
  CHECK(text.find("p[0]") != std::string::npos);
  CHECK(text.find("(1 - p[0])") != std::string::npos);
  std::string bits = dit_bit_transform(f).describe();
  CHECK(bits.find("log(1/p[0])") != std::string::npos);
}
