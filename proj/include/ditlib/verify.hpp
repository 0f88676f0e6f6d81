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
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ditlib/approx.hpp"
#include "ditlib/ditbit.hpp"
#include "ditlib/dist.hpp"
#include "ditlib/formula.hpp"
#include "ditlib/joint.hpp"
#include "ditlib/measures.hpp"
#include "ditlib/partition.hpp"
#include "ditlib/random.hpp"

namespace ditlib {

/// Outcome of one seeded identity suite.
struct SuiteResult {
  std::string name;
  long long cases = 0;
  double max_abs_diff = 0.0;
  bool pass = true;
  std::string detail;

  SuiteResult() = default;
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  void check(double lhs, double rhs, double tolerance, const char* what) {
    double diff = std::abs(lhs - rhs);
    max_abs_diff = std::max(max_abs_diff, diff);
    if (!(diff < tolerance)) fail(what);
  }
  void require(bool ok, const char* what) {
    if (!ok) fail(what);
  }
  void fail(const char* what) {
    if (pass) detail = what;
    pass = false;
  }
};

namespace verify {

/// Random axis shapes drawn for the joint suites: 2 or 3 axes of size 2..4.
inline std::vector<int> random_axes(Rng& rng, int max_axes = 3,
                                    int max_size = 4) {
  int n = 2 + rng.below(max_axes - 1);
  std::vector<int> axes;
  for (int i = 0; i < n; ++i) axes.push_back(2 + rng.below(max_size - 1));
  return axes;
}

/// Closed-form logical quantities against their product-measure
/// materializations, for random partitions and random joints.
inline SuiteResult oracle_equivalence(std::uint64_t seed, long long cases) {
  SuiteResult result{"oracle_equivalence"};
  Rng rng(seed);
  for (long long i = 0; i < cases; ++i) {
    // Partition side: h(pi) against the product measure of its ditset.
    Universe u = rng.universe(2 + rng.below(7));
    Partition pi = rng.partition(u);
    result.check(logical_entropy_partition(pi),
                 product_measure(point_dist(u), ditset(pi).pairs()),
                 kIdentityTolerance, "h(pi) vs product measure");
    result.check(logical_entropy(point_dist(u)),
                 product_measure(point_dist(u),
                                 ditset(Partition::discrete(u)).pairs()),
                 kIdentityTolerance, "h(p) vs measure of all-distinct pairs");

    // Joint side: every compound quantity against its infoset measure.
    std::vector<int> axes = random_axes(rng);
    JointDist j = rng.joint(axes, i % 3 == 0 ? 0.3 : 0.0);
    result.check(joint_logical_entropy(j, {0}),
                 measure_infoset(j, infoset_or({0})), kIdentityTolerance,
                 "h(X) vs infoset measure");
    std::vector<int> all_axes;
    for (int a = 0; a < j.num_axes(); ++a) all_axes.push_back(a);
    result.check(joint_logical_entropy(j, all_axes),
                 measure_infoset(j, infoset_or(all_axes)), kIdentityTolerance,
                 "h(all) vs infoset measure");
    result.check(conditional_logical_entropy(j, {0}, {1}),
                 measure_infoset(j, infoset_or_given({0}, {1})),
                 kIdentityTolerance, "h(X|Y) vs infoset measure");
    result.check(mutual_logical_info(j, {0, 1}),
                 measure_infoset(j, infoset_and({0, 1})), kIdentityTolerance,
                 "m(X,Y) vs infoset measure");
    if (j.num_axes() == 3) {
      result.check(mutual_logical_info(j, {0, 1, 2}),
                   measure_infoset(j, infoset_and({0, 1, 2})),
                   kIdentityTolerance, "m(X,Y,Z) vs infoset measure");
      result.check(mutual_logical_info(j, {0, 1}, {2}),
                   measure_infoset(j, infoset_and_given({0, 1}, {2})),
                   kIdentityTolerance, "m(X,Y|Z) vs infoset measure");
    }
    result.cases += 1;
  }
  return result;
}

/// Venn and inclusion-exclusion identities on random joints, plus the
/// divergence and mixing identities on random distribution pairs.
inline SuiteResult measure_identities(std::uint64_t seed, long long cases) {
  SuiteResult result{"measure_identities"};
  Rng rng(seed);
  for (long long i = 0; i < cases; ++i) {
    std::vector<int> axes = random_axes(rng);
    JointDist j = rng.joint(axes, i % 4 == 0 ? 0.25 : 0.0);
    double h_x = joint_logical_entropy(j, {0});
    double h_y = joint_logical_entropy(j, {1});
    double h_xy = joint_logical_entropy(j, {0, 1});
    double h_x_given_y = conditional_logical_entropy(j, {0}, {1});
    double h_y_given_x = conditional_logical_entropy(j, {1}, {0});
    double m_xy = mutual_logical_info(j, {0, 1});
    result.check(h_xy, h_x_given_y + h_y, kIdentityTolerance,
                 "h(X,Y) = h(X|Y) + h(Y)");
    result.check(m_xy, h_x + h_y - h_xy, kIdentityTolerance,
                 "m = h(X) + h(Y) - h(X,Y)");
    result.check(h_xy, h_x_given_y + h_y_given_x + m_xy, kIdentityTolerance,
                 "h(X,Y) = h(X|Y) + h(Y|X) + m");
    result.require(m_xy >= 0.0, "m(X,Y) >= 0");
    result.require(h_x_given_y >= -kIdentityTolerance, "h(X|Y) >= 0");
    if (j.num_axes() == 3) {
      double m3 = mutual_logical_info(j, {0, 1, 2});
      double inclusion_exclusion =
          h_x + h_y + joint_logical_entropy(j, {2}) - h_xy -
          joint_logical_entropy(j, {0, 2}) - joint_logical_entropy(j, {1, 2}) +
          joint_logical_entropy(j, {0, 1, 2});
      result.check(m3, inclusion_exclusion, kIdentityTolerance,
                   "three-variable inclusion-exclusion");
      result.check(m3, m_xy - mutual_logical_info(j, {0, 1}, {2}),
                   kIdentityTolerance, "m(X,Y,Z) = m(X,Y) - m(X,Y|Z)");
      result.require(m3 >= 0.0, "m(X,Y,Z) >= 0");
      // Shannon Venn identities carry over through the transform.
      double big_h_xy = shannon_joint(j, {0, 1});
      result.check(big_h_xy,
                   shannon_conditional(j, {0}, {1}) + shannon_joint(j, {1}),
                   kIdentityTolerance, "H(X,Y) = H(X|Y) + H(Y)");
      result.check(shannon_mutual(j, {0, 1}),
                   shannon_joint(j, {0}) + shannon_joint(j, {1}) - big_h_xy,
                   kIdentityTolerance, "I = H(X) + H(Y) - H(X,Y)");
    }

    int len = 2 + rng.below(7);
    Dist p = rng.dist(len);
    Dist q = rng.dist(len);
    result.check(logical_divergence(p, q),
                 cross_entropy_logical(p, q) -
                     0.5 * (logical_entropy(p) + logical_entropy(q)),
                 kIdentityTolerance, "d(p||q) = h(p||q) - [h(p)+h(q)]/2");
    MixingChain chain = mixing_check(p, q);
    result.check(chain.mixed, 0.5 * chain.cross + 0.5 * chain.average,
                 kIdentityTolerance, "mixing two-term identity");
    result.require(chain.cross >= chain.mixed - kIdentityTolerance &&
                       chain.mixed >= chain.average - kIdentityTolerance,
                   "mixing chain is decreasing");
    result.require(kl_divergence(p, q) >= 0.0, "D(p||q) >= 0");
    result.require(logical_divergence(p, q) >= 0.0, "d(p||q) >= 0");
    result.check(kl_divergence(p, p), 0.0, kIdentityTolerance, "D(p||p) = 0");
    result.cases += 1;
  }
  return result;
}

/// Every form kind: the dit evaluation matches the logical quantity and the
/// transformed evaluation matches the Shannon quantity.
inline SuiteResult ditbit_transforms(std::uint64_t seed, long long cases) {
  SuiteResult result{"ditbit_transforms"};
  Rng rng(seed);
  for (long long i = 0; i < cases; ++i) {
    int len = 2 + rng.below(5);
    Dist p = rng.dist(len);
    Dist q = rng.dist(len);
    JointDist j2 = rng.joint({2 + rng.below(3), 2 + rng.below(3)});
    JointDist j3 = rng.joint({2, 2 + rng.below(2), 2 + rng.below(2)});

    AvgForm f = entropy_form(p);
    result.check(f.eval(), logical_entropy(p), kIdentityTolerance,
                 "entropy form (dit)");
    result.check(dit_bit_transform(f).eval(LogBase::two),
                 shannon_entropy(p, LogBase::two), kIdentityTolerance,
                 "entropy form (bit)");

    f = conditional_form(j2);
    result.check(f.eval(), conditional_logical_entropy(j2, {0}, {1}),
                 kIdentityTolerance, "conditional form (dit)");
    result.check(dit_bit_transform(f).eval(LogBase::two),
                 shannon_conditional(j2, {0}, {1}), kIdentityTolerance,
                 "conditional form (bit)");

    f = mutual_form(j2);
    result.check(f.eval(), mutual_logical_info(j2, {0, 1}), kIdentityTolerance,
                 "mutual form (dit)");
    result.check(dit_bit_transform(f).eval(LogBase::two),
                 shannon_mutual(j2, {0, 1}), kIdentityTolerance,
                 "mutual form (bit)");

    f = mutual3_form(j3);
    result.check(f.eval(), mutual_logical_info(j3, {0, 1, 2}),
                 kIdentityTolerance, "three-way mutual form (dit)");
    result.check(dit_bit_transform(f).eval(LogBase::two),
                 shannon_mutual(j3, {0, 1, 2}), kIdentityTolerance,
                 "three-way mutual form (bit)");

    f = cross_form(p, q);
    result.check(f.eval(), cross_entropy_logical(p, q), kIdentityTolerance,
                 "cross form (dit)");
    result.check(dit_bit_transform(f).eval(LogBase::two),
                 cross_entropy_shannon(p, q, /*symmetrized=*/true),
                 kIdentityTolerance, "cross form (bit)");
    result.check(cross_form_asymmetric(p, q).eval(),
                 cross_entropy_logical(p, q), kIdentityTolerance,
                 "asymmetric cross form (dit)");
    result.check(dit_bit_transform(cross_form_asymmetric(p, q))
                     .eval(LogBase::two),
                 cross_entropy_shannon(p, q), kIdentityTolerance,
                 "asymmetric cross form (bit)");

    f = divergence_form(p, q);
    result.check(f.eval(), logical_divergence(p, q), kIdentityTolerance,
                 "divergence form (dit)");
    result.check(dit_bit_transform(f).eval(LogBase::two),
                 kl_divergence(p, q, /*symmetrized=*/true),
                 kIdentityTolerance, "divergence form (bit)");
    result.cases += 1;
  }
  return result;
}

/// Nonempty ditsets always intersect: h(X)h(Y) > 0 forces m(X,Y) > 0; under
/// exact independence m(X,Y) = h(X)h(Y).
inline SuiteResult nonempty_ditsets(std::uint64_t seed, long long cases) {
  SuiteResult result{"nonempty_ditsets"};
  Rng rng(seed);
  auto truly_positive = [](const JointDist& j, int axis) {
    // h(X) > 0 exactly when the marginal has two positive entries; the
    // closed form can land on +-1e-16 for deterministic marginals.
    JointDist marg = j.marginal({axis});
    int positive = 0;
    for (double p : marg.table())
      if (p > 0.0) ++positive;
    return positive >= 2;
  };
  while (result.cases < cases) {
    JointDist j = rng.joint({2 + rng.below(3), 2 + rng.below(3)},
                            /*zero_fraction=*/0.35);
    if (!truly_positive(j, 0) || !truly_positive(j, 1)) continue;
    // The measure route sums non-negative products, so strict positivity is
    // a combinatorial fact, not a cancellation accident.
    double m = measure_infoset(j, infoset_and({0, 1}));
    result.require(m > 0.0, "m(X,Y) > 0 when h(X)h(Y) > 0");
    result.check(m, mutual_logical_info(j, {0, 1}), kIdentityTolerance,
                 "m measure vs closed form");
    result.require(ditsets_intersect_check(j).all_hold,
                   "common distinction witness exists");
    result.cases += 1;
  }
  // Exact independence: m(X,Y) = h(X) h(Y) and I(X,Y) = 0.
  for (long long i = 0; i < std::max<long long>(1, cases / 10); ++i) {
    JointDist j = rng.product_joint({2 + rng.below(3), 2 + rng.below(3)});
    result.check(mutual_logical_info(j, {0, 1}),
                 joint_logical_entropy(j, {0}) * joint_logical_entropy(j, {1}),
                 kIdentityTolerance, "independent m = h(X)h(Y)");
    result.check(conditional_logical_entropy(j, {0}, {1}),
                 joint_logical_entropy(j, {0}) *
                     (1.0 - joint_logical_entropy(j, {1})),
                 kIdentityTolerance, "independent h(X|Y) = h(X)(1-h(Y))");
    result.check(shannon_mutual(j, {0, 1}), 0.0, kIdentityTolerance,
                 "independent I(X,Y) = 0");
  }
  return result;
}

/// log2(1/P) = H_2(p) = log2 E(p) from the typical-set statistics.
inline SuiteResult typical_set_consistency(std::uint64_t seed,
                                           long long cases) {
  SuiteResult result{"typical_set_consistency"};
  Rng rng(seed);
  for (long long i = 0; i < cases; ++i) {
    Dist p = rng.dist(2 + rng.below(7));
    TypicalSetStats stats = typical_set_stats(p, 1 + rng.below(200));
    double bits = shannon_entropy(p, LogBase::two);
    result.check(std::log2(1.0 / stats.per_letter_prob), bits, 1e-9,
                 "log2(1/P) = H_2(p)");
    result.check(std::log2(numbers_equivalent_entropy(p)), bits, 1e-9,
                 "log2 E(p) = H_2(p)");
    result.check(stats.bits_per_letter, bits, kIdentityTolerance,
                 "bits per letter = H_2(p)");
    result.cases += 1;
  }
  return result;
}

/// Three-term Stirling beats two-term against the exact log-sum oracle.
inline SuiteResult stirling_ordering(std::uint64_t seed, long long cases) {
  SuiteResult result{"stirling_ordering"};
  Rng rng(seed);
  const long long totals[] = {20, 50, 100, 200};
  for (long long i = 0; i < cases; ++i) {
    long long total = totals[rng.below(4)];
    int blocks = 2 + rng.below(3);
    // Random composition with every block at least 5.
    std::vector<long long> counts(static_cast<std::size_t>(blocks), 5);
    long long rest = total - 5 * blocks;
    for (int b = 0; b < blocks - 1 && rest > 0; ++b) {
      long long take = rng.below(static_cast<int>(rest + 1));
      counts[static_cast<std::size_t>(b)] += take;
      rest -= take;
    }
    counts.back() += rest;
    Occupancy o = Occupancy::make(counts);
    double exact = exact_boltzmann_entropy(o);
    double two = stirling_two_term(o);
    double three = stirling_three_term(o);
    result.require(std::abs(three - exact) < std::abs(two - exact),
                   "three-term beats two-term");
    result.max_abs_diff =
        std::max(result.max_abs_diff, std::abs(three - exact));
    result.cases += 1;
  }
  return result;
}

/// Deterministic partition-logic suite: refinement vs ditset inclusion,
/// implication-is-top vs refinement, and dit(join) = dit | dit over every
/// partition pair with n <= 4, plus the excluded-middle split at n = 3.
inline SuiteResult partition_logic(int max_n = 4) {
  SuiteResult result{"partition_logic"};
  for (int n = 1; n <= max_n; ++n) {
    Universe u = Universe::uniform(n);
    std::vector<Partition> all = enumerate_partitions(u);
    for (const Partition& sigma : all)
      for (const Partition& pi : all) {
        bool by_blocks = refines(sigma, pi);
        bool by_dits = ditset(sigma).pairs().is_subset_of(ditset(pi).pairs());
        result.require(by_blocks == by_dits,
                       "refines matches ditset inclusion");
        result.require(implication(sigma, pi).is_discrete() ==
                           refines(sigma, pi),
                       "implication is top iff refines");
        result.require(ditset(join(pi, sigma)).pairs() ==
                           (ditset(pi).pairs() | ditset(sigma).pairs()),
                       "dit(join) = dit | dit");
        result.cases += 1;
      }
  }
  Formula excluded_middle = parse_formula("x | (x -> 0)");
  ValidityReport partition_mode =
      check_validity(excluded_middle, 3, LogicMode::partition);
  ValidityReport subset_mode =
      check_validity(excluded_middle, 3, LogicMode::subset);
  result.require(!partition_mode.valid,
                 "excluded middle fails for partitions");
  result.require(
      partition_mode.partition_counterexample.size() == 1 &&
          partition_mode.partition_counterexample[0].second.blocks() ==
              std::vector<std::vector<int>>{{0, 1}, {2}},
      "counterexample is {{0,1},{2}}");
  result.require(subset_mode.valid, "excluded middle holds for subsets");
  return result;
}

/// Interior against brute force over all 512 relations on a 3-point
/// universe: int(S) is the largest partition-relation subset of S.
inline SuiteResult interior_correctness() {
  SuiteResult result{"interior_correctness"};
  int n = 3;
  std::vector<PairSet> all_ditsets;
  for (const Partition& p : enumerate_partitions(n))
    all_ditsets.push_back(ditset(p).pairs());
  for (unsigned mask = 0; mask < (1u << (n * n)); ++mask) {
    PairSet s(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if ((mask >> (j * n + k)) & 1u) s.set(j, k);
    // Brute-force maximum: the largest ditset contained in s.
    const PairSet* best = nullptr;
    for (const PairSet& d : all_ditsets)
      if (d.is_subset_of(s) && (!best || d.count() > best->count())) best = &d;
    PairSet got = interior(s);
    result.require(best != nullptr && got == *best,
                   "interior equals brute-force maximum ditset");
    result.require(got.is_subset_of(s), "interior is deflationary");
    result.require(interior(got) == got, "interior is idempotent");
    result.cases += 1;
  }
  return result;
}

inline std::vector<SuiteResult> run_all(std::uint64_t seed, long long cases) {
  std::vector<SuiteResult> results;
  results.push_back(oracle_equivalence(seed, cases));
  results.push_back(measure_identities(seed + 1, cases));
  results.push_back(ditbit_transforms(seed + 2, cases));
  results.push_back(nonempty_ditsets(seed + 3, cases));
  results.push_back(typical_set_consistency(seed + 4, cases));
  results.push_back(stirling_ordering(seed + 5, std::min<long long>(cases, 64)));
  results.push_back(partition_logic());
  results.push_back(interior_correctness());
  return results;
}

}  // namespace verify
}  // namespace ditlib
