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

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ditlib/dist.hpp"
#include "ditlib/errors.hpp"
#include "ditlib/measures.hpp"
#include "ditlib/partition.hpp"
#include "ditlib/sum.hpp"
#include "ditlib/universe.hpp"

namespace ditlib {

/// Block occupancy counts N_1..N_n with N = sum N_i; the data behind the
/// multinomial count W = N! / (N_1! ... N_n!).
class Occupancy {
 public:
  static Occupancy make(std::vector<long long> counts) {
    if (counts.empty())
      throw InvariantViolation("occupancy needs at least one block");
    for (long long c : counts)
      if (c < 1) throw InvariantViolation("occupancy counts must be >= 1");
    return Occupancy(std::move(counts));
  }

  const std::vector<long long>& counts() const { return counts_; }
  long long total() const { return total_; }

  /// Block frequencies N_i / N.
  Dist freq_dist() const {
    std::vector<double> p;
    p.reserve(counts_.size());
    for (long long c : counts_)
      p.push_back(static_cast<double>(c) / static_cast<double>(total_));
    return Dist::normalized(std::move(p));
  }

 private:
  explicit Occupancy(std::vector<long long> counts)
      : counts_(std::move(counts)) {
    total_ = 0;
    for (long long c : counts_) total_ += c;
  }
  std::vector<long long> counts_;
  long long total_;
};

namespace detail {
/// ln(k!) as a compensated sum of integer logarithms; exact to well below
/// 1e-10 at desk scale, no big-integer factorials involved.
inline double ln_factorial(long long k) {
  CompensatedSum acc;
  for (long long i = 2; i <= k; ++i)
    acc.add(std::log(static_cast<double>(i)));
  return acc.value();
}

// Two- and three-term truncations of ln(x!).
inline double stirling2(double x) { return x * std::log(x) - x; }
inline double stirling3(double x) {
  return x * (std::log(x) - 1.0) +
         0.5 * std::log(2.0 * std::numbers::pi * x);
}
}  // namespace detail

/// S = (1/N) ln W with W = N!/(N_1!...N_n!), evaluated by summed integer
/// logarithms.
inline double exact_boltzmann_entropy(const Occupancy& o) {
  CompensatedSum acc;
  acc.add(detail::ln_factorial(o.total()));
  for (long long c : o.counts()) acc.add(-detail::ln_factorial(c));
  return acc.value() / static_cast<double>(o.total());
}

/// The two-term Stirling truncation ln(x!) ~ x ln x - x applied to each
/// factorial; collapses exactly to the Shannon entropy of the block
/// frequencies in nats.
inline double stirling_two_term(const Occupancy& o) {
  double n = static_cast<double>(o.total());
  CompensatedSum acc;
  acc.add(detail::stirling2(n));
  for (long long c : o.counts())
    acc.add(-detail::stirling2(static_cast<double>(c)));
  double s = acc.value() / n;
#ifndef NDEBUG
  assert(std::abs(s - shannon_entropy(o.freq_dist(), LogBase::natural)) <
         1e-11);
#endif
  return s;
}

/// The three-term truncation ln(x!) ~ x(ln x - 1) + ln(2 pi x)/2 applied to
/// each factorial. Strictly closer to the exact value than the two-term
/// form once the blocks are not too small.
inline double stirling_three_term(const Occupancy& o) {
  double n = static_cast<double>(o.total());
  CompensatedSum acc;
  acc.add(detail::stirling3(n));
  for (long long c : o.counts())
    acc.add(-detail::stirling3(static_cast<double>(c)));
  return acc.value() / n;
}

/// An algebraically pooled variant of the three-term correction,
/// H_e(p) + ln(2 pi N^n / ((2 pi)^n prod p_i)) / (2N). It does not match
/// the per-factorial expansion (the arguments of the log correction differ
/// by a factor N^(2n-1)); surfaced for comparison only.
inline double stirling_three_term_pooled(const Occupancy& o) {
  double n = static_cast<double>(o.total());
  int blocks = static_cast<int>(o.counts().size());
  Dist p = o.freq_dist();
  CompensatedSum log_term;
  log_term.add(std::log(2.0 * std::numbers::pi));
  log_term.add(static_cast<double>(blocks) * std::log(n));
  log_term.add(-static_cast<double>(blocks) *
               std::log(2.0 * std::numbers::pi));
  for (double v : p) log_term.add(-std::log(v));
  return shannon_entropy(p, LogBase::natural) + log_term.value() / (2.0 * n);
}

/// Partial sums of ln(1/p_i) = (1-p_i) + (p_i-1)^2/2 - (p_i-1)^3/3 + ...
/// averaged over p. One term gives exactly the logical entropy; the limit
/// is the Shannon entropy in nats.
inline double mercator_entropy_approx(const Dist& d, int terms) {
  if (terms < 1) throw InvariantViolation("need at least one series term");
  for (double p : d)
    if (p == 0.0)
      throw ZeroProbability("series requires strictly positive probabilities");
  CompensatedSum acc;
  for (double p : d) {
    CompensatedSum partial;
    double power = 1.0;
    for (int j = 1; j <= terms; ++j) {
      power *= p - 1.0;
      double sign = (j % 2 == 0) ? 1.0 : -1.0;
      partial.add(sign * power / j);
    }
    acc.add(p * partial.value());
  }
  return acc.value();
}

/// Law-of-large-numbers view of an N-letter message: every typical message
/// has probability P^N with P = prod p_k^{p_k}, and distinguishing each
/// letter takes H_2(p) bits on average.
struct TypicalSetStats {
  double per_letter_prob;       // P
  double typical_message_prob;  // P^N
  double bits_per_letter;       // H_2(p)
};

inline TypicalSetStats typical_set_stats(const Dist& d, long long n_letters) {
  if (n_letters < 1)
    throw InvariantViolation("message length must be positive");
  double p = 1.0;
  for (double v : d)
    if (v > 0.0) p *= std::pow(v, v);
  TypicalSetStats stats;
  stats.per_letter_prob = p;
  stats.typical_message_prob = std::pow(p, static_cast<double>(n_letters));
  stats.bits_per_letter = shannon_entropy(d, LogBase::two);
#ifndef NDEBUG
  assert(std::abs(std::log2(1.0 / p) - stats.bits_per_letter) < 1e-9);
#endif
  return stats;
}

/// The m binary partitions on a 2^m-point universe whose i-th member splits
/// points by the i-th binary digit (most significant first). Their join is
/// the discrete partition, and their ditsets union to its ditset.
inline std::vector<Partition> binary_partition_decomposition(int m) {
  if (m < 1) throw InvariantViolation("need at least one binary digit");
  if (m >= 31 || (1 << m) > kDefaultUniverseCap)
    throw InvariantViolation("universe size 2^" + std::to_string(m) +
                             " exceeds cap");
  int n = 1 << m;
  Universe universe = Universe::uniform(n);
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    int bit = m - i;
    std::vector<int> zeros, ones;
    for (int j = 0; j < n; ++j)
      (((j >> bit) & 1) ? ones : zeros).push_back(j);
    out.push_back(Partition::make(universe, {zeros, ones}));
  }
  return out;
}

/// Same decomposition keyed by universe size; the size must be a power of
/// two with at least two points.
inline std::vector<Partition> binary_partitions_for_size(int universe_size) {
  if (universe_size < 2 || (universe_size & (universe_size - 1)) != 0)
    throw NotPowerOfTwo("universe size " + std::to_string(universe_size) +
                        " is not a power of two (>= 2)");
  int m = 0;
  while ((1 << m) < universe_size) ++m;
  return binary_partition_decomposition(m);
}

}  // namespace ditlib
