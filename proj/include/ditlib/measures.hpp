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
#include <limits>
#include <vector>

#include "ditlib/dist.hpp"
#include "ditlib/errors.hpp"
#include "ditlib/pairset.hpp"
#include "ditlib/partition.hpp"
#include "ditlib/sum.hpp"

namespace ditlib {

/// Tolerance for the closed-form-vs-oracle and Venn identities.
inline constexpr double kIdentityTolerance = 1e-12;

enum class LogBase { two, natural };

inline double log_of(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

/// Product measure mu(S) = sum of p_j p_k over pairs (j,k) in S. The
/// brute-force oracle behind every logical-entropy closed form.
inline double product_measure(const Dist& d, const PairSet& s) {
  if (d.size() != s.universe_size())
    throw SizeMismatch("distribution size does not match pair set size");
  int n = d.size();
  CompensatedSum acc;
  for (int j = 0; j < n; ++j) {
    if (d[j] == 0.0) continue;
    for (int k = 0; k < n; ++k)
      if (s.test(j, k)) acc.add(d[j] * d[k]);
  }
  return acc.value();
}

/// h(p) = 1 - sum p_i^2: the probability that two independent draws from p
/// are distinct.
inline double logical_entropy(const Dist& d) {
  CompensatedSum sq;
  for (double p : d) sq.add(p * p);
  double h = 1.0 - sq.value();
#ifndef NDEBUG
  // Same value as the two-index sum over distinct pairs.
  CompensatedSum off;
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j)
      if (i != j) off.add(d[i] * d[j]);
  assert(std::abs(off.value() - h) < kIdentityTolerance);
#endif
  return h;
}

/// rho = sum p_i^2, the probability of a repeat in two independent draws.
inline double repeat_rate(const Dist& d) {
  CompensatedSum sq;
  for (double p : d) sq.add(p * p);
  return sq.value();
}

/// h_p(pi) = sum of p_j p_k over dit(pi) = 1 - sum p(B_i)^2.
inline double logical_entropy_partition(const Partition& pi) {
  CompensatedSum sq;
  for (double pb : pi.block_probs()) sq.add(pb * pb);
  double h = 1.0 - sq.value();
#ifndef NDEBUG
  assert(std::abs(product_measure(point_dist(pi.universe()),
                                  ditset(pi).pairs()) -
                  h) < kIdentityTolerance);
#endif
  return h;
}

/// Rescaled logical entropy n/(n-1) * h(pi): the ditset size normalized by
/// |U x U - diagonal| so the discrete uniform partition scores 1.
inline double rescaled_logical_entropy(const Partition& pi) {
  int n = pi.size();
  if (n == 1) return 0.0;
  return static_cast<double>(n) / (n - 1) * logical_entropy_partition(pi);
}

/// H(p) = sum p_i log(1/p_i), with the 0 log 0 = 0 convention.
inline double shannon_entropy(const Dist& d, LogBase base = LogBase::two) {
  CompensatedSum acc;
  for (double p : d)
    if (p > 0.0) acc.add(p * log_of(1.0 / p, base));
  return acc.value();
}

/// Shannon entropy of a partition's block distribution.
inline double shannon_entropy_partition(const Partition& pi,
                                        LogBase base = LogBase::two) {
  CompensatedSum acc;
  for (double pb : pi.block_probs())
    if (pb > 0.0) acc.add(pb * log_of(1.0 / pb, base));
  return acc.value();
}

namespace detail {
inline void check_same_length(const Dist& p, const Dist& q) {
  if (p.size() != q.size())
    throw SizeMismatch("distributions have different lengths");
}
}  // namespace detail

/// h(p||q) = 1 - sum p_i q_i. Symmetric; reduces to h(p) when p = q.
inline double cross_entropy_logical(const Dist& p, const Dist& q) {
  detail::check_same_length(p, q);
  CompensatedSum acc;
  for (int i = 0; i < p.size(); ++i) acc.add(p[i] * q[i]);
  return 1.0 - acc.value();
}

/// H(p||q) = sum p_i log(1/q_i); +infinity when p puts mass where q has
/// none. With symmetrized, the average of both directions.
inline double cross_entropy_shannon(const Dist& p, const Dist& q,
                                    bool symmetrized = false,
                                    LogBase base = LogBase::two) {
  detail::check_same_length(p, q);
  auto one_way = [base](const Dist& a, const Dist& b) {
    CompensatedSum acc;
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] == 0.0) continue;
      if (b[i] == 0.0) return std::numeric_limits<double>::infinity();
      acc.add(a[i] * log_of(1.0 / b[i], base));
    }
    return acc.value();
  };
  double forward = one_way(p, q);
  if (!symmetrized) return forward;
  double backward = one_way(q, p);
  return 0.5 * (forward + backward);
}

/// D(p||q) = sum p_i log(p_i/q_i) >= 0, zero iff p = q; +infinity on
/// support violation. With symmetrized, the average of both directions.
inline double kl_divergence(const Dist& p, const Dist& q,
                            bool symmetrized = false,
                            LogBase base = LogBase::two) {
  detail::check_same_length(p, q);
  auto one_way = [base](const Dist& a, const Dist& b) {
    CompensatedSum acc;
    for (int i = 0; i < a.size(); ++i) {
      if (a[i] == 0.0) continue;
      if (b[i] == 0.0) return std::numeric_limits<double>::infinity();
      acc.add(a[i] * log_of(a[i] / b[i], base));
    }
    return acc.value();
  };
  double forward = one_way(p, q);
  if (!symmetrized) return forward;
  double backward = one_way(q, p);
  return 0.5 * (forward + backward);
}

/// d(p||q) = (1/2) sum (p_i - q_i)^2, the squared Euclidean distance with
/// scale factor 1/2. Equals the Jensen difference
/// h(p||q) - (h(p) + h(q))/2.
inline double logical_divergence(const Dist& p, const Dist& q) {
  detail::check_same_length(p, q);
  CompensatedSum acc;
  for (int i = 0; i < p.size(); ++i) {
    double diff = p[i] - q[i];
    acc.add(diff * diff);
  }
  double d = 0.5 * acc.value();
#ifndef NDEBUG
  double jensen = cross_entropy_logical(p, q) -
                  0.5 * (logical_entropy(p) + logical_entropy(q));
  assert(std::abs(d - jensen) < kIdentityTolerance);
#endif
  return d;
}

/// The mixing chain h(p||q) >= h((p+q)/2) >= (h(p)+h(q))/2, strict when
/// p != q, with h((p+q)/2) = h(p||q)/2 + (h(p)+h(q))/4.
struct MixingChain {
  double cross;    // h(p||q)
  double mixed;    // h((p+q)/2)
  double average;  // (h(p)+h(q))/2
};

inline MixingChain mixing_check(const Dist& p, const Dist& q) {
  detail::check_same_length(p, q);
  std::vector<double> mix(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    mix[static_cast<std::size_t>(i)] = 0.5 * (p[i] + q[i]);
  MixingChain chain;
  chain.cross = cross_entropy_logical(p, q);
  chain.mixed = logical_entropy(Dist::make(std::move(mix)));
  chain.average = 0.5 * (logical_entropy(p) + logical_entropy(q));
#ifndef NDEBUG
  assert(std::abs(chain.mixed - (0.5 * chain.cross + 0.5 * chain.average)) <
         kIdentityTolerance);
#endif
  return chain;
}

/// E(p) = prod (1/p_i)^{p_i}, the multiplicative average of the
/// surprise values 1/p_i; the base-free antilog of Shannon entropy.
/// Zero-probability entries contribute factor 1 (p^p -> 1).
inline double numbers_equivalent_entropy(const Dist& d) {
  double e = 1.0;
  for (double p : d)
    if (p > 0.0) e *= std::pow(1.0 / p, p);
#ifndef NDEBUG
  assert(std::abs(std::log2(e) - shannon_entropy(d, LogBase::two)) < 1e-9);
#endif
  return e;
}

/// Q = sum over i != j of d_ij p_i p_j: the average distance between two
/// independently drawn distinct elements. With the logical distance
/// d_ij = 1 - delta_ij this is exactly h(p).
inline double rao_quadratic_entropy(const Dist& d,
                                    const std::vector<std::vector<double>>& dist) {
  int n = d.size();
  if (static_cast<int>(dist.size()) != n)
    throw SizeMismatch("distance matrix size does not match distribution");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[static_cast<std::size_t>(i)].size()) != n)
      throw SizeMismatch("distance matrix is not square");
    if (dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0.0)
      throw NonzeroDiagonal("distance matrix must have zero diagonal");
    for (int j = 0; j < n; ++j)
      if (dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw AsymmetricDistance("distance matrix must be symmetric");
  }
  CompensatedSum acc;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        acc.add(dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                d[i] * d[j]);
  return acc.value();
}

}  // namespace ditlib
