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
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ditlib/dist.hpp"
#include "ditlib/errors.hpp"
#include "ditlib/measures.hpp"
#include "ditlib/pairset.hpp"
#include "ditlib/sum.hpp"

namespace ditlib {

/// Infoset materialization is capped at this many tuple pairs.
inline constexpr std::int64_t kMaxPairMaterialization = 100000000;

/// A probability table over a product of finite axes X_1 x ... x X_n.
/// Stored dense in row-major order, last axis fastest.
class JointDist {
 public:
  static JointDist make(std::vector<int> axes, std::vector<double> table,
                        std::optional<std::vector<std::vector<std::string>>>
                            labels = std::nullopt) {
    if (axes.empty()) throw InvariantViolation("axes: need at least one axis");
    std::int64_t cells = 1;
    for (int a : axes) {
      if (a < 1) throw InvariantViolation("axes: sizes must be positive");
      cells *= a;
      if (cells > kMaxPairMaterialization)
        throw CapExceeded("joint table too large");
    }
    if (static_cast<std::int64_t>(table.size()) != cells)
      throw InvariantViolation("table: expected " + std::to_string(cells) +
                               " cells, got " + std::to_string(table.size()));
    CompensatedSum total;
    for (double p : table) {
      if (!(p >= 0.0))
        throw InvariantViolation("table: entries must be non-negative");
      total.add(p);
    }
    if (std::abs(total.value() - 1.0) > kProbSumTolerance)
      throw InvariantViolation("table sum: expected 1, got " +
                               std::to_string(total.value()));
    if (labels) {
      if (labels->size() != axes.size())
        throw InvariantViolation("labels: expected one list per axis");
      for (std::size_t i = 0; i < axes.size(); ++i) {
        const auto& ls = (*labels)[i];
        if (static_cast<int>(ls.size()) != axes[i])
          throw InvariantViolation("labels: axis " + std::to_string(i) +
                                   " has wrong label count");
        std::unordered_set<std::string> seen;
        for (const auto& l : ls)
          if (!seen.insert(l).second)
            throw InvariantViolation("labels: duplicate label \"" + l +
                                     "\" on axis " + std::to_string(i));
      }
    }
    return JointDist(std::move(axes), std::move(table), std::move(labels));
  }

  /// Builds from sparse (cell, mass) entries; omitted cells are zero.
  static JointDist from_cells(
      std::vector<int> axes,
      const std::vector<std::pair<std::vector<int>, double>>& entries,
      std::optional<std::vector<std::vector<std::string>>> labels =
          std::nullopt) {
    std::int64_t cells = 1;
    for (int a : axes) {
      if (a < 1) throw InvariantViolation("axes: sizes must be positive");
      cells *= a;
      if (cells > kMaxPairMaterialization)
        throw CapExceeded("joint table too large");
    }
    std::vector<double> table(static_cast<std::size_t>(cells), 0.0);
    std::vector<bool> filled(static_cast<std::size_t>(cells), false);
    for (const auto& [coords, p] : entries) {
      if (static_cast<int>(coords.size()) != static_cast<int>(axes.size()))
        throw InvariantViolation("cell: wrong number of coordinates");
      std::int64_t flat = 0;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= axes[i])
          throw InvariantViolation("cell: coordinate out of range");
        flat = flat * axes[i] + coords[i];
      }
      if (filled[static_cast<std::size_t>(flat)])
        throw InvariantViolation("cell: duplicate cell entry");
      filled[static_cast<std::size_t>(flat)] = true;
      table[static_cast<std::size_t>(flat)] = p;
    }
    return make(std::move(axes), std::move(table), std::move(labels));
  }

  /// Product of independent marginals.
  static JointDist product(const std::vector<Dist>& factors) {
    if (factors.empty())
      throw InvariantViolation("axes: need at least one axis");
    std::vector<int> axes;
    axes.reserve(factors.size());
    for (const auto& f : factors) axes.push_back(f.size());
    std::int64_t cells = 1;
    for (int a : axes) cells *= a;
    std::vector<double> table(static_cast<std::size_t>(cells));
    std::vector<int> coords(axes.size(), 0);
    for (std::int64_t flat = 0; flat < cells; ++flat) {
      double p = 1.0;
      for (std::size_t i = 0; i < axes.size(); ++i)
        p *= factors[i][coords[i]];
      table[static_cast<std::size_t>(flat)] = p;
      for (int i = static_cast<int>(axes.size()) - 1; i >= 0; --i) {
        if (++coords[static_cast<std::size_t>(i)] <
            axes[static_cast<std::size_t>(i)])
          break;
        coords[static_cast<std::size_t>(i)] = 0;
      }
    }
    return make(std::move(axes), std::move(table));
  }

  int num_axes() const { return static_cast<int>(axes_.size()); }
  int axis_size(int i) const { return axes_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& axes() const { return axes_; }
  int num_cells() const { return static_cast<int>(table_.size()); }
  const std::vector<double>& table() const { return table_; }
  double cell(int flat) const { return table_[static_cast<std::size_t>(flat)]; }
  const std::optional<std::vector<std::vector<std::string>>>& labels() const {
    return labels_;
  }

  int flatten(const std::vector<int>& coords) const {
    int flat = 0;
    for (std::size_t i = 0; i < axes_.size(); ++i)
      flat = flat * axes_[i] + coords[i];
    return flat;
  }

  std::vector<int> unflatten(int flat) const {
    std::vector<int> coords(axes_.size());
    for (int i = num_axes() - 1; i >= 0; --i) {
      coords[static_cast<std::size_t>(i)] =
          flat % axes_[static_cast<std::size_t>(i)];
      flat /= axes_[static_cast<std::size_t>(i)];
    }
    return coords;
  }

  double at(const std::vector<int>& coords) const {
    return table_[static_cast<std::size_t>(flatten(coords))];
  }

  /// Marginal over the given (sorted, non-empty) axis subset: sums out all
  /// other axes.
  JointDist marginal(const std::vector<int>& keep) const {
    check_axis_set(keep, "marginal axes");
    std::vector<int> out_axes;
    out_axes.reserve(keep.size());
    for (int a : keep) out_axes.push_back(axes_[static_cast<std::size_t>(a)]);
    std::int64_t out_cells = 1;
    for (int a : out_axes) out_cells *= a;
    std::vector<CompensatedSum> acc(static_cast<std::size_t>(out_cells));
    for (int flat = 0; flat < num_cells(); ++flat) {
      std::vector<int> coords = unflatten(flat);
      int out_flat = 0;
      for (std::size_t i = 0; i < keep.size(); ++i)
        out_flat = out_flat * out_axes[i] +
                   coords[static_cast<std::size_t>(keep[i])];
      acc[static_cast<std::size_t>(out_flat)].add(cell(flat));
    }
    std::vector<double> out_table(static_cast<std::size_t>(out_cells));
    for (std::int64_t i = 0; i < out_cells; ++i)
      out_table[static_cast<std::size_t>(i)] =
          acc[static_cast<std::size_t>(i)].value();
    std::optional<std::vector<std::vector<std::string>>> out_labels;
    if (labels_) {
      out_labels.emplace();
      for (int a : keep)
        out_labels->push_back((*labels_)[static_cast<std::size_t>(a)]);
    }
    return JointDist(std::move(out_axes), std::move(out_table),
                     std::move(out_labels));
  }

  /// Marginal distribution of a single axis.
  Dist axis_dist(int axis) const {
    return Dist::make(marginal({axis}).table());
  }

  /// The whole table viewed as a distribution over flat cell indices.
  Dist flat_dist() const { return Dist::make(table_); }

  void check_axis_set(const std::vector<int>& axes, const char* what) const {
    if (axes.empty()) throw EmptyAxisSet(std::string(what) + ": empty");
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (axes[i] < 0 || axes[i] >= num_axes())
        throw AxisMismatch(std::string(what) + ": axis " +
                           std::to_string(axes[i]) + " out of range");
      if (i > 0 && axes[i] <= axes[i - 1])
        throw AxisMismatch(std::string(what) +
                           ": axes must be a sorted list without duplicates");
    }
  }

  friend bool operator==(const JointDist& a, const JointDist& b) {
    return a.axes_ == b.axes_ && a.table_ == b.table_;
  }

 private:
  JointDist(std::vector<int> axes, std::vector<double> table,
            std::optional<std::vector<std::vector<std::string>>> labels)
      : axes_(std::move(axes)),
        table_(std::move(table)),
        labels_(std::move(labels)) {}

  std::vector<int> axes_;
  std::vector<double> table_;
  std::optional<std::vector<std::vector<std::string>>> labels_;
};

/// The 2x2x2 joint with mass 1/4 on the four even-parity cells: pairwise
/// independent but not mutually independent, with I(X,Y,Z) = -1 bit while
/// m(X,Y,Z) = 0.
inline JointDist abramson_joint() {
  return JointDist::from_cells({2, 2, 2}, {{{0, 0, 0}, 0.25},
                                           {{0, 1, 1}, 0.25},
                                           {{1, 0, 1}, 0.25},
                                           {{1, 1, 0}, 0.25}});
}

/// A Boolean expression over per-axis DIFFERS/EQUALS atoms, denoting a set
/// of pairs of tuples ((x), (x')). Stored symbolically, materialized lazily
/// against a joint distribution.
class InfoSet {
 public:
  static InfoSet differs(int axis) { return InfoSet(Op::differs, axis); }
  static InfoSet equals(int axis) { return InfoSet(Op::equals, axis); }
  static InfoSet none() { return InfoSet(Op::none, -1); }
  static InfoSet all() { return InfoSet(Op::all, -1); }

  InfoSet operator|(const InfoSet& o) const {
    return InfoSet(Op::unite, *this, o);
  }
  InfoSet operator&(const InfoSet& o) const {
    return InfoSet(Op::intersect, *this, o);
  }
  InfoSet operator-(const InfoSet& o) const {
    return InfoSet(Op::difference, *this, o);
  }
  InfoSet operator~() const { return InfoSet(Op::complement, *this); }

  bool contains(const std::vector<int>& x, const std::vector<int>& xp) const {
    return eval(root_.get(), x, xp);
  }

  /// One past the largest axis referenced (0 for constant expressions).
  int min_axes() const { return max_axis(root_.get()) + 1; }

  std::string describe() const { return describe(root_.get()); }

 private:
  enum class Op { differs, equals, unite, intersect, difference, complement,
                  none, all };

  struct Node {
    Op op;
    int axis = -1;
    std::shared_ptr<const Node> a, b;
  };

  InfoSet(Op op, int axis) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->axis = axis;
    root_ = std::move(n);
  }
  InfoSet(Op op, const InfoSet& a) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = a.root_;
    root_ = std::move(n);
  }
  InfoSet(Op op, const InfoSet& a, const InfoSet& b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = a.root_;
    n->b = b.root_;
    root_ = std::move(n);
  }

  static bool eval(const Node* n, const std::vector<int>& x,
                   const std::vector<int>& xp) {
    switch (n->op) {
      case Op::differs:
        return x[static_cast<std::size_t>(n->axis)] !=
               xp[static_cast<std::size_t>(n->axis)];
      case Op::equals:
        return x[static_cast<std::size_t>(n->axis)] ==
               xp[static_cast<std::size_t>(n->axis)];
      case Op::unite:
        return eval(n->a.get(), x, xp) || eval(n->b.get(), x, xp);
      case Op::intersect:
        return eval(n->a.get(), x, xp) && eval(n->b.get(), x, xp);
      case Op::difference:
        return eval(n->a.get(), x, xp) && !eval(n->b.get(), x, xp);
      case Op::complement:
        return !eval(n->a.get(), x, xp);
      case Op::none:
        return false;
      case Op::all:
        return true;
    }
    return false;
  }

  static int max_axis(const Node* n) {
    switch (n->op) {
      case Op::differs:
      case Op::equals:
        return n->axis;
      case Op::unite:
      case Op::intersect:
      case Op::difference:
        return std::max(max_axis(n->a.get()), max_axis(n->b.get()));
      case Op::complement:
        return max_axis(n->a.get());
      default:
        return -1;
    }
  }

  static std::string describe(const Node* n) {
    switch (n->op) {
      case Op::differs:
        return "differs(" + std::to_string(n->axis) + ")";
      case Op::equals:
        return "equals(" + std::to_string(n->axis) + ")";
      case Op::unite:
        return "(" + describe(n->a.get()) + " | " + describe(n->b.get()) + ")";
      case Op::intersect:
        return "(" + describe(n->a.get()) + " & " + describe(n->b.get()) + ")";
      case Op::difference:
        return "(" + describe(n->a.get()) + " - " + describe(n->b.get()) + ")";
      case Op::complement:
        return "~" + describe(n->a.get());
      case Op::none:
        return "none";
      case Op::all:
        return "all";
    }
    return "";
  }

  std::shared_ptr<const Node> root_;
};

/// S_{vI}: some axis in I differs.
inline InfoSet infoset_or(const std::vector<int>& axes) {
  InfoSet s = InfoSet::differs(axes.at(0));
  for (std::size_t i = 1; i < axes.size(); ++i) s = s | InfoSet::differs(axes[i]);
  return s;
}

/// S_{^I}: every axis in I differs.
inline InfoSet infoset_and(const std::vector<int>& axes) {
  InfoSet s = InfoSet::differs(axes.at(0));
  for (std::size_t i = 1; i < axes.size(); ++i) s = s & InfoSet::differs(axes[i]);
  return s;
}

/// S_{vI|^J}: some axis in I differs and every axis in J agrees.
inline InfoSet infoset_or_given(const std::vector<int>& i_axes,
                                const std::vector<int>& j_axes) {
  return infoset_or(i_axes) - infoset_or(j_axes);
}

/// S_{^I|^J}: every axis in I differs and every axis in J agrees.
inline InfoSet infoset_and_given(const std::vector<int>& i_axes,
                                 const std::vector<int>& j_axes) {
  InfoSet s = infoset_and(i_axes);
  for (int j : j_axes) s = s & InfoSet::equals(j);
  return s;
}

/// Product probability measure of an infoset: materializes every pair of
/// tuples and sums p(x) p(x'). The oracle for every compound entropy.
inline double measure_infoset(const JointDist& j, const InfoSet& s) {
  if (s.min_axes() > j.num_axes())
    throw AxisMismatch("infoset references axis beyond the joint's axes");
  std::int64_t cells = j.num_cells();
  if (cells * cells > kMaxPairMaterialization)
    throw CapExceeded("infoset materialization too large");
  std::vector<std::vector<int>> coords;
  coords.reserve(static_cast<std::size_t>(cells));
  for (int a = 0; a < cells; ++a) coords.push_back(j.unflatten(a));
  CompensatedSum acc;
  for (int a = 0; a < cells; ++a) {
    double pa = j.cell(a);
    if (pa == 0.0) continue;
    for (int b = 0; b < cells; ++b) {
      double pb = j.cell(b);
      if (pb == 0.0) continue;
      if (s.contains(coords[static_cast<std::size_t>(a)],
                     coords[static_cast<std::size_t>(b)]))
        acc.add(pa * pb);
    }
  }
  return acc.value();
}

namespace detail {

#ifndef NDEBUG
// Debug-mode oracle cross-checks only run where materialization fits the cap.
inline bool materializable(const JointDist& j) {
  std::int64_t cells = j.num_cells();
  return cells * cells <= kMaxPairMaterialization;
}
#endif

inline std::vector<int> merge_axis_sets(const std::vector<int>& a,
                                        const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void check_disjoint(const std::vector<int>& a,
                           const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y)
        throw OverlappingAxisSets("axis " + std::to_string(x) +
                                  " appears in both axis sets");
}

/// Enumerates non-empty subsets of `axes` with inclusion-exclusion signs:
/// calls f(subset, sign) where sign = (-1)^(|subset|+1).
template <typename F>
void for_each_signed_subset(const std::vector<int>& axes, F&& f) {
  int n = static_cast<int>(axes.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(axes[static_cast<std::size_t>(i)]);
    double sign = (std::popcount(mask) % 2 == 1) ? 1.0 : -1.0;
    f(subset, sign);
  }
}

}  // namespace detail

/// h(I) = mu(S_{vI}) = 1 - sum of squared masses of the I-marginal.
inline double joint_logical_entropy(const JointDist& j,
                                    const std::vector<int>& i_axes) {
  j.check_axis_set(i_axes, "I");
  JointDist marg = j.marginal(i_axes);
  CompensatedSum sq;
  for (double p : marg.table()) sq.add(p * p);
  double h = 1.0 - sq.value();
#ifndef NDEBUG
  assert(!detail::materializable(j) ||
         std::abs(measure_infoset(j, infoset_or(i_axes)) - h) <
             kIdentityTolerance);
#endif
  return h;
}

/// h(I|J) = mu(S_{vI} - S_{vJ}) = h(I u J) - h(J).
inline double conditional_logical_entropy(const JointDist& j,
                                          const std::vector<int>& i_axes,
                                          const std::vector<int>& j_axes) {
  j.check_axis_set(i_axes, "I");
  j.check_axis_set(j_axes, "J");
  detail::check_disjoint(i_axes, j_axes);
  double h = joint_logical_entropy(j, detail::merge_axis_sets(i_axes, j_axes)) -
             joint_logical_entropy(j, j_axes);
#ifndef NDEBUG
  assert(!detail::materializable(j) ||
         std::abs(measure_infoset(j, infoset_or_given(i_axes, j_axes)) - h) <
             kIdentityTolerance);
#endif
  return h;
}

/// m(I|J) = mu(S_{^I|^J}); with empty J, m(I) = mu(S_{^I}). Computed by
/// inclusion-exclusion over joint logical entropies, which the measure
/// identities reduce it to; always non-negative.
inline double mutual_logical_info(const JointDist& j,
                                  const std::vector<int>& i_axes,
                                  const std::vector<int>& j_axes = {}) {
  j.check_axis_set(i_axes, "I");
  if (!j_axes.empty()) {
    j.check_axis_set(j_axes, "J");
    detail::check_disjoint(i_axes, j_axes);
  }
  // m(K) = sum over non-empty T subset K of (-1)^(|T|+1) h(T).
  auto plain_mutual = [&j](const std::vector<int>& k_axes) {
    CompensatedSum acc;
    detail::for_each_signed_subset(k_axes,
                                   [&](const std::vector<int>& t, double sign) {
                                     acc.add(sign *
                                             joint_logical_entropy(j, t));
                                   });
    return acc.value();
  };
  double m;
  if (j_axes.empty()) {
    m = plain_mutual(i_axes);
  } else {
    // mu(A - union B_j) expanded over subsets T of J:
    // m(I|J) = sum over T subset J of (-1)^|T| m(I u T).
    CompensatedSum acc;
    int nj = static_cast<int>(j_axes.size());
    for (unsigned mask = 0; mask < (1u << nj); ++mask) {
      std::vector<int> t;
      for (int i = 0; i < nj; ++i)
        if (mask & (1u << i)) t.push_back(j_axes[static_cast<std::size_t>(i)]);
      double sign = (std::popcount(mask) % 2 == 0) ? 1.0 : -1.0;
      acc.add(sign * plain_mutual(detail::merge_axis_sets(i_axes, t)));
    }
    m = acc.value();
  }
#ifndef NDEBUG
  assert(!detail::materializable(j) ||
         std::abs(measure_infoset(j, infoset_and_given(i_axes, j_axes)) - m) <
             kIdentityTolerance);
#endif
  return m;
}

/// H(I): Shannon entropy of the I-marginal.
inline double shannon_joint(const JointDist& j, const std::vector<int>& i_axes,
                            LogBase base = LogBase::two) {
  j.check_axis_set(i_axes, "I");
  return shannon_entropy(j.marginal(i_axes).flat_dist(), base);
}

/// H(I|J) = H(I u J) - H(J).
inline double shannon_conditional(const JointDist& j,
                                  const std::vector<int>& i_axes,
                                  const std::vector<int>& j_axes,
                                  LogBase base = LogBase::two) {
  j.check_axis_set(i_axes, "I");
  j.check_axis_set(j_axes, "J");
  detail::check_disjoint(i_axes, j_axes);
  return shannon_joint(j, detail::merge_axis_sets(i_axes, j_axes), base) -
         shannon_joint(j, j_axes, base);
}

/// Multivariate Shannon mutual information by inclusion-exclusion; may be
/// negative for three or more variables.
inline double shannon_mutual(const JointDist& j,
                             const std::vector<int>& i_axes,
                             LogBase base = LogBase::two) {
  j.check_axis_set(i_axes, "I");
  CompensatedSum acc;
  detail::for_each_signed_subset(i_axes,
                                 [&](const std::vector<int>& t, double sign) {
                                   acc.add(sign * shannon_joint(j, t, base));
                                 });
  return acc.value();
}

/// Per-bipartition independence report: the joint is independent across
/// (left, right) when every cell mass is the product of the two projected
/// masses.
struct IndependenceReport {
  struct Entry {
    std::vector<int> left, right;
    double max_abs_dev = 0.0;
    bool independent = true;
  };
  std::vector<Entry> entries;
  bool independent = true;  // all bipartitions
};

inline IndependenceReport independence_report(const JointDist& j) {
  IndependenceReport report;
  int n = j.num_axes();
  if (n < 2) return report;
  // Proper masks containing axis 0 enumerate each unordered bipartition once.
  for (unsigned left_mask = 1; left_mask < (1u << n) - 1; left_mask += 2) {
    IndependenceReport::Entry entry;
    for (int a = 0; a < n; ++a)
      ((left_mask >> a) & 1u ? entry.left : entry.right).push_back(a);
    JointDist left = j.marginal(entry.left);
    JointDist right = j.marginal(entry.right);
    for (int flat = 0; flat < j.num_cells(); ++flat) {
      std::vector<int> coords = j.unflatten(flat);
      std::vector<int> lc, rc;
      for (int a : entry.left) lc.push_back(coords[static_cast<std::size_t>(a)]);
      for (int a : entry.right) rc.push_back(coords[static_cast<std::size_t>(a)]);
      double dev = std::abs(j.cell(flat) - left.at(lc) * right.at(rc));
      entry.max_abs_dev = std::max(entry.max_abs_dev, dev);
    }
    entry.independent = entry.max_abs_dev < kIdentityTolerance;
    report.independent = report.independent && entry.independent;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

inline bool is_independent(const JointDist& j) {
  return independence_report(j).independent;
}

/// dit(X_i): pairs of cells that differ on axis i and both carry positive
/// mass. A subset of S_{X_i} of equal measure.
inline PairSet variable_ditset(const JointDist& j, int axis) {
  if (axis < 0 || axis >= j.num_axes())
    throw AxisMismatch("axis " + std::to_string(axis) + " out of range");
  int cells = j.num_cells();
  if (static_cast<std::int64_t>(cells) * cells > kMaxPairMaterialization)
    throw CapExceeded("ditset materialization too large");
  PairSet s(cells);
  std::vector<int> coord_on_axis(static_cast<std::size_t>(cells));
  for (int a = 0; a < cells; ++a)
    coord_on_axis[static_cast<std::size_t>(a)] =
        j.unflatten(a)[static_cast<std::size_t>(axis)];
  for (int a = 0; a < cells; ++a) {
    if (j.cell(a) == 0.0) continue;
    for (int b = 0; b < cells; ++b) {
      if (j.cell(b) == 0.0) continue;
      if (coord_on_axis[static_cast<std::size_t>(a)] !=
          coord_on_axis[static_cast<std::size_t>(b)])
        s.set(a, b);
    }
  }
  return s;
}

/// Checks, for every axis pair, that nonempty ditsets intersect: when
/// h(X_a) h(X_b) > 0 there must be a common distinction and m(X_a,X_b) > 0.
struct DitsetsIntersectReport {
  struct Entry {
    int axis_a, axis_b;
    double h_a, h_b, m;
    bool applicable;  // h_a * h_b > 0
    bool holds;       // vacuously true when not applicable
    // First common distinction, as a pair of flat cell indices.
    std::optional<std::pair<int, int>> witness;
  };
  std::vector<Entry> entries;
  bool all_hold = true;
};

inline DitsetsIntersectReport ditsets_intersect_check(const JointDist& j) {
  DitsetsIntersectReport report;
  int n = j.num_axes();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      DitsetsIntersectReport::Entry e;
      e.axis_a = a;
      e.axis_b = b;
      e.h_a = joint_logical_entropy(j, {a});
      e.h_b = joint_logical_entropy(j, {b});
      e.m = mutual_logical_info(j, {a, b});
      // h(X) > 0 exactly when dit(X) is non-empty; testing the ditsets
      // directly keeps degenerate marginals out of rounding's reach.
      e.applicable =
          !variable_ditset(j, a).empty() && !variable_ditset(j, b).empty();
      PairSet common = variable_ditset(j, a) & variable_ditset(j, b);
      for (const auto& [x, y] : common.pairs()) {
        e.witness = {x, y};
        break;
      }
      e.holds = !e.applicable || (e.m > 0.0 && e.witness.has_value());
      report.all_hold = report.all_hold && e.holds;
      report.entries.push_back(std::move(e));
    }
  return report;
}

}  // namespace ditlib
