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

#include "ditlib/dist.hpp"
#include "ditlib/errors.hpp"
#include "ditlib/joint.hpp"
#include "ditlib/measures.hpp"
#include "ditlib/sum.hpp"

namespace ditlib {

/// Atom interpretation: a dit-count atom contributes 1 - q, a bit-count
/// atom contributes log(1/q). Flipping the kind is the whole transform.
enum class AtomKind { dit, bit };

/// Average normal form: a weighted sum of signed probability atoms, with
/// weights drawn from one declared distribution slot. Atoms reference
/// probabilities symbolically (slot + index), so the transform is a pure
/// structural rewrite and the same form can be re-evaluated afterwards.
class AvgForm {
 public:
  struct ProbRef {
    int slot;
    int index;
  };
  struct Atom {
    int sign;  // +1 or -1
    ProbRef ref;
    AtomKind kind;
  };
  struct Term {
    ProbRef weight;
    std::vector<Atom> atoms;
  };

  AvgForm(std::vector<std::pair<std::string, std::vector<double>>> slots,
          std::vector<Term> terms)
      : slots_(std::move(slots)), terms_(std::move(terms)) {
    validate();
  }

  const std::vector<Term>& terms() const { return terms_; }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  /// The shared atom kind; empty forms count as dit-kind.
  AtomKind kind() const {
    for (const auto& term : terms_)
      for (const auto& atom : term.atoms) return atom.kind;
    return AtomKind::dit;
  }

  double prob(ProbRef ref) const {
    return slots_[static_cast<std::size_t>(ref.slot)]
        .second[static_cast<std::size_t>(ref.index)];
  }

  /// Sum over terms of weight times the signed atom values. Zero-weight
  /// terms are skipped (the 0 log 0 convention).
  double eval(LogBase base = LogBase::two) const {
    CompensatedSum acc;
    for (const auto& term : terms_) {
      double w = prob(term.weight);
      if (w == 0.0) continue;
      CompensatedSum inner;
      for (const auto& atom : term.atoms) {
        double q = prob(atom.ref);
        double value = atom.kind == AtomKind::dit ? 1.0 - q
                                                  : log_of(1.0 / q, base);
        inner.add(atom.sign * value);
      }
      acc.add(w * inner.value());
    }
    return acc.value();
  }

  /// Same structure with every atom flipped to the other kind.
  AvgForm with_kind(AtomKind kind) const {
    AvgForm out = *this;
    for (auto& term : out.terms_)
      for (auto& atom : term.atoms) atom.kind = kind;
    return out;
  }

  /// Concatenates g's atoms onto this form's terms. Both forms must share
  /// the same weight structure (this is the sum of two averages over one
  /// distribution).
  AvgForm concat(const AvgForm& g) const {
    if (slots_ != g.slots_ || num_terms() != g.num_terms())
      throw UnsupportedKind("forms have different weight structure");
    AvgForm out = *this;
    for (int t = 0; t < num_terms(); ++t) {
      const Term& gt = g.terms_[static_cast<std::size_t>(t)];
      Term& ot = out.terms_[static_cast<std::size_t>(t)];
      if (ot.weight.slot != gt.weight.slot ||
          ot.weight.index != gt.weight.index)
        throw UnsupportedKind("forms have different weight structure");
      ot.atoms.insert(ot.atoms.end(), gt.atoms.begin(), gt.atoms.end());
    }
    out.validate();
    return out;
  }

  /// Human-readable rendering for reports, e.g.
  /// "sum_t w[t] * [ (1-p(x)) + (1-p(y)) - (1-p(x,y)) ]".
  std::string describe() const {
    std::string out;
    for (const auto& term : terms_) {
      if (!out.empty()) out += "\n";
      out += "  + " + ref_name(term.weight) + " * [";
      bool first = true;
      for (const auto& atom : term.atoms) {
        out += first ? (atom.sign > 0 ? " " : " -") : (atom.sign > 0 ? " + " : " - ");
        first = false;
        std::string q = ref_name(atom.ref);
        out += atom.kind == AtomKind::dit ? "(1 - " + q + ")"
                                          : "log(1/" + q + ")";
      }
      out += " ]";
    }
    return out;
  }

  friend bool operator==(const AvgForm& a, const AvgForm& b) {
    if (a.slots_ != b.slots_ || a.num_terms() != b.num_terms()) return false;
    for (int t = 0; t < a.num_terms(); ++t) {
      const Term& x = a.terms_[static_cast<std::size_t>(t)];
      const Term& y = b.terms_[static_cast<std::size_t>(t)];
      if (x.weight.slot != y.weight.slot || x.weight.index != y.weight.index ||
          x.atoms.size() != y.atoms.size())
        return false;
      for (std::size_t i = 0; i < x.atoms.size(); ++i) {
        const Atom& p = x.atoms[i];
        const Atom& q = y.atoms[i];
        if (p.sign != q.sign || p.ref.slot != q.ref.slot ||
            p.ref.index != q.ref.index || p.kind != q.kind)
          return false;
      }
    }
    return true;
  }

 private:
  void validate() const {
    bool have_kind = false;
    AtomKind k = AtomKind::dit;
    CompensatedSum weight_sum;
    int weight_slot = -1;
    for (const auto& term : terms_) {
      check_ref(term.weight);
      if (weight_slot == -1) weight_slot = term.weight.slot;
      if (term.weight.slot != weight_slot)
        throw InvariantViolation(
            "form weights must come from a single distribution slot");
      weight_sum.add(prob(term.weight));
      for (const auto& atom : term.atoms) {
        check_ref(atom.ref);
        if (atom.sign != 1 && atom.sign != -1)
          throw InvariantViolation("atom signs must be +1 or -1");
        if (!have_kind) {
          k = atom.kind;
          have_kind = true;
        } else if (atom.kind != k) {
          throw InvariantViolation("atom kinds must be homogeneous in a form");
        }
      }
    }
    if (!terms_.empty() && std::abs(weight_sum.value() - 1.0) > kProbSumTolerance)
      throw InvariantViolation("form weights must sum to 1");
  }

  void check_ref(ProbRef ref) const {
    if (ref.slot < 0 || ref.slot >= static_cast<int>(slots_.size()))
      throw InvariantViolation("probability reference to unknown slot");
    const auto& values = slots_[static_cast<std::size_t>(ref.slot)].second;
    if (ref.index < 0 || ref.index >= static_cast<int>(values.size()))
      throw InvariantViolation("probability reference index out of range");
  }

  std::string ref_name(ProbRef ref) const {
    return slots_[static_cast<std::size_t>(ref.slot)].first + "[" +
           std::to_string(ref.index) + "]";
  }

  std::vector<std::pair<std::string, std::vector<double>>> slots_;
  std::vector<Term> terms_;
};

/// Rewrites every dit atom 1 - q into the bit atom log(1/q), leaving
/// weights and structure untouched.
inline AvgForm dit_bit_transform(const AvgForm& f) {
  if (f.kind() == AtomKind::bit)
    throw AlreadyBitKind("form is already bit-kind");
  return f.with_kind(AtomKind::bit);
}

inline double eval_avg_form(const AvgForm& f, LogBase base = LogBase::two) {
  return f.eval(base);
}

/// The compound-entropy shapes the transform is defined on.
enum class FormKind { entropy, conditional, mutual, mutual3, cross, divergence };

/// h(p) = sum_i p_i (1 - p_i).
inline AvgForm entropy_form(const Dist& p) {
  std::vector<AvgForm::Term> terms;
  for (int i = 0; i < p.size(); ++i)
    terms.push_back({{0, i}, {{1, {0, i}, AtomKind::dit}}});
  return AvgForm({{"p", p.probs()}}, std::move(terms));
}

namespace detail {
/// Joint-kind forms are built over the first `axes` variables; wider joints
/// are marginalized down first.
inline JointDist first_axes(const JointDist& j, int axes, const char* what) {
  if (j.num_axes() < axes)
    throw UnsupportedKind(std::string(what) + " needs at least " +
                          std::to_string(axes) + " axes");
  if (j.num_axes() == axes) return j;
  std::vector<int> keep;
  for (int a = 0; a < axes; ++a) keep.push_back(a);
  return j.marginal(keep);
}
}  // namespace detail

/// h(X|Y) = sum_{x,y} p(x,y) [ (1 - p(x,y)) - (1 - p(y)) ] over the first
/// two axes.
inline AvgForm conditional_form(const JointDist& joint) {
  JointDist j = detail::first_axes(joint, 2, "conditional form");
  std::vector<AvgForm::Term> terms;
  for (int flat = 0; flat < j.num_cells(); ++flat) {
    int y = j.unflatten(flat)[1];
    terms.push_back({{0, flat},
                     {{1, {0, flat}, AtomKind::dit},
                      {-1, {1, y}, AtomKind::dit}}});
  }
  return AvgForm({{"p(x,y)", j.table()}, {"p(y)", j.marginal({1}).table()}},
                 std::move(terms));
}

/// m(X,Y) = sum_{x,y} p(x,y) [ (1-p(x)) + (1-p(y)) - (1-p(x,y)) ].
inline AvgForm mutual_form(const JointDist& joint) {
  JointDist j = detail::first_axes(joint, 2, "mutual form");
  std::vector<AvgForm::Term> terms;
  for (int flat = 0; flat < j.num_cells(); ++flat) {
    auto coords = j.unflatten(flat);
    terms.push_back({{0, flat},
                     {{1, {1, coords[0]}, AtomKind::dit},
                      {1, {2, coords[1]}, AtomKind::dit},
                      {-1, {0, flat}, AtomKind::dit}}});
  }
  return AvgForm({{"p(x,y)", j.table()},
                  {"p(x)", j.marginal({0}).table()},
                  {"p(y)", j.marginal({1}).table()}},
                 std::move(terms));
}

/// m(X,Y,Z) by inclusion-exclusion over the three marginal levels.
inline AvgForm mutual3_form(const JointDist& joint) {
  JointDist j = detail::first_axes(joint, 3, "three-way mutual form");
  JointDist mxy = j.marginal({0, 1});
  JointDist mxz = j.marginal({0, 2});
  JointDist myz = j.marginal({1, 2});
  std::vector<AvgForm::Term> terms;
  for (int flat = 0; flat < j.num_cells(); ++flat) {
    auto c = j.unflatten(flat);
    int xy = mxy.flatten({c[0], c[1]});
    int xz = mxz.flatten({c[0], c[2]});
    int yz = myz.flatten({c[1], c[2]});
    terms.push_back({{0, flat},
                     {{1, {1, c[0]}, AtomKind::dit},
                      {1, {2, c[1]}, AtomKind::dit},
                      {1, {3, c[2]}, AtomKind::dit},
                      {-1, {4, xy}, AtomKind::dit},
                      {-1, {5, xz}, AtomKind::dit},
                      {-1, {6, yz}, AtomKind::dit},
                      {1, {0, flat}, AtomKind::dit}}});
  }
  return AvgForm({{"p(x,y,z)", j.table()},
                  {"p(x)", j.marginal({0}).table()},
                  {"p(y)", j.marginal({1}).table()},
                  {"p(z)", j.marginal({2}).table()},
                  {"p(x,y)", mxy.table()},
                  {"p(x,z)", mxz.table()},
                  {"p(y,z)", myz.table()}},
                 std::move(terms));
}

namespace detail {
/// Weights (p/2 ++ q/2): the equal mixture over a doubled index, the single
/// declared distribution behind the symmetrized cross and divergence forms.
inline std::vector<double> half_mix(const Dist& p, const Dist& q) {
  std::vector<double> mix;
  mix.reserve(static_cast<std::size_t>(2 * p.size()));
  for (double v : p) mix.push_back(0.5 * v);
  for (double v : q) mix.push_back(0.5 * v);
  return mix;
}
}  // namespace detail

/// Symmetrized cross entropy form
/// h(p||q) = 1/2 [ sum_i p_i (1-q_i) + sum_i q_i (1-p_i) ].
inline AvgForm cross_form(const Dist& p, const Dist& q) {
  if (p.size() != q.size())
    throw SizeMismatch("distributions have different lengths");
  int n = p.size();
  std::vector<AvgForm::Term> terms;
  for (int i = 0; i < n; ++i)
    terms.push_back({{0, i}, {{1, {2, i}, AtomKind::dit}}});
  for (int i = 0; i < n; ++i)
    terms.push_back({{0, n + i}, {{1, {1, i}, AtomKind::dit}}});
  return AvgForm({{"w", detail::half_mix(p, q)},
                  {"p", p.probs()},
                  {"q", q.probs()}},
                 std::move(terms));
}

/// The one-sided average sum_i p_i (1 - q_i); its transform is the
/// unsymmetrized Shannon cross entropy H(p||q).
inline AvgForm cross_form_asymmetric(const Dist& p, const Dist& q) {
  if (p.size() != q.size())
    throw SizeMismatch("distributions have different lengths");
  std::vector<AvgForm::Term> terms;
  for (int i = 0; i < p.size(); ++i)
    terms.push_back({{0, i}, {{1, {1, i}, AtomKind::dit}}});
  return AvgForm({{"p", p.probs()}, {"q", q.probs()}}, std::move(terms));
}

/// d(p||q) = h(p||q) - [h(p) + h(q)]/2 in symmetrized average form; the
/// transform is the symmetrized Kullback-Leibler divergence.
inline AvgForm divergence_form(const Dist& p, const Dist& q) {
  if (p.size() != q.size())
    throw SizeMismatch("distributions have different lengths");
  int n = p.size();
  std::vector<AvgForm::Term> terms;
  for (int i = 0; i < n; ++i)
    terms.push_back({{0, i},
                     {{1, {2, i}, AtomKind::dit},
                      {-1, {1, i}, AtomKind::dit}}});
  for (int i = 0; i < n; ++i)
    terms.push_back({{0, n + i},
                     {{1, {1, i}, AtomKind::dit},
                      {-1, {2, i}, AtomKind::dit}}});
  return AvgForm({{"w", detail::half_mix(p, q)},
                  {"p", p.probs()},
                  {"q", q.probs()}},
                 std::move(terms));
}

/// Kind-dispatched builder for single-distribution kinds.
inline AvgForm build_avg_form(FormKind kind, const Dist& p) {
  if (kind != FormKind::entropy)
    throw UnsupportedKind("this form kind needs more than one distribution");
  return entropy_form(p);
}

/// Kind-dispatched builder for two-distribution kinds.
inline AvgForm build_avg_form(FormKind kind, const Dist& p, const Dist& q) {
  switch (kind) {
    case FormKind::cross: return cross_form(p, q);
    case FormKind::divergence: return divergence_form(p, q);
    default:
      throw UnsupportedKind("this form kind does not take two distributions");
  }
}

/// Kind-dispatched builder for joint-distribution kinds.
inline AvgForm build_avg_form(FormKind kind, const JointDist& j) {
  switch (kind) {
    case FormKind::conditional: return conditional_form(j);
    case FormKind::mutual: return mutual_form(j);
    case FormKind::mutual3: return mutual3_form(j);
    default:
      throw UnsupportedKind("this form kind does not take a joint distribution");
  }
}

}  // namespace ditlib
