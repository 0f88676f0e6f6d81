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
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "ditlib/approx.hpp"
#include "ditlib/ditbit.hpp"
#include "ditlib/dist.hpp"
#include "ditlib/errors.hpp"
#include "ditlib/formula.hpp"
#include "ditlib/joint.hpp"
#include "ditlib/json_io.hpp"
#include "ditlib/measures.hpp"
#include "ditlib/partition.hpp"
#include "ditlib/report.hpp"
#include "ditlib/universe.hpp"
#include "ditlib/verify.hpp"

namespace ditlib {
namespace cli {

namespace detail {

inline LogBase parse_base(const std::string& base) {
  if (base == "2") return LogBase::two;
  if (base == "e") return LogBase::natural;
  throw InvariantViolation("--base must be 2 or e");
}

inline std::string axis_name(int i) {
  static const char* names[] = {"X", "Y", "Z", "W"};
  return i < 4 ? names[i] : "X" + std::to_string(i + 1);
}

inline std::string subset_name(const std::vector<int>& axes) {
  std::string out;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (i > 0) out += ",";
    out += axis_name(axes[i]);
  }
  return out;
}

/// Non-empty axis subsets up to size limit, ordered by (size, lexicographic).
inline std::vector<std::vector<int>> axis_subsets(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= std::min(n, max_size); ++size) {
    std::vector<int> subset(static_cast<std::size_t>(size));
    // Odometer over strictly increasing index tuples.
    for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
      out.push_back(subset);
      int i = size - 1;
      while (i >= 0 &&
             subset[static_cast<std::size_t>(i)] == n - size + i)
        --i;
      if (i < 0) break;
      ++subset[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < size; ++k)
        subset[static_cast<std::size_t>(k)] =
            subset[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  return out;
}

struct Inputs {
  JsonValue digests = JsonValue::object();

  Dist load_dist(const std::string& path) {
    std::string raw;
    jsonio::json j = jsonio::parse_file(path, &raw);
    digests.set(path, fnv1a_digest(raw));
    return jsonio::dist_from_json(j);
  }

  JointDist load_joint(const std::string& path, const std::string& builtin) {
    if (!builtin.empty()) {
      if (builtin != "abramson")
        throw InvariantViolation("unknown builtin \"" + builtin + "\"");
      JointDist j = abramson_joint();
      digests.set("builtin:abramson",
                  fnv1a_digest(jsonio::joint_to_json(j).dump()));
      return j;
    }
    if (path.empty())
      throw InvariantViolation("need --file or --builtin abramson");
    std::string raw;
    jsonio::json j = jsonio::parse_file(path, &raw);
    digests.set(path, fnv1a_digest(raw));
    return jsonio::joint_from_json(j);
  }

  Partition load_partition(const std::string& path) {
    std::string raw;
    jsonio::json j = jsonio::parse_file(path, &raw);
    digests.set(path, fnv1a_digest(raw));
    return jsonio::partition_from_json(j);
  }
};

inline JsonValue report_header(const std::string& command, Inputs& inputs) {
  JsonValue report = JsonValue::object();
  report.set("command", command);
  report.set("inputs", std::move(inputs.digests));
  return report;
}

inline void emit(std::ostream& out, const JsonValue& report) {
  out << report.dump(2) << "\n";
}

// --- entropy ---------------------------------------------------------------

inline int run_entropy(std::ostream& out, const std::string& command,
                       const std::string& dist_path,
                       const std::string& against_path,
                       const std::string& base_text) {
  LogBase base = parse_base(base_text);
  Inputs inputs;
  Dist p = inputs.load_dist(dist_path);
  std::optional<Dist> q;
  if (!against_path.empty()) q = inputs.load_dist(against_path);

  JsonValue report = report_header(command, inputs);
  report.set("base", base_text);
  report.set("h", logical_entropy(p));
  report.set("H", shannon_entropy(p, base));
  report.set("rho", repeat_rate(p));
  report.set("E", numbers_equivalent_entropy(p));
  if (q) {
    report.set("h_pq", cross_entropy_logical(p, *q));
    report.set("H_pq", cross_entropy_shannon(p, *q, false, base));
    report.set("H_qp", cross_entropy_shannon(*q, p, false, base));
    report.set("H_sym", cross_entropy_shannon(p, *q, true, base));
    report.set("D_pq", kl_divergence(p, *q, false, base));
    report.set("D_qp", kl_divergence(*q, p, false, base));
    report.set("D_sym", kl_divergence(p, *q, true, base));
    report.set("d", logical_divergence(p, *q));
    MixingChain chain = mixing_check(p, *q);
    JsonValue mixing = JsonValue::object();
    mixing.set("h_cross", chain.cross);
    mixing.set("h_mixture", chain.mixed);
    mixing.set("h_average", chain.average);
    report.set("mixing", std::move(mixing));
    JsonValue checks = JsonValue::array();
    checks.push_back(identity_check(
        "d = h_pq - (h(p)+h(q))/2", logical_divergence(p, *q),
        cross_entropy_logical(p, *q) -
            0.5 * (logical_entropy(p) + logical_entropy(*q)),
        kIdentityTolerance));
    checks.push_back(identity_check(
        "h_mixture = h_pq/2 + (h(p)+h(q))/4", chain.mixed,
        0.5 * chain.cross + 0.5 * chain.average, kIdentityTolerance));
    double h_p = shannon_entropy(p, base);
    double d_pq = kl_divergence(p, *q, false, base);
    double h_pq = cross_entropy_shannon(p, *q, false, base);
    if (std::isfinite(d_pq))
      checks.push_back(
          identity_check("D = H_pq - H(p)", d_pq, h_pq - h_p,
                         kIdentityTolerance));
    report.set("identity_checks", std::move(checks));
  }
  emit(out, report);
  return 0;
}

// --- joint -----------------------------------------------------------------

inline int run_joint(std::ostream& out, const std::string& command,
                     const std::string& file_path, const std::string& builtin,
                     const std::string& base_text) {
  LogBase base = parse_base(base_text);
  Inputs inputs;
  JointDist j = inputs.load_joint(file_path, builtin);
  int n = j.num_axes();

  JsonValue report = report_header(command, inputs);
  report.set("base", base_text);
  JsonValue axes = JsonValue::array();
  for (int a : j.axes()) axes.push_back(a);
  report.set("axes", std::move(axes));

  JsonValue logical = JsonValue::object();
  JsonValue shannon = JsonValue::object();
  for (const auto& subset : axis_subsets(n, 3)) {
    logical.set("h(" + subset_name(subset) + ")",
                joint_logical_entropy(j, subset));
    shannon.set("H(" + subset_name(subset) + ")",
                shannon_joint(j, subset, base));
  }
  for (const auto& subset : axis_subsets(n, 3)) {
    if (subset.size() < 2) continue;
    logical.set("m(" + subset_name(subset) + ")",
                mutual_logical_info(j, subset));
    shannon.set("I(" + subset_name(subset) + ")",
                shannon_mutual(j, subset, base));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      logical.set("h(" + axis_name(a) + "|" + axis_name(b) + ")",
                  conditional_logical_entropy(j, {a}, {b}));
      shannon.set("H(" + axis_name(a) + "|" + axis_name(b) + ")",
                  shannon_conditional(j, {a}, {b}, base));
    }
  if (n == 3) {
    const int third[3] = {2, 1, 0};
    const std::vector<int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
    for (int i = 0; i < 3; ++i)
      logical.set("m(" + subset_name(pairs[i]) + "|" + axis_name(third[i]) +
                      ")",
                  mutual_logical_info(j, pairs[i], {third[i]}));
  }
  report.set("logical", std::move(logical));
  report.set("shannon", std::move(shannon));

  IndependenceReport independence = independence_report(j);
  JsonValue indep = JsonValue::array();
  for (const auto& entry : independence.entries) {
    JsonValue e = JsonValue::object();
    e.set("split", subset_name(entry.left) + "|" + subset_name(entry.right));
    e.set("independent", entry.independent);
    e.set("max_abs_dev", entry.max_abs_dev);
    indep.push_back(std::move(e));
  }
  report.set("independence", std::move(indep));

  DitsetsIntersectReport intersections = ditsets_intersect_check(j);
  JsonValue inter = JsonValue::array();
  for (const auto& entry : intersections.entries) {
    JsonValue e = JsonValue::object();
    e.set("axes", axis_name(entry.axis_a) + "," + axis_name(entry.axis_b));
    e.set("h_a", entry.h_a);
    e.set("h_b", entry.h_b);
    e.set("m", entry.m);
    e.set("applicable", entry.applicable);
    e.set("holds", entry.holds);
    if (entry.witness) {
      JsonValue witness = JsonValue::array();
      for (int flat : {entry.witness->first, entry.witness->second}) {
        JsonValue cell = JsonValue::array();
        for (int c : j.unflatten(flat)) cell.push_back(c);
        witness.push_back(std::move(cell));
      }
      e.set("witness", std::move(witness));
    }
    inter.push_back(std::move(e));
  }
  report.set("nonempty_ditsets", std::move(inter));

  JsonValue checks = JsonValue::array();
  if (n >= 2) {
    double h_x = joint_logical_entropy(j, {0});
    double h_y = joint_logical_entropy(j, {1});
    double h_xy = joint_logical_entropy(j, {0, 1});
    double h_x_given_y = conditional_logical_entropy(j, {0}, {1});
    double h_y_given_x = conditional_logical_entropy(j, {1}, {0});
    double m_xy = mutual_logical_info(j, {0, 1});
    checks.push_back(identity_check("h(X,Y) = h(X|Y) + h(Y)", h_xy,
                                    h_x_given_y + h_y, kIdentityTolerance));
    checks.push_back(identity_check("m(X,Y) = h(X) + h(Y) - h(X,Y)", m_xy,
                                    h_x + h_y - h_xy, kIdentityTolerance));
    checks.push_back(identity_check("h(X,Y) = h(X|Y) + h(Y|X) + m(X,Y)", h_xy,
                                    h_x_given_y + h_y_given_x + m_xy,
                                    kIdentityTolerance));
  }
  if (n == 3) {
    double lhs = mutual_logical_info(j, {0, 1, 2});
    double rhs = joint_logical_entropy(j, {0}) + joint_logical_entropy(j, {1}) +
                 joint_logical_entropy(j, {2}) -
                 joint_logical_entropy(j, {0, 1}) -
                 joint_logical_entropy(j, {0, 2}) -
                 joint_logical_entropy(j, {1, 2}) +
                 joint_logical_entropy(j, {0, 1, 2});
    checks.push_back(identity_check("three-variable inclusion-exclusion", lhs,
                                    rhs, kIdentityTolerance));
    checks.push_back(identity_check(
        "m(X,Y,Z) = m(X,Y) - m(X,Y|Z)", lhs,
        mutual_logical_info(j, {0, 1}) - mutual_logical_info(j, {0, 1}, {2}),
        kIdentityTolerance));
  }
  report.set("identity_checks", std::move(checks));
  emit(out, report);
  return 0;
}

// --- partition -------------------------------------------------------------

inline int run_partition(std::ostream& out, const std::string& command,
                         const std::string& file_path,
                         const std::string& with_path, const std::string& op,
                         const std::string& base_text) {
  LogBase base = parse_base(base_text);
  Inputs inputs;
  Partition p = inputs.load_partition(file_path);

  JsonValue report = report_header(command, inputs);
  report.set("blocks", jsonio::blocks_to_json(p));
  JsonValue probs = JsonValue::array();
  for (double bp : p.block_probs()) probs.push_back(bp);
  report.set("block_probs", std::move(probs));
  report.set("num_dits", static_cast<long long>(ditset(p).pairs().count()));
  report.set("h", logical_entropy_partition(p));
  report.set("h_rescaled", rescaled_logical_entropy(p));
  report.set("H", shannon_entropy_partition(p, base));
  report.set("is_discrete", p.is_discrete());
  report.set("is_indiscrete", p.is_indiscrete());

  if (!with_path.empty()) {
    Partition q = inputs.load_partition(with_path);
    if (op.empty())
      throw InvariantViolation("--with needs --op join|meet|implies|refines");
    report.set("op", op);
    if (op == "refines") {
      report.set("result", refines(p, q));
    } else {
      Partition r = op == "join"    ? join(p, q)
                    : op == "meet"  ? meet(p, q)
                    : op == "implies" ? implication(p, q)
                                      : throw InvariantViolation(
                                            "--op must be join, meet, "
                                            "implies, or refines");
      report.set("result", jsonio::blocks_to_json(r));
      report.set("result_h", logical_entropy_partition(r));
      if (op == "join") {
        JsonValue checks = JsonValue::array();
        bool dit_union =
            ditset(r).pairs() == (ditset(p).pairs() | ditset(q).pairs());
        JsonValue check = JsonValue::object();
        check.set("name", "dit(join) = dit | dit");
        check.set("pass", dit_union);
        checks.push_back(std::move(check));
        report.set("identity_checks", std::move(checks));
      }
    }
  }
  emit(out, report);
  return 0;
}

// --- validity ---------------------------------------------------------------

inline int run_validity(std::ostream& out, const std::string& command,
                        const std::string& formula_text, int n,
                        const std::string& mode_text, long long budget) {
  LogicMode mode;
  if (mode_text == "partition")
    mode = LogicMode::partition;
  else if (mode_text == "subset")
    mode = LogicMode::subset;
  else
    throw InvariantViolation("--mode must be partition or subset");
  Formula f = parse_formula(formula_text);
  ValidityReport result = check_validity(f, n, mode, budget);

  JsonValue report = JsonValue::object();
  report.set("command", command);
  report.set("formula", result.formula);
  report.set("n", result.universe_size);
  report.set("mode", mode_text);
  report.set("valid", result.valid);
  if (!result.valid) {
    JsonValue cex = JsonValue::object();
    for (const auto& [name, partition] : result.partition_counterexample)
      cex.set(name, jsonio::blocks_to_json(partition));
    for (const auto& [name, members] : result.subset_counterexample) {
      JsonValue s = JsonValue::array();
      for (int j : members) s.push_back(j);
      cex.set(name, std::move(s));
    }
    report.set("counterexample", std::move(cex));
  }
  emit(out, report);
  return 0;
}

// --- transform ---------------------------------------------------------------

inline int run_transform(std::ostream& out, const std::string& command,
                         const std::string& kind_text,
                         const std::string& file_path,
                         const std::string& builtin,
                         const std::string& dist_path,
                         const std::string& against_path,
                         const std::string& base_text, bool show_form) {
  LogBase base = parse_base(base_text);
  Inputs inputs;

  std::optional<AvgForm> form;
  double reference_logical = 0.0;
  double reference_shannon = 0.0;
  if (kind_text == "entropy") {
    Dist p = inputs.load_dist(dist_path);
    form = entropy_form(p);
    reference_logical = logical_entropy(p);
    reference_shannon = shannon_entropy(p, base);
  } else if (kind_text == "cross" || kind_text == "divergence") {
    Dist p = inputs.load_dist(dist_path);
    Dist q = inputs.load_dist(against_path);
    if (kind_text == "cross") {
      form = cross_form(p, q);
      reference_logical = cross_entropy_logical(p, q);
      reference_shannon = cross_entropy_shannon(p, q, true, base);
    } else {
      form = divergence_form(p, q);
      reference_logical = logical_divergence(p, q);
      reference_shannon = kl_divergence(p, q, true, base);
    }
  } else if (kind_text == "conditional" || kind_text == "mutual" ||
             kind_text == "mutual3") {
    JointDist j = inputs.load_joint(file_path, builtin);
    if (kind_text == "conditional") {
      form = conditional_form(j);
      reference_logical = conditional_logical_entropy(j, {0}, {1});
      reference_shannon = shannon_conditional(j, {0}, {1}, base);
    } else if (kind_text == "mutual") {
      form = mutual_form(j);
      reference_logical = mutual_logical_info(j, {0, 1});
      reference_shannon = shannon_mutual(j, {0, 1}, base);
    } else {
      form = mutual3_form(j);
      reference_logical = mutual_logical_info(j, {0, 1, 2});
      reference_shannon = shannon_mutual(j, {0, 1, 2}, base);
    }
  } else {
    throw UnsupportedKind("--kind must be entropy, conditional, mutual, "
                          "mutual3, cross, or divergence");
  }

  AvgForm bit_form = dit_bit_transform(*form);
  JsonValue report = report_header(command, inputs);
  report.set("kind", kind_text);
  report.set("base", base_text);
  if (show_form) {
    report.set("form_dit", form->describe());
    report.set("form_bit", bit_form.describe());
  }
  report.set("eval_dit", form->eval(base));
  report.set("eval_bit", bit_form.eval(base));
  report.set("logical_value", reference_logical);
  report.set("shannon_value", reference_shannon);
  JsonValue checks = JsonValue::array();
  checks.push_back(identity_check("eval_dit = logical value", form->eval(base),
                                  reference_logical, kIdentityTolerance));
  checks.push_back(identity_check("eval_bit = shannon value",
                                  bit_form.eval(base), reference_shannon,
                                  kIdentityTolerance));
  report.set("identity_checks", std::move(checks));
  emit(out, report);
  return 0;
}

// --- approx ------------------------------------------------------------------

inline int run_approx_stirling(std::ostream& out, const std::string& command,
                               const std::vector<long long>& counts) {
  Occupancy o = Occupancy::make(counts);
  double exact = exact_boltzmann_entropy(o);
  double two = stirling_two_term(o);
  double three = stirling_three_term(o);
  double pooled = stirling_three_term_pooled(o);

  JsonValue report = JsonValue::object();
  report.set("command", command);
  JsonValue counts_json = JsonValue::array();
  for (long long c : counts) counts_json.push_back(c);
  report.set("counts", std::move(counts_json));
  report.set("N", o.total());
  report.set("exact", exact);
  report.set("two_term", two);
  report.set("three_term", three);
  report.set("three_term_pooled", pooled);
  JsonValue errors = JsonValue::object();
  errors.set("two_term", std::abs(two - exact));
  errors.set("three_term", std::abs(three - exact));
  errors.set("three_term_pooled", std::abs(pooled - exact));
  report.set("abs_errors", std::move(errors));
  report.set("three_term_beats_two_term",
             std::abs(three - exact) < std::abs(two - exact));
  emit(out, report);
  return 0;
}

inline int run_approx_mercator(std::ostream& out, const std::string& command,
                               const std::string& dist_path, int terms) {
  Inputs inputs;
  Dist p = inputs.load_dist(dist_path);
  double value = mercator_entropy_approx(p, terms);
  double target = shannon_entropy(p, LogBase::natural);

  JsonValue report = report_header(command, inputs);
  report.set("terms", terms);
  report.set("value", value);
  report.set("h", logical_entropy(p));
  report.set("H_e", target);
  report.set("abs_error", std::abs(value - target));
  emit(out, report);
  return 0;
}

inline int run_approx_typical(std::ostream& out, const std::string& command,
                              const std::string& dist_path,
                              long long n_letters) {
  Inputs inputs;
  Dist p = inputs.load_dist(dist_path);
  TypicalSetStats stats = typical_set_stats(p, n_letters);
  double bits = shannon_entropy(p, LogBase::two);

  JsonValue report = report_header(command, inputs);
  report.set("N", n_letters);
  report.set("P", stats.per_letter_prob);
  report.set("typical_message_prob", stats.typical_message_prob);
  report.set("bits_per_letter", stats.bits_per_letter);
  report.set("E", numbers_equivalent_entropy(p));
  JsonValue checks = JsonValue::array();
  checks.push_back(identity_check("log2(1/P) = H_2(p)",
                                  std::log2(1.0 / stats.per_letter_prob),
                                  bits, 1e-9));
  checks.push_back(identity_check("log2(E) = H_2(p)",
                                  std::log2(numbers_equivalent_entropy(p)),
                                  bits, 1e-9));
  report.set("identity_checks", std::move(checks));
  emit(out, report);
  return 0;
}

inline int run_approx_bincode(std::ostream& out, const std::string& command,
                              int m) {
  std::vector<Partition> betas = binary_partition_decomposition(m);
  JsonValue report = JsonValue::object();
  report.set("command", command);
  report.set("m", m);
  report.set("universe_size", 1 << m);
  JsonValue parts = JsonValue::array();
  for (const Partition& beta : betas)
    parts.push_back(jsonio::blocks_to_json(beta));
  report.set("partitions", std::move(parts));

  Partition joined = betas.front();
  PairSet dit_union = ditset(betas.front()).pairs();
  for (std::size_t i = 1; i < betas.size(); ++i) {
    joined = join(joined, betas[i]);
    dit_union |= ditset(betas[i]).pairs();
  }
  report.set("join_is_discrete", joined.is_discrete());
  report.set("dit_union_is_discrete_ditset",
             dit_union == ditset(Partition::discrete(
                              betas.front().universe())).pairs());
  emit(out, report);
  return 0;
}

// --- verify ------------------------------------------------------------------

inline int run_verify(std::ostream& out, const std::string& command,
                      std::uint64_t seed, long long cases) {
  std::vector<SuiteResult> results = verify::run_all(seed, cases);
  bool all_pass = true;
  JsonValue suites = JsonValue::array();
  for (const SuiteResult& r : results) {
    all_pass = all_pass && r.pass;
    JsonValue s = JsonValue::object();
    s.set("name", r.name);
    s.set("cases", r.cases);
    s.set("max_abs_diff", r.max_abs_diff);
    s.set("pass", r.pass);
    if (!r.pass) s.set("first_failure", r.detail);
    suites.push_back(std::move(s));
  }
  JsonValue report = JsonValue::object();
  report.set("command", command);
  report.set("seed", seed);
  report.set("cases", cases);
  report.set("suites", std::move(suites));
  report.set("all_pass", all_pass);
  emit(out, report);
  return all_pass ? 0 : 2;
}

}  // namespace detail

/// Entry point behind the binary: parses argv (without the program name),
/// runs one subcommand, writes a JSON report to out. Returns 0 on success,
/// 1 on usage or input errors, 2 when verify finds a failing identity.
inline int run(const std::vector<std::string>& argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"partition logic and logical entropy toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json"}));

  std::string base = "2";
  std::string dist_path, against_path, file_path, builtin, with_path, op;
  std::string formula_text, mode_text = "partition", kind_text;
  int n = 0, terms = 20, m_digits = 0;
  long long budget = kDefaultValidityBudget, n_letters = 100, cases = 1000;
  std::uint64_t seed = 42;
  std::vector<long long> counts;
  bool show_form = false;

  CLI::App* entropy = app.add_subcommand("entropy", "single-distribution measures");
  entropy->add_option("--dist", dist_path, "distribution JSON file")->required();
  entropy->add_option("--against", against_path, "second distribution for cross measures");
  entropy->add_option("--base", base, "log base (2 or e)");

  CLI::App* joint = app.add_subcommand("joint", "joint-distribution measures");
  joint->add_option("--file", file_path, "joint distribution JSON file");
  joint->add_option("--builtin", builtin, "built-in joint (abramson)");
  joint->add_option("--report", op, "report selection (all)")
      ->check(CLI::IsMember({"all"}));
  joint->add_option("--base", base, "log base (2 or e)");

  CLI::App* partition = app.add_subcommand("partition", "partition measures and algebra");
  partition->add_option("--file", file_path, "partition JSON file")->required();
  partition->add_option("--with", with_path, "second partition file");
  partition->add_option("--op", op, "join|meet|implies|refines");
  partition->add_option("--base", base, "log base (2 or e)");

  CLI::App* validity = app.add_subcommand("validity", "formula validity checking");
  validity->add_option("--formula", formula_text, "formula text")->required();
  validity->add_option("--n", n, "universe size")->required();
  validity->add_option("--mode", mode_text, "partition|subset")->required();
  validity->add_option("--budget", budget, "evaluation budget");

  CLI::App* transform = app.add_subcommand("transform", "dit-bit transform of average forms");
  transform->add_option("--kind", kind_text,
                        "entropy|conditional|mutual|mutual3|cross|divergence")
      ->required();
  transform->add_option("--file", file_path, "joint distribution JSON file");
  transform->add_option("--builtin", builtin, "built-in joint (abramson)");
  transform->add_option("--dist", dist_path, "distribution JSON file");
  transform->add_option("--against", against_path, "second distribution file");
  transform->add_option("--base", base, "log base (2 or e)");
  transform->add_flag("--show-form", show_form, "include form renderings");

  CLI::App* approx = app.add_subcommand("approx", "numeric bridges");
  approx->require_subcommand(1);
  CLI::App* stirling = approx->add_subcommand("stirling", "Stirling truncations vs exact");
  stirling->add_option("--counts", counts, "occupancy counts")
      ->required()
      ->delimiter(',');
  CLI::App* mercator = approx->add_subcommand("mercator", "series partial sums");
  mercator->add_option("--dist", dist_path, "distribution JSON file")->required();
  mercator->add_option("--terms", terms, "number of series terms");
  CLI::App* typical = approx->add_subcommand("typical", "typical-set statistics");
  typical->add_option("--dist", dist_path, "distribution JSON file")->required();
  typical->add_option("--n", n_letters, "message length");
  CLI::App* bincode = approx->add_subcommand("bincode", "binary partition decomposition");
  bincode->add_option("--m", m_digits, "number of binary digits")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suites");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--cases", cases, "cases per suite");

  std::string command = "ditlib";
  for (const std::string& a : argv) command += " " + a;

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (entropy->parsed())
      return detail::run_entropy(out, command, dist_path, against_path, base);
    if (joint->parsed())
      return detail::run_joint(out, command, file_path, builtin, base);
    if (partition->parsed())
      return detail::run_partition(out, command, file_path, with_path, op,
                                   base);
    if (validity->parsed())
      return detail::run_validity(out, command, formula_text, n, mode_text,
                                  budget);
    if (transform->parsed())
      return detail::run_transform(out, command, kind_text, file_path, builtin,
                                   dist_path, against_path, base, show_form);
    if (approx->parsed()) {
      if (stirling->parsed())
        return detail::run_approx_stirling(out, command, counts);
      if (mercator->parsed())
        return detail::run_approx_mercator(out, command, dist_path, terms);
      if (typical->parsed())
        return detail::run_approx_typical(out, command, dist_path, n_letters);
      if (bincode->parsed())
        return detail::run_approx_bincode(out, command, m_digits);
    }
    if (verify_cmd->parsed())
      return detail::run_verify(out, command, seed, cases);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace cli
}  // namespace ditlib
