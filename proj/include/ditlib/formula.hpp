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
#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ditlib/errors.hpp"
#include "ditlib/partition.hpp"
#include "ditlib/universe.hpp"

namespace ditlib {

/// AST for subset/partition logic formulas. Operators: `|` (join), `&`
/// (meet), `->` (implication), constants `0` (bottom) and `1` (top).
/// Precedence `->` < `|` < `&`; `->` is right-associative, `|` and `&`
/// left-associative.
class Formula {
 public:
  enum class Kind { variable, top, bottom, join, meet, implies };

  static Formula variable(std::string name) {
    Formula f;
    f.root_ = std::make_shared<Node>(Node{Kind::variable, std::move(name),
                                          nullptr, nullptr});
    return f;
  }
  static Formula top() { return constant(Kind::top); }
  static Formula bottom() { return constant(Kind::bottom); }
  static Formula make_join(Formula a, Formula b) {
    return binary(Kind::join, std::move(a), std::move(b));
  }
  static Formula make_meet(Formula a, Formula b) {
    return binary(Kind::meet, std::move(a), std::move(b));
  }
  static Formula make_implies(Formula a, Formula b) {
    return binary(Kind::implies, std::move(a), std::move(b));
  }

  Kind kind() const { return root_->kind; }
  const std::string& name() const { return root_->name; }
  Formula lhs() const { return wrap(root_->a); }
  Formula rhs() const { return wrap(root_->b); }

  /// Canonical text with minimal parentheses; parse(print(f)) == f.
  std::string print() const { return print_node(root_.get()); }

  /// Sorted distinct variable names.
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    collect(root_.get(), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return equal(a.root_.get(), b.root_.get());
  }
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };

  static Formula constant(Kind k) {
    Formula f;
    f.root_ = std::make_shared<Node>(Node{k, {}, nullptr, nullptr});
    return f;
  }
  static Formula binary(Kind k, Formula a, Formula b) {
    Formula f;
    f.root_ = std::make_shared<Node>(
        Node{k, {}, std::move(a.root_), std::move(b.root_)});
    return f;
  }
  static Formula wrap(std::shared_ptr<const Node> n) {
    Formula f;
    f.root_ = std::move(n);
    return f;
  }

  static int precedence(Kind k) {
    switch (k) {
      case Kind::implies: return 1;
      case Kind::join: return 2;
      case Kind::meet: return 3;
      default: return 4;
    }
  }

  static std::string print_node(const Node* n) {
    switch (n->kind) {
      case Kind::variable: return n->name;
      case Kind::top: return "1";
      case Kind::bottom: return "0";
      case Kind::implies:
        return wrap_child(n->a.get(), 2) + " -> " + wrap_child(n->b.get(), 1);
      case Kind::join:
        return wrap_child(n->a.get(), 2) + " | " + wrap_child(n->b.get(), 3);
      case Kind::meet:
        return wrap_child(n->a.get(), 3) + " & " + wrap_child(n->b.get(), 4);
    }
    return "";
  }

  static std::string wrap_child(const Node* c, int min_prec) {
    std::string s = print_node(c);
    return precedence(c->kind) < min_prec ? "(" + s + ")" : s;
  }

  static void collect(const Node* n, std::vector<std::string>& out) {
    if (n->kind == Kind::variable) {
      out.push_back(n->name);
      return;
    }
    if (n->a) collect(n->a.get(), out);
    if (n->b) collect(n->b.get(), out);
  }

  static bool equal(const Node* a, const Node* b) {
    if (a->kind != b->kind) return false;
    if (a->kind == Kind::variable) return a->name == b->name;
    if (a->a && !equal(a->a.get(), b->a.get())) return false;
    if (a->b && !equal(a->b.get(), b->b.get())) return false;
    return true;
  }

  std::shared_ptr<const Node> root_;
};

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : text_(text) {}

  Formula parse() {
    Formula f = parse_implies();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  Formula parse_implies() {
    Formula left = parse_join();
    skip_space();
    if (match("->")) return Formula::make_implies(left, parse_implies());
    return left;
  }

  Formula parse_join() {
    Formula left = parse_meet();
    while (true) {
      skip_space();
      // `|` but not part of `->`; single-char token, no ambiguity.
      if (!match("|")) return left;
      left = Formula::make_join(left, parse_meet());
    }
  }

  Formula parse_meet() {
    Formula left = parse_atom();
    while (true) {
      skip_space();
      if (!match("&")) return left;
      left = Formula::make_meet(left, parse_atom());
    }
  }

  Formula parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_implies();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string digits = text_.substr(start, pos_ - start);
      if (digits == "0") return Formula::bottom();
      if (digits == "1") return Formula::top();
      throw ParseError("expected constant 0 or 1", start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      return Formula::variable(text_.substr(start, pos_ - start));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  bool match(const char* token) {
    std::size_t len = std::char_traits<char>::length(token);
    if (text_.compare(pos_, len, token) == 0) {
      pos_ += len;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(const std::string& text) {
  return detail::FormulaParser(text).parse();
}

/// Subsets of {0..n-1} as membership vectors.
using IndexSet = std::vector<bool>;

inline IndexSet index_set(int n, const std::vector<int>& members) {
  IndexSet s(static_cast<std::size_t>(n), false);
  for (int j : members) s[static_cast<std::size_t>(j)] = true;
  return s;
}

/// Boolean-algebra evaluation: | = union, & = intersection,
/// S -> T = complement(S) union T, 1 = U, 0 = empty.
inline IndexSet eval_subset(const Formula& f, int n,
                            const std::map<std::string, IndexSet>& env) {
  switch (f.kind()) {
    case Formula::Kind::variable: {
      auto it = env.find(f.name());
      if (it == env.end())
        throw UnboundVariable("variable \"" + f.name() + "\" is not bound");
      return it->second;
    }
    case Formula::Kind::top:
      return IndexSet(static_cast<std::size_t>(n), true);
    case Formula::Kind::bottom:
      return IndexSet(static_cast<std::size_t>(n), false);
    default: {
      IndexSet a = eval_subset(f.lhs(), n, env);
      IndexSet b = eval_subset(f.rhs(), n, env);
      IndexSet out(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        std::size_t u = static_cast<std::size_t>(j);
        switch (f.kind()) {
          case Formula::Kind::join: out[u] = a[u] || b[u]; break;
          case Formula::Kind::meet: out[u] = a[u] && b[u]; break;
          default: out[u] = !a[u] || b[u]; break;
        }
      }
      return out;
    }
  }
}

/// Partition-algebra evaluation: | = join, & = meet, -> = implication,
/// 1 = discrete, 0 = indiscrete.
inline Partition eval_partition(const Formula& f, const Universe& universe,
                                const std::map<std::string, Partition>& env) {
  switch (f.kind()) {
    case Formula::Kind::variable: {
      auto it = env.find(f.name());
      if (it == env.end())
        throw UnboundVariable("variable \"" + f.name() + "\" is not bound");
      if (it->second.universe() != universe)
        throw UniverseMismatch("binding for \"" + f.name() +
                               "\" lives on a different universe");
      return it->second;
    }
    case Formula::Kind::top:
      return Partition::discrete(universe);
    case Formula::Kind::bottom:
      return Partition::indiscrete(universe);
    case Formula::Kind::join:
      return join(eval_partition(f.lhs(), universe, env),
                  eval_partition(f.rhs(), universe, env));
    case Formula::Kind::meet:
      return meet(eval_partition(f.lhs(), universe, env),
                  eval_partition(f.rhs(), universe, env));
    default:
      return implication(eval_partition(f.lhs(), universe, env),
                         eval_partition(f.rhs(), universe, env));
  }
}

inline constexpr int kDefaultEnumerationCap = 10;

/// All set partitions of {0..n-1} in restricted-growth-string order;
/// Bell(n) of them.
inline std::vector<Partition> enumerate_partitions(
    const Universe& universe, int cap = kDefaultEnumerationCap) {
  int n = universe.size();
  if (n > cap)
    throw CapExceeded("partition enumeration capped at n=" +
                      std::to_string(cap));
  std::vector<Partition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  while (true) {
    int num_blocks =
        1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(num_blocks));
    for (int j = 0; j < n; ++j)
      blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(j)])]
          .push_back(j);
    out.push_back(Partition::make(universe, blocks));
    // Advance the restricted growth string lexicographically.
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<std::size_t>(i)] <= max_prefix) {
        ++rgs[static_cast<std::size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

inline std::vector<Partition> enumerate_partitions(
    int n, int cap = kDefaultEnumerationCap) {
  return enumerate_partitions(Universe::uniform(n), cap);
}

enum class LogicMode { subset, partition };

inline constexpr long long kDefaultValidityBudget = 1000000;

/// Result of an exhaustive validity check. When invalid, the counterexample
/// is the lexicographically first failing assignment under the enumeration
/// order (restricted-growth-string order for partitions, subset-mask order
/// for subsets), variables in sorted name order.
struct ValidityReport {
  std::string formula;
  int universe_size = 0;
  LogicMode mode = LogicMode::subset;
  bool valid = true;
  std::vector<std::pair<std::string, Partition>> partition_counterexample;
  std::vector<std::pair<std::string, std::vector<int>>> subset_counterexample;
};

inline ValidityReport check_validity(const Formula& f, int n, LogicMode mode,
                                     long long budget = kDefaultValidityBudget) {
  if (mode == LogicMode::subset && n > 30)
    throw CapExceeded("subset enumeration capped at n=30");
  std::vector<std::string> vars = f.variables();
  long long domain =
      mode == LogicMode::partition
          ? static_cast<long long>(enumerate_partitions(n).size())
          : (1LL << n);
  long long total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > budget / domain)
      throw BudgetExceeded("validity check needs more than " +
                           std::to_string(budget) + " evaluations");
    total *= domain;
  }

  ValidityReport report;
  report.formula = f.print();
  report.universe_size = n;
  report.mode = mode;

  std::vector<int> odometer(vars.size(), 0);
  Universe universe = Universe::uniform(n);
  std::vector<Partition> all_partitions;
  if (mode == LogicMode::partition)
    all_partitions = enumerate_partitions(universe);

  while (true) {
    bool holds;
    if (mode == LogicMode::partition) {
      std::map<std::string, Partition> env;
      for (std::size_t i = 0; i < vars.size(); ++i)
        env.emplace(vars[i],
                    all_partitions[static_cast<std::size_t>(odometer[i])]);
      holds = eval_partition(f, universe, env).is_discrete();
      if (!holds) {
        report.valid = false;
        for (const auto& [name, value] : env)
          report.partition_counterexample.emplace_back(name, value);
        return report;
      }
    } else {
      std::map<std::string, IndexSet> env;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        IndexSet s(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
          s[static_cast<std::size_t>(j)] = (odometer[i] >> j) & 1;
        env.emplace(vars[i], std::move(s));
      }
      IndexSet value = eval_subset(f, n, env);
      holds = std::all_of(value.begin(), value.end(),
                          [](bool b) { return b; });
      if (!holds) {
        report.valid = false;
        for (const auto& [name, s] : env) {
          std::vector<int> members;
          for (int j = 0; j < n; ++j)
            if (s[static_cast<std::size_t>(j)]) members.push_back(j);
          report.subset_counterexample.emplace_back(name, std::move(members));
        }
        return report;
      }
    }
    // Odometer: last variable cycles fastest.
    int i = static_cast<int>(vars.size()) - 1;
    for (; i >= 0; --i) {
      if (++odometer[static_cast<std::size_t>(i)] < domain) break;
      odometer[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return report;
}

}  // namespace ditlib
