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

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ditlib/dist.hpp"
#include "ditlib/errors.hpp"
#include "ditlib/joint.hpp"
#include "ditlib/partition.hpp"
#include "ditlib/relation.hpp"
#include "ditlib/report.hpp"
#include "ditlib/universe.hpp"

namespace ditlib {

namespace jsonio {

using nlohmann::json;

inline const json& require(const json& j, const char* field) {
  if (!j.is_object())
    throw SchemaError(std::string("expected an object with field \"") + field +
                      "\"");
  auto it = j.find(field);
  if (it == j.end())
    throw SchemaError(std::string("missing field \"") + field + "\"");
  return *it;
}

inline std::vector<double> number_array(const json& j, const char* field) {
  if (!j.is_array())
    throw SchemaError(std::string("field \"") + field +
                      "\" must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number())
      throw SchemaError(std::string("field \"") + field +
                        "\" must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

inline std::vector<int> int_array(const json& j, const char* field) {
  if (!j.is_array())
    throw SchemaError(std::string("field \"") + field +
                      "\" must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw SchemaError(std::string("field \"") + field +
                        "\" must contain only integers");
    out.push_back(v.get<int>());
  }
  return out;
}

inline std::vector<std::string> string_array(const json& j, const char* field) {
  if (!j.is_array())
    throw SchemaError(std::string("field \"") + field +
                      "\" must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_string())
      throw SchemaError(std::string("field \"") + field +
                        "\" must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

/// {"size": n, "labels": [...], "probs": [...]} - labels optional, probs
/// optional (defaults to uniform), size optional when probs given.
inline Universe universe_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("universe must be an object");
  std::optional<std::vector<std::string>> labels;
  if (j.contains("labels")) labels = string_array(j["labels"], "labels");
  if (j.contains("probs")) {
    std::vector<double> probs = number_array(j["probs"], "probs");
    if (j.contains("size")) {
      if (!j["size"].is_number_integer())
        throw SchemaError("field \"size\" must be an integer");
      if (j["size"].get<long long>() !=
          static_cast<long long>(probs.size()))
        throw SchemaError("field \"size\" disagrees with \"probs\" length");
    }
    return Universe::with_probs(std::move(probs), std::move(labels));
  }
  if (!j.contains("size"))
    throw SchemaError("universe needs \"size\" or \"probs\"");
  if (!j["size"].is_number_integer())
    throw SchemaError("field \"size\" must be an integer");
  int n = j["size"].get<int>();
  if (n < 1) throw InvariantViolation("size: must be positive");
  Universe u = Universe::uniform(n);
  if (labels)
    u = Universe::with_probs(u.probs(), std::move(labels));
  return u;
}

/// {"probs": [...]} or a bare array of numbers.
inline Dist dist_from_json(const json& j) {
  if (j.is_array()) return Dist::make(number_array(j, "probs"));
  return Dist::make(number_array(require(j, "probs"), "probs"));
}

/// {"blocks": [[...], ...]} on an explicitly supplied universe.
inline Partition partition_from_json(const json& j, Universe universe) {
  const json& blocks_json = require(j, "blocks");
  if (!blocks_json.is_array())
    throw SchemaError("field \"blocks\" must be an array of index arrays");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : blocks_json) blocks.push_back(int_array(b, "blocks"));
  return Partition::make(std::move(universe), blocks);
}

/// {"universe": {...}, "blocks": [[...], ...]}.
inline Partition partition_from_json(const json& j) {
  return partition_from_json(j, universe_from_json(require(j, "universe")));
}

/// {"pairs": [[j,k], ...]} on an explicitly supplied universe.
inline BinRel relation_from_json(const json& j, Universe universe) {
  const json& pairs_json = require(j, "pairs");
  if (!pairs_json.is_array())
    throw SchemaError("field \"pairs\" must be an array of [j,k] pairs");
  PairSet pairs(universe.size());
  for (const auto& p : pairs_json) {
    std::vector<int> jk = int_array(p, "pairs");
    if (jk.size() != 2)
      throw SchemaError("field \"pairs\" entries must have two indices");
    pairs.set(jk[0], jk[1]);
  }
  return BinRel(std::move(universe), std::move(pairs));
}

/// {"axes": [...], "labels": [[...], ...], "table": [{"cell": [...],
/// "p": ...}, ...]} with omitted cells equal to zero.
inline JointDist joint_from_json(const json& j) {
  std::vector<int> axes = int_array(require(j, "axes"), "axes");
  std::optional<std::vector<std::vector<std::string>>> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      throw SchemaError("field \"labels\" must be an array of string arrays");
    labels.emplace();
    for (const auto& axis_labels : j["labels"])
      labels->push_back(string_array(axis_labels, "labels"));
  }
  const json& table = require(j, "table");
  if (!table.is_array())
    throw SchemaError("field \"table\" must be an array of cell entries");
  std::vector<std::pair<std::vector<int>, double>> entries;
  for (const auto& entry : table) {
    std::vector<int> cell = int_array(require(entry, "cell"), "cell");
    const json& p = require(entry, "p");
    if (!p.is_number()) throw SchemaError("field \"p\" must be a number");
    entries.emplace_back(std::move(cell), p.get<double>());
  }
  return JointDist::from_cells(std::move(axes), entries, std::move(labels));
}

using LoadedInput = std::variant<Universe, Dist, JointDist, Partition, BinRel>;

inline json parse_file(const std::string& path, std::string* raw_bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (raw_bytes) *raw_bytes = buf.str();
  json j = json::parse(buf.str(), nullptr, false);
  if (j.is_discarded())
    throw SchemaError("\"" + path + "\" is not valid JSON");
  return j;
}

/// Sniffs which domain object a JSON file holds and validates it.
inline LoadedInput load_input(const json& j) {
  if (j.is_object() && j.contains("axes")) return joint_from_json(j);
  if (j.is_object() && j.contains("blocks")) return partition_from_json(j);
  if (j.is_object() && j.contains("pairs"))
    return relation_from_json(j, universe_from_json(require(j, "universe")));
  if (j.is_object() && j.contains("size")) return universe_from_json(j);
  if (j.is_array() || (j.is_object() && j.contains("probs")))
    return dist_from_json(j);
  throw SchemaError("unrecognized input shape");
}

inline LoadedInput load_input_file(const std::string& path,
                                   std::string* raw_bytes = nullptr) {
  return load_input(parse_file(path, raw_bytes));
}

// Serialization back into ordered report values.

inline JsonValue universe_to_json(const Universe& u) {
  JsonValue out = JsonValue::object();
  out.set("size", u.size());
  if (u.labels()) {
    JsonValue labels = JsonValue::array();
    for (const auto& l : *u.labels()) labels.push_back(l);
    out.set("labels", std::move(labels));
  }
  JsonValue probs = JsonValue::array();
  for (double p : u.probs()) probs.push_back(p);
  out.set("probs", std::move(probs));
  return out;
}

inline JsonValue blocks_to_json(const Partition& p) {
  JsonValue blocks = JsonValue::array();
  for (const auto& block : p.blocks()) {
    JsonValue b = JsonValue::array();
    for (int j : block) b.push_back(j);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

inline JsonValue partition_to_json(const Partition& p) {
  JsonValue out = JsonValue::object();
  out.set("universe", universe_to_json(p.universe()));
  out.set("blocks", blocks_to_json(p));
  return out;
}

inline JsonValue pairs_to_json(const PairSet& s) {
  JsonValue pairs = JsonValue::array();
  for (const auto& [j, k] : s.pairs()) {
    JsonValue pair = JsonValue::array();
    pair.push_back(j);
    pair.push_back(k);
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

inline JsonValue relation_to_json(const BinRel& r) {
  JsonValue out = JsonValue::object();
  out.set("size", r.size());
  out.set("pairs", pairs_to_json(r.pairs()));
  return out;
}

inline JsonValue joint_to_json(const JointDist& j) {
  JsonValue out = JsonValue::object();
  JsonValue axes = JsonValue::array();
  for (int a : j.axes()) axes.push_back(a);
  out.set("axes", std::move(axes));
  if (j.labels()) {
    JsonValue labels = JsonValue::array();
    for (const auto& axis_labels : *j.labels()) {
      JsonValue ls = JsonValue::array();
      for (const auto& l : axis_labels) ls.push_back(l);
      labels.push_back(std::move(ls));
    }
    out.set("labels", std::move(labels));
  }
  JsonValue table = JsonValue::array();
  for (int flat = 0; flat < j.num_cells(); ++flat) {
    if (j.cell(flat) == 0.0) continue;
    JsonValue entry = JsonValue::object();
    JsonValue cell = JsonValue::array();
    for (int c : j.unflatten(flat)) cell.push_back(c);
    entry.set("cell", std::move(cell));
    entry.set("p", j.cell(flat));
    table.push_back(std::move(entry));
  }
  out.set("table", std::move(table));
  return out;
}

}  // namespace jsonio
}  // namespace ditlib
