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
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ditlib {

/// Ordered JSON value for reports. Keys keep insertion order and floats are
/// printed with 12 significant digits, so identical inputs produce
/// byte-identical output.
class JsonValue {
 public:
  enum class Kind { null, boolean, integer, real, string, array, object };

  JsonValue() : kind_(Kind::null) {}
  JsonValue(bool b) : kind_(Kind::boolean), bool_(b) {}
  JsonValue(int i) : kind_(Kind::integer), int_(i) {}
  JsonValue(long long i) : kind_(Kind::integer), int_(i) {}
  JsonValue(std::uint64_t i)
      : kind_(Kind::integer), int_(static_cast<long long>(i)) {}
  JsonValue(double d) : kind_(Kind::real), real_(d) {}
  JsonValue(const char* s) : kind_(Kind::string), string_(s) {}
  JsonValue(std::string s) : kind_(Kind::string), string_(std::move(s)) {}

  static JsonValue object() {
    JsonValue v;
    v.kind_ = Kind::object;
    return v;
  }
  static JsonValue array() {
    JsonValue v;
    v.kind_ = Kind::array;
    return v;
  }

  JsonValue& set(const std::string& key, JsonValue value) {
    members_.emplace_back(key, std::move(value));
    return *this;
  }
  JsonValue& push_back(JsonValue value) {
    items_.push_back(std::move(value));
    return *this;
  }
  bool empty() const { return members_.empty() && items_.empty(); }

  /// Formats a double with 12 significant digits; infinities become the
  /// strings "inf"/"-inf" since JSON has no literal for them.
  static std::string format_real(double d) {
    if (std::isinf(d)) return d > 0 ? "\"inf\"" : "\"-inf\"";
    if (std::isnan(d)) return "\"nan\"";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", d);
    return buf;
  }

  std::string dump(int indent = 0) const {
    std::string out;
    write(out, indent, 0);
    return out;
  }

 private:
  static void escape(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out, int indent, int depth) const {
    std::string pad = indent > 0 ? std::string(
        static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    std::string close_pad = indent > 0 ? std::string(
        static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (kind_) {
      case Kind::null: out += "null"; break;
      case Kind::boolean: out += bool_ ? "true" : "false"; break;
      case Kind::integer: out += std::to_string(int_); break;
      case Kind::real: out += format_real(real_); break;
      case Kind::string: escape(out, string_); break;
      case Kind::array: {
        if (items_.empty()) {
          out += "[]";
          break;
        }
        out += "[";
        out += nl;
        for (std::size_t i = 0; i < items_.size(); ++i) {
          out += pad;
          items_[i].write(out, indent, depth + 1);
          if (i + 1 < items_.size()) out += ",";
          out += nl;
        }
        out += close_pad;
        out += "]";
        break;
      }
      case Kind::object: {
        if (members_.empty()) {
          out += "{}";
          break;
        }
        out += "{";
        out += nl;
        for (std::size_t i = 0; i < members_.size(); ++i) {
          out += pad;
          escape(out, members_[i].first);
          out += indent > 0 ? ": " : ":";
          members_[i].second.write(out, indent, depth + 1);
          if (i + 1 < members_.size()) out += ",";
          out += nl;
        }
        out += close_pad;
        out += "}";
        break;
      }
    }
  }

  Kind kind_;
  bool bool_ = false;
  long long int_ = 0;
  double real_ = 0.0;
  std::string string_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

/// One identity check line in a report.
inline JsonValue identity_check(const std::string& name, double lhs,
                                double rhs, double tolerance) {
  double diff = std::abs(lhs - rhs);
  JsonValue check = JsonValue::object();
  check.set("name", name);
  check.set("lhs", lhs);
  check.set("rhs", rhs);
  check.set("abs_diff", diff);
  check.set("pass", diff < tolerance);
  return check;
}

/// FNV-1a 64-bit digest, hex-encoded; used to echo inputs in reports.
inline std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ditlib
