#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lbsim/cnf.hpp"

namespace testsup {

/// Independent model counter for cross-checking: walks assignments in
/// descending order as bool vectors and evaluates clauses literal by
/// literal, sharing no code with the library's bitmask path.
inline std::uint64_t oracle_count_models(const lbsim::CnfFormula& f) {
  const int n = f.var_count();
  std::vector<bool> a(static_cast<std::size_t>(n), true);
  std::uint64_t count = 0;
  for (std::uint64_t left = std::uint64_t(1) << n; left > 0; --left) {
    bool all = true;
    for (const auto& clause : f.clauses()) {
      bool any = false;
      for (const auto& lit : clause.literals) {
        bool v = a[static_cast<std::size_t>(lit.var)];
        if (lit.negated ? !v : v) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) ++count;
    // decrement the assignment read as a binary number, a[0] least significant
    for (int i = 0; i < n; ++i) {
      if (a[static_cast<std::size_t>(i)]) {
        a[static_cast<std::size_t>(i)] = false;
        break;
      }
      a[static_cast<std::size_t>(i)] = true;
    }
  }
  return count;
}

inline bool approx_rel(double a, double b, double tol) {
  if (a == b) return true;
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol * scale;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Validates `v` against a subset of JSON Schema: type, required,
/// properties, items, enum, const, plus "$ref" resolved by file name in
/// `refs`.  Returns an empty string when valid, otherwise a path-prefixed
/// complaint.
inline std::string schema_mismatch(const nlohmann::json& v, const nlohmann::json& schema,
                                   const std::map<std::string, nlohmann::json>* refs = nullptr,
                                   const std::string& path = "$") {
  using nlohmann::json;
  if (schema.contains("$ref")) {
    std::string name = schema["$ref"].get<std::string>();
    if (!refs || !refs->count(name)) return path + ": unresolvable $ref " + name;
    return schema_mismatch(v, refs->at(name), refs, path);
  }
  if (schema.contains("const")) {
    if (v != schema["const"]) return path + ": not the required constant";
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& e : schema["enum"]) hit = hit || v == e;
    if (!hit) return path + ": not in enum";
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
              (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean()) ||
              (t == "null" && v.is_null()) || (t == "number" && v.is_number()) ||
              (t == "integer" && v.is_number_integer());
    if (!ok) return path + ": expected type " + t;
  }
  if (schema.contains("required")) {
    for (const auto& k : schema["required"]) {
      if (!v.contains(k.get<std::string>()))
        return path + ": missing required key " + k.get<std::string>();
    }
  }
  if (schema.contains("properties") && v.is_object()) {
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
      if (!v.contains(it.key())) continue;
      std::string r = schema_mismatch(v[it.key()], it.value(), refs, path + "." + it.key());
      if (!r.empty()) return r;
    }
  }
  if (schema.contains("items") && v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::string r =
          schema_mismatch(v[i], schema["items"], refs, path + "[" + std::to_string(i) + "]");
      if (!r.empty()) return r;
    }
  }
  return "";
}

}  // namespace testsup
