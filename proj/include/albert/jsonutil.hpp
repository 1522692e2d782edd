#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "albert/errors.hpp"

#include "json.hpp"

// Strict JSON access with JSON-pointer style paths in every error message.
// Configs reject unknown keys so typos fail loudly instead of being ignored.
namespace albert::jsonu {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void bad(const std::string& path, const std::string& msg) {
  fail(ErrorCode::ParseError, path + ": " + msg);
}

inline void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
}

inline void check_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  expect_object(j, path);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) { ok = true; break; }
    if (!ok) bad(path + "/" + it.key(), "unknown key");
  }
}

inline const Json& member(const Json& j, const std::string& path, const std::string& key) {
  expect_object(j, path);
  auto it = j.find(key);
  if (it == j.end()) bad(path + "/" + key, "missing required key");
  return *it;
}

inline const Json* member_opt(const Json& j, const std::string& path, const std::string& key) {
  expect_object(j, path);
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

inline uint64_t get_uint(const Json& j, const std::string& path) {
  // Accept any integral JSON number that is >= 0; nlohmann tags positive
  // literals from files as unsigned but programmatic ints as signed.
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_number_integer() && j.get<int64_t>() >= 0)
    return static_cast<uint64_t>(j.get<int64_t>());
  bad(path, "expected an unsigned integer");
}

inline std::vector<std::string> get_string_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) bad(path + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

}  // namespace albert::jsonu
