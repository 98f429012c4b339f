#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "opskit/error.hpp"
#include "opskit/version.hpp"

namespace opskit::io {

using Json = nlohmann::ordered_json;

// FNV-1a 64 over the raw input bytes; enough to pin a report to its input.
inline std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Presentation rounding: statistics are computed at full precision and only
// rounded when displayed.
inline std::string round2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

struct ResultReport {
  std::string task;
  std::string input_digest;
  std::string version = std::string(kVersion);
  Json result;                                        // full-precision payload
  Json display;                                       // presentation-rounded strings
  std::vector<std::pair<std::string, bool>> verdicts; // insertion order preserved

  Json to_json() const {
    Json j;
    j["format"] = 1;
    j["tool"] = "opskit";
    j["version"] = version;
    j["task"] = task;
    j["input_digest"] = input_digest;
    j["result"] = result;
    if (!display.is_null()) j["display"] = display;
    if (!verdicts.empty()) {
      Json v = Json::object();
      for (const auto& [name, value] : verdicts) v[name] = value;
      j["verdicts"] = v;
    }
    return j;
  }

  static ResultReport from_json(const Json& j) {
    if (!j.is_object() || j.value("format", 0) != 1 || j.value("tool", "") != "opskit")
      fail(Errc::ParseError, "not an opskit report (expected format 1)");
    ResultReport r;
    r.version = j.value("version", "");
    r.task = j.value("task", "");
    r.input_digest = j.value("input_digest", "");
    r.result = j.value("result", Json());
    r.display = j.value("display", Json());
    if (j.contains("verdicts"))
      for (const auto& [name, value] : j.at("verdicts").items())
        r.verdicts.emplace_back(name, value.get<bool>());
    return r;
  }

  std::string to_string() const { return to_json().dump(2) + "\n"; }

  friend bool operator==(const ResultReport& a, const ResultReport& b) {
    return a.to_json() == b.to_json();
  }
};

}  // namespace opskit::io
