#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace padic_lattes {

using Json = nlohmann::ordered_json;

/// One verification record in the shared report schema:
/// {"family", "check", "inputs", "expected", "actual", "pass"},
/// with rationals rendered as "num/den" strings.
struct CheckRecord {
  std::string family;
  std::string check;
  Json inputs = Json::object();
  Json expected;
  Json actual;
  bool pass = false;

  Json to_json() const {
    Json j;
    j["family"] = family;
    j["check"] = check;
    j["inputs"] = inputs;
    j["expected"] = expected;
    j["actual"] = actual;
    j["pass"] = pass;
    return j;
  }
};

/// Deterministic ordering: lexicographic by family, check, inputs.
inline void sort_records(std::vector<CheckRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.family != b.family) return a.family < b.family;
                     if (a.check != b.check) return a.check < b.check;
                     return a.inputs.dump() < b.inputs.dump();
                   });
}

struct Report {
  std::string suite_version = "1.0.0";
  std::vector<CheckRecord> records;
  long wall_ms = 0;

  long failures() const {
    long n = 0;
    for (const auto& r : records)
      if (!r.pass) ++n;
    return n;
  }

  Json to_json(bool include_wall_time = true) const {
    Json j;
    j["suite_version"] = suite_version;
    Json rs = Json::array();
    for (const auto& r : records) rs.push_back(r.to_json());
    j["records"] = rs;
    Json summary;
    summary["total"] = records.size();
    summary["failures"] = failures();
    summary["wall_ms"] = include_wall_time ? wall_ms : 0;
    j["summary"] = summary;
    return j;
  }

  /// CSV flattening; JSON stays the source of truth.
  std::string to_csv() const {
    std::string out = "family,check,inputs,expected,actual,pass\n";
    auto cell = [](std::string s) {
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q += "\"\"";
        else q += c;
      }
      q += "\"";
      return q;
    };
    for (const auto& r : records) {
      out += cell(r.family) + "," + cell(r.check) + "," + cell(r.inputs.dump()) +
             "," + cell(r.expected.dump()) + "," + cell(r.actual.dump()) + "," +
             (r.pass ? "true" : "false") + "\n";
    }
    return out;
  }
};

}  // namespace padic_lattes
