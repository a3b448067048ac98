#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cgt {

// Structured outcome of one verification check. Serialization is
// deterministic: constants keep insertion order, ids are sorted upstream.
struct VerificationReport {
  std::string check;
  std::string group;
  std::string word;
  int m = 0;
  std::vector<std::pair<std::string, long long>> constants;
  std::string bound;
  long long observed = 0;
  bool pass = false;
  std::optional<nlohmann::ordered_json> witness;

  void set(const std::string& key, long long value);
  long long get(const std::string& key) const;  // 0 when absent

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;  // single line
};

// Validates the fields and types emitted by to_json().
bool validate_report_json(const nlohmann::ordered_json& j, std::string* error = nullptr);

}  // namespace cgt
