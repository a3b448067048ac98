#include "cgt/report.hpp"

#include <sstream>

namespace cgt {

void VerificationReport::set(const std::string& key, long long value) {
  for (auto& [k, v] : constants) {
    if (k == key) {
      v = value;
      return;
    }
  }
  constants.emplace_back(key, value);
}

long long VerificationReport::get(const std::string& key) const {
  for (const auto& [k, v] : constants)
    if (k == key) return v;
  return 0;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["group"] = group;
  j["word"] = word;
  j["m"] = m;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [k, v] : constants) c[k] = v;
  j["constants"] = c;
  j["bound"] = bound;
  j["observed"] = observed;
  j["pass"] = pass;
  if (witness) j["witness"] = *witness;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << (pass ? "PASS" : "FAIL") << ' ' << check << " group=" << group;
  if (!word.empty()) out << " word=" << word;
  out << " m=" << m;
  for (const auto& [k, v] : constants) out << ' ' << k << '=' << v;
  if (!bound.empty()) out << " bound=\"" << bound << '"';
  out << " observed=" << observed;
  if (witness) out << " witness=" << witness->dump();
  return out.str();
}

bool validate_report_json(const nlohmann::ordered_json& j, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (!j.is_object()) return fail("report is not an object");
  const char* string_fields[] = {"check", "group", "word", "bound"};
  for (const char* f : string_fields)
    if (!j.contains(f) || !j[f].is_string()) return fail(std::string("missing string field ") + f);
  if (!j.contains("m") || !j["m"].is_number_integer()) return fail("missing integer field m");
  if (!j.contains("observed") || !j["observed"].is_number_integer())
    return fail("missing integer field observed");
  if (!j.contains("pass") || !j["pass"].is_boolean()) return fail("missing boolean field pass");
  if (!j.contains("constants") || !j["constants"].is_object())
    return fail("missing object field constants");
  for (const auto& [k, v] : j["constants"].items())
    if (!v.is_number_integer()) return fail("constant " + k + " is not an integer");
  return true;
}

}  // namespace cgt
