#include "dualnum/result_record.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dualnum/errors.hpp"

namespace dualnum {

std::string to_string(Component c) {
  switch (c) {
    case Component::value: return "value";
    case Component::first: return "first";
    case Component::second: return "second";
  }
  return "?";
}

namespace {

double component_of(const ResultRecord& r, Component c) {
  switch (c) {
    case Component::value: return r.value;
    case Component::first: return r.first;
    case Component::second: return r.second;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::vector<CheckCell> check_records(const std::vector<ResultRecord>& records,
                                     const std::vector<ReferenceCell>& reference) {
  std::vector<CheckCell> checks;
  checks.reserve(reference.size());
  for (const auto& ref : reference) {
    CheckCell cell{ref.label, ref.component, ref.expected,
                   std::numeric_limits<double>::quiet_NaN(), ref.tolerance, ref.relative,
                   false};
    const auto it = std::find_if(records.begin(), records.end(),
                                 [&](const ResultRecord& r) { return r.label == ref.label; });
    if (it != records.end()) {
      cell.actual = component_of(*it, ref.component);
      const double bound = ref.relative ? ref.tolerance * std::abs(ref.expected) : ref.tolerance;
      cell.passed = std::abs(cell.actual - ref.expected) <= bound;
    }
    checks.push_back(cell);
  }
  return checks;
}

bool all_passed(const std::vector<CheckCell>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckCell& c) { return c.passed; });
}

void to_json(nlohmann::json& j, const ResultRecord& r) {
  j = nlohmann::json{{"label", r.label},
                     {"value", r.value},
                     {"first", r.first},
                     {"second", r.second},
                     {"provenance", r.provenance}};
}

void from_json(const nlohmann::json& j, ResultRecord& r) {
  try {
    j.at("label").get_to(r.label);
    j.at("value").get_to(r.value);
    j.at("first").get_to(r.first);
    j.at("second").get_to(r.second);
    j.at("provenance").get_to(r.provenance);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed result record: ") + e.what());
  }
}

void to_json(nlohmann::json& j, const CheckCell& c) {
  j = nlohmann::json{{"label", c.label},
                     {"component", to_string(c.component)},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"tolerance", c.tolerance},
                     {"relative", c.relative},
                     {"passed", c.passed}};
}

nlohmann::json results_document(const std::vector<ResultRecord>& records,
                                const std::string& status,
                                const std::vector<CheckCell>& checks) {
  nlohmann::json doc;
  doc["results"] = records;
  doc["status"] = status;
  if (!checks.empty()) doc["checks"] = checks;
  return doc;
}

std::vector<ResultRecord> records_from_document(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("results") || !doc["results"].is_array()) {
    throw ValidationError("document has no \"results\" array");
  }
  return doc["results"].get<std::vector<ResultRecord>>();
}

}  // namespace dualnum
