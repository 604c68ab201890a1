#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace dualnum {

/// One output row: a quantity with its first and second derivative.
struct ResultRecord {
  std::string label;
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
  std::string provenance;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

enum class Component { value, first, second };

std::string to_string(Component c);

/// An expected value for one component of one labelled row.
struct ReferenceCell {
  std::string label;
  Component component = Component::value;
  double expected = 0.0;
  double tolerance = 1e-4;
  /// Tolerance is relative to |expected| instead of absolute.
  bool relative = false;
};

struct CheckCell {
  std::string label;
  Component component = Component::value;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool relative = false;
  bool passed = false;
};

/// Compares records to reference cells. A reference naming a label that is
/// not present yields a failed cell with a NaN actual value.
std::vector<CheckCell> check_records(const std::vector<ResultRecord>& records,
                                     const std::vector<ReferenceCell>& reference);

bool all_passed(const std::vector<CheckCell>& checks);

void to_json(nlohmann::json& j, const ResultRecord& r);
void from_json(const nlohmann::json& j, ResultRecord& r);
void to_json(nlohmann::json& j, const CheckCell& c);

/// {"results": [...], "status": ..., "checks": [...]}; "checks" only when
/// non-empty.
nlohmann::json results_document(const std::vector<ResultRecord>& records,
                                const std::string& status,
                                const std::vector<CheckCell>& checks = {});

std::vector<ResultRecord> records_from_document(const nlohmann::json& doc);

}  // namespace dualnum
