#include "dualnum/csv.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <string_view>
#include <vector>

namespace dualnum {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view token) {
  token = trim(token);
  if (token.empty()) return std::nullopt;
  if (token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return fields;
  }
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    const auto end = line.find_first_of(" \t", pos);
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

}  // namespace

SplineData parse_spline_csv(std::istream& in, const std::string& source) {
  std::vector<SplinePoint> points;
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  auto fail = [&](const std::string& why) {
    return ValidationError(source + ":" + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;

    const auto fields = split_fields(text);
    if (fields.size() != 2) {
      if (!seen_content) {
        seen_content = true;
        continue;  // header
      }
      throw fail("expected 2 columns, found " + std::to_string(fields.size()));
    }
    const auto x = parse_number(fields[0]);
    const auto y = parse_number(fields[1]);
    if (!x || !y) {
      if (!seen_content) {
        seen_content = true;
        continue;
      }
      throw fail("non-numeric value");
    }
    seen_content = true;
    if (!points.empty() && !(*x > points.back().x)) {
      throw fail("x values must be strictly increasing");
    }
    points.push_back({*x, *y});
  }
  if (points.size() < 2) {
    throw ValidationError(source + ": need at least 2 data rows, found " +
                          std::to_string(points.size()));
  }
  try {
    return SplineData(std::move(points));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

SplineData load_spline_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return parse_spline_csv(in, path.string());
}

}  // namespace dualnum
