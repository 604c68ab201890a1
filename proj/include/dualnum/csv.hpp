#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "dualnum/spline.hpp"

namespace dualnum {

/// Reads (x, y) pairs: two numeric columns separated by a comma or
/// whitespace, an optional single header line, blank lines ignored. Rows
/// must already be sorted by x. Errors carry `source:line`.
SplineData parse_spline_csv(std::istream& in, const std::string& source = "<input>");

SplineData load_spline_csv(const std::filesystem::path& path);

}  // namespace dualnum
