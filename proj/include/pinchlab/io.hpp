#pragma once

#include <string>
#include <vector>

namespace pinchlab {

// All numeric output carries 17 significant digits so values round-trip.
std::string fmt17(double x);

// RFC 4180 field escaping and record assembly (CRLF line endings).
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

} // namespace pinchlab
