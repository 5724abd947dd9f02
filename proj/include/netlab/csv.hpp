#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace netlab::csv {

/// Shortest decimal form that round-trips; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double value);
/// Inverse of format_double. Throws Error on malformed input.
double parse_double(std::string_view text);

/// Quotes the field when it holds a comma, quote or newline.
std::string escape(std::string_view field);
/// Splits one CSV record (no embedded newlines) honoring double quotes.
std::vector<std::string> split(std::string_view line);

void write_row(std::ostream &out, const std::vector<std::string> &fields);

} // namespace netlab::csv
