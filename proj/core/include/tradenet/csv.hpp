#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace tradenet::csv {

// Splits one CSV line. Handles RFC-style double-quoted fields with ""
// escapes; no multi-line fields (none of our formats need them).
std::vector<std::string> split_line(const std::string& line);

// Reads all rows of a CSV file. The first row is returned too; header
// handling is the caller's job. Skips blank lines.
std::vector<std::vector<std::string>> read_file(const std::filesystem::path& path);

// Quotes a field only when it contains a comma, quote, or newline.
std::string escape(const std::string& field);

// Shortest round-trip decimal form of a double (via std::to_chars), so
// written weights reload bit-for-bit and reruns are byte-identical.
std::string format_double(double value);

// Strict double parse of a whole field; returns false on trailing junk,
// empty input, or non-finite values.
bool parse_double(const std::string& field, double& out);

void write_row(std::ostream& os, const std::vector<std::string>& fields);

} // namespace tradenet::csv
